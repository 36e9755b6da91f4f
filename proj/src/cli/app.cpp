#include "skew3/app.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "skew3/expr.hpp"
#include "skew3/report.hpp"
#include "skew3/spec_file.hpp"

namespace skew3 {

namespace {

struct SpecSource {
  std::string file;
  std::string preset_id;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--spec", file, "algebra description file");
    auto* p = cmd->add_option("--preset", preset_id, "catalogue row instead of a file (see 'presets list')");
    f->excludes(p);
  }

  AlgebraSpec load() const {
    if (!preset_id.empty()) return preset(preset_id).spec;
    if (file.empty()) throw CLI::RequiredError("--spec or --preset");
    return load_spec_file(file);
  }

  const Preset* catalogue_row() const {
    if (preset_id.empty()) return nullptr;
    for (const auto& p : presets()) {
      if (p.id == preset_id) return &p;
    }
    return nullptr;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal forms, PBW checks and differential smoothness of 3-dimensional skew polynomial rings",
               "skew3"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON reports");

  std::uint32_t max_degree = 4;
  std::uint64_t seed = VerifyOptions{}.seed;

  auto* reduce = app.add_subcommand("reduce", "print the normal form of an expression");
  SpecSource reduce_src;
  reduce_src.attach(reduce);
  std::string expr_text;
  reduce->add_option("expr", expr_text, "expression, e.g. \"z*y*x\"")->required();

  auto* check = app.add_subcommand("check", "run a check on an algebra");
  check->require_subcommand(1);
  auto* check_pbw = check->add_subcommand("pbw", "ten PBW conditions and the zyx diamond");
  SpecSource pbw_src;
  pbw_src.attach(check_pbw);
  auto* check_smooth = check->add_subcommand("smooth", "sufficient conditions, obstruction and verdict");
  SpecSource smooth_src;
  smooth_src.attach(check_smooth);
  check_smooth->add_option("--max-degree", max_degree, "degree bound for the calculus stages");
  check_smooth->add_option("--seed", seed, "seed for randomized Leibniz checks");

  auto* verify = app.add_subcommand("verify", "constructive verification");
  verify->require_subcommand(1);
  auto* verify_calc = verify->add_subcommand("calculus", "run the calculus stages (automorphisms to integrability)");
  SpecSource calc_src;
  calc_src.attach(verify_calc);
  verify_calc->add_option("--max-degree", max_degree, "degree bound")->required();
  verify_calc->add_option("--seed", seed, "seed for randomized Leibniz checks");

  auto* table = app.add_subcommand("table1", "classify the fifteen catalogue rows");
  table->add_option("--max-degree", max_degree, "degree bound for the calculus stages");

  auto* presets_cmd = app.add_subcommand("presets", "catalogue rows");
  presets_cmd->require_subcommand(1);
  presets_cmd->add_subcommand("list", "list catalogue rows");
  auto* preset_cmd = app.add_subcommand("preset", "catalogue row details");
  preset_cmd->require_subcommand(1);
  auto* preset_show = preset_cmd->add_subcommand("show", "print a row as an algebra description file");
  std::string show_id;
  preset_show->add_option("id", show_id, "row id, e.g. 2ii")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  const Format fmt = as_json ? Format::json : Format::text;

  try {
    if (reduce->parsed()) {
      const AlgebraSpec s = reduce_src.load();
      const Expr e = parse_expr(expr_text);
      out << render_reduce(s, expr_text, eval_expr(s, e), fmt);
      return kExitOk;
    }
    if (check_pbw->parsed()) {
      CheckReport r;
      r.spec = pbw_src.load();
      r.pbw = make_pbw_section(r.spec);
      out << render_report(r, fmt);
      bool ok = r.pbw->diamond_confluent;
      for (const auto& c : r.pbw->conditions) ok = ok && c.holds;
      return ok ? kExitOk : kExitCheckFailed;
    }
    if (check_smooth->parsed()) {
      CheckReport r;
      r.spec = smooth_src.load();
      VerifyOptions opt = VerifyOptions::with_degree(max_degree);
      opt.seed = seed;
      r.pbw = make_pbw_section(r.spec);
      r.smoothness = SmoothnessSection{thm31_check(r.spec), thm32_obstruction(r.spec), classify(r.spec, opt)};
      r.calculus = r.smoothness->verdict.calculus;
      r.seed = seed;
      out << render_report(r, fmt);
      const bool smooth = r.smoothness->verdict.kind == VerdictKind::smooth_verified;
      if (const Preset* row = smooth_src.catalogue_row()) {
        const bool negative = r.smoothness->verdict.kind == VerdictKind::not_smooth ||
                              r.smoothness->verdict.kind == VerdictKind::not_smooth_generic;
        return (row->expected_smooth ? smooth : negative) ? kExitOk : kExitCheckFailed;
      }
      return smooth ? kExitOk : kExitCheckFailed;
    }
    if (verify_calc->parsed()) {
      CheckReport r;
      r.spec = calc_src.load();
      VerifyOptions opt = VerifyOptions::with_degree(max_degree);
      opt.seed = seed;
      opt.calculus_only = true;
      const SmoothnessVerdict v = verify_construction(r.spec, opt);
      r.calculus = v.calculus;
      r.seed = seed;
      r.verification = v;
      out << render_report(r, fmt);
      return v.failed_stage ? kExitCheckFailed : kExitOk;
    }
    if (table->parsed()) {
      const CatalogueReport t = table1(max_degree);
      out << render_catalogue(t, max_degree, fmt);
      return t.all_match ? kExitOk : kExitCheckFailed;
    }
    if (presets_cmd->parsed()) {
      out << render_preset_list(fmt);
      return kExitOk;
    }
    if (preset_show->parsed()) {
      out << render_preset(preset(show_id), fmt);
      return kExitOk;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SyntaxError& e) {
    err << "syntax error at " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace skew3
