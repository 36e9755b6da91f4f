#include "skew3/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "skew3/spec_file.hpp"

namespace skew3 {

using json = nlohmann::ordered_json;

namespace {

json spec_json(const AlgebraSpec& s) {
  json j = json::object();
  for (auto name : AlgebraSpec::field_names()) j[std::string(name)] = s.field(name).to_string();
  return j;
}

json opt_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json pbw_json(const PbwSection& p) {
  json conds = json::array();
  for (const auto& c : p.conditions) {
    conds.push_back({{"id", c.id}, {"expr", c.lhs.to_string()}, {"holds", c.holds}});
  }
  return {{"conditions", conds}, {"diamond_confluent", p.diamond_confluent}};
}

json calculus_json(const CalculusReport& c, const std::optional<std::uint64_t>& seed) {
  json j = {{"max_degree", c.max_degree},     {"dd_zero", opt_bool(c.dd_zero)},
            {"leibniz_ok", opt_bool(c.leibniz_ok)}, {"oracle_match", opt_bool(c.oracle_match)},
            {"connected", opt_bool(c.connected)}, {"integrable", opt_bool(c.integrable)}};
  if (seed) j["seed"] = *seed;
  return j;
}

void add_outcome(json& j, const SmoothnessVerdict& v) {
  if (v.failed_stage) {
    j["failed_stage"] = static_cast<int>(*v.failed_stage);
    j["failed_stage_name"] = std::string(stage_name(*v.failed_stage));
  }
  j["evidence"] = v.evidence;
}

json smoothness_json(const SmoothnessSection& s) {
  json thm = json::array();
  for (const auto& c : s.thm31) {
    thm.push_back({{"id", c.id}, {"condition", c.expr}, {"expr", c.lhs.to_string()}, {"holds", c.holds}});
  }
  json j = {{"thm31", thm},
            {"obstruction", s.obstruction.to_string()},
            {"verdict", std::string(verdict_name(s.verdict.kind))}};
  add_outcome(j, s.verdict);
  return j;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_text(const std::optional<bool>& b) {
  return b ? yes_no(*b) : "not reached";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void text_outcome(std::ostringstream& out, const SmoothnessVerdict& v) {
  if (v.failed_stage) {
    out << "failed stage: " << static_cast<int>(*v.failed_stage) << " (" << stage_name(*v.failed_stage)
        << ")\n";
  }
  for (const auto& e : v.evidence) out << "evidence: " << e << "\n";
}

void text_calculus(std::ostringstream& out, const CalculusReport& c,
                   const std::optional<std::uint64_t>& seed) {
  out << "calculus (max degree " << c.max_degree;
  if (seed) out << ", seed " << *seed;
  out << ")\n";
  out << "  d_closed = d_leibniz: " << opt_text(c.oracle_match) << "\n";
  out << "  Leibniz rule:         " << opt_text(c.leibniz_ok) << "\n";
  out << "  d o d = 0:            " << opt_text(c.dd_zero) << "\n";
  out << "  connected:            " << opt_text(c.connected) << "\n";
  out << "  integrable:           " << opt_text(c.integrable) << "\n";
}

}  // namespace

PbwSection make_pbw_section(const AlgebraSpec& s) {
  const DiamondReport d = diamond_check(s);
  return PbwSection{pbw_conditions(s), d.confluent, d.closed_form_match};
}

std::string render_report(const CheckReport& r, Format f) {
  if (f == Format::json) {
    json j = {{"spec", spec_json(r.spec)}};
    if (r.pbw) j["pbw"] = pbw_json(*r.pbw);
    if (r.smoothness) j["smoothness"] = smoothness_json(*r.smoothness);
    if (r.calculus) j["calculus"] = calculus_json(*r.calculus, r.seed);
    if (r.verification) {
      json v = {{"passed", !r.verification->failed_stage.has_value()}};
      add_outcome(v, *r.verification);
      j["verification"] = v;
    }
    return dump(j);
  }
  std::ostringstream out;
  out << "spec:\n";
  std::istringstream lines(render_spec_file(r.spec));
  for (std::string l; std::getline(lines, l);) out << "  " << l << "\n";
  if (r.pbw) {
    out << "PBW conditions:\n";
    for (const auto& c : r.pbw->conditions) {
      out << "  " << std::left << std::setw(4) << c.id << (c.holds ? "holds " : "FAILS ") << c.lhs.to_string()
          << (c.holds ? "" : " != 0") << "\n";
    }
    out << "diamond zyx: " << (r.pbw->diamond_confluent ? "confluent" : "NOT confluent") << "\n";
  }
  if (r.smoothness) {
    out << "sufficient conditions:\n";
    for (const auto& c : r.smoothness->thm31) {
      out << "  " << std::left << std::setw(4) << c.id << (c.holds ? "holds " : "FAILS ") << c.expr << "\n";
    }
    out << "obstruction: " << r.smoothness->obstruction.to_string() << "\n";
    out << "verdict: " << verdict_name(r.smoothness->verdict.kind) << "\n";
    text_outcome(out, r.smoothness->verdict);
  }
  if (r.calculus) text_calculus(out, *r.calculus, r.seed);
  if (r.verification) {
    out << "calculus verification: " << (r.verification->failed_stage ? "FAILED" : "passed") << "\n";
    text_outcome(out, *r.verification);
  }
  return out.str();
}

std::string render_catalogue(const CatalogueReport& t, std::uint32_t max_degree, Format f) {
  if (f == Format::json) {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json row = {{"id", r.id},
                  {"expected", r.expected_smooth ? "smooth" : "not_smooth"},
                  {"verdict", std::string(verdict_name(r.verdict.kind))}};
      add_outcome(row, r.verdict);
      row["matches"] = r.matches;
      rows.push_back(row);
    }
    return dump({{"max_degree", max_degree},
                 {"rows", rows},
                 {"smooth_verified", t.verified},
                 {"not_smooth", t.not_smooth},
                 {"all_match", t.all_match}});
  }
  std::ostringstream out;
  out << std::left << std::setw(6) << "row" << std::setw(10) << "expected" << std::setw(20) << "verdict"
      << "match\n";
  for (const auto& r : t.rows) {
    out << std::left << std::setw(6) << r.id << std::setw(10) << (r.expected_smooth ? "smooth" : "not")
        << std::setw(20) << verdict_name(r.verdict.kind) << (r.matches ? "ok" : "MISMATCH") << "\n";
  }
  out << t.verified << " smooth_verified, " << t.not_smooth << " not_smooth; "
      << (t.all_match ? "all rows match" : "MISMATCH") << "\n";
  return out.str();
}

std::string render_reduce(const AlgebraSpec& s, const std::string& input, const NCPoly& normal,
                          Format f) {
  if (f == Format::json) {
    return dump({{"spec", spec_json(s)}, {"input", input}, {"normal_form", normal.to_string()}});
  }
  return normal.to_string() + "\n";
}

std::string render_preset_list(Format f) {
  if (f == Format::json) {
    json rows = json::array();
    for (const auto* list : {&presets(), &preset_variants()}) {
      for (const auto& p : *list) {
        rows.push_back({{"id", p.id},
                        {"expected", list == &presets() ? json(p.expected_smooth ? "smooth" : "not_smooth")
                                                        : json(nullptr)},
                        {"relations", p.relations}});
      }
    }
    return dump(rows);
  }
  std::ostringstream out;
  for (const auto& p : presets()) {
    out << std::left << std::setw(6) << p.id << std::setw(12) << (p.expected_smooth ? "smooth" : "not smooth")
        << p.relations << "\n";
  }
  for (const auto& p : preset_variants()) {
    out << std::left << std::setw(6) << p.id << std::setw(12) << "variant" << p.relations << "\n";
  }
  return out.str();
}

std::string render_preset(const Preset& p, Format f) {
  if (f == Format::json) {
    return dump({{"id", p.id}, {"relations", p.relations}, {"spec", spec_json(p.spec)}});
  }
  return "# preset " + p.id + ": " + p.relations + "\n" + render_spec_file(p.spec);
}

}  // namespace skew3
