#include "skew3/spec_file.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "skew3/expr.hpp"

namespace skew3 {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

AlgebraSpec parse_spec_file(std::string_view src) {
  const auto& names = AlgebraSpec::field_names();
  AlgebraSpec spec;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= src.size()) {
    const auto nl = src.find('\n', start);
    std::string_view line =
        src.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? src.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw SpecParseError(line_no, "expected 'key = expression'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view rhs = trim(line.substr(eq + 1));
    if (std::find(names.begin(), names.end(), key) == names.end()) {
      throw SpecParseError(line_no, "unknown key '" + key + "'");
    }
    if (!seen.insert(key).second) throw SpecParseError(line_no, "duplicate key '" + key + "'");
    if (rhs.empty()) throw SpecParseError(line_no, "missing value for '" + key + "'");

    Expr e;
    try {
      e = parse_expr(rhs);
    } catch (const SyntaxError& err) {
      throw SpecParseError(line_no, std::string("in value of '") + key + "': " + err.what());
    }
    if (e.has_generators()) {
      throw SpecParseError(line_no, "value of '" + key + "' must not contain x, y or z");
    }
    try {
      spec.field(key) = eval_scalar(e);
    } catch (const DivisionByZero&) {
      throw SpecParseError(line_no, "value of '" + key + "' divides by zero");
    }
  }
  for (const char* required : {"alpha", "beta", "gamma"}) {
    if (!seen.count(required)) {
      throw SpecParseError(line_no, std::string("missing required key '") + required + "'");
    }
  }
  validate_spec(spec);
  return spec;
}

std::string render_spec_file(const AlgebraSpec& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < AlgebraSpec::field_names().size(); ++i) {
    const auto name = AlgebraSpec::field_names()[i];
    const RationalFn& v = s.field(name);
    if (i >= 3 && v.is_zero()) continue;
    out << name << " = " << v.to_string() << "\n";
  }
  return out.str();
}

AlgebraSpec load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_file(buf.str());
}

}  // namespace skew3
