#include "acmgate/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "acmgate/errors.hpp"
#include "acmgate/linear.hpp"
#include "json.hpp"

namespace acm {

using ordered_json = nlohmann::ordered_json;

ExprField ExprField::expression(const std::string& text) { return {Poly::parse(text), text}; }

GorensteinResolution ResolutionFile::resolution() const {
  std::vector<GorensteinPair> out;
  for (const auto& p : pairs) out.push_back({p.twist, p.mult.value});
  return GorensteinResolution(e, std::move(out));
}

std::optional<CurveInvariants> ResolutionFile::curve() const {
  if (!invariants) return std::nullopt;
  CurveInvariants inv = CurveInvariants::subcanonical(invariants->d.value, e);
  if (invariants->g) inv.g = invariants->g->value;
  return inv;
}

std::set<std::string> ResolutionFile::symbols() const {
  std::set<std::string> out;
  for (const auto& p : pairs) out.merge(p.mult.value.unknowns());
  if (invariants) {
    out.merge(invariants->d.value.unknowns());
    if (invariants->g) out.merge(invariants->g->value.unknowns());
  }
  return out;
}

std::vector<Poly> ResolutionFile::constraint_polys() const {
  const auto known = symbols();
  std::vector<Poly> out;
  for (const auto& text : constraints) {
    Poly p = parse_equation(text);
    for (const auto& name : p.unknowns()) {
      if (!known.contains(name)) throw UnknownSymbolError(name);
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(std::string("malformed JSON: ") + ex.what());
  }
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError("schema violation: " + what); }

const ordered_json& member(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where + " lacks \"" + key + "\"");
  return *it;
}

int read_int(const ordered_json& v, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where + " must be an integer");
  return v.get<int>();
}

ExprField read_expr(const ordered_json& v, const std::string& where) {
  if (v.is_number_integer()) return ExprField::integer(v.get<std::int64_t>());
  if (v.is_string()) return ExprField::expression(v.get<std::string>());
  schema_error(where + " must be an integer or an expression string");
}

ordered_json write_expr(const ExprField& f) {
  if (f.text) return *f.text;
  if (auto c = f.value.constant_value(); c && c->is_integer()) return c->to_int64();
  return f.value.str();
}

ordered_json write_poly(const Poly& p) {
  if (auto c = p.constant_value(); c && c->is_integer()) return c->to_int64();
  return p.str();
}

}  // namespace

ResolutionFile parse_resolution(const std::string& json_text) {
  ordered_json doc = parse_json(json_text);
  if (!doc.is_object()) schema_error("resolution must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "e" && key != "pairs" && key != "invariants" && key != "constraints") {
      schema_error("unexpected key \"" + key + "\"");
    }
  }
  ResolutionFile out;
  out.e = read_int(member(doc, "e", "resolution"), "\"e\"");
  const auto& pairs = member(doc, "pairs", "resolution");
  if (!pairs.is_array()) schema_error("\"pairs\" must be an array");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::string where = "pairs[" + std::to_string(i) + "]";
    out.pairs.push_back({read_int(member(pairs[i], "twist", where), where + ".twist"),
                         read_expr(member(pairs[i], "mult", where), where + ".mult")});
  }
  if (auto it = doc.find("invariants"); it != doc.end()) {
    ResolutionFile::Invariants inv{read_expr(member(*it, "d", "invariants"), "invariants.d"), std::nullopt};
    if (auto g = it->find("g"); g != it->end()) inv.g = read_expr(*g, "invariants.g");
    out.invariants = std::move(inv);
  }
  if (auto it = doc.find("constraints"); it != doc.end()) {
    if (!it->is_array()) schema_error("\"constraints\" must be an array");
    for (const auto& c : *it) {
      if (!c.is_string()) schema_error("constraints must be strings");
      out.constraints.push_back(c.get<std::string>());
    }
  }
  return out;
}

std::string dump_resolution(const ResolutionFile& file) {
  ordered_json doc;
  doc["e"] = file.e;
  doc["pairs"] = ordered_json::array();
  for (const auto& p : file.pairs) {
    ordered_json entry;
    entry["twist"] = p.twist;
    entry["mult"] = write_expr(p.mult);
    doc["pairs"].push_back(std::move(entry));
  }
  if (file.invariants) {
    ordered_json inv;
    inv["d"] = write_expr(file.invariants->d);
    if (file.invariants->g) inv["g"] = write_expr(*file.invariants->g);
    doc["invariants"] = std::move(inv);
  }
  if (!file.constraints.empty()) doc["constraints"] = file.constraints;
  return doc.dump(2) + "\n";
}

GradedComplex parse_complex(const std::string& json_text) {
  ordered_json doc = parse_json(json_text);
  const auto& terms = member(doc, "terms", "complex");
  if (!terms.is_array() || terms.size() != 3) schema_error("\"terms\" must be an array of three term lists");
  std::array<std::vector<Summand>, 3> parsed;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!terms[i].is_array()) schema_error("terms[" + std::to_string(i) + "] must be an array");
    for (std::size_t j = 0; j < terms[i].size(); ++j) {
      std::string where = "terms[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      parsed[i].push_back({read_int(member(terms[i][j], "twist", where), where + ".twist"),
                           read_expr(member(terms[i][j], "mult", where), where + ".mult").value});
    }
  }
  return {parsed[0], parsed[1], parsed[2]};
}

std::string dump_complex(const GradedComplex& cx) {
  ordered_json terms = ordered_json::array();
  for (int i = 1; i <= 3; ++i) {
    ordered_json term = ordered_json::array();
    for (const auto& s : cx.term(i)) {
      ordered_json entry;
      entry["twist"] = s.twist;
      entry["mult"] = write_poly(s.mult);
      term.push_back(std::move(entry));
    }
    terms.push_back(std::move(term));
  }
  ordered_json doc;
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

Assignment parse_assignments(const std::string& text) {
  Assignment out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  auto trim = [](std::string s) {
    auto first = s.find_first_not_of(" \t\r");
    auto last = s.find_last_not_of(" \t\r");
    return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
  };
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    std::string where = "assignment line " + std::to_string(number);
    if (eq == std::string::npos) throw ParseError(where + ": expected name=integer");
    std::string name = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (name.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
      throw ParseError(where + ": expected name=integer");
    }
    if (!out.emplace(name, Rational(v)).second) throw ParseError(where + ": '" + name + "' assigned twice");
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace acm
