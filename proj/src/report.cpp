#include "acmgate/report.hpp"

#include <algorithm>
#include <sstream>

#include "acmgate/binomial.hpp"
#include "acmgate/errors.hpp"

namespace acm {

namespace {

std::string md_cell(const std::string& text) {
  std::string out;
  for (char ch : text) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string num(std::int64_t v) { return std::to_string(v); }

// Runs of four or more equally spaced values collapse to "lo..hi" or
// "lo..hi step k".
std::string format_values(const std::vector<std::int64_t>& values) {
  if (values.empty()) return "none";
  if (values.size() >= 4) {
    std::int64_t step = values[1] - values[0];
    bool progression = step > 0;
    for (std::size_t i = 2; i < values.size() && progression; ++i) {
      progression = values[i] - values[i - 1] == step;
    }
    if (progression) {
      std::string out = num(values.front()) + ".." + num(values.back());
      return step == 1 ? out : out + " step " + num(step);
    }
  }
  std::vector<std::string> parts;
  for (auto v : values) parts.push_back(num(v));
  return join(parts, ", ");
}

std::string format_solution(const std::vector<Substitution>& solution) {
  std::vector<std::string> parts;
  for (const auto& s : solution) parts.push_back(s.str());
  return parts.empty() ? "none" : join(parts, "; ");
}

}  // namespace

std::string ReportTable::to_markdown() const {
  std::ostringstream out;
  out << "### " << title << "\n\n|";
  for (const auto& c : columns) out << ' ' << md_cell(c) << " |";
  out << "\n|";
  for (std::size_t i = 0; i < columns.size(); ++i) out << " --- |";
  out << '\n';
  for (const auto& row : rows) {
    out << '|';
    for (const auto& cell : row) out << ' ' << md_cell(cell) << " |";
    out << '\n';
  }
  return out.str();
}

std::string ReportTable::to_csv() const {
  std::ostringstream out;
  out << "# " << title << '\n';
  std::vector<std::string> cells;
  for (const auto& c : columns) cells.push_back(csv_cell(c));
  out << join(cells, ",") << '\n';
  for (const auto& row : rows) {
    cells.clear();
    for (const auto& cell : row) cells.push_back(csv_cell(cell));
    out << join(cells, ",") << '\n';
  }
  return out.str();
}

ReportFormat parse_report_format(const std::string& text) {
  if (text == "md" || text == "markdown") return ReportFormat::Markdown;
  if (text == "csv") return ReportFormat::Csv;
  throw InvalidInput("unknown format '" + text + "' (expected md or csv)");
}

std::string render(const std::vector<ReportTable>& tables, ReportFormat format) {
  std::vector<std::string> parts;
  for (const auto& t : tables) parts.push_back(format == ReportFormat::Markdown ? t.to_markdown() : t.to_csv());
  return join(parts, "\n");
}

const std::vector<SexticCurve>& sextic_curves() {
  static const std::vector<SexticCurve> curves = [] {
    auto p = [](int twist, Poly mult) { return GorensteinPair{twist, std::move(mult)}; };
    auto v = [](const char* name) { return Poly::var(name); };
    auto sub = [](std::int64_t d, int e) { return CurveInvariants::subcanonical(Poly(d), e); };
    std::vector<SexticCurve> out;
    out.push_back({"line", "line", -3, GorensteinResolution(-2, {p(1, 3)}), sub(1, -2), {}, kPublished});
    out.push_back({"conic", "conic", -2, GorensteinResolution(-1, {p(1, 2), p(2, 1)}), sub(2, -1), {}, kDerived});
    out.push_back({"plane-cubic", "plane cubic", -1, GorensteinResolution(0, {p(1, 2), p(3, 1)}), sub(3, 0), {},
                   kPublished});
    out.push_back({"elliptic-quartic", "elliptic quartic c.i. (1,2,2)", -1,
                   GorensteinResolution(0, {p(1, 1), p(2, 2)}), sub(4, 0), {}, kPublished});
    out.push_back({"elliptic-quintic", "elliptic quintic", -1, GorensteinResolution(0, {p(2, 5)}), sub(5, 0), {},
                   kPublished});
    out.push_back({"plane-quartic", "plane quartic", 0, GorensteinResolution(1, {p(1, 2), p(4, 1)}), sub(4, 1), {},
                   kDerived});
    out.push_back({"ci-1-2-3", "canonical sextic c.i. (1,2,3)", 0,
                   GorensteinResolution(1, {p(1, 1), p(2, 1), p(3, 1)}), sub(6, 1), {}, kDerived});
    out.push_back({"canonical-8", "canonical curve of genus 5", 0, GorensteinResolution(1, {p(2, v("c")), p(3, v("x"))}),
                   sub(8, 1), {"c", "x"}, kPublished});
    out.push_back({"c1-2-d14", "c1 = 2, degree 14", 2, GorensteinResolution(3, {p(2, 3), p(5, 2)}), sub(14, 3), {},
                   kPublished});
    out.push_back({"c1-2-d16", "c1 = 2, degree 16", 2,
                   GorensteinResolution(3, {p(2, 2), p(3, v("a")), p(4, v("b")), p(5, v("x"))}), sub(16, 3),
                   {"a", "b", "x"}, kPublished});
    out.push_back({"c1-2-d18", "c1 = 2, degree 18", 2, GorensteinResolution(3, {p(2, 1), p(3, 2), p(4, v("b"))}),
                   sub(18, 3), {"b"}, kPublished});
    out.push_back({"c1-2-d20", "c1 = 2, degree 20", 2, GorensteinResolution(3, {p(3, 4), p(4, v("b"))}), sub(20, 3),
                   {"b"}, kPublished});
    out.push_back({"c1-3", "c1 = 3, degree d", 3, GorensteinResolution(4, {p(3, v("x")), p(4, v("a")), p(5, v("b"))}),
                   CurveInvariants::subcanonical(v("d"), 4), {"x", "b", "a"}, kPublished});
    out.push_back({"c1-4", "c1 = 4, degree 40", 4, GorensteinResolution(5, {p(4, 5), p(5, v("x"))}), sub(40, 5),
                   {"x"}, kPublished});
    out.push_back({"c1-5", "c1 = 5, degree 55", 5, GorensteinResolution(6, {p(5, 11)}), sub(55, 6), {}, kPublished});
    return out;
  }();
  return curves;
}

const SexticCurve& sextic_curve(const std::string& id) {
  for (const auto& c : sextic_curves()) {
    if (c.id == id) return c;
  }
  throw InvalidInput("no sextic curve '" + id + "'");
}

const std::vector<CitedNormalBundle>& cited_c1_1_normal_bundles() {
  static const std::vector<CitedNormalBundle> rows = {{14, 56}, {13, 53}, {12, 50}, {11, 47}};
  return rows;
}

std::vector<LemmaSolution> c1_2_lemma_solutions(int max_degree) {
  std::vector<LemmaSolution> out;
  for (int delta = 1; delta <= max_degree; ++delta) {
    GradedComplex plane = koszul_resolution(CIType(1, 1, delta));
    GradedComplex back = link(link(plane, CIType(1, 2, 5)), CIType(2, 2, 5));
    for (const auto& res : gorenstein_reductions(back, 3)) {
      std::map<int, std::int64_t> m;
      bool in_range = true;
      for (const auto& pair : res.pairs()) {
        if (pair.twist < 2 || pair.twist > 5) in_range = false;
        m[pair.twist] = pair.mult.constant_value()->to_int64();
      }
      if (!in_range || m[2] < 3) continue;
      out.push_back({delta, back, res, m[5], m[3], m[4], m[2]});
    }
  }
  return out;
}

std::vector<ChainStep> c1_3_chain() {
  const SexticCurve& curve = sextic_curve("c1-3");
  const auto constraints = hilbert_constraints(curve.resolution, curve.invariants, curve.pivots);
  std::vector<ChainStep> steps;
  auto record = [&](std::string label, GradedComplex cx) {
    DegreeGenus inv = degree_genus(cx.apply(constraints));
    steps.push_back({std::move(label), std::move(cx), std::move(inv)});
  };

  GradedComplex c = as_complex(curve.resolution);
  record("C", c);

  GradedComplex c1 = link(c, CIType(3, 3, 5));
  c1 = cancel_pair(c1, Position::F2F3, 8, Poly(2));
  c1 = cancel_pair(c1, Position::F2F3, 6, Poly(1));
  record("C' = link(C, (3,3,5))", c1);

  GradedComplex c2 = link(c1, CIType(2, 3, 5));
  for (int twist : {8, 7, 5}) c2 = cancel_pair(c2, Position::F2F3, twist, Poly(1));
  c2 = cancel_pair(c2, Position::F1F2, 5, Poly(1));
  c2 = cancel_pair(c2, Position::F1F2, 3, Poly(1) - Poly::var("eps"));
  record("C'' = link(C', (2,3,5))", c2);

  GradedComplex c3 = link(c2, CIType(2, 2, 4));
  c3 = cancel_pair(c3, Position::F2F3, 6, Poly(2));
  record("C''' = link(C'', (2,2,4))", c3);
  return steps;
}

ReportTable classify_table(int r, const EnumerationOptions& options) {
  HypersurfaceContext ctx(r);
  ReportTable table;
  table.title = "Rank-2 ACM bundles on a hypersurface of degree " + num(r) + ": c2 by normalized c1";
  table.columns = {"c1", "twist", "e", "relation", "c2 (normalized)", "c2 values", "curves", "note", "provenance"};
  for (const auto& row : enumerate_cases(ctx, options)) {
    std::string values = row.solutions ? format_values(row.admissible_c2()) : "not enumerated";
    std::vector<std::string> curves;
    if (row.solutions) {
      for (const auto& s : *row.solutions) {
        if (!s.description.empty() && std::find(curves.begin(), curves.end(), s.description) == curves.end()) {
          curves.push_back(s.description);
        }
      }
    }
    table.rows.push_back({num(row.c1), num(row.twist), num(row.e), row.relation.str(),
                          "c2 = " + row.normalized.c2_value().str(), values,
                          join(curves, "; "), row.note, r == 6 ? kPublished : kDerived});
  }
  return table;
}

namespace {

ReportTable relation_table() {
  ReportTable table;
  table.title = "c2 relations across hypersurface degrees (c1 = k - r, twist r + offset)";
  table.columns = {"k", "c1 at r = 6", "twist", "degrees r", "relation", "c2", "r-independent", "provenance"};
  for (int k = 3; k <= 11; ++k) {
    int offset = *default_twist_offset(k);
    int lo = k <= 6 ? 3 : 6;
    auto result = verify_r_independence(k, [offset](int r) { return r + offset; }, lo, 12);
    std::string twist = offset < 0 ? "r - " + num(-offset) : "r + " + num(offset);
    table.rows.push_back({num(k), num(k - 6), twist, num(lo) + ".." + num(12), result.relation.str(),
                          result.relation.c2_value().str(), result.holds ? "yes" : "no", k <= 9 ? kPublished : kDerived});
  }
  return table;
}

ReportTable riemann_roch_table() {
  HypersurfaceContext sextic(6);
  ReportTable table;
  table.title = "Riemann-Roch checkpoints on a sextic threefold";
  table.columns = {"quantity", "value", "provenance"};
  BundleInvariants trivial{0, Poly(0), sextic};
  table.rows.push_back({"chi(E), c1 = 0, c2 = 0", chi_rank2(trivial).str(), kPublished});
  table.rows.push_back({"chi(E), c1 = 0, c2 = 0 (sextic formula)", chi_rank2_sextic(0, Poly(0)).str(), kPublished});
  table.rows.push_back({"h0(O_P4(6))", num(hdim(6)), kPublished});
  table.rows.push_back({"dim of the space of sextics", num(hdim(6) - 1), kPublished});
  auto range = acm_c1_range(sextic);
  table.rows.push_back({"normalized c1 range", num(range.front()) + ".." + num(range.back()), kPublished});
  BundleInvariants line_case{-3, Poly(1), sextic};
  table.rows.push_back({"h3(E(3)) = h0(E(m)), c1 = -3: m", num(h3_dual_twist(line_case, 3)), kPublished});
  table.rows.push_back({"h0(E(3)), c1 = -3", num(h0_OX(sextic, 3)), kDerived});
  return table;
}

}  // namespace

std::vector<ReportTable> reproduce_classification() {
  return {classify_table(6), relation_table(), riemann_roch_table()};
}

namespace {

std::string verdict_cell(const GateReport& report) {
  return to_string(report.verdict);
}

ReportTable gate_table(std::int64_t ambient_dim) {
  ReportTable table;
  table.title = "Dimension gates for ACM curves on a general sextic (ambient dimension " + num(ambient_dim) + ")";
  table.columns = {"case", "c1", "d", "g", "generators", "h0(N_C)", "h0(I_C(6))", "bound", "verdict", "provenance"};
  GateOptions options;
  options.ambient_dim = ambient_dim;
  for (const auto& curve : sextic_curves()) {
    options.pivot_order = curve.pivots;
    GateReport report = flag_gate(curve.resolution, curve.invariants, options);
    std::string verdict = verdict_cell(report);
    if (report.residual) {
      auto passing = gate_scan(report, "d", 1, 30);
      verdict = passing.empty() ? "inconclusive" : "dominant-impossible iff d >= " + num(passing.front());
    }
    GorensteinResolution solved = curve.resolution.apply(report.constraints);
    table.rows.push_back({curve.description, num(curve.c1), curve.invariants.d.str(), curve.invariants.g.str(),
                          format_summands(solved.generators()), report.h0N.str(), report.h0I.str(),
                          report.bound.str(), verdict, curve.provenance});
  }
  return table;
}

ReportTable cited_table(std::int64_t ambient_dim) {
  ReportTable table;
  table.title = "c1 = 1 curves with cited normal bundle dimensions";
  table.columns = {"d", "g", "h0(O_C(6))", "h0(I_C(6))", "h0(N_C)", "bound", "verdict", "provenance"};
  GateOptions options;
  options.ambient_dim = ambient_dim;
  for (const auto& row : cited_c1_1_normal_bundles()) {
    CurveInvariants inv = CurveInvariants::subcanonical(Poly(row.d), 2);
    GateReport report = flag_gate_cited(Poly(row.h0N), inv, options);
    table.rows.push_back({num(row.d), inv.g.str(), h0_curve_from_invariants(inv, 6).str(), report.h0I.str(),
                          report.h0N.str(), report.bound.str(), verdict_cell(report),
                          std::string(kPublished) + "; h0(N_C) " + kExternal});
  }
  return table;
}

ReportTable constraint_table() {
  ReportTable table;
  table.title = "Hilbert polynomial constraints on resolution shapes";
  table.columns = {"case", "generators", "constraints", "provenance"};
  for (const char* id : {"canonical-8", "c1-2-d16", "c1-3", "c1-5"}) {
    const auto& curve = sextic_curve(id);
    table.rows.push_back({curve.description, format_summands(curve.resolution.generators()),
                          format_solution(hilbert_constraints(curve.resolution, curve.invariants, curve.pivots)),
                          kPublished});
  }
  const auto& c13 = sextic_curve("c1-3");
  auto solved = hilbert_constraints(c13.resolution, c13.invariants, c13.pivots);
  Poly gap = acm::apply(solved, Poly::var("b") - Poly::var("a"));
  table.rows.push_back({c13.description, "b - a", gap.str() + " = 3*(27 - d)", kPublished});
  Poly degree55 = Poly::var("m");
  GorensteinResolution shape(6, {{5, degree55}});
  table.rows.push_back({"degree 55, genus 166", format_summands(shape.generators()),
                        format_solution(hilbert_constraints(shape, sextic_curve("c1-5").invariants)), kPublished});
  return table;
}

ReportTable quantity_table() {
  ReportTable table;
  table.title = "Further quantities";
  table.columns = {"quantity", "value", "provenance"};
  const auto& line = sextic_curve("line");
  table.rows.push_back({"dim of sextics through a line", (h0_ideal(line.resolution, 6) - Poly(1)).str(), kPublished});
  table.rows.push_back({"dim of the family of lines (h0(N_C))", km_h0_normal(line.resolution).str(), kPublished});
  table.rows.push_back({"incidence dimension for lines",
                        (km_h0_normal(line.resolution) + h0_ideal(line.resolution, 6) - Poly(1)).str(), kPublished});
  const auto& c15 = sextic_curve("c1-5");
  table.rows.push_back({"h0(O_C(5)), degree 55", h0_curve(c15.resolution, 5).str(), kPublished});
  table.rows.push_back({"h0(O_C(1)) + 110, degree 55", (h0_curve(c15.resolution, 1) + Poly(110)).str(), kPublished});
  DegreeGenus dg55 = degree_genus(as_complex(c15.resolution));
  table.rows.push_back({"(d, g) read off the degree 55 resolution", "(" + dg55.d.str() + ", " + dg55.g.str() + ")",
                        kPublished});
  DegreeGenus dg40 = degree_genus(as_complex(sextic_curve("c1-4").resolution));
  table.rows.push_back({"(d, g) read off the c1 = 4 resolution", "(" + dg40.d.str() + ", " + dg40.g.str() + ")",
                        kPublished});
  return table;
}

ReportTable lemma_table() {
  ReportTable table;
  table.title = "c1 = 2 curves in at least three quadrics, linked back from plane curves";
  table.columns = {"deg C''", "x", "a", "b", "c", "deg C", "resolution of C", "provenance"};
  for (const auto& s : c1_2_lemma_solutions()) {
    table.rows.push_back({num(s.plane_degree), num(s.x), num(s.a), num(s.b), num(s.c),
                          degree_genus(as_complex(s.resolution)).d.str(), as_complex(s.resolution).str(),
                          kPublished});
  }
  GradedComplex linked = link(as_complex(sextic_curve("c1-2-d14").resolution), CIType(2, 2, 5));
  table.rows.push_back({"-", "-", "-", "-", "-", degree_genus(linked).d.str(),
                        "link of degree 14 by (2,2,5): " + linked.str(), kPublished});
  GradedComplex koszul = koszul_resolution(CIType(2, 2, 5));
  table.rows.push_back({"-", "-", "-", "-", "-", degree_genus(koszul).d.str(), "c.i. (2,2,5): " + koszul.str(),
                        kPublished});
  return table;
}

ReportTable chain_table() {
  ReportTable table;
  table.title = "c1 = 3 linkage chain (eps = 0 or 1)";
  table.columns = {"curve", "resolution", "degree", "genus", "provenance"};
  for (const auto& step : c1_3_chain()) {
    table.rows.push_back({step.label, step.complex.str(), step.invariants.d.str(), step.invariants.g.str(),
                          step.label.starts_with("C''' ") ? kDerived : kPublished});
  }
  return table;
}

}  // namespace

std::vector<ReportTable> reproduce_gates(std::int64_t ambient_dim) {
  return {gate_table(ambient_dim), cited_table(ambient_dim), constraint_table(),
          quantity_table(), lemma_table(), chain_table()};
}

}  // namespace acm
