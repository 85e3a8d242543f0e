#include "acmgate/case_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "acmgate/binomial.hpp"
#include "acmgate/errors.hpp"
#include "acmgate/linear.hpp"

namespace acm {

namespace {

const std::string kC2 = "c2";

int u_index(const std::string& name) { return std::stoi(name.substr(1)); }

std::optional<std::int64_t> lookup(const Assignment& u, int j) {
  auto it = u.find(IdealSectionSymbols::name(j));
  if (it == u.end()) return std::nullopt;
  return it->second.to_int64();
}

std::string plane_curve_name(std::int64_t degree) {
  switch (degree) {
    case 1: return "line";
    case 2: return "conic";
    case 3: return "plane cubic";
    case 4: return "plane quartic";
    default: return "plane curve of degree " + std::to_string(degree);
  }
}

// Complete intersection types (a, b) in P^3 with a + b = e + 4, 2 <= a <= b.
std::vector<std::pair<int, int>> space_ci_types(int e) {
  std::vector<std::pair<int, int>> out;
  for (int a = 2; 2 * a <= e + 4; ++a) out.emplace_back(a, e + 4 - a);
  return out;
}

std::string describe(std::int64_t c2, const Assignment& u, int e) {
  auto u1 = lookup(u, 1);
  if (!u1) return e == -2 && c2 == 1 ? "line" : "";
  if (*u1 >= 3) return "line";
  if (*u1 == 2) return plane_curve_name(c2);
  if (*u1 == 1) {
    for (auto [a, b] : space_ci_types(e)) {
      if (static_cast<std::int64_t>(a) * b == c2) {
        return "space curve c.i. type (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    }
    return "space curve";
  }
  if (e == 0) return "elliptic non-degenerate";
  if (e == 1) return "canonical non-degenerate";
  return "non-degenerate";
}

}  // namespace

Poly h0_E_twist(const HypersurfaceContext& ctx, int c1, int t, const IdealSectionSymbols& syms) {
  return Poly(h0_OX(ctx, t)) + syms.at(c1 + t);
}

Poly C2Relation::rhs() const {
  LinExpr e{constant, coefficients};
  return e.to_poly();
}

Poly C2Relation::c2_value() const { return rhs() * Poly(Rational(1) / c2_coefficient); }

C2Relation C2Relation::reduced(const IdealSectionSymbols& syms) const {
  C2Relation out = *this;
  std::erase_if(out.coefficients, [&](const auto& kv) { return syms.forced_zero(u_index(kv.first)); });
  return out;
}

std::string C2Relation::str() const {
  std::string lhs = c2_coefficient == Rational(1) ? kC2 : c2_coefficient.str() + "*" + kC2;
  return lhs + " = " + rhs().str();
}

C2Relation derive_c2_relation(const HypersurfaceContext& ctx, int c1, int t, IdealSectionSymbols::Policy policy) {
  BundleInvariants inv{c1, Poly::var(kC2), ctx};
  IdealSectionSymbols syms(c1, policy);
  Poly chi = chi_rank2(twist(inv, t));
  Poly h0 = h0_E_twist(ctx, c1, t, syms);
  Poly h3 = h0_E_twist(ctx, c1, h3_dual_twist(inv, t), syms);
  LinExpr diff = LinExpr::from_poly(chi - (h0 - h3));

  Rational alpha = diff.coefficient(kC2);
  if (alpha.is_zero()) {
    throw DegenerateTwist("degenerate twist choice t=" + std::to_string(t) + " for c1=" + std::to_string(c1) +
                          ", r=" + std::to_string(ctx.degree()));
  }
  diff.coefficients.erase(kC2);
  // alpha*c2 + rest = 0, written with a positive c2 coefficient.
  Rational sign = alpha.sign() < 0 ? Rational(1) : Rational(-1);
  C2Relation rel;
  rel.c2_coefficient = -alpha * sign;
  rel.constant = diff.constant * sign;
  for (const auto& [name, c] : diff.coefficients) rel.coefficients[name] = c * sign;
  return rel;
}

std::optional<int> default_twist_offset(int k) {
  static const std::map<int, int> offsets = {{3, -3}, {4, -3}, {5, -4}, {6, -6}, {7, -5},
                                             {8, -6}, {9, -6}, {10, -7}, {11, -7}};
  auto it = offsets.find(k);
  if (it == offsets.end()) return std::nullopt;
  return it->second;
}

int search_twist(const HypersurfaceContext& ctx, int c1) {
  const int r = ctx.degree();
  std::optional<int> best;
  std::size_t best_unknowns = 0;
  for (int t = -r; t <= r; ++t) {
    C2Relation rel;
    try {
      rel = derive_c2_relation(ctx, c1, t, IdealSectionSymbols::Policy::Normalized);
    } catch (const DegenerateTwist&) {
      continue;
    }
    std::size_t n = rel.coefficients.size();
    bool better = !best || n < best_unknowns ||
                  (n == best_unknowns && (std::abs(t) < std::abs(*best) || (std::abs(t) == std::abs(*best) && t < *best)));
    if (better) {
      best = t;
      best_unknowns = n;
    }
  }
  if (!best) throw DegenerateTwist("no nondegenerate twist for c1=" + std::to_string(c1));
  return *best;
}

RIndependenceResult verify_r_independence(int k, const std::function<int(int)>& t_rule, int r_lo, int r_hi) {
  if (r_lo > r_hi) throw InvalidInput("empty range of hypersurface degrees");
  RIndependenceResult result;
  result.relation = derive_c2_relation(HypersurfaceContext(r_lo), k - r_lo, t_rule(r_lo));
  for (int r = r_lo + 1; r <= r_hi; ++r) {
    C2Relation rel = derive_c2_relation(HypersurfaceContext(r), k - r, t_rule(r));
    if (!(rel == result.relation)) {
      result.discrepancy = RIndependenceResult::Discrepancy{r_lo, result.relation, r, rel};
      return result;
    }
  }
  result.holds = true;
  return result;
}

const std::vector<CaseFilter>& default_case_filters() {
  static const std::vector<CaseFilter> filters = {
      {"hyperplane-bound",
       "a curve lies in at most 3 independent hyperplanes, and one lying in 3 is a line",
       [](const Assignment& u, std::int64_t c2, int) {
         auto u1 = lookup(u, 1);
         if (!u1) return true;
         if (*u1 > 3) return false;
         return *u1 < 3 || c2 == 1;
       }},
      {"degenerate-ci",
       "degenerate ACM subcanonical curves are complete intersections: plane curves of degree e+3, "
       "or space curves of type (a,b) with a+b = e+4",
       [](const Assignment& u, std::int64_t c2, int e) {
         auto u1 = lookup(u, 1);
         if (!u1 || *u1 == 0 || *u1 >= 3) return true;
         if (*u1 == 2) return c2 == e + 3;
         for (auto [a, b] : space_ci_types(e)) {
           if (static_cast<std::int64_t>(a) * b == c2) return true;
         }
         return false;
       }},
  };
  return filters;
}

std::vector<std::int64_t> CaseRow::admissible_c2() const {
  std::set<std::int64_t> values;
  if (solutions) {
    for (const auto& s : *solutions) values.insert(s.c2);
  }
  return {values.begin(), values.end()};
}

namespace {

std::optional<std::vector<CaseSolution>> enumerate_solutions(const C2Relation& rel, int e,
                                                             const EnumerationOptions& options,
                                                             std::vector<std::string>& filters_used) {
  std::vector<std::string> names;
  std::vector<std::int64_t> bounds;
  std::int64_t box = 1;
  for (const auto& [name, c] : rel.coefficients) {
    names.push_back(name);
    // A nonempty curve misses at least the constants among forms of degree j.
    bounds.push_back(hdim(u_index(name)) - 1);
    box *= bounds.back() + 1;
    if (box > options.max_assignments) return std::nullopt;
  }

  std::set<std::string> used;
  std::vector<CaseSolution> out;
  std::vector<std::int64_t> digits(names.size(), 0);
  const Poly c2_poly = rel.c2_value();
  for (;;) {
    Assignment u;
    for (std::size_t i = 0; i < names.size(); ++i) u[names[i]] = Rational(digits[i]);
    Rational c2 = c2_poly.eval(u);
    bool ok = c2.is_integer() && c2 >= Rational(1);
    if (ok && options.monotonicity_guard) {
      for (const auto& [name, value] : u) {
        int j = u_index(name);
        auto next = lookup(u, j + 1);
        if (next && value.to_int64() > *next + hdim(j + 1) - hdim(j)) ok = false;
      }
    }
    if (ok) {
      for (const auto& filter : default_case_filters()) {
        if (!filter.accept(u, c2.to_int64(), e)) {
          used.insert(filter.id);
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back({c2.to_int64(), u, describe(c2.to_int64(), u, e)});

    std::size_t i = 0;
    while (i < digits.size() && digits[i] == bounds[i]) digits[i++] = 0;
    if (i == digits.size()) break;
    ++digits[i];
  }
  std::stable_sort(out.begin(), out.end(), [](const CaseSolution& a, const CaseSolution& b) { return a.c2 < b.c2; });
  filters_used.assign(used.begin(), used.end());
  return out;
}

std::string recorded_note(int r, int c1) {
  if (r != 6) return "";
  if (c1 == 4) return "ideal generated in degree <= 5 (regularity of E(1))";
  if (c1 == 5) return "smooth, irreducible, generated by quintics (E is regular)";
  return "";
}

}  // namespace

std::vector<CaseRow> enumerate_cases(const HypersurfaceContext& ctx, const EnumerationOptions& options) {
  std::vector<CaseRow> rows;
  const int r = ctx.degree();
  for (int c1 : acm_c1_range(ctx)) {
    auto offset = default_twist_offset(c1 + r);
    int t = (options.search_twists || !offset) ? search_twist(ctx, c1) : r + *offset;
    CaseRow row;
    row.c1 = c1;
    row.twist = t;
    row.e = c1 + ctx.canonical_twist();
    row.relation = derive_c2_relation(ctx, c1, t);
    row.normalized = row.relation.reduced(IdealSectionSymbols(c1, IdealSectionSymbols::Policy::Normalized));
    row.solutions = enumerate_solutions(row.normalized, row.e, options, row.filters_used);
    row.note = recorded_note(r, c1);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CaseRow> enumerate_sextic_cases(const EnumerationOptions& options) {
  return enumerate_cases(HypersurfaceContext(6), options);
}

}  // namespace acm
