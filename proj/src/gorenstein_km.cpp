#include "acmgate/gorenstein_km.hpp"

#include <algorithm>

#include "acmgate/binomial.hpp"
#include "acmgate/errors.hpp"

namespace acm {

CurveInvariants CurveInvariants::subcanonical(Poly d, int e) {
  Poly g = Poly(1) + Poly(Rational(e, 2)) * d;
  return {std::move(d), std::move(g), e};
}

CurveInvariants CurveInvariants::from_bundle(const BundleInvariants& inv) {
  return subcanonical(inv.c2, inv.c1 + inv.context.canonical_twist());
}

void CurveInvariants::validate() const {
  if (!(Poly(2) * g - Poly(2) == Poly(e) * d)) {
    throw InvalidInput("invariants violate 2g - 2 = e*d: d = " + d.str() + ", g = " + g.str() +
                       ", e = " + std::to_string(e));
  }
}

GorensteinResolution::GorensteinResolution(int e, std::vector<GorensteinPair> pairs)
    : e_(e), pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw InvalidInput("no generators: a resolution needs at least one pair");
}

std::vector<Summand> GorensteinResolution::generators() const {
  std::vector<Summand> out;
  for (const auto& p : pairs_) out.push_back({p.twist, p.mult});
  return normalize_summands(out);
}

std::vector<Summand> GorensteinResolution::syzygies() const {
  std::vector<Summand> out;
  for (const auto& p : pairs_) out.push_back({syzygy_twist(p.twist), p.mult});
  return normalize_summands(out);
}

std::set<std::string> GorensteinResolution::unknowns() const {
  std::set<std::string> out;
  for (const auto& p : pairs_) out.merge(p.mult.unknowns());
  return out;
}

GorensteinResolution GorensteinResolution::apply(const std::vector<Substitution>& solution) const {
  auto pairs = pairs_;
  for (auto& p : pairs) p.mult = acm::apply(solution, p.mult);
  return {e_, std::move(pairs)};
}

GorensteinResolution GorensteinResolution::partial_eval(const Assignment& values) const {
  auto pairs = pairs_;
  for (auto& p : pairs) p.mult = p.mult.partial_eval(values);
  return {e_, std::move(pairs)};
}

Poly h0_ideal(const GorensteinResolution& res, std::int64_t n) {
  return h0_of(res.generators(), n) - h0_of(res.syzygies(), n) + Poly(hdim(n - res.top_twist()));
}

Poly h0_curve(const GorensteinResolution& res, std::int64_t n) { return Poly(hdim(n)) - h0_ideal(res, n); }

Poly h0_curve_from_invariants(const CurveInvariants& inv, std::int64_t n) {
  if (n < 0) return Poly();
  if (n <= inv.e) {
    throw SpecialRange("special range: resolution required for h^0(O_C(" + std::to_string(n) +
                       ")) with e = " + std::to_string(inv.e));
  }
  return Poly(n) * inv.d + Poly(1) - inv.g;
}

SymbolicPoly1 ideal_hilbert_polynomial(const GorensteinResolution& res) {
  return hilbert_polynomial_of(res.generators()) - hilbert_polynomial_of(res.syzygies()) +
         to_symbolic(binom4_poly(-res.top_twist()));
}

std::vector<Poly> hilbert_equations(const GorensteinResolution& res, const CurveInvariants& inv) {
  SymbolicPoly1 curve = to_symbolic(binom4_poly(0)) - ideal_hilbert_polynomial(res);
  std::vector<Poly> equations;
  for (std::size_t power = 4; power >= 2; --power) equations.push_back(curve.coefficient(power));
  equations.push_back(curve.coefficient(1) - inv.d);
  equations.push_back(curve.coefficient(0) - (Poly(1) - inv.g));
  std::erase_if(equations, [](const Poly& p) { return p.is_zero(); });
  return equations;
}

namespace {

std::vector<std::string> default_pivots(const GorensteinResolution& res) {
  std::vector<GorensteinPair> sorted = res.pairs();
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.twist < b.twist; });
  std::vector<std::string> order;
  for (const auto& p : sorted) {
    for (const auto& name : p.mult.unknowns()) {
      if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
    }
  }
  return order;
}

std::vector<Substitution> solve_shape(const std::vector<Poly>& equations, const GorensteinResolution& res,
                                      const std::vector<std::string>& pivot_order) {
  std::vector<std::string> order = pivot_order;
  for (const auto& name : default_pivots(res)) {
    if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
  }
  try {
    return solve_linear(equations, order);
  } catch (const InconsistentConstraints& err) {
    throw InconsistentConstraints(std::string("resolution shape incompatible with (d,g,e): ") + err.what());
  }
}

}  // namespace

std::vector<Substitution> hilbert_constraints(const GorensteinResolution& res, const CurveInvariants& inv,
                                              const std::vector<std::string>& pivot_order,
                                              const std::vector<Poly>& extra) {
  auto equations = hilbert_equations(res, inv);
  equations.insert(equations.end(), extra.begin(), extra.end());
  return solve_shape(equations, res, pivot_order);
}

Poly km_h0_normal(const GorensteinResolution& res) {
  std::vector<GorensteinPair> sorted = res.pairs();
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.twist < b.twist; });

  Poly total;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& [a_i, m_i] = sorted[i];
    total += m_i * h0_curve(res, a_i);
    total -= m_i * Poly(binom4(a_i + 4));
    for (std::size_t j = i; j < sorted.size(); ++j) {
      const auto& [a_j, m_j] = sorted[j];
      const int b_j = res.syzygy_twist(a_j);
      Poly count = i == j ? m_i * (m_i - Poly(1)) * Poly(Rational(1, 2)) : m_i * m_j;
      total += count * Poly(binom4(-a_i + b_j + 4) - binom4(a_i - b_j + 4));
    }
  }
  return total;
}

std::string to_string(Verdict v) {
  return v == Verdict::DominantImpossible ? "dominant-impossible" : "inconclusive";
}

namespace {

void decide(GateReport& report, const GorensteinResolution* res, const GateOptions& options) {
  if (auto value = report.bound.constant_value()) {
    report.verdict = *value < Rational(report.ambient_dim) ? Verdict::DominantImpossible : Verdict::Inconclusive;
    if (report.verdict == Verdict::Inconclusive) report.residual = report.bound;
    return;
  }
  report.residual = report.bound;
  std::set<std::string> free = report.bound.unknowns();
  std::optional<GorensteinResolution> reduced;
  if (res) {
    reduced = res->apply(report.constraints);
    free.merge(reduced->unknowns());
  }
  std::vector<std::string> names(free.begin(), free.end());
  for (const auto& name : names) {
    if (!options.domains.contains(name)) return;  // cannot decide
  }
  std::vector<std::int64_t> digits;
  for (const auto& name : names) digits.push_back(options.domains.at(name).lo);
  for (;;) {
    Assignment values;
    for (std::size_t i = 0; i < names.size(); ++i) values[names[i]] = Rational(digits[i]);
    bool admitted = true;
    if (reduced) {
      for (const auto& p : reduced->pairs()) {
        Rational m = p.mult.eval(values);
        if (m.sign() < 0 || !m.is_integer()) admitted = false;
      }
    }
    if (admitted && !(report.bound.eval(values) < Rational(report.ambient_dim))) {
      report.verdict = Verdict::Inconclusive;
      report.witness = values;
      return;
    }
    std::size_t i = 0;
    while (i < names.size() && digits[i] == options.domains.at(names[i]).hi) {
      digits[i] = options.domains.at(names[i]).lo;
      ++i;
    }
    if (i == names.size()) break;
    ++digits[i];
  }
  report.verdict = Verdict::DominantImpossible;
  report.residual.reset();
}

}  // namespace

GateReport flag_gate(const GorensteinResolution& res, const CurveInvariants& inv, const GateOptions& options) {
  std::vector<Poly> equations = hilbert_equations(res, inv);
  equations.insert(equations.end(), options.extra_constraints.begin(), options.extra_constraints.end());

  GateReport report;
  report.ambient_dim = options.ambient_dim;
  // Unknowns with a domain should stay free so enumeration can reach them.
  std::vector<std::string> order = options.pivot_order;
  for (const auto& name : default_pivots(res)) {
    if (!options.domains.contains(name)) order.push_back(name);
  }
  report.constraints = solve_shape(equations, res, order);
  report.h0N = acm::apply(report.constraints, km_h0_normal(res));
  report.h0I = acm::apply(report.constraints, h0_ideal(res, options.fiber_twist));
  report.bound = report.h0N + report.h0I - Poly(1);
  decide(report, &res, options);
  return report;
}

GateReport flag_gate_cited(const Poly& h0N, const CurveInvariants& inv, const GateOptions& options) {
  GateReport report;
  report.ambient_dim = options.ambient_dim;
  if (!options.extra_constraints.empty()) report.constraints = solve_linear(options.extra_constraints, options.pivot_order);
  report.h0N = acm::apply(report.constraints, h0N);
  report.h0I = acm::apply(report.constraints, Poly(hdim(options.fiber_twist)) - h0_curve_from_invariants(inv, options.fiber_twist));
  report.bound = report.h0N + report.h0I - Poly(1);
  decide(report, nullptr, options);
  return report;
}

std::vector<std::int64_t> gate_scan(const GateReport& report, const std::string& unknown, std::int64_t lo,
                                    std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; ++v) {
    Rational value = report.bound.eval({{unknown, Rational(v)}});
    if (value < Rational(report.ambient_dim)) out.push_back(v);
  }
  return out;
}

}  // namespace acm
