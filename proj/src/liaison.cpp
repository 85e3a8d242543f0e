#include "acmgate/liaison.hpp"

#include <algorithm>
#include <map>

#include "acmgate/binomial.hpp"
#include "acmgate/errors.hpp"

namespace acm {

CIType::CIType(int d1, int d2, int d3) : degrees_{d1, d2, d3} {
  for (int d : degrees_) {
    if (d < 1) throw InvalidInput("complete intersection degrees must be positive, got " + str());
  }
}

std::string CIType::str() const {
  return "(" + std::to_string(degrees_[0]) + "," + std::to_string(degrees_[1]) + "," + std::to_string(degrees_[2]) + ")";
}

GradedComplex::GradedComplex(std::vector<Summand> f1, std::vector<Summand> f2, std::vector<Summand> f3)
    : terms_{normalize_summands(f1), normalize_summands(f2), normalize_summands(f3)} {}

const std::vector<Summand>& GradedComplex::term(int i) const {
  if (i < 1 || i > 3) throw InvalidInput("complex terms are numbered 1..3");
  return terms_[static_cast<std::size_t>(i - 1)];
}

Poly GradedComplex::multiplicity(int i, int twist) const {
  for (const auto& s : term(i)) {
    if (s.twist == twist) return s.mult;
  }
  return Poly();
}

Poly GradedComplex::rank_alternating_sum() const {
  return rank_of(terms_[0]) - rank_of(terms_[1]) + rank_of(terms_[2]);
}

std::set<std::string> GradedComplex::unknowns() const {
  std::set<std::string> out;
  for (const auto& t : terms_) {
    for (const auto& s : t) out.merge(s.mult.unknowns());
  }
  return out;
}

GradedComplex GradedComplex::apply(const std::vector<Substitution>& solution) const {
  auto terms = terms_;
  for (auto& t : terms) {
    for (auto& s : t) s.mult = acm::apply(solution, s.mult);
  }
  return {terms[0], terms[1], terms[2]};
}

GradedComplex GradedComplex::partial_eval(const Assignment& values) const {
  auto terms = terms_;
  for (auto& t : terms) {
    for (auto& s : t) s.mult = s.mult.partial_eval(values);
  }
  return {terms[0], terms[1], terms[2]};
}

SymbolicPoly1 GradedComplex::hilbert_polynomial() const {
  return hilbert_polynomial_of(terms_[0]) - hilbert_polynomial_of(terms_[1]) + hilbert_polynomial_of(terms_[2]);
}

Poly GradedComplex::h0(std::int64_t n) const {
  return h0_of(terms_[0], n) - h0_of(terms_[1], n) + h0_of(terms_[2], n);
}

std::string GradedComplex::str() const {
  return "0 -> " + format_summands(terms_[2]) + " -> " + format_summands(terms_[1]) + " -> " +
         format_summands(terms_[0]);
}

GradedComplex koszul_resolution(const CIType& ci) {
  const auto& d = ci.degrees();
  return {{{d[0], 1}, {d[1], 1}, {d[2], 1}},
          {{d[0] + d[1], 1}, {d[0] + d[2], 1}, {d[1] + d[2], 1}},
          {{ci.sum(), 1}}};
}

GradedComplex as_complex(const GorensteinResolution& res) {
  return {res.generators(), res.syzygies(), {{res.top_twist(), 1}}};
}

namespace {

std::vector<Summand> dual_twisted(const std::vector<Summand>& module, int s) {
  std::vector<Summand> out;
  for (const auto& x : module) out.push_back({s - x.twist, x.mult});
  return out;
}

std::vector<Summand> concat(std::vector<Summand> a, const std::vector<Summand>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

GradedComplex link(const GradedComplex& resC, const CIType& ci) {
  if (!(resC.rank_alternating_sum() == Poly(1))) {
    throw NotACurveComplex("not a 3-term curve resolution: rank alternating sum is " +
                           resC.rank_alternating_sum().str());
  }
  const int s = ci.sum();
  GradedComplex koszul = koszul_resolution(ci);
  return {concat(dual_twisted(resC.term(3), s), dual_twisted(koszul.term(2), s)),
          concat(dual_twisted(resC.term(2), s), dual_twisted(koszul.term(1), s)),
          dual_twisted(resC.term(1), s)};
}

std::string to_string(Position p) { return p == Position::F1F2 ? "F1F2" : "F2F3"; }

Position parse_position(const std::string& text) {
  if (text == "12" || text == "F1F2") return Position::F1F2;
  if (text == "23" || text == "F2F3") return Position::F2F3;
  throw ParseError("unknown term pair '" + text + "' (expected F1F2 or F2F3)");
}

GradedComplex cancel_pair(const GradedComplex& cx, Position position, int twist, const Poly& count) {
  const int lower = position == Position::F1F2 ? 1 : 2;
  std::array<std::vector<Summand>, 3> terms{cx.term(1), cx.term(2), cx.term(3)};
  for (int i : {lower, lower + 1}) {
    Poly remaining = cx.multiplicity(i, twist) - count;
    if (auto value = remaining.constant_value(); value && value->sign() < 0) {
      throw InsufficientMultiplicity("cannot cancel " + count.str() + " copies of O(" + std::to_string(-twist) +
                                     ") from F" + std::to_string(i) + ", which has " +
                                     cx.multiplicity(i, twist).str());
    }
    terms[static_cast<std::size_t>(i - 1)].push_back({twist, -count});
  }
  return {terms[0], terms[1], terms[2]};
}

DegreeGenus degree_genus(const GradedComplex& cx) {
  SymbolicPoly1 curve = to_symbolic(binom4_poly(0)) - cx.hilbert_polynomial();
  if (curve.degree() >= 2) {
    throw NotACurveComplex("not a curve complex: residual Hilbert polynomial has degree " +
                           std::to_string(curve.degree()) + " in n");
  }
  return {curve.coefficient(1), Poly(1) - curve.coefficient(0)};
}

namespace {

std::map<int, std::int64_t> concrete(const std::vector<Summand>& module) {
  std::map<int, std::int64_t> out;
  for (const auto& s : module) {
    auto value = s.mult.constant_value();
    if (!value || !value->is_integer() || value->sign() < 0) {
      throw InvalidInput("multiplicity " + s.mult.str() + " must be a nonnegative integer");
    }
    out[s.twist] = value->to_int64();
  }
  return out;
}

}  // namespace

std::vector<GorensteinResolution> gorenstein_reductions(const GradedComplex& cx, int e) {
  auto f1 = concrete(cx.term(1));
  auto f2 = concrete(cx.term(2));
  auto f3 = concrete(cx.term(3));
  const int top = e + 5;

  // The last term must shrink to the single summand O(-e-5).
  for (auto [twist, m] : f3) {
    std::int64_t excess = m - (twist == top ? 1 : 0);
    if (excess == 0) continue;
    if (f2[twist] < excess) return {};
    f2[twist] -= excess;
  }
  if (f3[top] < 1) return {};

  std::vector<int> common;
  std::vector<std::int64_t> limit;
  for (auto [twist, m] : f1) {
    std::int64_t both = std::min(m, f2.contains(twist) ? f2.at(twist) : 0);
    if (both > 0) {
      common.push_back(twist);
      limit.push_back(both);
    }
  }

  std::vector<GorensteinResolution> out;
  std::vector<std::int64_t> chosen(common.size(), 0);
  for (;;) {
    auto g = f1;
    auto s = f2;
    for (std::size_t i = 0; i < common.size(); ++i) {
      g[common[i]] -= chosen[i];
      s[common[i]] -= chosen[i];
    }
    std::erase_if(g, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(s, [](const auto& kv) { return kv.second == 0; });
    bool dual = !g.empty() && g.size() == s.size();
    for (auto [twist, m] : g) {
      auto it = s.find(top - twist);
      if (it == s.end() || it->second != m) dual = false;
    }
    if (dual) {
      std::vector<GorensteinPair> pairs;
      for (auto [twist, m] : g) pairs.push_back({twist, Poly(m)});
      GorensteinResolution candidate(e, std::move(pairs));
      if (std::find(out.begin(), out.end(), candidate) == out.end()) out.push_back(std::move(candidate));
    }
    std::size_t i = 0;
    while (i < chosen.size() && chosen[i] == limit[i]) chosen[i++] = 0;
    if (i == chosen.size()) break;
    ++chosen[i];
  }
  return out;
}

}  // namespace acm
