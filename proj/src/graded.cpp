#include "acmgate/graded.hpp"

#include <algorithm>
#include <map>

#include "acmgate/binomial.hpp"

namespace acm {

Poly rank_of(const std::vector<Summand>& module) {
  Poly total;
  for (const auto& s : module) total += s.mult;
  return total;
}

Poly h0_of(const std::vector<Summand>& module, std::int64_t n) {
  Poly total;
  for (const auto& s : module) total += s.mult * Poly(hdim(n - s.twist));
  return total;
}

SymbolicPoly1 hilbert_polynomial_of(const std::vector<Summand>& module) {
  SymbolicPoly1 total;
  for (const auto& s : module) total += s.mult * to_symbolic(binom4_poly(-s.twist));
  return total;
}

std::vector<Summand> normalize_summands(const std::vector<Summand>& module) {
  std::map<int, Poly> merged;
  for (const auto& s : module) merged[s.twist] += s.mult;
  std::vector<Summand> out;
  for (auto& [twist, mult] : merged) {
    if (!mult.is_zero()) out.push_back({twist, std::move(mult)});
  }
  return out;
}

std::string format_summands(const std::vector<Summand>& module) {
  if (module.empty()) return "0";
  std::string out;
  for (const auto& s : module) {
    if (!out.empty()) out += " + ";
    out += "O(" + std::to_string(-s.twist) + ")";
    if (s.mult == Poly(1)) continue;
    std::string m = s.mult.str();
    bool atomic = s.mult.constant_value().has_value() || s.mult.terms().size() == 1;
    out += atomic && m.find(' ') == std::string::npos ? "^" + m : "^(" + m + ")";
  }
  return out;
}

}  // namespace acm
