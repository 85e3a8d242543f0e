#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acmgate/poly.hpp"
#include "acmgate/univariate.hpp"

namespace acm {

/// A free summand O(-twist)^mult of a graded free module on P^4.
struct Summand {
  int twist;
  Poly mult;

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Total rank, the sum of multiplicities.
Poly rank_of(const std::vector<Summand>& module);

/// h^0 of the module twisted by n: sum of mult * hdim(n - twist).
Poly h0_of(const std::vector<Summand>& module, std::int64_t n);

/// Hilbert polynomial of the module: sum of mult * binom4_poly(-twist).
SymbolicPoly1 hilbert_polynomial_of(const std::vector<Summand>& module);

/// Merges equal twists, drops zero multiplicities and sorts by twist.
std::vector<Summand> normalize_summands(const std::vector<Summand>& module);

/// "O(-2)^3 + O(-5)^(x - 1)"; "0" when empty.
std::string format_summands(const std::vector<Summand>& module);

}  // namespace acm
