#pragma once

#include <cstdint>

#include "acmgate/univariate.hpp"

namespace acm {

/// Dimension of the space of degree-n forms in five variables, h^0(O_{P^4}(n)):
/// C(n+4, 4) for n >= 0 and 0 otherwise.
std::int64_t hdim(std::int64_t n);

/// Binomial coefficient C(m, 4) read as a graded Hom dimension: equals
/// hdim(m - 4), so it vanishes for every m < 4 including negative m.
std::int64_t binom4(std::int64_t m);

/// The degree-4 polynomial (n+s+4)(n+s+3)(n+s+2)(n+s+1)/24 in n. Agrees with
/// hdim(n + s) whenever n + s >= -4.
IntPoly1 binom4_poly(std::int64_t shift);

}  // namespace acm
