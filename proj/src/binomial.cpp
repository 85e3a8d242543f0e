#include "acmgate/binomial.hpp"

#include <stdexcept>

namespace acm {

namespace {

// C(n+4,4) overflows int64 somewhere above n = 120000.
constexpr std::int64_t kMaxTwist = 100000;

}  // namespace

std::int64_t hdim(std::int64_t n) {
  if (n < 0) return 0;
  if (n > kMaxTwist) throw std::overflow_error("twist " + std::to_string(n) + " out of range");
  // Dividing step by step keeps every intermediate value an exact integer.
  std::int64_t v = n + 1;
  v = v * (n + 2) / 2;
  v = v * (n + 3) / 3;
  v = v * (n + 4) / 4;
  return v;
}

std::int64_t binom4(std::int64_t m) { return hdim(m - 4); }


IntPoly1 binom4_poly(std::int64_t shift) {
  IntPoly1 result = IntPoly1::constant(Rational(1, 24));
  for (std::int64_t k = 1; k <= 4; ++k) {
    result = result * IntPoly1(std::vector<Rational>{Rational(shift + k), Rational(1)});
  }
  return result;
}

SymbolicPoly1 to_symbolic(const IntPoly1& p) {
  std::vector<Poly> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return SymbolicPoly1(std::move(out));
}

}  // namespace acm
