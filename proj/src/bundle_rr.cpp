#include "acmgate/bundle_rr.hpp"

#include "acmgate/binomial.hpp"
#include "acmgate/errors.hpp"

namespace acm {

HypersurfaceContext::HypersurfaceContext(int r) : r_(r) {
  if (r < 3) throw InvalidInput("hypersurface degree must be at least 3, got " + std::to_string(r));
}

std::int64_t HypersurfaceContext::parameter_space_dim() const { return hdim(r_) - 1; }

BundleInvariants twist(const BundleInvariants& inv, int n) {
  const int r = inv.context.degree();
  Poly c2 = inv.c2 + Poly(static_cast<std::int64_t>(r) * n * inv.c1) + Poly(static_cast<std::int64_t>(r) * n * n);
  return {inv.c1 + 2 * n, std::move(c2), inv.context};
}

Poly chi_rank2(const BundleInvariants& inv) {
  const Rational r(inv.context.degree());
  const Rational c1(inv.c1);
  const Rational five_minus_r = Rational(5) - r;
  Rational constant_part = r * c1 * c1 * c1 / Rational(6) + five_minus_r * r * c1 * c1 / Rational(4) +
                           r * c1 * (Rational(2) * r * r - Rational(15) * r + Rational(35)) / Rational(12) +
                           r * (-r * r * r + Rational(10) * r * r - Rational(35) * r + Rational(50)) / Rational(12);
  Rational c2_coefficient = -five_minus_r / Rational(2) - c1 / Rational(2);
  return Poly(constant_part) + Poly(c2_coefficient) * inv.c2;
}

Poly chi_rank2_sextic(int c1_int, const Poly& c2) {
  const Rational c1(c1_int);
  Rational constant_part = c1 * c1 * c1 - Rational(3, 2) * c1 * c1 + Rational(17, 2) * c1 - Rational(8);
  return Poly(constant_part) + Poly(Rational(1, 2) - c1 / Rational(2)) * c2;
}

std::int64_t h0_OX(const HypersurfaceContext& ctx, std::int64_t n) { return hdim(n) - hdim(n - ctx.degree()); }

int h3_dual_twist(const BundleInvariants& inv, int n) { return -inv.c1 - n + inv.context.canonical_twist(); }

std::vector<int> acm_c1_range(const HypersurfaceContext& ctx) {
  std::vector<int> out;
  for (int c1 = 3 - ctx.degree(); c1 <= ctx.degree() - 1; ++c1) out.push_back(c1);
  return out;
}

int stability_level(const BundleInvariants& inv, int b) { return 2 * b - inv.c1; }

}  // namespace acm
