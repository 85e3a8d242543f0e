#pragma once

#include <cstdint>
#include <vector>

#include "acmgate/poly.hpp"

namespace acm {

/// A smooth hypersurface X of degree r in P^4. Line bundles on X are
/// identified with integers; omega_X = O_X(r - 5).
class HypersurfaceContext {
 public:
  /// Throws InvalidInput unless r >= 3.
  explicit HypersurfaceContext(int r);

  int degree() const { return r_; }
  int canonical_twist() const { return r_ - 5; }
  /// Dimension of the projective space of degree-r hypersurfaces, hdim(r) - 1.
  std::int64_t parameter_space_dim() const;

  friend bool operator==(const HypersurfaceContext&, const HypersurfaceContext&) = default;

 private:
  int r_;
};

/// Chern classes of a rank-2 bundle on X. c2 may be symbolic.
struct BundleInvariants {
  int c1;
  Poly c2;
  HypersurfaceContext context;

  friend bool operator==(const BundleInvariants&, const BundleInvariants&) = default;
};

/// Chern classes of E(n): (c1 + 2n, c2 + r n c1 + r n^2).
BundleInvariants twist(const BundleInvariants& inv, int n);

/// Euler characteristic chi(E) of a rank-2 bundle on a degree-r hypersurface
/// from Riemann-Roch; linear in c2.
Poly chi_rank2(const BundleInvariants& inv);

/// chi(E) on a sextic: c1^3 - 3/2 c1^2 + c2/2 - c1 c2/2 + 17/2 c1 - 8.
Poly chi_rank2_sextic(int c1, const Poly& c2);

/// h^0(O_X(n)) = hdim(n) - hdim(n - r). Line bundles on X have no
/// intermediate cohomology, so chi(O_X(n)) = h0_OX(n) - h0_OX(r - 5 - n).
std::int64_t h0_OX(const HypersurfaceContext& ctx, std::int64_t n);

/// Serre duality: h^3(E(n)) = h^0(E(m)) with the returned m = -c1 - n + r - 5.
int h3_dual_twist(const BundleInvariants& inv, int n);

/// First Chern classes allowed for an indecomposable normalized ACM bundle:
/// 2 - r < c1 < r.
std::vector<int> acm_c1_range(const HypersurfaceContext& ctx);

/// The stability level 2b - c1 for a bundle with b = max{n : h^0(E(-n)) != 0}.
/// Semistable iff <= 0, stable iff < 0.
int stability_level(const BundleInvariants& inv, int b);

}  // namespace acm
