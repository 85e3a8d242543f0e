#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "acmgate/bundle_rr.hpp"
#include "acmgate/graded.hpp"
#include "acmgate/linear.hpp"
#include "acmgate/poly.hpp"

namespace acm {

/// Degree, arithmetic genus and subcanonical level (omega_C = O_C(e)) of a
/// curve in P^4. Degree and genus may be symbolic.
struct CurveInvariants {
  Poly d;
  Poly g;
  int e;

  /// Genus from 2g - 2 = e * d.
  static CurveInvariants subcanonical(Poly d, int e);
  /// Zero locus of a section of a rank-2 bundle on X: d = c2, e = c1 + r - 5.
  static CurveInvariants from_bundle(const BundleInvariants& inv);

  /// Throws InvalidInput unless 2g - 2 = e * d identically.
  void validate() const;

  friend bool operator==(const CurveInvariants&, const CurveInvariants&) = default;
};

/// Generators O(-twist)^mult; the matching syzygies sit at e + 5 - twist.
struct GorensteinPair {
  int twist;
  Poly mult;

  friend bool operator==(const GorensteinPair&, const GorensteinPair&) = default;
};

/// Self-dual resolution of an ACM e-subcanonical curve in P^4:
///
///   0 -> O(-e-5) -> sum O(-b_i) -> sum O(-a_i) -> I_C -> 0,  a_i + b_i = e + 5.
///
/// Only the generator side is stored; duality holds by construction.
/// Multiplicities may be symbolic.
class GorensteinResolution {
 public:
  /// Throws InvalidInput("no generators") for an empty pair list.
  GorensteinResolution(int e, std::vector<GorensteinPair> pairs);

  int e() const { return e_; }
  int top_twist() const { return e_ + 5; }
  int syzygy_twist(int generator_twist) const { return e_ + 5 - generator_twist; }
  const std::vector<GorensteinPair>& pairs() const { return pairs_; }

  /// Module terms, merged and sorted by twist.
  std::vector<Summand> generators() const;
  std::vector<Summand> syzygies() const;
  std::set<std::string> unknowns() const;

  GorensteinResolution apply(const std::vector<Substitution>& solution) const;
  GorensteinResolution partial_eval(const Assignment& values) const;

  friend bool operator==(const GorensteinResolution&, const GorensteinResolution&) = default;

 private:
  int e_;
  std::vector<GorensteinPair> pairs_;
};

/// h^0(I_C(n)) from the resolution; exact for every n since twisted line
/// bundles on P^4 have no intermediate cohomology.
Poly h0_ideal(const GorensteinResolution& res, std::int64_t n);

/// h^0(O_C(n)) = hdim(n) - h^0(I_C(n)), using h^1(I_C(n)) = 0 for ACM curves.
Poly h0_curve(const GorensteinResolution& res, std::int64_t n);

/// h^0(O_C(n)) from Riemann-Roch outside the special range: 0 for n < 0 and
/// n d + 1 - g for n > e. Throws SpecialRange for 0 <= n <= e.
Poly h0_curve_from_invariants(const CurveInvariants& inv, std::int64_t n);

/// Hilbert polynomial of I_C (in n) computed from the resolution.
SymbolicPoly1 ideal_hilbert_polynomial(const GorensteinResolution& res);

/// Equations (each = 0) obtained by matching hdim-polynomial(n) minus the
/// ideal's Hilbert polynomial against d n + 1 - g, power by power. Identically
/// zero equations are dropped.
std::vector<Poly> hilbert_equations(const GorensteinResolution& res, const CurveInvariants& inv);

/// hilbert_equations, together with any `extra` equations, in solved form.
/// Pivots default to the multiplicity unknowns in generator order. Throws
/// InconsistentConstraints when the shape cannot resolve a curve with these
/// invariants.
std::vector<Substitution> hilbert_constraints(const GorensteinResolution& res, const CurveInvariants& inv,
                                              const std::vector<std::string>& pivot_order = {},
                                              const std::vector<Poly>& extra = {});

/// h^0(N_C) from the Kleppe-Miro-Roig formula:
///
///   sum_i h^0(O_C(a_i)) + sum_{i<j} C(b_j - a_i + 4, 4)
///     - sum_{i<j} C(a_i - b_j + 4, 4) - sum_i C(a_i + 4, 4)
///
/// with generators sorted by a ascending (so b descending) and binomials read
/// as Hom dimensions (binom4). Symbolic multiplicities are expanded into pair
/// counts m(m-1)/2 within a block and m_i m_j across blocks.
Poly km_h0_normal(const GorensteinResolution& res);

enum class Verdict { DominantImpossible, Inconclusive };

std::string to_string(Verdict v);

struct UnknownDomain {
  std::int64_t lo;
  std::int64_t hi;
};

struct GateOptions {
  std::int64_t ambient_dim = 209;
  /// Degree of the hypersurfaces in the flag (sextics by default).
  std::int64_t fiber_twist = 6;
  /// Extra constraints (each = 0) combined with the Hilbert constraints.
  std::vector<Poly> extra_constraints;
  std::vector<std::string> pivot_order;
  /// Finite ranges for unknowns that survive the constraints. When every
  /// surviving unknown has one, the verdict is decided by enumeration over
  /// assignments keeping all multiplicities nonnegative.
  std::map<std::string, UnknownDomain> domains;
};

/// Dimension count for the incidence variety of curves and hypersurfaces:
/// dim <= h^0(N_C) + h^0(I_C(n)) - 1, compared against the dimension of the
/// space of hypersurfaces.
struct GateReport {
  Poly h0N;
  Poly h0I;
  Poly bound;
  std::int64_t ambient_dim = 209;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Substitution> constraints;
  /// Residual expression when the bound could not be decided.
  std::optional<Poly> residual;
  /// First admitted assignment violating the bound, if enumeration found one.
  std::optional<Assignment> witness;
};

GateReport flag_gate(const GorensteinResolution& res, const CurveInvariants& inv, const GateOptions& options = {});

/// Gate for curves whose h^0(N_C) comes from an external source; h^0(I_C(n))
/// is computed from Riemann-Roch, which needs n > e.
GateReport flag_gate_cited(const Poly& h0N, const CurveInvariants& inv, const GateOptions& options = {});

/// Integer values v in [lo, hi] of `unknown` for which the gate bound, with
/// every other unknown already eliminated, stays below the ambient dimension.
std::vector<std::int64_t> gate_scan(const GateReport& report, const std::string& unknown, std::int64_t lo,
                                    std::int64_t hi);

}  // namespace acm
