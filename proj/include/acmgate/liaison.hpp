#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "acmgate/gorenstein_km.hpp"
#include "acmgate/graded.hpp"
#include "acmgate/linear.hpp"

namespace acm {

/// Complete intersection of three hypersurfaces of degrees d1, d2, d3 in P^4.
class CIType {
 public:
  /// Throws InvalidInput unless every degree is at least 1.
  CIType(int d1, int d2, int d3);

  const std::array<int, 3>& degrees() const { return degrees_; }
  int sum() const { return degrees_[0] + degrees_[1] + degrees_[2]; }
  std::int64_t degree() const {
    return static_cast<std::int64_t>(degrees_[0]) * degrees_[1] * degrees_[2];
  }
  std::string str() const;

  friend bool operator==(const CIType&, const CIType&) = default;

 private:
  std::array<int, 3> degrees_;
};

/// Graded Betti data of a length-3 resolution 0 -> F3 -> F2 -> F1 -> I -> 0
/// of an ideal sheaf on P^4. Only numerical data is tracked; differentials
/// are not. Terms are kept merged and sorted by twist.
class GradedComplex {
 public:
  GradedComplex(std::vector<Summand> f1, std::vector<Summand> f2, std::vector<Summand> f3);

  /// Term F_i for i = 1, 2, 3.
  const std::vector<Summand>& term(int i) const;
  Poly multiplicity(int i, int twist) const;
  /// rank F1 - rank F2 + rank F3; 1 for the resolution of an ideal sheaf.
  Poly rank_alternating_sum() const;
  std::set<std::string> unknowns() const;

  GradedComplex apply(const std::vector<Substitution>& solution) const;
  GradedComplex partial_eval(const Assignment& values) const;

  /// Hilbert polynomial of the resolved ideal.
  SymbolicPoly1 hilbert_polynomial() const;
  /// h^0 of the resolved ideal twisted by n.
  Poly h0(std::int64_t n) const;

  /// "0 -> F3 -> F2 -> F1"
  std::string str() const;

  friend bool operator==(const GradedComplex&, const GradedComplex&) = default;

 private:
  std::array<std::vector<Summand>, 3> terms_;
};

/// Koszul resolution of a complete intersection.
GradedComplex koszul_resolution(const CIType& ci);

GradedComplex as_complex(const GorensteinResolution& res);

/// Resolution of the curve C' linked to C by the complete intersection, read
/// from the dualized mapping cone (s = d1 + d2 + d3):
///
///   0 -> F1*(-s) -> F2*(-s) + K1*(-s) -> F3*(-s) + K2*(-s) -> I_C' -> 0
///
/// where K is the Koszul complex and O(-t)*(-s) = O(-(s - t)). The unit
/// O(-s) <-> O(-s) coming from the structure sheaves is already cancelled;
/// nothing else is, so the result may be non-minimal.
///
/// C must lie in the complete intersection. This cannot be checked from
/// Betti numbers and is the caller's responsibility.
/// Throws NotACurveComplex unless the rank alternating sum of resC is 1.
GradedComplex link(const GradedComplex& resC, const CIType& ci);

/// Adjacent pair of terms in a GradedComplex.
enum class Position { F1F2, F2F3 };

std::string to_string(Position p);
/// Accepts "12", "F1F2", "23", "F2F3".
Position parse_position(const std::string& text);

/// Removes `count` copies of O(-twist) from both terms of the adjacent pair,
/// which leaves the Hilbert polynomial unchanged. Throws
/// InsufficientMultiplicity when a multiplicity would become a negative
/// constant; symbolic multiplicities are trusted to be large enough.
GradedComplex cancel_pair(const GradedComplex& cx, Position position, int twist, const Poly& count);

struct DegreeGenus {
  Poly d;
  Poly g;

  friend bool operator==(const DegreeGenus&, const DegreeGenus&) = default;
};

/// Reads degree and arithmetic genus off the Hilbert polynomial:
/// hdim-polynomial(n) - HP(I)(n) = d n + 1 - g. Throws NotACurveComplex when
/// the residual is not identically of degree <= 1 in n.
DegreeGenus degree_genus(const GradedComplex& cx);

/// Every self-dual resolution with top twist e + 5 obtainable from `cx` by
/// cancelling pairs of equal twists in adjacent terms. Multiplicities must be
/// integer constants.
std::vector<GorensteinResolution> gorenstein_reductions(const GradedComplex& cx, int e);

}  // namespace acm
