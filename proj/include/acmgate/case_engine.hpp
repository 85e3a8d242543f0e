#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acmgate/bundle_rr.hpp"
#include "acmgate/poly.hpp"

namespace acm {

/// The unknowns u_j = h^0(I_C(j)) for the zero locus C of a section of a
/// rank-2 bundle, with the values forced to vanish resolved to zero.
///
/// u_j vanishes for j <= 0 because C is a nonempty curve. Under the
/// Normalized policy it also vanishes for j <= c1 - 1, since h^0(E(-1)) = 0
/// forces h^0(I_C(c1 - 1)) = 0 and u is nondecreasing.
class IdealSectionSymbols {
 public:
  enum class Policy { CurveOnly, Normalized };

  explicit IdealSectionSymbols(int c1, Policy policy = Policy::Normalized) : c1_(c1), policy_(policy) {}

  static std::string name(int j) { return "u" + std::to_string(j); }

  bool forced_zero(int j) const { return j <= 0 || (policy_ == Policy::Normalized && j <= c1_ - 1); }
  Poly at(int j) const { return forced_zero(j) ? Poly() : Poly::var(name(j)); }
  int c1() const { return c1_; }
  Policy policy() const { return policy_; }

 private:
  int c1_;
  Policy policy_;
};

/// h^0(E(t)) = h^0(O_X(t)) + u_{c1+t}, read off the sequence
/// 0 -> O_X -> E -> I_C(c1) -> 0 twisted by t.
Poly h0_E_twist(const HypersurfaceContext& ctx, int c1, int t, const IdealSectionSymbols& syms);

/// c2_coefficient * c2 = constant + sum(coefficients[u] * u).
struct C2Relation {
  Rational c2_coefficient;
  Rational constant;
  std::map<std::string, Rational> coefficients;

  Poly rhs() const;
  /// c2 solved as a polynomial in the u_j.
  Poly c2_value() const;
  /// The same relation with the zeros forced by `syms` substituted.
  C2Relation reduced(const IdealSectionSymbols& syms) const;
  /// "3/2*c2 = 5 - u1" or "c2 = 14 - u2".
  std::string str() const;

  friend bool operator==(const C2Relation&, const C2Relation&) = default;
};

/// Equates chi(E(t)) from Riemann-Roch with h^0(E(t)) - h^3(E(t)) (the ACM
/// property kills h^1 and h^2) and solves the linear relation for c2.
/// Throws DegenerateTwist when c2 drops out.
C2Relation derive_c2_relation(const HypersurfaceContext& ctx, int c1, int t,
                              IdealSectionSymbols::Policy policy = IdealSectionSymbols::Policy::CurveOnly);

/// Twist t = r + offset used for c1 = k - r in the published case analysis
/// (k = 3..11); nullopt outside that range.
std::optional<int> default_twist_offset(int k);

/// Scans t in [-r, r] for the nondegenerate choice leaving the fewest
/// unknowns after normalization; ties go to the smallest |t|, then smallest t.
int search_twist(const HypersurfaceContext& ctx, int c1);

struct RIndependenceResult {
  bool holds = false;
  C2Relation relation;  // relation at the first r of the range
  struct Discrepancy {
    int r_first;
    C2Relation first;
    int r_other;
    C2Relation other;
  };
  std::optional<Discrepancy> discrepancy;
};

/// Checks that c1 = k - r with twist t_rule(r) yields the same relation for
/// every r in [r_lo, r_hi]. Throws InvalidInput on an empty range.
RIndependenceResult verify_r_independence(int k, const std::function<int(int)>& t_rule, int r_lo, int r_hi);

/// A geometric admissibility cut applied while enumerating (c2, u) solutions.
/// These are facts about curves in P^4, recorded with their justification
/// rather than derived.
struct CaseFilter {
  std::string id;
  std::string justification;
  /// Returns false to reject the assignment. `e` is the subcanonical level.
  std::function<bool(const Assignment& u, std::int64_t c2, int e)> accept;
};

/// Cuts used by default: hyperplane count bound and degenerate curves being
/// complete intersections.
const std::vector<CaseFilter>& default_case_filters();

struct EnumerationOptions {
  /// Rejects u_j > u_{j+1} + hdim(j+1) - hdim(j) when both appear.
  bool monotonicity_guard = false;
  /// Use search_twist even when a default twist exists.
  bool search_twists = false;
  /// Skip enumerating when the box of u-values is larger than this.
  std::int64_t max_assignments = 1'000'000;
};

/// One admissible (c2, u) solution together with a short description of the
/// curve it corresponds to, when the data determines one.
struct CaseSolution {
  std::int64_t c2;
  Assignment u;
  std::string description;
};

struct CaseRow {
  int c1;
  int twist;
  int e;                  // subcanonical level c1 + r - 5
  C2Relation relation;    // as derived, before normalization zeros
  C2Relation normalized;  // with normalization zeros substituted
  std::optional<std::vector<CaseSolution>> solutions;  // nullopt when skipped
  std::vector<std::string> filters_used;               // filters that rejected something
  std::string note;                                    // recorded facts, may be empty

  /// Distinct admissible c2 values in increasing order.
  std::vector<std::int64_t> admissible_c2() const;
};

std::vector<CaseRow> enumerate_cases(const HypersurfaceContext& ctx, const EnumerationOptions& options = {});
std::vector<CaseRow> enumerate_sextic_cases(const EnumerationOptions& options = {});

}  // namespace acm
