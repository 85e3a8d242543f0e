#pragma once

#include <map>
#include <string>
#include <vector>

#include "acmgate/poly.hpp"
#include "acmgate/rational.hpp"

namespace acm {

/// Affine expression constant + sum(coeff * unknown).
struct LinExpr {
  Rational constant;
  std::map<std::string, Rational> coefficients;  // no zero entries

  /// Throws InvalidInput when the polynomial has a term of degree >= 2.
  static LinExpr from_poly(const Poly& p);
  Poly to_poly() const;
  bool is_constant() const { return coefficients.empty(); }
  Rational coefficient(const std::string& name) const;

  friend bool operator==(const LinExpr&, const LinExpr&) = default;
};

/// A solved linear equation: `unknown = value`, where value only mentions
/// unknowns that were left free.
struct Substitution {
  std::string unknown;
  Poly value;

  friend bool operator==(const Substitution&, const Substitution&) = default;
  /// "x = 30 - d"
  std::string str() const;
};

/// Reduces the system {equation = 0} to solved form by Gauss-Jordan
/// elimination. Pivots are chosen in `pivot_order` first, then in name order.
/// Redundant equations vanish; an equation reducing to a nonzero constant
/// throws InconsistentConstraints.
std::vector<Substitution> solve_linear(const std::vector<Poly>& equations,
                                       const std::vector<std::string>& pivot_order = {});

/// Applies solved substitutions to a polynomial.
Poly apply(const std::vector<Substitution>& solution, const Poly& p);

/// Parses "lhs = rhs" into the polynomial lhs - rhs.
Poly parse_equation(const std::string& text);

}  // namespace acm
