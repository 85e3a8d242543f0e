#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acmgate/rational.hpp"

namespace acm {

/// Values for named unknowns, used by Poly::eval and friends.
using Assignment = std::map<std::string, Rational, std::less<>>;

/// Product of named unknowns with positive exponents. Factors are kept sorted
/// by name, which gives the canonical (lexicographic) monomial order.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(std::string name, int exponent = 1);

  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent(std::string_view name) const;
  const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }

  /// The monomial with `name` removed, and the exponent it had.
  std::pair<Monomial, int> split(std::string_view name) const;

  Monomial operator*(const Monomial& rhs) const;
  auto operator<=>(const Monomial&) const = default;

  /// "x^2*y"; empty string for the unit monomial.
  std::string str() const;

 private:
  std::vector<std::pair<std::string, int>> factors_;
};

/// Sparse multivariate polynomial over the rationals in named unknowns.
/// Zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  Poly(std::int64_t constant);    // NOLINT
  Poly(const Rational& constant);  // NOLINT

  static Poly var(std::string name);
  static Poly term(const Rational& coefficient, Monomial monomial);

  /// Parses expressions over integers, p/q literals and identifiers with
  /// + - * / ^ and parentheses. Division is only allowed by constants.
  static Poly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value when the polynomial is constant.
  std::optional<Rational> constant_value() const;
  Rational constant_term() const;
  int total_degree() const;
  int degree_in(std::string_view name) const;
  std::set<std::string> unknowns() const;
  Rational coefficient(const Monomial& monomial) const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Poly substitute(std::string_view name, const Poly& value) const;
  /// Substitutes every assigned unknown; unassigned ones stay symbolic.
  Poly partial_eval(const Assignment& values) const;
  /// Throws UnknownSymbolError naming the first unknown without a value.
  Rational eval(const Assignment& values) const;

  Poly pow(unsigned exponent) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly operator-() const;

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs) {
    Poly out = lhs;
    out *= rhs;
    return out;
  }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Canonical text: terms in monomial order, constant first, e.g.
  /// "20 + 2*u1 - 2*u2". Parses back to the same polynomial.
  std::string str() const;

 private:
  void add_term(const Monomial& monomial, const Rational& coefficient);

  std::map<Monomial, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& value);

}  // namespace acm
