#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "acmgate/poly.hpp"
#include "acmgate/rational.hpp"

namespace acm {

/// Dense univariate polynomial in the twist variable n. Coefficients are
/// indexed by power; trailing zeros are trimmed so degree() is exact.
template <class Coeff>
class Univariate {
 public:
  Univariate() = default;
  explicit Univariate(std::vector<Coeff> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  static Univariate constant(Coeff c) { return Univariate(std::vector<Coeff>{std::move(c)}); }
  /// The polynomial n.
  static Univariate identity() { return Univariate(std::vector<Coeff>{Coeff(0), Coeff(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff coefficient(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : Coeff(0); }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  Coeff eval(const Rational& n) const {
    Coeff acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * Coeff(n) + *it;
    }
    return acc;
  }

  Univariate& operator+=(const Univariate& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Univariate& operator-=(const Univariate& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }
  friend Univariate operator+(Univariate a, const Univariate& b) { return a += b; }
  friend Univariate operator-(Univariate a, const Univariate& b) { return a -= b; }
  friend Univariate operator*(const Univariate& a, const Univariate& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Univariate(std::move(out));
  }
  /// Scales every coefficient.
  friend Univariate operator*(const Coeff& s, const Univariate& p) {
    std::vector<Coeff> out;
    out.reserve(p.coeffs_.size());
    for (const auto& c : p.coeffs_) out.push_back(s * c);
    return Univariate(std::move(out));
  }
  friend bool operator==(const Univariate&, const Univariate&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

/// Univariate polynomial in n with exact rational coefficients.
using IntPoly1 = Univariate<Rational>;
/// Univariate polynomial in n whose coefficients involve symbolic unknowns
/// (Hilbert polynomials of resolutions with unknown Betti numbers).
using SymbolicPoly1 = Univariate<Poly>;

/// Lifts rational coefficients into symbolic ones.
SymbolicPoly1 to_symbolic(const IntPoly1& p);

}  // namespace acm
