#include "acmgate/linear.hpp"

#include <algorithm>

#include "acmgate/errors.hpp"

namespace acm {

LinExpr LinExpr::from_poly(const Poly& p) {
  LinExpr out;
  for (const auto& [m, c] : p.terms()) {
    if (m.is_one()) {
      out.constant = c;
    } else if (m.degree() == 1) {
      out.coefficients[m.factors().front().first] = c;
    } else {
      throw InvalidInput("expression '" + p.str() + "' is not linear in its unknowns");
    }
  }
  return out;
}

Poly LinExpr::to_poly() const {
  Poly p(constant);
  for (const auto& [name, c] : coefficients) p += Poly::term(c, Monomial::variable(name));
  return p;
}

Rational LinExpr::coefficient(const std::string& name) const {
  auto it = coefficients.find(name);
  return it == coefficients.end() ? Rational(0) : it->second;
}

std::string Substitution::str() const { return unknown + " = " + value.str(); }

std::vector<Substitution> solve_linear(const std::vector<Poly>& equations,
                                       const std::vector<std::string>& pivot_order) {
  std::vector<Substitution> solved;
  for (const auto& equation : equations) {
    Poly reduced = acm::apply(solved, equation);
    LinExpr row = LinExpr::from_poly(reduced);
    if (row.is_constant()) {
      if (!row.constant.is_zero()) {
        throw InconsistentConstraints("constraint '" + equation.str() + " = 0' reduces to " +
                                      row.constant.str() + " = 0");
      }
      continue;
    }
    std::string pivot;
    for (const auto& name : pivot_order) {
      if (!row.coefficient(name).is_zero()) {
        pivot = name;
        break;
      }
    }
    if (pivot.empty()) pivot = row.coefficients.begin()->first;
    Rational lead = row.coefficients.at(pivot);
    row.coefficients.erase(pivot);
    Poly value = row.to_poly() * Poly(Rational(-1) / lead);
    for (auto& s : solved) s.value = s.value.substitute(pivot, value);
    solved.push_back({pivot, std::move(value)});
  }
  // Report pivots in the caller's preferred order.
  auto rank = [&](const std::string& name) {
    auto it = std::find(pivot_order.begin(), pivot_order.end(), name);
    return std::make_pair(it - pivot_order.begin(), name);
  };
  std::sort(solved.begin(), solved.end(),
            [&](const Substitution& a, const Substitution& b) { return rank(a.unknown) < rank(b.unknown); });
  return solved;
}

Poly apply(const std::vector<Substitution>& solution, const Poly& p) {
  Poly out = p;
  for (const auto& s : solution) out = out.substitute(s.unknown, s.value);
  return out;
}

Poly parse_equation(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos) {
    throw ParseError("constraint '" + text + "' must contain exactly one '='");
  }
  return Poly::parse(text.substr(0, eq)) - Poly::parse(text.substr(eq + 1));
}

}  // namespace acm
