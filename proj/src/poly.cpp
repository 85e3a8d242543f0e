#include "acmgate/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "acmgate/errors.hpp"

namespace acm {

Monomial Monomial::variable(std::string name, int exponent) {
  if (name.empty()) throw InvalidInput("unknown names must be nonempty");
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
  return m;
}

int Monomial::degree() const {
  int total = 0;
  for (const auto& [name, e] : factors_) total += e;
  return total;
}

int Monomial::exponent(std::string_view name) const {
  for (const auto& [n, e] : factors_) {
    if (n == name) return e;
  }
  return 0;
}

std::pair<Monomial, int> Monomial::split(std::string_view name) const {
  Monomial rest;
  int found = 0;
  for (const auto& f : factors_) {
    if (f.first == name) {
      found = f.second;
    } else {
      rest.factors_.push_back(f);
    }
  }
  return {std::move(rest), found};
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

std::string Monomial::str() const {
  std::string out;
  for (const auto& [name, e] : factors_) {
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Poly::Poly(std::int64_t constant) : Poly(Rational(constant)) {}

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

Poly Poly::var(std::string name) { return term(Rational(1), Monomial::variable(std::move(name))); }

Poly Poly::term(const Rational& coefficient, Monomial monomial) {
  Poly p;
  p.add_term(monomial, coefficient);
  return p;
}

void Poly::add_term(const Monomial& monomial, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> Poly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

Rational Poly::constant_term() const { return coefficient(Monomial{}); }

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Poly::degree_in(std::string_view name) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(name));
  return d;
}

std::set<std::string> Poly::unknowns() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [name, e] : m.factors()) out.insert(name);
  }
  return out;
}

Rational Poly::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::substitute(std::string_view name, const Poly& value) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    auto [rest, e] = m.split(name);
    if (e == 0) {
      out.add_term(m, c);
    } else {
      out += term(c, rest) * value.pow(static_cast<unsigned>(e));
    }
  }
  return out;
}

Poly Poly::partial_eval(const Assignment& values) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest;
    for (const auto& [name, e] : m.factors()) {
      auto it = values.find(name);
      if (it == values.end()) {
        rest = rest * Monomial::variable(name, e);
      } else {
        for (int i = 0; i < e; ++i) coeff *= it->second;
      }
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Rational Poly::eval(const Assignment& values) const {
  for (const auto& name : unknowns()) {
    if (!values.contains(name)) throw UnknownSymbolError(name);
  }
  return partial_eval(values).constant_term();
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  Poly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  }
  *this = std::move(out);
  return *this;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational magnitude = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += magnitude.str();
    } else if (magnitude == Rational(1)) {
      out += m.str();
    } else {
      out += magnitude.str() + "*" + m.str();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& value) { return os << value.str(); }

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Poly parse_all() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse expression '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Poly divisor = unary();
        auto value = divisor.constant_value();
        if (!value || value->is_zero()) fail("division by a non-constant or zero expression");
        acc *= Poly(Rational(1) / *value);
      } else if (pos_ < text_.size() &&
                 (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                  text_[pos_] == '(')) {
        // implicit product such as 3d or 2(x+1)
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      return base.pow(e);
    }
    return base;
  }

  Poly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return Poly::var(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return ExprParser(text).parse_all(); }

}  // namespace acm
