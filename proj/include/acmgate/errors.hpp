#pragma once

#include <stdexcept>
#include <string>

namespace acm {

// Every failure the library reports derives from Error so callers (and the
// CLI) can map the concrete type to a diagnostic.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownSymbolError : public Error {
 public:
  explicit UnknownSymbolError(std::string name)
      : Error("unknown symbol '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class InconsistentConstraints : public Error {
 public:
  using Error::Error;
};

class DegenerateTwist : public Error {
 public:
  using Error::Error;
};

class SpecialRange : public Error {
 public:
  using Error::Error;
};

class NotACurveComplex : public Error {
 public:
  using Error::Error;
};

class InsufficientMultiplicity : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace acm
