#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acmgate/gorenstein_km.hpp"
#include "acmgate/liaison.hpp"
#include "acmgate/poly.hpp"

namespace acm {

/// A value that is either a JSON integer or a string expression. The source
/// text of expressions is kept so files round-trip unchanged.
struct ExprField {
  Poly value;
  std::optional<std::string> text;

  static ExprField integer(std::int64_t v) { return {Poly(v), std::nullopt}; }
  static ExprField expression(const std::string& text);

  friend bool operator==(const ExprField&, const ExprField&) = default;
};

/// Contents of a resolution file:
///
///   { "e": 4,
///     "pairs": [ { "twist": 3, "mult": "x" }, ... ],
///     "invariants": { "d": "d", "g": "1+2*d" },
///     "constraints": [ "a+3*(27-d)=b" ] }
///
/// "invariants" and "constraints" are optional, as is "g" (defaults to the
/// subcanonical genus).
struct ResolutionFile {
  struct Pair {
    int twist;
    ExprField mult;
    friend bool operator==(const Pair&, const Pair&) = default;
  };
  struct Invariants {
    ExprField d;
    std::optional<ExprField> g;
    friend bool operator==(const Invariants&, const Invariants&) = default;
  };

  int e = 0;
  std::vector<Pair> pairs;
  std::optional<Invariants> invariants;
  std::vector<std::string> constraints;

  /// Throws InvalidInput("no generators") when `pairs` is empty.
  GorensteinResolution resolution() const;
  std::optional<CurveInvariants> curve() const;
  /// Constraints as polynomials (lhs - rhs). Throws UnknownSymbolError for a
  /// name that appears neither in the multiplicities nor in the invariants.
  std::vector<Poly> constraint_polys() const;
  std::set<std::string> symbols() const;

  friend bool operator==(const ResolutionFile&, const ResolutionFile&) = default;
};

/// Throws ParseError on malformed JSON or a schema violation.
ResolutionFile parse_resolution(const std::string& json_text);
/// Two-space indented JSON with a trailing newline.
std::string dump_resolution(const ResolutionFile& file);

/// { "terms": [ [ {"twist": 2, "mult": 3} ], [ ... ], [ ... ] ] }
GradedComplex parse_complex(const std::string& json_text);
std::string dump_complex(const GradedComplex& cx);

/// Flat "name=integer" lines; blank lines and lines starting with '#' are
/// skipped.
Assignment parse_assignments(const std::string& text);

/// Reads a whole file; throws InvalidInput when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace acm
