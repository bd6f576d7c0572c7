#pragma once

// JSON forms of polynomials, operators, sequences and certificates. Rationals
// are "num/den" strings; polynomial coefficients are in ascending index order.
//
//   {"basis":"monomial","coeffs":["-28/1","39/1","-12/1","1/1"]}
//   {"op":{"coeffs":[<polynomial>, ...],"step":"1/1"}}
//   {"sequence":{"values":["1/1", ...]}}  or  {"sequence":{"phi":<polynomial>}}

#include "meshpoly/verify.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace meshpoly {

using Json = nlohmann::json;

/// Malformed JSON text, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed JSON that does not match the expected schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ParseError.
Json parse_json_text(const std::string& text);
/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const FiniteDifferenceOperator& T);
FiniteDifferenceOperator operator_from_json(const Json& j);

Json to_json(const DiagonalSequence& A);
DiagonalSequence sequence_from_json(const Json& j);

Json to_json(const ClassSpec& spec);
ClassSpec class_spec_from_json(const Json& j);

Json to_json(const Transform& t);
Transform transform_from_json(const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);

/// {"certificate": <witness>, "claim": ...}.
Json certificate_json(const std::string& claim, const Witness& w);

Json to_json(const Verdict& v);

/// Compact single-line form with stable key order.
std::string dump_line(const Json& j);

}  // namespace meshpoly
