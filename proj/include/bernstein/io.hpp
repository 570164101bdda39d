#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bernstein/extremal.hpp"
#include "bernstein/means.hpp"
#include "bernstein/poly.hpp"
#include "bernstein/quadrature.hpp"
#include "bernstein/verify.hpp"

namespace bernstein {

using Json = nlohmann::ordered_json;

/// Malformed input. line and column are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

/// Parses {"n": int, "coeffs": [[re, im] x (2n+1)]}.
LaurentPolynomial parse_polynomial(std::string_view text);
LaurentPolynomial read_polynomial_file(const std::string& path);

Json to_json(const LaurentPolynomial& t);
/// Inverse of to_json for an already parsed document. Throws ParseError at 1:1.
LaurentPolynomial polynomial_from_json(const Json& j);

Json to_json(const MeanResult& r);
Json to_json(const VerificationReport& r);
/// History downsampled to at most 200 points.
Json to_json(const RatioTrace& t);
Json to_json(const QuadratureConfig& c);

/// Compact JSON with a fixed member order and every float printed with 17
/// significant digits. Non-finite floats become null.
std::string dump(const Json& j);

/// "%.17g", with "inf", "-inf" and "nan" for non-finite values.
std::string format_double(double x);

/// One CSV row "p,value,err,method".
std::string csv_row(const MeanResult& r);
inline constexpr std::string_view kMeansCsvHeader = "p,value,err,method";

/// Reads a whole file. Throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

} // namespace bernstein
