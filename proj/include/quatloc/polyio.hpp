#pragma once

#include <iosfwd>
#include <string>

#include "quatloc/qpolynomial.hpp"

namespace quatloc {

/// Polynomial document format (JSON):
///   { "side": "left" | "right", "coeffs": [[w,x,y,z], ...] }
/// with coefficients ascending by degree. Non-finite numbers, missing
/// fields, wrong component counts and a zero leading coefficient are all
/// rejected with std::invalid_argument.
QPolynomial parse_polynomial(const std::string& text);
QPolynomial read_polynomial_file(const std::string& path);

/// Serializes in the same format (full double precision).
std::string format_polynomial(const QPolynomial& p);

/// Shortest round-trip decimal rendering of a double ("%.17g").
std::string fmt_double(double v);

/// FNV-1a digest of the coefficient bytes; identifies a polynomial in
/// failure reports.
std::string polynomial_digest(const QPolynomial& p);

}  // namespace quatloc
