#pragma once

#include <gmpxx.h>

#include <string>

namespace ftfvs {

// Exact vertex weights. All weight arithmetic in the toolkit is exact, so
// zero tests in the local-ratio scheme and factor assertions in the test
// suites never depend on floating-point rounding.
using Rational = mpq_class;

// Accepts "5", "7/3" and decimal literals such as "1.25".
Rational parse_rational(const std::string& text);

// Lowest terms, positive denominator: "n" or "n/d".
std::string format_rational(const Rational& value);

}  // namespace ftfvs
