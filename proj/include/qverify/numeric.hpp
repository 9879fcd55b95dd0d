#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "qverify/rational.hpp"

namespace qverify {

/// 64 significant decimal digits.
using Decimal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<64>,
                                              boost::multiprecision::et_off>;

inline constexpr int kDecimalDigits = 64;

Decimal to_decimal(const Rational& r);

/// Scientific notation with `digits` significant digits.
std::string decimal_str(const Decimal& v, int digits = 40);

/// Default numeric tolerance, 1e-30.
Decimal default_tolerance();

}  // namespace qverify
