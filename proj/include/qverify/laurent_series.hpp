#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qverify/rational.hpp"

namespace qverify {

using Exponent = std::int64_t;

/// Order value of a series that is known exactly (a Laurent polynomial).
inline constexpr Exponent kExactOrder = std::numeric_limits<Exponent>::max() / 4;

class LaurentSeries;

/// c * q^e. Closed under products and quotients.
struct QMonomial {
  Rational coef;
  Exponent exp = 0;

  QMonomial() = default;
  QMonomial(Rational c, Exponent e = 0) : coef(std::move(c)), exp(e) {}  // NOLINT
  static QMonomial q(Exponent e = 1) { return {Rational(1), e}; }

  bool is_zero() const { return coef.is_zero(); }
  QMonomial pow(long long n) const;
  LaurentSeries to_series() const;
  std::string str() const;

  friend QMonomial operator*(const QMonomial& a, const QMonomial& b) {
    return {a.coef * b.coef, a.exp + b.exp};
  }
  friend QMonomial operator/(const QMonomial& a, const QMonomial& b);
  friend bool operator==(const QMonomial& a, const QMonomial& b) {
    return a.coef == b.coef && (a.coef.is_zero() || a.exp == b.exp);
  }
};

/// Truncated Laurent series in one variable.
///
/// Coefficients are stored for exponents min_deg()..order(). Anything above
/// order() is unknown, never zero. A series whose order() is kExactOrder is
/// a Laurent polynomial known exactly; it stores min_deg()..max_deg() only.
/// Zero has no stored coefficients; its valuation() is order()+1.
class LaurentSeries {
 public:
  /// Exact zero.
  LaurentSeries() = default;

  static LaurentSeries zero(Exponent order = kExactOrder);
  static LaurentSeries one() { return monomial(Rational(1), 0); }
  static LaurentSeries constant(const Rational& c) { return monomial(c, 0); }
  static LaurentSeries monomial(const Rational& c, Exponent e, Exponent order = kExactOrder);
  static LaurentSeries from_coeffs(Exponent min_deg, std::vector<Rational> coeffs,
                                   Exponent order = kExactOrder);
  static LaurentSeries from_terms(std::initializer_list<std::pair<Exponent, Rational>> terms,
                                  Exponent order = kExactOrder);

  Exponent order() const noexcept { return order_; }
  bool is_exact() const noexcept { return order_ >= kExactOrder; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_exact_zero() const noexcept { return c_.empty() && is_exact(); }

  /// Lowest exponent with a nonzero coefficient, or order()+1 for zero.
  Exponent valuation() const noexcept;
  /// Highest stored exponent; valuation()-1 for zero.
  Exponent max_deg() const noexcept;

  /// Throws OrderInsufficient above order().
  Rational coeff(Exponent e) const;
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  std::size_t nonzero_count() const;

  /// Engaged iff the series is exact with at most one nonzero term.
  std::optional<QMonomial> as_monomial() const;

  LaurentSeries truncated(Exponent order) const;
  LaurentSeries shifted(Exponent k) const;
  LaurentSeries scaled(const Rational& r) const;

  std::string str() const;

  LaurentSeries operator-() const { return scaled(Rational(-1)); }
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

 private:
  static LaurentSeries normalized(Exponent min_deg, std::vector<Rational> coeffs, Exponent order);

  Exponent min_deg_ = 0;
  std::vector<Rational> c_;
  Exponent order_ = kExactOrder;
};

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);

/// a / b. When both operands are exact the quotient is in general infinite and
/// `order` must be given; otherwise the result order is the best one the
/// inputs guarantee, capped by `order` if present. Division by an exact
/// monomial is exact. Throws ZeroLeadingCoefficient if b is zero.
LaurentSeries series_divide(const LaurentSeries& a, const LaurentSeries& b,
                            std::optional<Exponent> order = std::nullopt);

/// 1 / a, result valuation -valuation(a).
LaurentSeries series_invert(const LaurentSeries& a, std::optional<Exponent> order = std::nullopt);

struct SeriesComparison {
  bool equal = true;
  Exponent exponent = 0;  // lowest differing exponent when !equal
  Rational lhs;
  Rational rhs;
};

/// Coefficientwise comparison for exponents <= up_to. Throws
/// OrderInsufficient if either side is not known that far.
SeriesComparison series_compare(const LaurentSeries& a, const LaurentSeries& b, Exponent up_to);

/// Substitutes q -> q^d.
LaurentSeries rescale_exponents(const LaurentSeries& a, Exponent d);

}  // namespace qverify
