#include "qverify/backend.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace qverify {

void ExactValue::clip() {
  if (s_.is_exact()) {
    if (!s_.is_zero() && s_.max_deg() > cap_) s_ = s_.truncated(cap_);
  } else if (s_.order() > cap_) {
    s_ = s_.truncated(cap_);
  }
}

ExactValue operator/(const ExactValue& a, const ExactValue& b) {
  if (b.s_.is_exact_zero()) throw QError(ErrorKind::DegenerateDenominator, "division by zero");
  const Exponent cap = std::min(a.cap_, b.cap_);
  return {series_divide(a.s_, b.s_, cap), cap};
}

ExactBackend::ExactBackend(const ParamAssignment* params, int denominator, Exponent target,
                           Exponent cap)
    : params_(params), d_(denominator), target_(target), cap_(cap) {
  if (d_ < 1) throw std::invalid_argument("exponent denominator must be >= 1");
}

Exponent ExactBackend::t_exponent(const Rational& e) const {
  const Rational scaled = e * Rational(d_);
  if (!scaled.is_integer()) {
    throw QError(ErrorKind::BadParameter, "exponent " + e.str() +
                                              " is not a multiple of 1/" + std::to_string(d_));
  }
  return scaled.to_integer();
}

ExactValue ExactBackend::mono(const Rational& c, const Rational& e) const {
  return wrap(LaurentSeries::monomial(c, t_exponent(e)));
}

ExactValue ExactBackend::param(std::string_view name) const {
  if (params_ == nullptr) throw QError(ErrorKind::BadParameter, "no parameters bound");
  const ParamValue& v = params_->get(name);
  switch (v.kind) {
    case ParamValue::Kind::Monomial:
      return mono(v.coef, v.exp);
    case ParamValue::Kind::Rational:
      return constant(v.coef);
    case ParamValue::Kind::Integer:
      return constant(Rational(v.integer));
  }
  return zero();
}

Rational ExactBackend::rational(std::string_view name) const {
  if (params_ == nullptr) throw QError(ErrorKind::BadParameter, "no parameters bound");
  const ParamValue& v = params_->get(name);
  if (v.kind == ParamValue::Kind::Monomial && !v.exp.is_zero()) {
    throw QError(ErrorKind::BadParameter, "parameter '" + std::string(name) + "' must be rational");
  }
  return v.kind == ParamValue::Kind::Integer ? Rational(v.integer) : v.coef;
}

long long ExactBackend::integer(std::string_view name) const {
  const Rational r = rational(name);
  if (!r.is_integer()) {
    throw QError(ErrorKind::BadParameter, "parameter '" + std::string(name) + "' must be an integer");
  }
  return r.to_integer();
}

ExactValue ExactBackend::pow(const ExactValue& v, long long n) const {
  if (auto m = v.monomial()) {
    if (n < 0 && m->is_zero()) throw QError(ErrorKind::DegenerateDenominator, "0 to a negative power");
    if (m->is_zero()) return n == 0 ? one() : zero();
    return wrap(m->pow(n).to_series());
  }
  ExactValue base = n < 0 ? one() / v : v;
  long long e = n < 0 ? -n : n;
  ExactValue out = one();
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

ExactValue ExactBackend::div(const ExactValue& a, const ExactValue& b, ErrorKind on_zero) const {
  if (b.series().is_exact_zero()) throw QError(on_zero, "vanishing denominator factor");
  return a / b;
}

ExactValue ExactBackend::poch(const ExactValue& a, const ExactValue& base, long long n,
                              ErrorKind on_zero) const {
  if (n < 0) {
    const ExactValue shifted = a * pow(base, n);
    return div(one(), poch(shifted, base, -n), on_zero);
  }
  ExactValue out = one();
  ExactValue term = a;
  for (long long j = 0; j < n; ++j) {
    out = out * (one() - term);
    if (out.series().is_exact_zero()) return out;
    term = term * base;
  }
  return out;
}

ExactValue ExactBackend::poch_inf(const ExactValue& a, const ExactValue& base) const {
  const auto am = a.monomial();
  const auto bm = base.monomial();
  if (!am || !bm) throw QError(ErrorKind::NonTruncatable, "infinite product needs monomial arguments");
  if (am->is_zero()) return one();
  if (bm->is_zero() || bm->exp < 1 || am->exp < 0) {
    throw QError(ErrorKind::NonTruncatable,
                 "infinite product (" + am->str() + "; " + bm->str() + ") does not truncate");
  }
  ExactValue out = one();
  QMonomial term = *am;
  while (term.exp <= cap_) {
    out = out * wrap(LaurentSeries::one() - term.to_series());
    term = term * *bm;
  }
  // The remaining factors are 1 through the cap.
  if (out.series().is_exact() && !out.series().is_zero()) out = wrap(out.series().truncated(cap_));
  return out;
}

NumericBackend::NumericBackend(const ParamAssignment* params, Decimal tol)
    : params_(params), q_(to_decimal(params ? params->numeric_q() : Rational(1, 7))), tol_(std::move(tol)) {}

NumericBackend::NumericBackend(const Rational& q, Decimal tol)
    : params_(nullptr), q_(to_decimal(q)), tol_(std::move(tol)) {}

Decimal NumericBackend::q(const Rational& e) const {
  if (e.is_integer()) return pow(q_, e.to_integer());
  return boost::multiprecision::pow(q_, to_decimal(e));
}

Decimal NumericBackend::param(std::string_view name) const {
  if (params_ == nullptr) throw QError(ErrorKind::BadParameter, "no parameters bound");
  const ParamValue& v = params_->get(name);
  switch (v.kind) {
    case ParamValue::Kind::Monomial:
      return mono(v.coef, v.exp);
    case ParamValue::Kind::Rational:
      return to_decimal(v.coef);
    case ParamValue::Kind::Integer:
      return Decimal(v.integer);
  }
  return zero();
}

Rational NumericBackend::rational(std::string_view name) const {
  if (params_ == nullptr) throw QError(ErrorKind::BadParameter, "no parameters bound");
  const ParamValue& v = params_->get(name);
  if (v.kind == ParamValue::Kind::Monomial && !v.exp.is_zero()) {
    throw QError(ErrorKind::BadParameter, "parameter '" + std::string(name) + "' must be rational");
  }
  return v.kind == ParamValue::Kind::Integer ? Rational(v.integer) : v.coef;
}

long long NumericBackend::integer(std::string_view name) const {
  const Rational r = rational(name);
  if (!r.is_integer()) {
    throw QError(ErrorKind::BadParameter, "parameter '" + std::string(name) + "' must be an integer");
  }
  return r.to_integer();
}

Decimal NumericBackend::pow(const Decimal& v, long long n) const {
  if (n < 0) {
    if (v == 0) throw QError(ErrorKind::DegenerateDenominator, "0 to a negative power");
    return 1 / boost::multiprecision::pow(v, static_cast<int>(-n));
  }
  return boost::multiprecision::pow(v, static_cast<int>(n));
}

Decimal NumericBackend::div(const Decimal& a, const Decimal& b, ErrorKind on_zero) const {
  if (b == 0) throw QError(on_zero, "vanishing denominator factor");
  return a / b;
}

Decimal NumericBackend::poch(const Decimal& a, const Decimal& base, long long n,
                             ErrorKind on_zero) const {
  if (n < 0) return div(1, poch(a * pow(base, n), base, -n), on_zero);
  Decimal out = 1;
  Decimal term = a;
  for (long long j = 0; j < n; ++j) {
    out *= 1 - term;
    term *= base;
  }
  return out;
}

Decimal NumericBackend::poch_inf(const Decimal& a, const Decimal& base) const {
  if (a == 0) return 1;
  if (abs(base) >= 1) throw QError(ErrorKind::NonTruncatable, "infinite product with |base| >= 1");
  static const Decimal negligible("1e-70");
  Decimal out = 1;
  Decimal term = a;
  for (long j = 0; abs(term) >= negligible; ++j) {
    if (j > 1000000) throw QError(ErrorKind::TailNotDecreasing, "infinite product does not settle");
    out *= 1 - term;
    term *= base;
  }
  return out;
}

}  // namespace qverify
