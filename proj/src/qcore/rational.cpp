#include "qverify/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "qverify/error.hpp"

namespace qverify {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? "1" : trim(s.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den)) {
    throw QError(ErrorKind::BadParameter, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class n(strip_plus(num), 10);
  mpz_class d(strip_plus(den), 10);
  if (d == 0) throw QError(ErrorKind::BadParameter, "zero denominator: '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

long long Rational::to_integer() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) {
    throw std::range_error("Rational::to_integer: " + str());
  }
  return v_.get_num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorKind::OrderInsufficient: return "OrderInsufficient";
    case ErrorKind::NonTruncatable: return "NonTruncatable";
    case ErrorKind::DegenerateVWP: return "DegenerateVWP";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::LowerParameterPole: return "LowerParameterPole";
    case ErrorKind::ValuationStall: return "ValuationStall";
    case ErrorKind::TailNotDecreasing: return "TailNotDecreasing";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::DegenerateFamily: return "DegenerateFamily";
    case ErrorKind::PteConditionFailed: return "PteConditionFailed";
    case ErrorKind::SamplerExhausted: return "SamplerExhausted";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
    case ErrorKind::BadParameter: return "BadParameter";
  }
  return "Unknown";
}

}  // namespace qverify
