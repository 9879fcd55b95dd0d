#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "qverify/rational.hpp"

namespace qverify {

/// One parameter value: c*q^e, a plain rational, or an integer.
struct ParamValue {
  enum class Kind { Monomial, Rational, Integer };

  Kind kind = Kind::Rational;
  Rational coef;
  Rational exp;  // only meaningful for Monomial
  long long integer = 0;

  static ParamValue monomial(Rational c, Rational e);
  static ParamValue rational(Rational c);
  static ParamValue whole(long long n);

  /// "c*q^e", "q^e", "-q", "p/q", "n". Exponents may be "p/q".
  static ParamValue parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const ParamValue&, const ParamValue&) = default;
};

/// Named parameter values for one specialization, plus the numeric value of
/// q used by numeric evaluation.
class ParamAssignment {
 public:
  void set(std::string name, ParamValue v) { values_[std::move(name)] = std::move(v); }
  bool has(std::string_view name) const;
  /// Throws BadParameter if absent.
  const ParamValue& get(std::string_view name) const;
  const std::map<std::string, ParamValue, std::less<>>& values() const { return values_; }

  const Rational& numeric_q() const { return numeric_q_; }
  void set_numeric_q(Rational q) { numeric_q_ = std::move(q); }

  std::string str() const;

  friend bool operator==(const ParamAssignment&, const ParamAssignment&) = default;

 private:
  std::map<std::string, ParamValue, std::less<>> values_;
  Rational numeric_q_{1, 7};
};

}  // namespace qverify
