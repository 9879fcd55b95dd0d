#include "qverify/numeric.hpp"

#include <iomanip>
#include <sstream>

namespace qverify {

Decimal to_decimal(const Rational& r) {
  const Decimal num(r.numerator().get_str());
  const Decimal den(r.denominator().get_str());
  return num / den;
}

std::string decimal_str(const Decimal& v, int digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits - 1) << v;
  return os.str();
}

Decimal default_tolerance() { return Decimal("1e-30"); }

}  // namespace qverify
