#include "qverify/params.hpp"

#include <cctype>
#include <sstream>

#include "qverify/error.hpp"

namespace qverify {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view text) {
  throw QError(ErrorKind::BadParameter, "cannot parse parameter value '" + std::string(text) + "'");
}

}  // namespace

ParamValue ParamValue::monomial(Rational c, Rational e) {
  ParamValue v;
  v.kind = Kind::Monomial;
  v.coef = std::move(c);
  v.exp = std::move(e);
  return v;
}

ParamValue ParamValue::rational(Rational c) {
  ParamValue v;
  v.kind = Kind::Rational;
  v.coef = std::move(c);
  return v;
}

ParamValue ParamValue::whole(long long n) {
  ParamValue v;
  v.kind = Kind::Integer;
  v.integer = n;
  v.coef = Rational(n);
  return v;
}

ParamValue ParamValue::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) bad(text);
  const auto qpos = s.find('q');
  if (qpos == std::string_view::npos) {
    const Rational r = Rational::parse(s);
    if (s.find('/') == std::string_view::npos && r.is_integer()) return whole(r.to_integer());
    return rational(r);
  }
  // coefficient part: "", "-", "+", "c*", "c"
  std::string_view head = trim(s.substr(0, qpos));
  Rational coef(1);
  if (head == "-") {
    coef = Rational(-1);
  } else if (!head.empty() && head != "+") {
    if (head.back() == '*') head = trim(head.substr(0, head.size() - 1));
    if (head.empty()) bad(text);
    coef = Rational::parse(head);
  }
  std::string_view tail = trim(s.substr(qpos + 1));
  Rational exp(1);
  if (!tail.empty()) {
    if (tail.front() != '^') bad(text);
    tail = trim(tail.substr(1));
    if (tail.size() >= 2 && tail.front() == '(' && tail.back() == ')') {
      tail = tail.substr(1, tail.size() - 2);
    }
    exp = Rational::parse(tail);
  }
  return monomial(coef, exp);
}

std::string ParamValue::str() const {
  switch (kind) {
    case Kind::Integer:
      return std::to_string(integer);
    case Kind::Rational:
      return coef.str();
    case Kind::Monomial:
      return coef.str() + "*q^" + exp.str();
  }
  return {};
}

bool ParamAssignment::has(std::string_view name) const { return values_.find(name) != values_.end(); }

const ParamValue& ParamAssignment::get(std::string_view name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) {
    throw QError(ErrorKind::BadParameter, "missing parameter '" + std::string(name) + "'");
  }
  return it->second;
}

std::string ParamAssignment::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : values_) {
    if (!first) os << ", ";
    first = false;
    os << k << "=" << v.str();
  }
  return os.str();
}

}  // namespace qverify
