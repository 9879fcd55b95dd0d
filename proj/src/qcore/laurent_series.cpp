#include "qverify/laurent_series.hpp"

#include <algorithm>
#include <sstream>

#include "qverify/error.hpp"

namespace qverify {

namespace {

// Saturating sum for orders and valuations; anything at or beyond
// kExactOrder stays "infinite".
Exponent sat_add(Exponent a, Exponent b) {
  if (a >= kExactOrder || b >= kExactOrder) return kExactOrder;
  const Exponent s = a + b;
  return s >= kExactOrder ? kExactOrder : s;
}

// Indices of the nonzero coefficients of s.
std::vector<std::size_t> support(const LaurentSeries& s) {
  std::vector<std::size_t> idx;
  const auto& c = s.coeffs();
  idx.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) idx.push_back(i);
  }
  return idx;
}

}  // namespace

QMonomial QMonomial::pow(long long n) const {
  if (n < 0 && coef.is_zero()) {
    throw QError(ErrorKind::ZeroLeadingCoefficient, "negative power of a zero monomial");
  }
  return {coef.pow(n), exp * n};
}

QMonomial operator/(const QMonomial& a, const QMonomial& b) {
  if (b.coef.is_zero()) throw QError(ErrorKind::ZeroLeadingCoefficient, "monomial division by zero");
  return {a.coef / b.coef, a.exp - b.exp};
}

LaurentSeries QMonomial::to_series() const { return LaurentSeries::monomial(coef, exp); }

std::string QMonomial::str() const {
  if (coef.is_zero()) return "0";
  if (exp == 0) return coef.str();
  return coef.str() + "*q^" + std::to_string(exp);
}

LaurentSeries LaurentSeries::zero(Exponent order) {
  LaurentSeries s;
  s.order_ = std::min(order, kExactOrder);
  return s;
}

LaurentSeries LaurentSeries::monomial(const Rational& c, Exponent e, Exponent order) {
  return normalized(e, {c}, order);
}

LaurentSeries LaurentSeries::from_coeffs(Exponent min_deg, std::vector<Rational> coeffs,
                                         Exponent order) {
  return normalized(min_deg, std::move(coeffs), order);
}

LaurentSeries LaurentSeries::from_terms(
    std::initializer_list<std::pair<Exponent, Rational>> terms, Exponent order) {
  LaurentSeries out = zero(kExactOrder);
  for (const auto& [e, c] : terms) out = out + monomial(c, e);
  return order >= kExactOrder ? out : out.truncated(order);
}

LaurentSeries LaurentSeries::normalized(Exponent min_deg, std::vector<Rational> coeffs,
                                        Exponent order) {
  LaurentSeries s;
  s.order_ = std::min(order, kExactOrder);
  const bool exact = s.order_ >= kExactOrder;
  if (!exact && min_deg + static_cast<Exponent>(coeffs.size()) - 1 > s.order_) {
    const Exponent keep = s.order_ - min_deg + 1;
    coeffs.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
  }
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead].is_zero()) ++lead;
  if (lead == coeffs.size()) return s;
  if (exact) {
    std::size_t last = coeffs.size();
    while (coeffs[last - 1].is_zero()) --last;
    coeffs.resize(last);
  }
  if (lead > 0) coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
  s.min_deg_ = min_deg + static_cast<Exponent>(lead);
  if (!exact) {
    const Exponent want = s.order_ - s.min_deg_ + 1;
    coeffs.resize(static_cast<std::size_t>(want));
  }
  s.c_ = std::move(coeffs);
  return s;
}

Exponent LaurentSeries::valuation() const noexcept {
  if (c_.empty()) return sat_add(order_, 1);
  return min_deg_;
}

Exponent LaurentSeries::max_deg() const noexcept {
  if (c_.empty()) return valuation() - 1;
  return min_deg_ + static_cast<Exponent>(c_.size()) - 1;
}

Rational LaurentSeries::coeff(Exponent e) const {
  if (e > order_) {
    throw QError(ErrorKind::OrderInsufficient,
                 "coefficient of q^" + std::to_string(e) + " beyond order " + std::to_string(order_));
  }
  if (c_.empty() || e < min_deg_ || e > max_deg()) return Rational();
  return c_[static_cast<std::size_t>(e - min_deg_)];
}

std::size_t LaurentSeries::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](const Rational& r) { return !r.is_zero(); }));
}

std::optional<QMonomial> LaurentSeries::as_monomial() const {
  if (!is_exact()) return std::nullopt;
  if (c_.empty()) return QMonomial(Rational(0), 0);
  if (c_.size() != 1) return std::nullopt;
  return QMonomial(c_[0], min_deg_);
}

LaurentSeries LaurentSeries::truncated(Exponent order) const {
  if (order >= order_) return *this;
  return normalized(min_deg_, c_, order);
}

LaurentSeries LaurentSeries::shifted(Exponent k) const {
  LaurentSeries s = *this;
  if (!s.c_.empty()) s.min_deg_ += k;
  s.order_ = is_exact() ? kExactOrder : std::min(order_ + k, kExactOrder - 1);
  return s;
}

LaurentSeries LaurentSeries::scaled(const Rational& r) const {
  if (r.is_zero()) return zero(order_);
  LaurentSeries s = *this;
  for (auto& c : s.c_) c *= r;
  return s;
}

std::string LaurentSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const Exponent e = min_deg_ + static_cast<Exponent>(i);
    Rational c = c_[i];
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      c = c.abs();
    }
    first = false;
    if (e == 0) {
      os << c;
    } else {
      if (!c.is_one()) os << c << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(q^" << order_ + 1 << ")";
  return os.str();
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const Exponent order = std::min(a.order_, b.order_);
  if (a.c_.empty()) return b.truncated(order);
  if (b.c_.empty()) return a.truncated(order);
  const Exponent lo = std::min(a.min_deg_, b.min_deg_);
  const Exponent hi = order >= kExactOrder ? std::max(a.max_deg(), b.max_deg()) : order;
  if (hi < lo) return LaurentSeries::zero(order);
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  for (const LaurentSeries* s : {&a, &b}) {
    const Exponent top = std::min(s->max_deg(), hi);
    for (Exponent e = s->min_deg_; e <= top; ++e) {
      out[static_cast<std::size_t>(e - lo)] += s->c_[static_cast<std::size_t>(e - s->min_deg_)];
    }
  }
  return LaurentSeries::normalized(lo, std::move(out), order);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return LaurentSeries();
  const Exponent va = a.valuation();
  const Exponent vb = b.valuation();
  const Exponent order = std::min(sat_add(a.order_, vb), sat_add(b.order_, va));
  if (a.c_.empty() || b.c_.empty()) return LaurentSeries::zero(order);
  const Exponent lo = va + vb;
  const Exponent hi = order >= kExactOrder ? a.max_deg() + b.max_deg() : order;
  if (hi < lo) return LaurentSeries::zero(order);

  // Iterate the sparser operand in the outer loop; binomial factors make
  // this linear in the window length.
  const auto sa = support(a);
  const auto sb = support(b);
  const bool a_outer = sa.size() <= sb.size();
  const LaurentSeries& outer = a_outer ? a : b;
  const LaurentSeries& inner = a_outer ? b : a;
  const auto& outer_idx = a_outer ? sa : sb;
  const auto& inner_idx = a_outer ? sb : sa;

  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  mpq_class tmp;
  for (std::size_t i : outer_idx) {
    const Exponent ei = outer.min_deg_ + static_cast<Exponent>(i);
    const mpq_class& ci = outer.c_[i].get();
    for (std::size_t j : inner_idx) {
      const Exponent e = ei + inner.min_deg_ + static_cast<Exponent>(j);
      if (e > hi) break;
      mpq_mul(tmp.get_mpq_t(), ci.get_mpq_t(), inner.c_[j].get().get_mpq_t());
      mpq_class& slot = out[static_cast<std::size_t>(e - lo)].raw();
      mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp.get_mpq_t());
    }
  }
  return LaurentSeries::normalized(lo, std::move(out), order);
}

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) { return a + b; }
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) { return a * b; }

LaurentSeries series_divide(const LaurentSeries& a, const LaurentSeries& b,
                            std::optional<Exponent> order) {
  if (b.is_zero()) {
    throw QError(ErrorKind::ZeroLeadingCoefficient,
                 "division by a series with no nonzero coefficient up to order " +
                     (b.is_exact() ? std::string("inf") : std::to_string(b.order())));
  }
  if (auto m = b.as_monomial()) {
    LaurentSeries r = a.shifted(-m->exp).scaled(m->coef.inverse());
    return order && !r.is_exact() ? r.truncated(*order) : r;
  }
  if (a.is_exact_zero()) return LaurentSeries();

  const Exponent vb = b.valuation();
  const Exponent va = a.valuation();
  Exponent natural = std::min(sat_add(a.order(), -vb), sat_add(b.order(), va - 2 * vb));
  if (natural >= kExactOrder) {
    if (!order) {
      throw QError(ErrorKind::OrderInsufficient, "quotient of exact series needs an order");
    }
    natural = *order;
  } else if (order) {
    natural = std::min(natural, *order);
  }
  const Exponent out_order = natural;
  if (a.is_zero()) return LaurentSeries::zero(out_order);
  const Exponent lo = va - vb;
  if (lo > out_order) return LaurentSeries::zero(out_order);

  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  // (offset from b's leading term, coefficient) for the non-leading support
  std::vector<std::pair<Exponent, const mpq_class*>> tail;
  for (std::size_t j = 1; j < bc.size(); ++j) {
    if (!bc[j].is_zero()) tail.emplace_back(static_cast<Exponent>(j), &bc[j].get());
  }
  mpq_class lead_inv;
  mpq_inv(lead_inv.get_mpq_t(), bc[0].get().get_mpq_t());

  const std::size_t n = static_cast<std::size_t>(out_order - lo + 1);
  std::vector<Rational> r(n);
  mpq_class acc, tmp;
  for (std::size_t k = 0; k < n; ++k) {
    const Exponent ea = lo + static_cast<Exponent>(k) + vb;
    const Exponent ia = ea - va;
    if (ia >= 0 && ia < static_cast<Exponent>(ac.size())) {
      acc = ac[static_cast<std::size_t>(ia)].get();
    } else {
      acc = 0;
    }
    for (const auto& [off, coef] : tail) {
      if (off > static_cast<Exponent>(k)) break;
      const mpq_class& rk = r[k - static_cast<std::size_t>(off)].get();
      if (sgn(rk) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), coef->get_mpq_t(), rk.get_mpq_t());
      mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
    }
    mpq_mul(r[k].raw().get_mpq_t(), acc.get_mpq_t(), lead_inv.get_mpq_t());
  }
  return LaurentSeries::from_coeffs(lo, std::move(r), out_order);
}

LaurentSeries series_invert(const LaurentSeries& a, std::optional<Exponent> order) {
  return series_divide(LaurentSeries::one(), a, order);
}

SeriesComparison series_compare(const LaurentSeries& a, const LaurentSeries& b, Exponent up_to) {
  if (up_to > a.order() || up_to > b.order()) {
    throw QError(ErrorKind::OrderInsufficient,
                 "compare up to " + std::to_string(up_to) + " but orders are " +
                     std::to_string(a.order()) + " and " + std::to_string(b.order()));
  }
  SeriesComparison out;
  const Exponent lo = std::min(a.valuation(), b.valuation());
  for (Exponent e = lo; e <= up_to; ++e) {
    Rational ca = a.coeff(e);
    Rational cb = b.coeff(e);
    if (ca != cb) {
      out.equal = false;
      out.exponent = e;
      out.lhs = std::move(ca);
      out.rhs = std::move(cb);
      return out;
    }
  }
  return out;
}

LaurentSeries rescale_exponents(const LaurentSeries& a, Exponent d) {
  if (d < 1) throw std::invalid_argument("rescale_exponents: d must be >= 1");
  if (d == 1) return a;
  const Exponent order = a.is_exact() ? kExactOrder : a.order() * d;
  if (a.is_zero()) return LaurentSeries::zero(order);
  const auto& c = a.coeffs();
  const Exponent lo = a.valuation() * d;
  const Exponent hi = a.is_exact() ? a.max_deg() * d : order;
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < c.size(); ++i) out[i * static_cast<std::size_t>(d)] = c[i];
  return LaurentSeries::from_coeffs(lo, std::move(out), order);
}

}  // namespace qverify
