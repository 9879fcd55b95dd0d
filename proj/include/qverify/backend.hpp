#pragma once

// Two evaluation backends sharing one interface, so every identity is written
// once as a generic builder:
//   ExactBackend   - truncated Laurent series in t, with q = t^d
//   NumericBackend - 64-digit decimals at a numeric q
//
// Both expose: value, one(), zero(), constant(r), q(e), mono(c, e),
// param(name), rational(name), integer(name), is_zero(v), pow(v, n),
// poch(a, base, n), poch_inf(a, base), sum(term, first, last).

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qverify/error.hpp"
#include "qverify/laurent_series.hpp"
#include "qverify/numeric.hpp"
#include "qverify/params.hpp"
#include "qverify/qfunc.hpp"

namespace qverify {

/// A series that forgets everything above `cap`; keeps long products cheap.
class ExactValue {
 public:
  ExactValue() = default;
  ExactValue(LaurentSeries s, Exponent cap) : s_(std::move(s)), cap_(cap) { clip(); }

  const LaurentSeries& series() const noexcept { return s_; }
  Exponent cap() const noexcept { return cap_; }
  std::optional<QMonomial> monomial() const { return s_.as_monomial(); }

  ExactValue operator-() const { return {-s_, cap_}; }
  friend ExactValue operator+(const ExactValue& a, const ExactValue& b) {
    return {a.s_ + b.s_, std::min(a.cap_, b.cap_)};
  }
  friend ExactValue operator-(const ExactValue& a, const ExactValue& b) {
    return {a.s_ - b.s_, std::min(a.cap_, b.cap_)};
  }
  friend ExactValue operator*(const ExactValue& a, const ExactValue& b) {
    return {a.s_ * b.s_, std::min(a.cap_, b.cap_)};
  }
  /// Throws DegenerateDenominator when b is exactly zero.
  friend ExactValue operator/(const ExactValue& a, const ExactValue& b);

 private:
  void clip();

  LaurentSeries s_;
  Exponent cap_ = kExactOrder;
};

class ExactBackend {
 public:
  using value = ExactValue;

  ExactBackend(const ParamAssignment* params, int denominator, Exponent target, Exponent cap);
  ExactBackend(Exponent target, Exponent cap) : ExactBackend(nullptr, 1, target, cap) {}

  static constexpr bool exact = true;
  int denominator() const noexcept { return d_; }
  Exponent target() const noexcept { return target_; }
  Exponent cap() const noexcept { return cap_; }

  value wrap(LaurentSeries s) const { return {std::move(s), cap_}; }
  value zero() const { return wrap(LaurentSeries()); }
  value one() const { return wrap(LaurentSeries::one()); }
  value constant(const Rational& c) const { return wrap(LaurentSeries::constant(c)); }
  /// q^e; e*d must be an integer.
  value q(const Rational& e = Rational(1)) const { return mono(Rational(1), e); }
  value mono(const Rational& c, const Rational& e) const;

  value param(std::string_view name) const;
  Rational rational(std::string_view name) const;
  long long integer(std::string_view name) const;

  bool is_zero(const value& v) const { return v.series().is_exact_zero(); }
  value pow(const value& v, long long n) const;
  value poch(const value& a, const value& base, long long n,
             ErrorKind on_zero = ErrorKind::DegenerateDenominator) const;
  /// Throws NonTruncatable unless both arguments are monomials with
  /// base.exp >= 1 and a.exp >= 0.
  value poch_inf(const value& a, const value& base) const;
  value div(const value& a, const value& b, ErrorKind on_zero) const;

  template <class F>
  value sum(F&& term, long first = 0, std::optional<long> last = std::nullopt) const {
    TermGenerator g;
    g.first = first;
    g.last = last;
    g.term = [&term](long n) -> LaurentSeries { return value(term(n)).series(); };
    return wrap(sum_series(g, cap_));
  }

 private:
  Exponent t_exponent(const Rational& e) const;

  const ParamAssignment* params_;
  int d_;
  Exponent target_;
  Exponent cap_;
};

class NumericBackend {
 public:
  using value = Decimal;

  explicit NumericBackend(const ParamAssignment* params, Decimal tol = default_tolerance());
  NumericBackend(const Rational& q, Decimal tol);

  static constexpr bool exact = false;
  const Decimal& tolerance() const noexcept { return tol_; }
  const Decimal& q_value() const noexcept { return q_; }

  value zero() const { return Decimal(0); }
  value one() const { return Decimal(1); }
  value constant(const Rational& c) const { return to_decimal(c); }
  value q(const Rational& e = Rational(1)) const;
  value mono(const Rational& c, const Rational& e) const { return to_decimal(c) * q(e); }

  value param(std::string_view name) const;
  Rational rational(std::string_view name) const;
  long long integer(std::string_view name) const;

  bool is_zero(const value& v) const { return v == 0; }
  value pow(const value& v, long long n) const;
  value poch(const value& a, const value& base, long long n,
             ErrorKind on_zero = ErrorKind::DegenerateDenominator) const;
  value poch_inf(const value& a, const value& base) const;
  value div(const value& a, const value& b, ErrorKind on_zero) const;

  template <class F>
  value sum(F&& term, long first = 0, std::optional<long> last = std::nullopt) const {
    NumericTermGenerator g;
    g.first = first;
    g.last = last;
    g.term = [&term](long n) -> Decimal { return term(n); };
    return sum_numeric(g, tol_);
  }

 private:
  const ParamAssignment* params_;
  Decimal q_;
  Decimal tol_;
};

/// Product of Pochhammer symbols (a; base)_{mult*n+shift}, geometric factors
/// z^n and quadratic factors w^{n(n-1)/2}, times a scale. Consecutive n are
/// reached by multiplying in the new binomials only.
template <class B>
class HyperTerm {
 public:
  using V = typename B::value;

  explicit HyperTerm(const B& be) : be_(&be), scale_(be.one()) {}
  HyperTerm(const B& be, V scale) : be_(&be), scale_(std::move(scale)) {}

  HyperTerm& num(V a, V base, int mult = 1, int shift = 0) {
    factors_.push_back({std::move(a), std::move(base), mult, shift, false,
                        ErrorKind::DegenerateDenominator, {}});
    return *this;
  }
  HyperTerm& den(V a, V base, int mult = 1, int shift = 0,
                 ErrorKind on_zero = ErrorKind::DegenerateDenominator) {
    factors_.push_back({std::move(a), std::move(base), mult, shift, true, on_zero, {}});
    return *this;
  }
  HyperTerm& geo(V z) {
    geos_.push_back(std::move(z));
    return *this;
  }
  /// w^{n(n-1)/2}
  HyperTerm& quad(V w) {
    quads_.push_back({std::move(w), {}});
    return *this;
  }
  /// Extra per-n multiplier applied to the output only.
  HyperTerm& times(std::function<V(long)> f) {
    extras_.push_back(std::move(f));
    return *this;
  }

  V operator()(long n) {
    if (n_ != LONG_MIN && n == n_ + 1) {
      advance();
    } else if (n != n_) {
      rebuild(n);
    }
    V out = cur_;
    for (const auto& f : extras_) out = out * f(n);
    return out;
  }

 private:
  struct Factor {
    V a;
    V base;
    int mult;
    int shift;
    bool denominator;
    ErrorKind on_zero;
    V next;  // a * base^{current index}
  };
  struct Quad {
    V w;
    V step;  // w^n
  };

  void rebuild(long n) {
    const B& be = *be_;
    cur_ = scale_;
    for (auto& f : factors_) {
      const long long idx = static_cast<long long>(f.mult) * n + f.shift;
      const V p = be.poch(f.a, f.base, idx, f.on_zero);
      cur_ = f.denominator ? be.div(cur_, p, f.on_zero) : cur_ * p;
      f.next = f.a * be.pow(f.base, idx);
    }
    for (const auto& z : geos_) cur_ = cur_ * be.pow(z, n);
    for (auto& qd : quads_) {
      cur_ = cur_ * be.pow(qd.w, static_cast<long long>(n) * (n - 1) / 2);
      qd.step = be.pow(qd.w, n);
    }
    n_ = n;
  }

  void advance() {
    const B& be = *be_;
    for (auto& f : factors_) {
      for (int i = 0; i < f.mult; ++i) {
        const V binom = be.one() - f.next;
        cur_ = f.denominator ? be.div(cur_, binom, f.on_zero) : cur_ * binom;
        f.next = f.next * f.base;
      }
    }
    for (const auto& z : geos_) cur_ = cur_ * z;
    for (auto& qd : quads_) {
      cur_ = cur_ * qd.step;
      qd.step = qd.step * qd.w;
    }
    ++n_;
  }

  const B* be_;
  V scale_;
  std::vector<Factor> factors_;
  std::vector<V> geos_;
  std::vector<Quad> quads_;
  std::vector<std::function<V(long)>> extras_;
  long n_ = LONG_MIN;
  V cur_;
};

struct ExactSides {
  LaurentSeries lhs;
  LaurentSeries rhs;
};

/// Runs `build(backend)` with growing headroom above `target` until both
/// sides are known to `target`. Throws OrderInsufficient when it gives up.
template <class Build>
ExactSides evaluate_exact(Build&& build, const ParamAssignment* params, int denominator,
                          Exponent target, int attempts = 4) {
  Exponent slack = std::max<Exponent>(8, target / 2);
  for (int i = 0; i < attempts; ++i, slack *= 2) {
    const ExactBackend be(params, denominator, target, target + slack);
    try {
      auto [l, r] = build(be);
      if (l.series().order() >= target && r.series().order() >= target) {
        return {l.series().truncated(target), r.series().truncated(target)};
      }
    } catch (const QError& e) {
      if (e.kind() != ErrorKind::OrderInsufficient) throw;
    }
  }
  throw QError(ErrorKind::OrderInsufficient,
               "sides not determined to order " + std::to_string(target));
}

/// Single-value variant of evaluate_exact.
template <class Build>
LaurentSeries evaluate_exact_value(Build&& build, const ParamAssignment* params, int denominator,
                                   Exponent target, int attempts = 4) {
  auto both = [&build](const ExactBackend& be) {
    auto v = build(be);
    return std::pair{v, v};
  };
  return evaluate_exact(both, params, denominator, target, attempts).lhs;
}

}  // namespace qverify
