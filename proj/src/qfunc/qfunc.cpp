#include "qverify/qfunc.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <limits>

#include "qverify/backend.hpp"
#include "qverify/error.hpp"

namespace qverify {

LaurentSeries sum_series(const TermGenerator& g, Exponent threshold, const SumPolicy& policy) {
  LaurentSeries acc;
  int quiet = 0;
  int since_record = 0;
  Exponent record = std::numeric_limits<Exponent>::min();
  for (long n = g.first;; ++n) {
    if (g.last && n > *g.last) break;
    if (n - g.first >= policy.max_terms) {
      throw QError(ErrorKind::ValuationStall, "no convergence after " +
                                                  std::to_string(policy.max_terms) + " terms");
    }
    if (!g.last && g.valuation_bound && g.valuation_bound(n) > threshold) break;
    const LaurentSeries t = g.term(n);
    acc = acc + t;
    if (g.last) continue;

    const Exponent v = t.valuation();
    if (t.is_zero() || v > threshold) {
      if (++quiet >= policy.quiet_run) break;
    } else {
      quiet = 0;
    }
    if (v > record) {
      record = v;
      since_record = 0;
    } else if (++since_record >= policy.stall_window) {
      throw QError(ErrorKind::ValuationStall,
                   "term valuations stuck at " + std::to_string(record) + " for " +
                       std::to_string(policy.stall_window) + " terms (n = " + std::to_string(n) +
                       ")");
    }
  }
  return acc;
}

LaurentSeries sum_exact(const TermGenerator& g, Exponent N) {
  const LaurentSeries s = sum_series(g, N);
  if (s.order() < N) {
    throw QError(ErrorKind::OrderInsufficient,
                 "sum known to order " + std::to_string(s.order()) + " < " + std::to_string(N));
  }
  return s.truncated(N);
}

Decimal sum_numeric(const NumericTermGenerator& g, const Decimal& tol) {
  if (tol <= 0) throw std::invalid_argument("sum_numeric: tolerance must be positive");
  constexpr int kQuietRun = 20;
  constexpr long kMaxTerms = 10000;
  const Decimal small = tol / 100;
  Decimal acc = 0;
  int quiet = 0;
  for (long n = g.first;; ++n) {
    if (g.last && n > *g.last) break;
    if (n - g.first >= kMaxTerms) {
      throw QError(ErrorKind::TailNotDecreasing,
                   "tail still above tolerance after " + std::to_string(kMaxTerms) + " terms");
    }
    const Decimal t = g.term(n);
    if (!boost::multiprecision::isfinite(t)) {
      throw QError(ErrorKind::DegenerateDenominator, "non-finite term at n = " + std::to_string(n));
    }
    acc += t;
    if (g.last) continue;
    if (abs(t) < small) {
      if (++quiet >= kQuietRun) break;
    } else {
      quiet = 0;
    }
  }
  return acc;
}

LaurentSeries poch_finite(const LaurentSeries& a, const QMonomial& base, long long n) {
  if (n < 0) {
    const QMonomial shift = base.pow(n);
    return series_invert(poch_finite(a * shift.to_series(), base, -n));
  }
  LaurentSeries out = LaurentSeries::one();
  LaurentSeries term = a;
  const LaurentSeries b = base.to_series();
  for (long long j = 0; j < n; ++j) {
    out = out * (LaurentSeries::one() - term);
    term = term * b;
  }
  return out;
}

LaurentSeries poch_infinite(const QMonomial& a, const QMonomial& base, Exponent N) {
  const ExactBackend be(N, N);
  return be.poch_inf(be.wrap(a.to_series()), be.wrap(base.to_series())).series().truncated(N);
}

LaurentSeries vwp_factor(const LaurentSeries& k, long long n, Exponent N) {
  const LaurentSeries denom = LaurentSeries::one() - k;
  if (denom.is_exact_zero()) throw QError(ErrorKind::DegenerateVWP, "k specializes to 1");
  const LaurentSeries numer = LaurentSeries::one() - k.shifted(2 * n);
  return series_divide(numer, denom, N).truncated(N);
}

LaurentSeries phi_rs(const std::vector<LaurentSeries>& upper,
                     const std::vector<LaurentSeries>& lower, const QMonomial& base,
                     const LaurentSeries& z, Exponent N) {
  const long long power = static_cast<long long>(lower.size()) + 1 - static_cast<long long>(upper.size());
  auto build = [&](const ExactBackend& be) {
    const ExactValue b = be.wrap(base.to_series());
    HyperTerm<ExactBackend> term(be);
    for (const auto& u : upper) term.num(be.wrap(u), b);
    for (const auto& l : lower) term.den(be.wrap(l), b, 1, 0, ErrorKind::LowerParameterPole);
    term.den(b, b);
    term.geo(be.wrap(z));
    if (power != 0) {
      term.geo(be.constant(power % 2 == 0 ? Rational(1) : Rational(-1)));
      term.quad(be.pow(b, power));
    }
    return be.sum(term);
  };
  return evaluate_exact_value(build, nullptr, 1, N);
}

}  // namespace qverify
