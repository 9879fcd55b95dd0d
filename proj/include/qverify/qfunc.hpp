#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qverify/laurent_series.hpp"
#include "qverify/numeric.hpp"

namespace qverify {

/// n-th summand of an exact series sum. Terms are requested in increasing n.
struct TermGenerator {
  std::function<LaurentSeries(long)> term;
  /// Optional nondecreasing lower bound on the valuation of term(n).
  std::function<Exponent(long)> valuation_bound;
  long first = 0;
  /// Inclusive upper index for finite sums.
  std::optional<long> last;
};

struct NumericTermGenerator {
  std::function<Decimal(long)> term;
  int precision = kDecimalDigits;
  long first = 0;
  std::optional<long> last;
};

struct SumPolicy {
  int quiet_run = 8;       // consecutive negligible terms that end a sum
  int stall_window = 200;  // terms allowed without a new valuation record
  long max_terms = 100000;
};

/// Adds terms until `quiet_run` consecutive ones vanish through `threshold`.
/// The result keeps the smallest order among the terms it absorbed.
LaurentSeries sum_series(const TermGenerator& g, Exponent threshold, const SumPolicy& policy = {});

/// Sum exact to order N. Throws ValuationStall or OrderInsufficient.
LaurentSeries sum_exact(const TermGenerator& g, Exponent N);

/// Partial sums until 20 consecutive terms are below tol/100.
Decimal sum_numeric(const NumericTermGenerator& g, const Decimal& tol);

/// (a; base)_n. Negative n gives 1/(a*base^n; base)_{-n}.
LaurentSeries poch_finite(const LaurentSeries& a, const QMonomial& base, long long n);

/// (a; base)_inf to order N. Needs base.exp >= 1 and a.exp >= 0.
LaurentSeries poch_infinite(const QMonomial& a, const QMonomial& base, Exponent N);

/// (1 - k q^{2n}) / (1 - k) to order N.
LaurentSeries vwp_factor(const LaurentSeries& k, long long n, Exponent N);

/// r_phi_s(upper; lower; base, z) to order N.
LaurentSeries phi_rs(const std::vector<LaurentSeries>& upper,
                     const std::vector<LaurentSeries>& lower, const QMonomial& base,
                     const LaurentSeries& z, Exponent N);

}  // namespace qverify
