#pragma once

// WP-Bailey pairs relative to (a, k):
//   beta_n = sum_{j<=n} (k/a)_{n-j} (k)_{n+j} / ((q)_{n-j} (aq)_{n+j}) alpha_j
// The templates below take a backend first and work for exact series and
// numeric evaluation alike; the LaurentSeries overloads at the end run them
// through the exact backend.

#include <functional>
#include <memory>
#include <utility>

#include "qverify/backend.hpp"

namespace qverify {

// ---------------------------------------------------------------- generic

/// Running partial sums of a sequence, cheap when queried for increasing n.
template <class B, class F>
class PartialSums {
 public:
  using V = typename B::value;
  PartialSums(const B& be, F f) : be_(&be), f_(std::move(f)), acc_(be.zero()) {}

  V operator()(long n) {
    if (n < last_) {
      last_ = -1;
      acc_ = be_->zero();
    }
    while (last_ < n) acc_ = acc_ + V(f_(++last_));
    return acc_;
  }

 private:
  const B* be_;
  F f_;
  long last_ = -1;
  V acc_;
};

/// (1 - k q^{2n}) / (1 - k); throws DegenerateVWP when k = 1.
template <class B>
typename B::value vwp(const B& be, const typename B::value& k, long n) {
  return be.div(be.one() - k * be.q(2 * n), be.one() - k, ErrorKind::DegenerateVWP);
}

template <class B, class Alpha>
typename B::value wp_beta(const B& be, Alpha&& alpha, const typename B::value& a,
                          const typename B::value& k, long n) {
  using V = typename B::value;
  const V q = be.q();
  const V ka = be.div(k, a, ErrorKind::DegenerateDenominator);
  V total = be.zero();
  for (long j = 0; j <= n; ++j) {
    const V aj = alpha(j);
    if (be.is_zero(aj)) continue;
    const V num = be.poch(ka, q, n - j) * be.poch(k, q, n + j);
    const V den = be.poch(q, q, n - j) * be.poch(a * q, q, n + j);
    total = total + be.div(num, den, ErrorKind::DegenerateDenominator) * aj;
  }
  return total;
}

/// New alpha of the chain step taking a pair relative to (a, c) to one
/// relative to (a, k), where c = k rho1 rho2 / (a q).
template <class B, class Alpha>
typename B::value chain_alpha(const B& be, Alpha&& alpha, const typename B::value& a,
                              const typename B::value& rho1,
                              const typename B::value& rho2, long n) {
  using V = typename B::value;
  const V an = alpha(n);
  if (be.is_zero(an)) return be.zero();
  const V q = be.q();
  const V aq = a * q;
  const V w = be.div(aq, rho1 * rho2, ErrorKind::DegenerateDenominator);
  const V num = be.poch(rho1, q, n) * be.poch(rho2, q, n);
  const V den = be.poch(be.div(aq, rho1, ErrorKind::DegenerateDenominator), q, n) *
                be.poch(be.div(aq, rho2, ErrorKind::DegenerateDenominator), q, n);
  return be.div(num, den, ErrorKind::DegenerateDenominator) * be.pow(w, n) * an;
}

/// New beta of the same chain step, in terms of the old beta.
template <class B, class Beta>
typename B::value chain_beta(const B& be, Beta&& beta, const typename B::value& a,
                             const typename B::value& k, const typename B::value& rho1,
                             const typename B::value& rho2, long n) {
  using V = typename B::value;
  constexpr auto dd = ErrorKind::DegenerateDenominator;
  const V q = be.q();
  const V aq = a * q;
  const V c = be.div(k * rho1 * rho2, aq, dd);
  const V w = be.div(aq, rho1 * rho2, dd);  // k / c
  const V kr1 = be.div(k * rho1, a, dd);
  const V kr2 = be.div(k * rho2, a, dd);
  const V pre = be.div(be.poch(kr1, q, n) * be.poch(kr2, q, n),
                       be.poch(be.div(aq, rho1, dd), q, n) * be.poch(be.div(aq, rho2, dd), q, n), dd);
  V total = be.zero();
  for (long j = 0; j <= n; ++j) {
    const V bj = beta(j);
    if (be.is_zero(bj)) continue;
    const V num = vwp(be, c, j) * be.poch(rho1, q, j) * be.poch(rho2, q, j) * be.poch(w, q, n - j) *
                  be.poch(k, q, n + j) * be.pow(w, j);
    const V den = be.poch(kr1, q, j) * be.poch(kr2, q, j) * be.poch(q, q, n - j) *
                  be.poch(q * c, q, n + j);
    total = total + be.div(num, den, dd) * bj;
  }
  return pre * total;
}

/// Both sides of the WP-Bailey transformation with parameters rho1, rho2.
/// The beta side is summed as sum_j alpha_j sum_{n>=j} (...), so beta_n is
/// never formed; alpha must be eventually zero or decay in valuation.
template <class B, class Alpha>
std::pair<typename B::value, typename B::value> wp_transform_sides(
    const B& be, Alpha&& alpha, const typename B::value& a, const typename B::value& k,
    const typename B::value& rho1, const typename B::value& rho2) {
  using V = typename B::value;
  constexpr auto dd = ErrorKind::DegenerateDenominator;
  const V q = be.q();
  const V aq = a * q;
  const V kq = k * q;
  const V w = be.div(aq, rho1 * rho2, dd);
  const V ka = be.div(k, a, dd);
  const V kq1 = be.div(kq, rho1, dd);
  const V kq2 = be.div(kq, rho2, dd);
  const V aq1 = be.div(aq, rho1, dd);
  const V aq2 = be.div(aq, rho2, dd);

  auto inner = [&](long j) -> V {
    const V aj = alpha(j);
    if (be.is_zero(aj)) return be.zero();
    HyperTerm<B> t(be, aj * be.pow(w, j));
    t.num(rho1, q, 1, j).num(rho2, q, 1, j).num(ka, q).num(k, q, 1, 2 * j);
    t.den(kq1, q, 1, j).den(kq2, q, 1, j).den(q, q).den(aq, q, 1, 2 * j);
    t.geo(w);
    t.times([&be, k, j](long m) { return vwp(be, k, m + j); });
    return be.sum(t);
  };
  const V lhs = be.sum(inner);

  HyperTerm<B> r(be);
  r.num(rho1, q).num(rho2, q).den(aq1, q).den(aq2, q).geo(w);
  r.times([&alpha](long n) { return V(alpha(n)); });
  const V series = be.sum(r);
  const V prod_num = be.poch_inf(kq, q) * be.poch_inf(be.div(kq, rho1 * rho2, dd), q) *
                     be.poch_inf(aq1, q) * be.poch_inf(aq2, q);
  const V prod_den = be.poch_inf(kq1, q) * be.poch_inf(kq2, q) * be.poch_inf(w, q) * be.poch_inf(aq, q);
  return {lhs, be.div(prod_num, prod_den, dd) * series};
}

/// (1 - xy)(1 - xz) / ((1 - x)(1 - xyz))
template <class B>
typename B::value cor_prefactor(const B& be, const typename B::value& x, const typename B::value& y,
                                const typename B::value& z) {
  const auto one = be.one();
  return be.div((one - x * y) * (one - x * z), (one - x) * (one - x * y * z),
                ErrorKind::DegenerateDenominator);
}

/// vwp(xyz, n) (y, z)_n / (qxy, qxz)_n x^n; multiply by partial sums of alpha.
template <class B>
HyperTerm<B> cor_left_term(const B& be, const typename B::value& x, const typename B::value& y,
                           const typename B::value& z) {
  using V = typename B::value;
  const V q = be.q();
  const V xyz = x * y * z;
  const V scale = be.div(be.one(), be.one() - xyz, ErrorKind::DegenerateVWP);
  HyperTerm<B> t(be, scale);
  t.num(y, q).num(z, q).den(q * x * y, q).den(q * x * z, q).geo(x);
  t.times([&be, xyz](long n) { return be.one() - xyz * be.q(2 * n); });
  return t;
}

/// (y, z)_n / (xy, xz)_n x^n; multiply by alpha_n.
template <class B>
HyperTerm<B> cor_right_term(const B& be, const typename B::value& x, const typename B::value& y,
                            const typename B::value& z) {
  const auto q = be.q();
  HyperTerm<B> t(be);
  t.num(y, q).num(z, q).den(x * y, q).den(x * z, q).geo(x);
  return t;
}

/// Sides of the central summation: the left side weights the partial sums of
/// alpha, the right side alpha itself.
template <class B, class Alpha>
std::pair<typename B::value, typename B::value> cor_sides(const B& be, Alpha alpha,
                                                          const typename B::value& x,
                                                          const typename B::value& y,
                                                          const typename B::value& z) {
  using V = typename B::value;
  HyperTerm<B> left = cor_left_term(be, x, y, z);
  left.times(PartialSums<B, Alpha>(be, alpha));
  const V lhs = be.sum(left);
  HyperTerm<B> right = cor_right_term(be, x, y, z);
  right.times([alpha](long n) mutable { return V(alpha(n)); });
  return {lhs, cor_prefactor(be, x, y, z) * be.sum(right)};
}

/// Parameters of the four-base finite telescoping identity.
template <class V>
struct TelescopeBases {
  V a, b, c;
  V p, P, Q, R;
};

template <class B>
typename B::value sv_denominator(const B& be, const TelescopeBases<typename B::value>& s, long n) {
  using V = typename B::value;
  constexpr auto dd = ErrorKind::DegenerateDenominator;
  const V b1 = be.div(s.P * s.Q * s.R, s.p, dd);
  const V b2 = be.div(s.p * s.P * s.Q, s.R, dd);
  const V b3 = be.div(s.p * s.Q * s.R, s.P, dd);
  const V b4 = be.div(s.p * s.P * s.R, s.Q, dd);
  return be.poch(b1, b1, n) * be.poch(be.div(s.a * b2, s.c, dd), b2, n) *
         be.poch(be.div(s.a * b3, s.b, dd), b3, n) * be.poch(s.b * s.c * b4, b4, n);
}

/// Closed form of the partial sums of telescope_term.
template <class B>
typename B::value sv_product(const B& be, const TelescopeBases<typename B::value>& s, long n) {
  using V = typename B::value;
  constexpr auto dd = ErrorKind::DegenerateDenominator;
  const V p2 = s.p * s.p, P2 = s.P * s.P, Q2 = s.Q * s.Q, R2 = s.R * s.R;
  const V num = be.poch(s.a * p2, p2, n) * be.poch(s.b * P2, P2, n) * be.poch(s.c * R2, R2, n) *
                be.poch(be.div(s.a * Q2, s.b * s.c, dd), Q2, n);
  return be.div(num, sv_denominator(be, s, n), dd);
}

template <class B>
typename B::value sv_term(const B& be, const TelescopeBases<typename B::value>& s, long n) {
  using V = typename B::value;
  constexpr auto dd = ErrorKind::DegenerateDenominator;
  const V one = be.one();
  const V abc = be.div(s.a, s.b * s.c, dd);
  const V r1 = s.p * s.P * s.Q * s.R;
  const V r2 = be.div(s.p * s.P, s.Q * s.R, dd);
  const V r3 = be.div(s.P * s.Q, s.p * s.R, dd);
  const V r4 = be.div(s.p * s.Q, s.P * s.R, dd);
  const V lift = (one - s.a * be.pow(r1, n)) * (one - s.b * be.pow(r2, n)) *
                 (one - be.div(be.pow(r3, n), s.c, dd)) * (one - abc * be.pow(r4, n));
  const V drop = (one - s.a) * (one - s.b) * (one - be.div(one, s.c, dd)) * (one - abc);
  const V p2 = s.p * s.p, P2 = s.P * s.P, Q2 = s.Q * s.Q, R2 = s.R * s.R;
  const V num = be.poch(s.a, p2, n) * be.poch(s.b, P2, n) * be.poch(s.c, R2, n) * be.poch(abc, Q2, n);
  return be.div(lift, drop, dd) * be.div(num, sv_denominator(be, s, n), dd) * be.pow(R2, n);
}

// ------------------------------------------------------- series interface

using SeriesSequence = std::function<LaurentSeries(long)>;

/// alpha together with the (a, k) it is paired relative to.
struct WPPair {
  SeriesSequence alpha;
  LaurentSeries a;
  LaurentSeries k;
};

/// alpha_0 = 1, alpha_n = 0 otherwise.
WPPair unit_pair(LaurentSeries a, LaurentSeries k);

struct ChainParams {
  LaurentSeries rho1;
  LaurentSeries rho2;
  LaurentSeries k;

  /// k rho1 rho2 / (a q) to the given order.
  LaurentSeries c(const LaurentSeries& a, Exponent order) const;
};

struct ChainStep {
  WPPair pair;  // relative to (a, params.k)
  SeriesSequence beta;
};

struct AlphaSequence {
  enum class Origin { Explicit, Telescoped };
  SeriesSequence alpha;
  Origin origin = Origin::Explicit;
};

struct SeriesSides {
  LaurentSeries lhs;
  LaurentSeries rhs;
};

LaurentSeries wp_beta(const WPPair& pair, long n, Exponent order);

/// The input pair must be relative to (a, params.c(a)).
ChainStep wp_chain_step(const WPPair& pair, const ChainParams& params, Exponent order);

SeriesSides thm_transform_sides(const WPPair& pair, const LaurentSeries& rho1,
                                const LaurentSeries& rho2, Exponent order);

SeriesSides cor_sides(const AlphaSequence& alpha, const LaurentSeries& x, const LaurentSeries& y,
                      const LaurentSeries& z, Exponent order);

/// alpha_0 = t_0, alpha_n = t_n - t_{n-1}.
AlphaSequence telescope_alpha(SeriesSequence t);

/// (sum_{j<=n} telescope_term_j, closed product) to the given order.
SeriesSides subbarao_verma_sides(long n, const TelescopeBases<LaurentSeries>& s, Exponent order = 40);

}  // namespace qverify
