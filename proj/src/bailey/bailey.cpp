#include "qverify/bailey.hpp"

namespace qverify {

namespace {

auto wrapped(const ExactBackend& be, const SeriesSequence& f) {
  return [&be, &f](long n) { return be.wrap(f(n)); };
}

}  // namespace

WPPair unit_pair(LaurentSeries a, LaurentSeries k) {
  return {[](long n) { return n == 0 ? LaurentSeries::one() : LaurentSeries(); }, std::move(a),
          std::move(k)};
}

LaurentSeries ChainParams::c(const LaurentSeries& a, Exponent order) const {
  const auto ma = a.as_monomial(), mk = k.as_monomial();
  const auto m1 = rho1.as_monomial(), m2 = rho2.as_monomial();
  if (ma && mk && m1 && m2) {
    if (ma->is_zero()) throw QError(ErrorKind::DegenerateDenominator, "a = 0");
    return (*mk * *m1 * *m2 / (*ma * QMonomial::q())).to_series();
  }
  return evaluate_exact_value(
      [&](const ExactBackend& be) {
        return be.div(be.wrap(k) * be.wrap(rho1) * be.wrap(rho2), be.wrap(a) * be.q(),
                      ErrorKind::DegenerateDenominator);
      },
      nullptr, 1, order);
}

LaurentSeries wp_beta(const WPPair& pair, long n, Exponent order) {
  return evaluate_exact_value(
      [&](const ExactBackend& be) {
        return wp_beta(be, wrapped(be, pair.alpha), be.wrap(pair.a), be.wrap(pair.k), n);
      },
      nullptr, 1, order);
}

ChainStep wp_chain_step(const WPPair& pair, const ChainParams& params, Exponent order) {
  const LaurentSeries c = params.c(pair.a, order);
  if (c.truncated(order) != pair.k.truncated(order)) {
    throw QError(ErrorKind::BadParameter, "pair is not relative to k rho1 rho2 / (a q)");
  }
  ChainStep out;
  out.pair.a = pair.a;
  out.pair.k = params.k;
  out.pair.alpha = [pair, params, order](long n) {
    return evaluate_exact_value(
        [&](const ExactBackend& be) {
          return chain_alpha(be, wrapped(be, pair.alpha), be.wrap(pair.a),
                             be.wrap(params.rho1), be.wrap(params.rho2), n);
        },
        nullptr, 1, order);
  };
  out.beta = [pair, params, order](long n) {
    return evaluate_exact_value(
        [&](const ExactBackend& be) {
          const auto a = be.wrap(pair.a);
          const auto c = be.wrap(pair.k);
          auto old_beta = [&](long j) { return wp_beta(be, wrapped(be, pair.alpha), a, c, j); };
          return chain_beta(be, old_beta, a, be.wrap(params.k), be.wrap(params.rho1),
                            be.wrap(params.rho2), n);
        },
        nullptr, 1, order);
  };
  return out;
}

SeriesSides thm_transform_sides(const WPPair& pair, const LaurentSeries& rho1,
                                const LaurentSeries& rho2, Exponent order) {
  auto [l, r] = evaluate_exact(
      [&](const ExactBackend& be) {
        return wp_transform_sides(be, wrapped(be, pair.alpha), be.wrap(pair.a), be.wrap(pair.k),
                                  be.wrap(rho1), be.wrap(rho2));
      },
      nullptr, 1, order);
  return {std::move(l), std::move(r)};
}

SeriesSides cor_sides(const AlphaSequence& alpha, const LaurentSeries& x, const LaurentSeries& y,
                      const LaurentSeries& z, Exponent order) {
  auto [l, r] = evaluate_exact(
      [&](const ExactBackend& be) {
        return cor_sides(be, wrapped(be, alpha.alpha), be.wrap(x), be.wrap(y), be.wrap(z));
      },
      nullptr, 1, order);
  return {std::move(l), std::move(r)};
}

AlphaSequence telescope_alpha(SeriesSequence t) {
  AlphaSequence out;
  out.origin = AlphaSequence::Origin::Telescoped;
  out.alpha = [t = std::move(t)](long n) { return n == 0 ? t(0) : t(n) - t(n - 1); };
  return out;
}

SeriesSides subbarao_verma_sides(long n, const TelescopeBases<LaurentSeries>& s, Exponent order) {
  auto [l, r] = evaluate_exact(
      [&](const ExactBackend& be) {
        const TelescopeBases<ExactValue> v{be.wrap(s.a), be.wrap(s.b), be.wrap(s.c), be.wrap(s.p),
                                           be.wrap(s.P), be.wrap(s.Q), be.wrap(s.R)};
        ExactValue sum = be.zero();
        for (long j = 0; j <= n; ++j) sum = sum + sv_term(be, v, j);
        return std::pair{sum, sv_product(be, v, n)};
      },
      nullptr, 1, order);
  return {std::move(l), std::move(r)};
}

}  // namespace qverify
