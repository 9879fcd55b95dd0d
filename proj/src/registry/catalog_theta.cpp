// Rogers false theta functions and their Lost Notebook representations.

#include "catalog_support.hpp"

namespace qverify::catalog_detail {

namespace {

IdentityRecord fixed(std::string id, std::string anchor) {
  return {.id = std::move(id), .group = "false-theta", .anchor = std::move(anchor), .sampler = [](Draw&) {}};
}

}  // namespace

void add_theta_records(std::vector<IdentityRecord>& out) {
  add(out, fixed("r1", "Lost Notebook: (q; q^2)_n (-1)^n q^{n^2+n}/(-q)_{2n+1} sums to the first false theta"),
      [](const auto& be) {
        HyperTerm t(be);
        t.num(be.q(), be.q(2)).den(-be.q(), be.q(), 2, 1).quad(be.q(2)).geo(-be.q(2));
        return std::pair{be.sum(t), false_theta_one(be)};
      });

  add(out, fixed("r2a", "Lost Notebook: q^{2n^2+n}/(-q)_{2n+1} sums to the second false theta"),
      [](const auto& be) {
        HyperTerm t(be);
        t.den(-be.q(), be.q(), 2, 1).quad(be.q(4)).geo(be.q(3));
        return std::pair{be.sum(t), false_theta_two(be)};
      });

  add(out, fixed("r2b", "Lost Notebook: (-1)^n q^{n(n+1)/2}/(-q)_n sums to the second false theta"),
      [](const auto& be) {
        HyperTerm t(be);
        t.den(-be.q(), be.q()).quad(be.q()).geo(-be.q());
        return std::pair{be.sum(t), false_theta_two(be)};
      });

  add(out, fixed("ft1", "1 minus a (q; q^2)_n sum over (-1; q)_{2n+1} gives the first false theta"),
      [](const auto& be) {
        HyperTerm t(be);
        t.num(be.q(), be.q(2)).den(-be.one(), be.q(), 2, 1).quad(be.q(2)).geo(-be.one());
        return std::pair{be.one() - be.sum(t), false_theta_one(be)};
      });

  add(out, fixed("ft2", "2/(1+q) minus a sum with (1 + q^{2n+3}) in the denominator gives the second false theta"),
      [](const auto& be) {
        HyperTerm t(be);
        t.den(-be.q(), be.q(), 2, 1).quad(be.q(4)).geo(be.q(5));
        t.times([&be](long n) {
          return be.div(be.one(), be.one() + be.q(2 * n + 3), ErrorKind::DegenerateDenominator);
        });
        const auto lead = be.div(be.constant(2), be.one() + be.q(), kDD);
        return std::pair{lead - be.sum(t), false_theta_two(be)};
      });

  add(out, fixed("ft3", "1/2 plus (-1)^n q^{n(n+1)/2}/(-1; q)_{n+2} gives the second false theta"),
      [](const auto& be) {
        HyperTerm t(be);
        t.den(-be.one(), be.q(), 1, 2).quad(be.q()).geo(-be.q());
        return std::pair{be.constant(Rational(1, 2)) + be.sum(t), false_theta_two(be)};
      });

  add(out,
      {.id = "bb-yinf",
       .group = "false-theta",
       .anchor = "bi-basic case with x replaced by x/y and y -> infinity",
       .schema = {mono("x", "exponent >= 1", true), rational("a", "a in {1/2, 1, 3/2, 2}"),
                  rational("b", "half-integer in [-2, 2]")},
       .denominator = 2,
       .sampler =
           [](Draw& d) {
             d.mono("x", d.coefficient(), d.uniform(1, 2));
             d.rational("a", Rational(d.uniform(1, 4), 2));
             d.rational("b", Rational(d.uniform(-4, 4), 2));
           }},
      [](const auto& be) {
        const auto x = be.param("x"), q2 = be.q(2);
        const Rational a = be.rational("a"), b = be.rational("b");
        const auto shifted = -be.q(a + b), step = be.q(2 * a);
        HyperTerm left(be);
        left.den(q2 * x, q2).den(shifted, step).geo(-x);
        left.times([&be, a, b](long n) { return be.q((a + 1) * n * n + (b - 1) * n); });
        HyperTerm right(be);
        right.den(x, q2).den(shifted, step).geo(-x);
        right.times([&be, a, b](long n) { return be.q((a + 1) * n * n + (b - 2 * a - 1) * n); });
        const auto lhs = be.sum(left);
        return std::pair{lhs, (be.one() - x) * (be.one() - be.q(a - b) * be.sum(right, 1))};
      });
}

}  // namespace qverify::catalog_detail
