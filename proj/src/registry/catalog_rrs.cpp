// Bi-basic specializations and the Rogers-Ramanujan-Slater type identities.

#include "catalog_support.hpp"

namespace qverify::catalog_detail {

namespace {

/// Fixed identity with no free symbols.
IdentityRecord fixed(std::string id, std::string anchor) {
  return {.id = std::move(id), .group = "rrs", .anchor = std::move(anchor), .sampler = [](Draw&) {}};
}

/// (a, b; q^16)_inf (q^16; q^16)_inf
template <class B>
typename B::value theta16(const B& be, long long ca, long long ea, long long cb, long long eb) {
  return pinf(be, ca, ea, 16) * pinf(be, cb, eb, 16) * pinf(be, 1, 16, 16);
}

Rational half(Draw& d, int lo, int hi) { return Rational(d.uniform(lo, hi), 2); }

}  // namespace

void add_rrs_records(std::vector<IdentityRecord>& out) {
  {
    auto schema = xyz_schema();
    schema.push_back(mono("p", "exponent in {1/2, 1, 3/2}"));
    schema.push_back(mono("B", "exponent in [-1, 1], half-integer"));
    add(out,
        {.id = "bibasic-ab",
         .group = "rrs",
         .anchor = "bi-basic identity in p and B with a (-Bp; p^2)_n denominator",
         .schema = schema,
         .denominator = 2,
         .sampler =
             [](Draw& d) {
               draw_xyz(d);
               if (d.index == 0) {
                 // p = q^{a/2}, B = q^{b/2} with a > 0 and b integers
                 d.mono("p", 1, half(d, 1, 3));
                 d.mono("B", 1, half(d, -2, 2));
               } else {
                 d.mono("p", d.coefficient(), half(d, 1, 3));
                 d.mono("B", d.coefficient(), half(d, -2, 2));
               }
             }},
        [](const auto& be) {
          const auto x = be.param("x"), y = be.param("y"), z = be.param("z");
          const auto p = be.param("p"), b = be.param("B");
          const auto p2 = p * p;
          HyperTerm left = cor_left_term(be, x, y, z);
          left.geo(b).quad(p2).geo(p).den(-b * p, p2);
          HyperTerm right = cor_right_term(be, x, y, z);
          right.geo(b).quad(p2).geo(be.div(be.one(), p, kDD)).den(-b * p, p2);
          const auto lhs = be.sum(left);
          const auto tail = be.div(p, b, kDD) * be.sum(right, 1);
          return std::pair{lhs, cor_prefactor(be, x, y, z) * (be.one() - tail)};
        });
  }

  {
    auto schema = xyz_schema();
    schema.push_back(mono("p", "exponent in [1, 2]"));
    schema.push_back(mono("B", "exponent in [-1, 1]"));
    add(out,
        {.id = "bibasic-ab2",
         .group = "rrs",
         .anchor = "bi-basic identity in p and B without the Pochhammer denominator",
         .schema = schema,
         .sampler =
             [](Draw& d) {
               draw_xyz(d);
               const Rational cp = d.index == 0 ? Rational(1) : d.coefficient();
               const Rational cb = d.index == 0 ? Rational(1) : d.coefficient();
               d.mono("p", cp, d.uniform(1, 2));
               d.mono("B", cb, d.uniform(-1, 1));
             }},
        [](const auto& be) {
          const auto x = be.param("x"), y = be.param("y"), z = be.param("z");
          const auto p = be.param("p"), b = be.param("B");
          const auto p2 = p * p;
          HyperTerm left = cor_left_term(be, x, y, z);
          left.geo(b).quad(p2).geo(p);
          HyperTerm right = cor_right_term(be, x, y, z);
          right.geo(b).quad(p2).geo(be.div(be.one(), p, kDD));
          right.times([&be, p, b](long n) { return be.one() - b * be.pow(p, 2 * n - 1); });
          const auto lhs = be.sum(left);
          const auto tail = be.div(p, b, kDD) * be.sum(right, 1);
          return std::pair{lhs, cor_prefactor(be, x, y, z) * (be.one() - tail)};
        });
  }

  // 1 / ((q^r, q^{5-r}; q^5)_inf (-q^2; q^2)_inf)
  auto rogers_rhs = [](const auto& be, long long r) {
    return be.div(be.one(), pinf(be, 1, r, 5) * pinf(be, 1, 5 - r, 5) * pinf(be, -1, 2, 2), kDD);
  };

  add(out, fixed("rrs3", "Rogers-type sum with a (1 + q^{3-2n}) correction over (q^4; q^4)_n, modulus 5 product"),
      [rogers_rhs](const auto& be) {
        HyperTerm t(be);
        t.den(be.q(4), be.q(4)).quad(be.q(2)).geo(be.q(7));
        t.times([&be](long n) { return be.one() + be.q(3 - 2 * n); });
        return std::pair{be.sum(t), rogers_rhs(be, 2)};
      });

  add(out, fixed("rrs3n", "companion with a (1 + q^{1-2n}) correction, modulus 5 product"),
      [rogers_rhs](const auto& be) {
        HyperTerm t(be);
        t.den(be.q(4), be.q(4)).quad(be.q(2)).geo(be.q(5));
        t.times([&be](long n) { return be.one() + be.q(1 - 2 * n); });
        return std::pair{be.sum(t), rogers_rhs(be, 1)};
      });

  add(out, fixed("rogers-a", "Rogers: sum q^{n^2+2n}/(q^4; q^4)_n"), [rogers_rhs](const auto& be) {
    HyperTerm t(be);
    t.den(be.q(4), be.q(4)).quad(be.q(2)).geo(be.q(3));
    return std::pair{be.sum(t), rogers_rhs(be, 2)};
  });

  add(out, fixed("rogers-b", "Rogers: sum q^{n^2}/(q^4; q^4)_n"), [rogers_rhs](const auto& be) {
    HyperTerm t(be);
    t.den(be.q(4), be.q(4)).quad(be.q(2)).geo(be.q());
    return std::pair{be.sum(t), rogers_rhs(be, 1)};
  });

  add(out,
      {.id = "rrs3eq1",
       .group = "rrs",
       .anchor = "intermediate transformation with free exponents a, b on the way to the modulus 5 sums",
       .schema = {mono("x", "exponent >= 0, x != 1", true), rational("a", "a in {0, 1/2, 1, 3/2}"),
                  rational("b", "half-integer in [-2, 2]")},
       .denominator = 2,
       .sampler =
           [](Draw& d) {
             d.mono("x", d.coefficient(), d.uniform(0, 2));
             d.rational("a", half(d, 0, 3));
             d.rational("b", half(d, -4, 4));
           }},
      [](const auto& be) {
        const auto x = be.param("x"), q = be.q();
        const Rational a = be.rational("a"), b = be.rational("b");
        HyperTerm left(be);
        left.geo(-x).quad(q).den(x * q, q);
        left.times([&be, a, b](long n) { return be.q(a * n * n + b * n); });
        HyperTerm right(be);
        right.geo(-x).quad(q).den(x, q);
        right.times([&be, a, b](long n) {
          return be.q(a * n * n + (b - 2 * a) * n) * (be.one() - be.q(2 * a * n + b - a));
        });
        const auto lhs = be.sum(left);
        return std::pair{lhs, (be.one() - x) * (be.one() - be.q(a - b) * be.sum(right, 1))};
      });

  add(out,
      {.id = "rrs6",
       .group = "rrs",
       .anchor = "sum over (b, q^3/b)_n q^{n(n+1)/2} evaluated through a q-Bailey-type product",
       .schema = {mono("b", "exponent in [-1, 4]")},
       .sampler = [](Draw& d) { d.mono("b", d.coefficient(), d.uniform(-1, 4)); }},
      [](const auto& be) {
        const auto b = be.param("b"), q = be.q(), q2 = be.q(2);
        HyperTerm t(be);
        t.num(b, q).num(be.div(be.q(3), b, kDD), q).den(q2, q2, 1, 1).den(q, q).quad(q).geo(q);
        const auto rhs = be.div(be.poch_inf(be.div(be.q(4), b, kDD), q2) * be.poch_inf(b * q, q2),
                                be.poch_inf(q, q), kDD);
        return std::pair{be.sum(t), rhs};
      });

  add(out,
      {.id = "andrews-qbailey",
       .group = "rrs",
       .anchor = "Andrews' q-analogue of Bailey's 2F1(1/2) sum",
       .schema = {mono("b", "exponent in [0, 1]"), mono("c", "exponent >= e_b")},
       .sampler =
           [](Draw& d) {
             const int eb = d.uniform(0, 1);
             d.mono("b", d.coefficient(), eb);
             d.mono("c", d.coefficient(), d.uniform(eb, 2));
           }},
      [](const auto& be) {
        const auto b = be.param("b"), c = be.param("c"), q = be.q(), q2 = be.q(2);
        HyperTerm t(be);
        t.num(b, q).num(be.div(q, b, kDD), q).den(c, q, 1, 0, ErrorKind::LowerParameterPole).den(q2, q2);
        t.geo(c).quad(q);
        const auto rhs = be.div(be.poch_inf(be.div(c * q, b, kDD), q2) * be.poch_inf(b * c, q2),
                                be.poch_inf(c, q), kDD);
        return std::pair{be.sum(t), rhs};
      });

  // 1 / (q^r, q^4, q^{8-r}; q^8)_inf
  auto gg_rhs = [](const auto& be, long long r) {
    return be.div(be.one(), pinf(be, 1, r, 8) * pinf(be, 1, 4, 8) * pinf(be, 1, 8 - r, 8), kDD);
  };

  add(out, fixed("rrs6-2", "(1 - q^{2n+1}) weighted sum over (-q^3; q^2)_n, modulus 8 product"),
      [gg_rhs](const auto& be) {
        HyperTerm t(be);
        t.num(be.mono(-1, 3), be.q(2)).den(be.q(2), be.q(2)).quad(be.q(2)).geo(be.q());
        t.times([&be](long n) { return be.one() - be.q(2 * n + 1); });
        return std::pair{be.sum(t), gg_rhs(be, 3)};
      });

  add(out, fixed("rrs6-3", "(1 - q^{2n-1}) weighted companion, modulus 8 product"), [gg_rhs](const auto& be) {
    HyperTerm t(be);
    t.num(be.mono(-1, 3), be.q(2)).den(be.q(2), be.q(2)).quad(be.q(2)).geo(be.q(-1));
    t.times([&be](long n) { return be.one() - be.q(2 * n - 1); });
    return std::pair{be.sum(t), gg_rhs(be, 1)};
  });

  add(out, fixed("gollnitz-gordon-a", "Gollnitz-Gordon: sum q^{n^2+2n} (-q; q^2)_n/(q^2; q^2)_n"),
      [gg_rhs](const auto& be) {
        HyperTerm t(be);
        t.num(be.mono(-1, 1), be.q(2)).den(be.q(2), be.q(2)).quad(be.q(2)).geo(be.q(3));
        return std::pair{be.sum(t), gg_rhs(be, 3)};
      });

  add(out, fixed("gollnitz-gordon-b", "Gollnitz-Gordon: sum q^{n^2} (-q; q^2)_n/(q^2; q^2)_n"),
      [gg_rhs](const auto& be) {
        HyperTerm t(be);
        t.num(be.mono(-1, 1), be.q(2)).den(be.q(2), be.q(2)).quad(be.q(2)).geo(be.q());
        return std::pair{be.sum(t), gg_rhs(be, 1)};
      });

  // sum_{n>=1} (-q; q)_n q^{n(n-1)/2}/(q; q)_{n-1}
  auto gs_tail = [](const auto& be) {
    HyperTerm t(be);
    t.num(-be.q(), be.q()).den(be.q(), be.q(), 1, -1).quad(be.q());
    return be.sum(t, 1);
  };

  add(out, fixed("rrs6-4", "1 plus a (-q)_n/(q)_{n-1} sum, modulus 16 product with (-1; q)_inf"),
      [gs_tail](const auto& be) {
        const auto rhs = be.div(pinf(be, -1, 0, 1) * theta16(be, -1, 6, -1, 10), pinf(be, 1, 4, 4), kDD);
        return std::pair{be.one() + gs_tail(be), rhs};
      });

  add(out, fixed("rrs6-5", "-1 plus the same sum, the other modulus 16 product"), [gs_tail](const auto& be) {
    const auto rhs =
        be.div(be.q() * pinf(be, -1, 0, 1) * theta16(be, -1, 2, -1, 14), pinf(be, 1, 4, 4), kDD);
    return std::pair{gs_tail(be) - be.one(), rhs};
  });

  add(out, fixed("gessel-stanton-a", "Gessel-Stanton: 1 + sum (-q)_{n-1} q^{n(n+1)/2}/(q)_n"), [](const auto& be) {
    HyperTerm t(be);
    t.num(-be.q(), be.q(), 1, -1).den(be.q(), be.q()).quad(be.q()).geo(be.q());
    const auto rhs = be.div(pinf(be, -1, 1, 1) * theta16(be, -1, 6, -1, 10), pinf(be, 1, 4, 4), kDD);
    return std::pair{be.one() + be.sum(t, 1), rhs};
  });

  add(out, fixed("gessel-stanton-b", "Gessel-Stanton: sum (-q)_n q^{n(n+3)/2}/(q)_{n+1}"), [](const auto& be) {
    HyperTerm t(be);
    t.num(-be.q(), be.q()).den(be.q(), be.q(), 1, 1).quad(be.q()).geo(be.q(2));
    const auto rhs = be.div(pinf(be, -1, 1, 1) * theta16(be, -1, 2, -1, 14), pinf(be, 1, 4, 4), kDD);
    return std::pair{be.sum(t), rhs};
  });

  add(out, fixed("s69", "sum (-q^2; q^2)_{n+1} q^{n^2+2n}/(q)_{2n+3} via Slater's 69th identity"),
      [](const auto& be) {
        HyperTerm t(be);
        t.num(be.mono(-1, 2), be.q(2), 1, 1).den(be.q(), be.q(), 2, 3).quad(be.q(2)).geo(be.q(3));
        const auto prod = be.div(theta16(be, -1, 2, -1, 14) * pinf(be, -1, 1, 2), pinf(be, 1, 2, 2), kDD);
        const auto rhs = be.constant(2) * prod - be.div(be.one(), be.one() - be.q(), kDD);
        return std::pair{be.sum(t), rhs};
      });

  add(out, fixed("s121", "sum (-q^2; q^2)_n q^{n^2}/(q)_{2n+1} via Slater's 121st identity"), [](const auto& be) {
    HyperTerm t(be);
    t.num(be.mono(-1, 2), be.q(2)).den(be.q(), be.q(), 2, 1).quad(be.q(2)).geo(be.q());
    const auto prod =
        be.div(theta16(be, 1, 2, 1, 14) * pinf(be, 1, 12, 32) * pinf(be, 1, 20, 32), pinf(be, 1, 1, 1), kDD);
    return std::pair{be.sum(t), be.constant(2) * prod - be.one()};
  });

  add(out, fixed("slater-69", "Slater 69: sum (-q^2; q^2)_n q^{n^2+2n}/(q)_{2n+2}"), [](const auto& be) {
    HyperTerm t(be);
    t.num(be.mono(-1, 2), be.q(2)).den(be.q(), be.q(), 2, 2).quad(be.q(2)).geo(be.q(3));
    const auto rhs = be.div(theta16(be, -1, 2, -1, 14) * pinf(be, -1, 1, 2), pinf(be, 1, 2, 2), kDD);
    return std::pair{be.sum(t), rhs};
  });

  add(out, fixed("slater-121", "Slater 121: 1 + sum (-q^2; q^2)_{n-1} q^{n^2}/(q)_{2n}"), [](const auto& be) {
    HyperTerm t(be);
    t.num(be.mono(-1, 2), be.q(2), 1, -1).den(be.q(), be.q(), 2, 0).quad(be.q(2)).geo(be.q());
    const auto rhs =
        be.div(theta16(be, 1, 2, 1, 14) * pinf(be, 1, 12, 32) * pinf(be, 1, 20, 32), pinf(be, 1, 1, 1), kDD);
    return std::pair{be.one() + be.sum(t, 1), rhs};
  });

  add(out,
      {.id = "bb-z0",
       .group = "rrs",
       .anchor = "bi-basic case with z -> 0 and q replaced by q^2",
       .schema = {mono("x", "exponent >= 1", true), mono("y", "exponent >= 0", true),
                  rational("a", "a in {1/2, 1, 3/2, 2}"), rational("b", "half-integer in [-2, 2]")},
       .denominator = 2,
       .sampler =
           [](Draw& d) {
             d.mono("x", d.coefficient(), d.uniform(1, 2));
             d.mono("y", d.coefficient(), d.uniform(0, 2));
             d.rational("a", half(d, 1, 4));
             d.rational("b", half(d, -4, 4));
           }},
      [](const auto& be) {
        const auto x = be.param("x"), y = be.param("y"), q2 = be.q(2);
        const Rational a = be.rational("a"), b = be.rational("b");
        const auto shifted = -be.q(a + b), step = be.q(2 * a);
        HyperTerm left(be);
        left.num(y, q2).den(q2 * x * y, q2).den(shifted, step).geo(x);
        left.times([&be, a, b](long n) { return be.q(a * n * n + b * n); });
        HyperTerm right(be);
        right.num(y, q2).den(x * y, q2).den(shifted, step).geo(x);
        right.times([&be, a, b](long n) { return be.q(a * n * n + (b - 2 * a) * n); });
        const auto lhs = be.sum(left);
        const auto pref = be.div(be.one() - x * y, be.one() - x, kDD);
        return std::pair{lhs, pref * (be.one() - be.q(a - b) * be.sum(right, 1))};
      });
}

}  // namespace qverify::catalog_detail
