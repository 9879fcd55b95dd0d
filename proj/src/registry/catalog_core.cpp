// Summation and transformation identities built on the WP-Bailey machinery.

#include <array>

#include "catalog_support.hpp"
#include "qverify/pte.hpp"

namespace qverify::catalog_detail {

namespace {

template <class B>
TelescopeBases<typename B::value> telescope_bases(const B& be) {
  return {be.param("a"), be.param("b"), be.param("c"), be.param("p"),
          be.param("P"), be.param("Q"), be.param("R")};
}

/// Ideal size-m solutions with 0 in A and 1 in B (before rescaling).
const std::array<std::pair<std::vector<int>, std::vector<int>>, 3> kSmallIdeal = {{
    {{0, 3}, {1, 2}},
    {{0, 4, 5}, {1, 2, 6}},
    {{0, 4, 7, 11}, {1, 2, 9, 10}},
}};

/// s -> scale (s - b_1) + 1 applied to a small ideal solution, then the
/// image of b_1 (which is 1) dropped from B.
FamilyPair rescaled_ideal(long long m, const Rational& scale) {
  if (m < 2 || m > 4) throw QError(ErrorKind::BadParameter, "size must be 2, 3 or 4");
  const auto& [a0, b0] = kSmallIdeal[m - 2];
  std::vector<Rational> a, b;
  for (int s : a0) a.push_back(scale * (s - b0.front()) + 1);
  for (std::size_t i = 1; i < b0.size(); ++i) b.push_back(scale * (b0[i] - b0.front()) + 1);
  FamilyPair out{a, b};
  if (!check_6abmeq(out.a, out.b)) throw QError(ErrorKind::PteConditionFailed, "rescaled set not ideal");
  for (const auto& x : out.b.elements()) {
    if (x.is_zero()) throw QError(ErrorKind::PteConditionFailed, "zero lower parameter");
  }
  return out;
}

template <class B>
auto pte_central_sides(const B& be, const FamilyPair& f) {
  const auto q = be.q();
  return central_sides(
      be,
      [&](HyperTerm<B>& t) {
        for (const auto& x : f.a.elements()) t.num(be.constant(x) * q, q);
        for (const auto& x : f.b.elements()) t.den(be.constant(x) * q, q);
        t.den(q, q);
      },
      [&](HyperTerm<B>& t) {
        for (const auto& x : f.a.elements()) t.num(be.constant(x), q);
        for (const auto& x : f.b.elements()) t.den(be.constant(x) * q, q);
        t.den(q, q).geo(be.q(static_cast<long>(f.a.size())));
      });
}

void draw_wp(Draw& d, bool with_k) {
  const int ea = d.uniform(1, 3);
  const int ek = with_k ? d.uniform(0, 3) : ea;
  const int room = std::min(ea, ek + 1);
  const int e1 = d.uniform(0, room);
  const int e2 = d.uniform(0, room - e1);
  d.mono("a", d.coefficient(), ea);
  if (with_k) d.mono("k", d.coefficient(), ek);
  d.mono("rho1", d.coefficient(), e1);
  d.mono("rho2", d.coefficient(), e2);
}

}  // namespace

void add_core_records(std::vector<IdentityRecord>& out) {
  add(out,
      {.id = "qgauss",
       .group = "core",
       .anchor = "q-Gauss summation of a balanced 2phi1 at argument c/ab",
       .schema = {mono("a", "exponent >= 0"), mono("b", "exponent >= 0"),
                  mono("c", "exponent of c/ab >= 1")},
       .sampler =
           [](Draw& d) {
             const int ea = d.uniform(0, 2), eb = d.uniform(0, 2);
             d.mono("a", d.coefficient(), ea);
             d.mono("b", d.coefficient(), eb);
             d.mono("c", d.coefficient(), ea + eb + d.uniform(1, 3));
           }},
      [](const auto& be) {
        const auto a = be.param("a"), b = be.param("b"), c = be.param("c"), q = be.q();
        const auto arg = be.div(c, a * b, kDD);
        HyperTerm t(be);
        t.num(a, q).num(b, q).den(c, q, 1, 0, ErrorKind::LowerParameterPole).den(q, q).geo(arg);
        const auto rhs = be.div(be.poch_inf(be.div(c, a, kDD), q) * be.poch_inf(be.div(c, b, kDD), q),
                                be.poch_inf(c, q) * be.poch_inf(arg, q), kDD);
        return std::pair{be.sum(t), rhs};
      });

  add(out,
      {.id = "qbinom",
       .group = "core",
       .anchor = "q-binomial theorem: sum of (a)_n z^n/(q)_n as a ratio of infinite products",
       .schema = {mono("a", "exponent >= 0", true), mono("z", "exponent >= 1", true)},
       .sampler =
           [](Draw& d) {
             d.mono("a", d.coefficient(), d.uniform(0, 2));
             d.mono("z", d.coefficient(), d.uniform(1, 2));
           }},
      [](const auto& be) {
        const auto a = be.param("a"), z = be.param("z"), q = be.q();
        HyperTerm t(be);
        t.num(a, q).den(q, q).geo(z);
        return std::pair{be.sum(t), be.div(be.poch_inf(a * z, q), be.poch_inf(z, q), kDD)};
      });

  {
    auto schema = std::vector<ParamSpec>{mono("a", "exponent >= 1"), mono("rho1", "exponent >= 0"),
                                         mono("rho2", "e_rho1 + e_rho2 <= e_a")};
    for (auto& s : alpha_schema(4)) schema.push_back(s);
    add(out,
        {.id = "bailey-transform",
         .group = "core",
         .anchor = "classical Bailey pair relative to a pushed through the two-parameter transformation (k = 0)",
         .schema = schema,
         .sampler =
             [](Draw& d) {
               draw_wp(d, false);
               draw_alpha(d, 4);
             }},
        [](const auto& be) {
          return wp_transform_sides(be, alpha_from_params(be, 4), be.param("a"), be.zero(),
                                    be.param("rho1"), be.param("rho2"));
        });
  }

  {
    auto schema = std::vector<ParamSpec>{mono("a", "exponent >= 1"), mono("k", "exponent >= 0, k != 1"),
                                         mono("rho1", "exponent >= 0"),
                                         mono("rho2", "e_rho1 + e_rho2 <= min(e_a, e_k + 1)")};
    for (auto& s : alpha_schema(3)) schema.push_back(s);
    add(out,
        {.id = "thm-wp-transform",
         .group = "core",
         .anchor = "WP-Bailey pair inserted into the well-poised transformation with free rho1, rho2",
         .schema = schema,
         .sampler =
             [](Draw& d) {
               draw_wp(d, true);
               draw_alpha(d, 3);
             }},
        [](const auto& be) {
          return wp_transform_sides(be, alpha_from_params(be, 3), be.param("a"), be.param("k"),
                                    be.param("rho1"), be.param("rho2"));
        });
  }

  {
    auto schema = xyz_schema();
    for (auto& s : alpha_schema(4)) schema.push_back(s);
    add(out,
        {.id = "cor-central",
         .group = "core",
         .anchor = "central summation: partial sums of any alpha against the very-well-poised weight",
         .schema = schema,
         .sampler =
             [](Draw& d) {
               draw_xyz(d);
               draw_alpha(d, 4);
             }},
        [](const auto& be) {
          return cor_sides(be, alpha_from_params(be, 4), be.param("x"), be.param("y"), be.param("z"));
        });
  }

  add(out,
      {.id = "alt-alpha",
       .group = "core",
       .anchor = "central summation with alternating alpha: only even-index terms survive on the left",
       .schema = xyz_schema(),
       .sampler = draw_xyz},
      [](const auto& be) {
        const auto x = be.param("x"), y = be.param("y"), z = be.param("z"), q = be.q();
        const auto xyz = x * y * z;
        HyperTerm left(be, be.div(be.one(), be.one() - xyz, ErrorKind::DegenerateVWP));
        left.num(y, q, 2).num(z, q, 2).den(q * x * y, q, 2).den(q * x * z, q, 2).geo(x * x);
        left.times([&be, xyz](long n) { return be.one() - xyz * be.q(4 * n); });
        HyperTerm right = cor_right_term(be, x, y, z);
        right.geo(-be.one());
        const auto lhs = be.sum(left);
        return std::pair{lhs, cor_prefactor(be, x, y, z) * be.sum(right)};
      });

  add(out,
      {.id = "alt-sum",
       .group = "core",
       .anchor = "even-index single sum obtained from the alternating case after y, z specialize",
       .schema = {mono("x", "x = c q^e with e = 1 so that (q/x)_inf truncates", true)},
       .sampler = [](Draw& d) { d.mono("x", d.coefficient(), 1); }},
      [](const auto& be) {
        const auto x = be.param("x"), q = be.q();
        HyperTerm t(be);
        t.num(be.div(q, x * x, kDD), q, 2).den(q, q, 2, 1).geo(x * x);
        t.times([&be, x](long n) { return be.one() - be.div(be.q(2 * n + 1), x, kDD); });
        const auto rhs = be.div(be.poch_inf(be.div(q, x, kDD), q),
                                (be.one() + x) * be.poch_inf(x, q), kDD);
        return std::pair{be.sum(t), rhs};
      });

  add(out,
      {.id = "ones-alpha",
       .group = "core",
       .anchor = "central summation with every alpha equal to one",
       .schema = xyz_schema(),
       .sampler = draw_xyz},
      [](const auto& be) {
        return central_sides(
            be, [&](auto& t) { t.times([&be](long n) { return be.constant(Rational(n + 1)); }); },
            [](auto&) {});
      });

  add(out,
      {.id = "ones-sum",
       .group = "core",
       .anchor = "single sum with linear weight n+1 from the all-ones case",
       .schema = {mono("x", "x = c q^e with e = 1 so that (q/x)_inf truncates", true)},
       .sampler = [](Draw& d) { d.mono("x", d.coefficient(), 1); }},
      [](const auto& be) {
        const auto x = be.param("x"), q = be.q();
        HyperTerm t(be);
        t.num(be.div(q, x * x, kDD), q).den(q, q, 1, 1).geo(x);
        t.times([&be, x](long n) {
          return (be.one() + be.div(be.q(n + 1), x, kDD)) * be.constant(Rational(n + 1));
        });
        const auto rhs = be.div(be.poch_inf(be.div(q, x, kDD), q),
                                (be.one() - x) * be.poch_inf(x, q), kDD);
        return std::pair{be.sum(t), rhs};
      });

  add(out,
      {.id = "u-power",
       .group = "core",
       .anchor = "geometric alpha u^n, giving a q-binomial-type product in u",
       .schema = {mono("x", "exponent >= 1", true), mono("u", "e_u >= e_x - 1", true)},
       .sampler =
           [](Draw& d) {
             const int ex = d.uniform(1, 2);
             d.mono("x", d.coefficient(), ex);
             d.mono("u", d.coefficient(), d.uniform(ex - 1, 2));
           }},
      [](const auto& be) {
        const auto x = be.param("x"), u = be.param("u"), q = be.q();
        HyperTerm t(be);
        t.num(be.div(q, x * x, kDD), q).den(q, q, 1, 1).geo(x);
        t.times([&be, x, u](long n) {
          return (be.one() + be.div(be.q(n + 1), x, kDD)) * (be.one() - be.pow(u, n + 1));
        });
        const auto rhs = be.div((be.one() - u) * be.poch_inf(be.div(q * u, x, kDD), q),
                                (be.one() - x) * be.poch_inf(x * u, q), kDD);
        return std::pair{be.sum(t), rhs};
      });

  add(out,
      {.id = "phi54",
       .group = "core",
       .anchor = "alpha from the q-binomial coefficients (c)_n q^n/(q)_n, a 5phi4 evaluation",
       .schema = [] {
         auto s = xyz_schema();
         s.push_back(mono("c", "exponent >= 0", true));
         return s;
       }(),
       .sampler =
           [](Draw& d) {
             draw_xyz(d);
             d.mono("c", d.coefficient(), d.uniform(0, 2));
           }},
      [](const auto& be) {
        const auto c = be.param("c"), q = be.q();
        return central_sides(
            be, [&](auto& t) { t.num(c * q, q).den(q, q); },
            [&](auto& t) { t.num(c, q).den(q, q).geo(q); });
      });

  add(out,
      {.id = "phi32",
       .group = "core",
       .anchor = "3phi2 with a -qxy / -xy ratio summed in closed form",
       .schema = {mono("x", "exponent >= 1", true), mono("y", "exponent >= 0", true)},
       .sampler =
           [](Draw& d) {
             d.mono("x", d.coefficient(), d.uniform(1, 2));
             d.mono("y", d.coefficient(), d.uniform(0, 2));
           }},
      [](const auto& be) {
        const auto x = be.param("x"), y = be.param("y"), q = be.q();
        const auto xy = x * y;
        HyperTerm t(be);
        t.num(-q * xy, q).num(y, q).num(x, q).den(-xy, q).den(q * x * xy, q).den(q, q).geo(x);
        const auto rhs = be.div(be.poch_inf(x * x, q) * be.poch_inf(q * xy, q),
                                (be.one() + xy) * be.poch_inf(q * x * xy, q) * be.poch_inf(x, q), kDD);
        return std::pair{be.sum(t), rhs};
      });

  {
    auto schema = xyz_schema();
    for (const char* s : {"a", "b", "c"}) schema.push_back(mono(s, "exponent in [0, 1]"));
    for (const char* s : {"p", "P", "Q", "R"}) schema.push_back(mono(s, "exponent >= 1"));
    schema.back().constraint = "exponent >= 1; e_P + e_Q + e_R - e_p >= 1 and the other six effective bases positive";
    add(out,
        {.id = "poly2",
         .group = "core",
         .anchor = "four-base telescoping pair of Subbarao-Verma type fed into the central summation",
         .schema = schema,
         .sampler =
             [](Draw& d) {
               draw_xyz(d);
               for (const char* s : {"a", "b", "c"}) d.mono(s, d.coefficient(), d.uniform(0, 1));
               // every effective base exponent is at least 1 when each lies in [1, 2]
               for (const char* s : {"p", "P", "Q", "R"}) d.mono(s, Rational(1), d.uniform(1, 2));
             }},
        [](const auto& be) {
          const auto s = telescope_bases(be);
          return central_sides(
              be, [&](auto& t) { t.times([&be, s](long n) { return sv_product(be, s, n); }); },
              [&](auto& t) { t.times([&be, s](long n) { return sv_term(be, s, n); }); });
        });
  }

  {
    auto schema = xyz_schema();
    for (const char* s : {"a", "b", "c"}) schema.push_back(mono(s, "exponent in [0, 1]"));
    schema.push_back(integer("m", "1 <= m <= 3"));
    add(out,
        {.id = "poly2q",
         .group = "core",
         .anchor = "telescoping pair with all four bases equal to q^(m/2)",
         .schema = schema,
         .sampler =
             [](Draw& d) {
               draw_xyz(d);
               for (const char* s : {"a", "b", "c"}) d.mono(s, d.coefficient(), d.uniform(0, 1));
               d.integer("m", d.uniform(1, 3));
             }},
        [](const auto& be) {
          const auto a = be.param("a"), b = be.param("b"), c = be.param("c");
          const auto base = be.q(be.integer("m"));
          const auto abc = be.div(a, b * c, kDD);
          return central_sides(
              be,
              [&](auto& t) {
                t.num(a * base, base).num(b * base, base).num(c * base, base).num(abc * base, base);
                t.den(be.div(a * base, c, kDD), base).den(be.div(a * base, b, kDD), base);
                t.den(b * c * base, base).den(base, base);
              },
              [&](auto& t) {
                t.num(a, base).num(b, base).num(c, base).num(abc, base);
                t.den(be.div(a * base, c, kDD), base).den(be.div(a * base, b, kDD), base);
                t.den(b * c * base, base).den(base, base).geo(base);
                t.times([&be, a, base](long n) {
                  return be.div(be.one() - a * be.pow(base, 2 * n), be.one() - a, kDD);
                });
              });
        });
  }

  {
    std::vector<ParamSpec> schema;
    for (const char* s : {"a", "b", "c"}) schema.push_back(mono(s, "exponent in [0, 1]"));
    for (const char* s : {"p", "P", "Q", "R"}) schema.push_back(mono(s, "exponent in [1, 2]"));
    schema.push_back(integer("n", "0 <= n <= 6"));
    add(out,
        {.id = "subbarao-verma",
         .group = "core",
         .anchor = "finite four-base telescoping sum equal to a product quotient",
         .schema = schema,
         .sampler =
             [](Draw& d) {
               for (const char* s : {"a", "b", "c"}) d.mono(s, d.coefficient(), d.uniform(0, 1));
               for (const char* s : {"p", "P", "Q", "R"}) d.mono(s, Rational(1), d.uniform(1, 2));
               d.integer("n", d.uniform(0, 6));
             }},
        [](const auto& be) {
          const auto s = telescope_bases(be);
          const long n = static_cast<long>(be.integer("n"));
          auto total = be.zero();
          for (long j = 0; j <= n; ++j) total = total + sv_term(be, s, j);
          return std::pair{total, sv_product(be, s, n)};
        });
  }

  add(out,
      {.id = "phi65",
       .group = "core",
       .anchor = "alpha_0 = 1 pair built from (a, b)_n q^n/(abq, q)_n, a 6phi5 evaluation",
       .schema = [] {
         auto s = xyz_schema();
         s.push_back(mono("a", "exponent >= 0"));
         s.push_back(mono("b", "exponent >= 0"));
         return s;
       }(),
       .sampler =
           [](Draw& d) {
             draw_xyz(d);
             d.mono("a", d.coefficient(), d.uniform(0, 2));
             d.mono("b", d.coefficient(), d.uniform(0, 2));
           }},
      [](const auto& be) {
        const auto a = be.param("a"), b = be.param("b"), q = be.q();
        return central_sides(
            be, [&](auto& t) { t.num(a * q, q).num(b * q, q).den(a * b * q, q).den(q, q); },
            [&](auto& t) { t.num(a, q).num(b, q).den(a * b * q, q).den(q, q).geo(q); });
      });

  add(out,
      {.id = "ppte-m",
       .group = "core",
       .anchor = "polynomial PTE condition read at Z = q^-n gives a Bailey-type pair of any size m",
       .schema = [] {
         auto s = xyz_schema();
         s.push_back(integer("m", "2 <= m <= 4"));
         s.push_back(rational("M", "nonzero; no lower parameter vanishes"));
         return s;
       }(),
       .sampler =
           [](Draw& d) {
             draw_xyz(d);
             d.integer("m", d.uniform(2, 4));
             d.rational("M", d.coefficient());
           }},
      [](const auto& be) { return pte_central_sides(be, rescaled_ideal(be.integer("m"), be.rational("M"))); });

  add(out,
      {.id = "cpte3",
       .group = "core",
       .anchor = "degree-5 ideal family normalized so one B entry equals 1",
       .schema = [] {
         auto s = xyz_schema();
         s.push_back(rational("m", "nonzero"));
         s.push_back(rational("n", "nonzero, family not degenerate"));
         return s;
       }(),
       .sampler =
           [](Draw& d) {
             draw_xyz(d);
             d.rational("m", d.coefficient());
             d.rational("n", d.coefficient());
           }},
      [](const auto& be) {
        const FamilyPair f = family6(be.rational("m"), be.rational("n"), true);
        for (const auto& x : f.b.elements()) {
          if (x.is_zero()) throw QError(ErrorKind::PteConditionFailed, "zero lower parameter");
        }
        return pte_central_sides(be, f);
      });

  add(out,
      {.id = "cpte5",
       .group = "core",
       .anchor = "12phi11 at argument q^12 from the symmetric degree-11 ideal family",
       .note = "the printed lower-parameter list skips b8 q; the record includes all eleven",
       .schema = {rational("m", "nonzero; no lower parameter vanishes")},
       .sampler = [](Draw& d) { d.rational("m", d.coefficient()); }},
      [](const auto& be) {
        const FamilyPair f = family12_normalized(be.rational("m"));
        const auto q = be.q();
        HyperTerm t(be);
        auto num = be.one(), den = be.poch_inf(q, q);
        for (const auto& x : f.a.elements()) {
          t.num(be.constant(x), q);
          num = num * be.poch_inf(be.constant(x) * q, q);
        }
        for (const auto& x : f.b.elements()) {
          if (x.is_zero()) throw QError(ErrorKind::PteConditionFailed, "zero lower parameter");
          t.den(be.constant(x) * q, q);
          den = den * be.poch_inf(be.constant(x) * q, q);
        }
        t.den(q, q).geo(be.q(12));
        return std::pair{be.sum(t), be.div(num, den, kDD)};
      });

  {
    auto schema = std::vector<ParamSpec>{mono("a", "exponent >= 0, a q != 1"), integer("n", "0 <= n <= 8")};
    for (auto& s : alpha_schema(4)) schema.push_back(s);
    add(out,
        {.id = "wp-reduction",
         .group = "core",
         .anchor = "with k = aq the pair relation collapses to partial sums of alpha",
         .schema = schema,
         .sampler =
             [](Draw& d) {
               d.mono("a", d.coefficient(), d.uniform(0, 2));
               d.integer("n", d.uniform(0, 8));
               draw_alpha(d, 4);
             }},
        [](const auto& be) {
          const auto a = be.param("a");
          const auto alpha = alpha_from_params(be, 4);
          const long n = static_cast<long>(be.integer("n"));
          auto partial = be.zero();
          for (long j = 0; j <= n; ++j) partial = partial + alpha(j);
          return std::pair{wp_beta(be, alpha, a, a * be.q(), n), partial};
        });
  }

  {
    auto schema = std::vector<ParamSpec>{mono("a", "exponent >= 1"), mono("k", "exponent >= 1"),
                                         mono("rho1", "exponent >= 0"), mono("rho2", "exponent >= 0"),
                                         integer("n", "0 <= n <= 6")};
    for (auto& s : alpha_schema(3)) schema.push_back(s);
    add(out,
        {.id = "wp-chain",
         .group = "core",
         .anchor = "one step of the WP-Bailey chain from (a, c) to (a, k) with c = k rho1 rho2/(aq)",
         .schema = schema,
         .sampler =
             [](Draw& d) {
               const int ea = d.uniform(1, 3);
               d.mono("a", d.coefficient(), ea);
               d.mono("k", d.coefficient(), d.uniform(1, 3));
               d.mono("rho1", d.coefficient(), d.uniform(0, ea));
               d.mono("rho2", d.coefficient(), d.uniform(0, ea));
               d.integer("n", d.uniform(0, 6));
               // sample 0 starts from the unit pair
               if (d.index == 0) {
                 d.rational("alpha0", 1);
                 d.rational("alpha1", 0);
                 d.rational("alpha2", 0);
               } else {
                 draw_alpha(d, 3);
               }
             }},
        [](const auto& be) {
          const auto a = be.param("a"), k = be.param("k"), r1 = be.param("rho1"), r2 = be.param("rho2");
          const auto c = be.div(k * r1 * r2, a * be.q(), kDD);
          const auto alpha = alpha_from_params(be, 3);
          const long n = static_cast<long>(be.integer("n"));
          auto new_alpha = [&](long j) { return chain_alpha(be, alpha, a, r1, r2, j); };
          auto old_beta = [&](long j) { return wp_beta(be, alpha, a, c, j); };
          return std::pair{wp_beta(be, new_alpha, a, k, n), chain_beta(be, old_beta, a, k, r1, r2, n)};
        });
  }
}

}  // namespace qverify::catalog_detail
