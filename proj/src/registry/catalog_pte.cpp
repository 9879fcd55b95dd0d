// PTE facts encoded as polynomial identities in q so the same driver checks them.

#include "catalog_support.hpp"
#include "qverify/pte.hpp"

namespace qverify::catalog_detail {

namespace {

/// sum_{e=0..k} p_e(s) q^e; the e = 0 term is the size
template <class B>
typename B::value power_sum_series(const B& be, const Multiset& s, int k) {
  auto out = be.zero();
  for (int e = 0; e <= k; ++e) out = out + be.constant(power_sums(s, e)) * be.q(e);
  return out;
}

/// prod (q - s_i)
template <class B>
typename B::value root_poly(const B& be, const Multiset& s) {
  auto out = be.one();
  for (const auto& x : s.elements()) out = out * (be.q() - be.constant(x));
  return out;
}

void draw_mn(Draw& d) {
  d.rational("m", d.coefficient());
  d.rational("n", d.coefficient());
}

}  // namespace

void add_pte_records(std::vector<IdentityRecord>& out) {
  add(out,
      {.id = "pte-power-sums",
       .group = "pte",
       .anchor = "raw degree-5 two-parameter family: power sums of A and B agree through e = 5",
       .schema = {rational("m", "nonzero"), rational("n", "nonzero"), rational("K", "any")},
       .sampler =
           [](Draw& d) {
             draw_mn(d);
             d.rational("K", d.coefficient());
           }},
      [](const auto& be) {
        const FamilyPair f = family6(be.rational("m"), be.rational("n"), false, be.rational("K"));
        return std::pair{power_sum_series(be, f.a, 5), power_sum_series(be, f.b, 5)};
      });

  add(out,
      {.id = "pte-ideal-poly",
       .group = "pte",
       .anchor = "ideal solutions as monic polynomials differing by a constant",
       .schema = {rational("m", "nonzero"), rational("n", "nonzero"), rational("K", "any")},
       .sampler =
           [](Draw& d) {
             draw_mn(d);
             d.rational("K", d.coefficient());
           }},
      [](const auto& be) {
        const FamilyPair f = family6(be.rational("m"), be.rational("n"), false, be.rational("K"));
        Rational gap = 1, other = 1;
        for (const auto& x : f.a.elements()) gap *= -x;
        for (const auto& x : f.b.elements()) other *= -x;
        return std::pair{root_poly(be, f.a) - root_poly(be, f.b), be.constant(gap - other)};
      });

  add(out,
      {.id = "pte-affine",
       .group = "pte",
       .anchor = "an affine image of an ideal solution is again ideal",
       .schema = {rational("m", "nonzero"), rational("n", "nonzero"), rational("M", "nonzero"),
                  rational("K", "any")},
       .sampler =
           [](Draw& d) {
             draw_mn(d);
             d.rational("M", d.coefficient());
             d.rational("K", d.coefficient());
           }},
      [](const auto& be) {
        const FamilyPair f = family6(be.rational("m"), be.rational("n"), false);
        const Rational scale = be.rational("M"), shift = be.rational("K");
        return std::pair{power_sum_series(be, affine(f.a, scale, shift), 5),
                         power_sum_series(be, affine(f.b, scale, shift), 5)};
      });

  add(out,
      {.id = "pte-family6",
       .group = "pte",
       .anchor = "normalized degree-5 family with the implicit B entry 1 restored",
       .schema = {rational("m", "nonzero"), rational("n", "nonzero, family not degenerate")},
       .sampler = draw_mn},
      [](const auto& be) {
        const FamilyPair f = family6(be.rational("m"), be.rational("n"), true);
        return std::pair{power_sum_series(be, f.a, 5), power_sum_series(be, f.b.with(1), 5)};
      });

  add(out,
      {.id = "pte-kuosa",
       .group = "pte",
       .anchor = "symmetric size-12 family with equal power sums through e = 11",
       .schema = {rational("m", "nonzero"), rational("K", "any")},
       .sampler =
           [](Draw& d) {
             d.rational("m", d.coefficient());
             d.rational("K", d.coefficient());
           }},
      [](const auto& be) {
        const FamilyPair f = family12(be.rational("m"), be.rational("K"));
        return std::pair{power_sum_series(be, f.a, 11), power_sum_series(be, f.b, 11)};
      });

  add(out,
      {.id = "pte-product",
       .group = "pte",
       .anchor = "normalized ideal family: prod(Z - a) - (Z - 1) prod(Z - b) equals prod(1 - a)",
       .schema = {rational("m", "nonzero"), rational("n", "nonzero, family not degenerate")},
       .sampler = draw_mn},
      [](const auto& be) {
        const FamilyPair f = family6(be.rational("m"), be.rational("n"), true);
        Rational expected = 1;
        for (const auto& x : f.a.elements()) expected *= 1 - x;
        return std::pair{root_poly(be, f.a) - (be.q() - be.one()) * root_poly(be, f.b),
                         be.constant(expected)};
      });
}

}  // namespace qverify::catalog_detail
