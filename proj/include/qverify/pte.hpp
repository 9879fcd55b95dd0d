#pragma once

// Prouhet-Tarry-Escott solutions and the q-series they feed.

#include <optional>
#include <vector>

#include "qverify/bailey.hpp"
#include "qverify/rational.hpp"

namespace qverify {

/// Unordered collection of rationals; equality ignores order.
class Multiset {
 public:
  Multiset() = default;
  Multiset(std::vector<Rational> elements) : elements_(std::move(elements)) {}
  Multiset(std::initializer_list<Rational> elements) : elements_(elements) {}

  const std::vector<Rational>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Multiset with(const Rational& extra) const;
  std::string str() const;

  friend bool operator==(const Multiset& a, const Multiset& b);

 private:
  std::vector<Rational> elements_;
};

Rational power_sums(const Multiset& s, int e);

struct PteResult {
  bool holds = true;
  std::optional<int> first_failure;  // smallest e with unequal power sums
};

/// Power sums agree for e = 1..k. Throws SizeMismatch.
PteResult check_pte(const Multiset& a, const Multiset& b, int k);

/// Coefficients of prod (Z - s), lowest degree first.
std::vector<Rational> monic_from_roots(const Multiset& s);

struct IdealPolyResult {
  bool constant = false;             // only the Z^0 coefficient survives
  Rational difference;               // that coefficient
  std::vector<Rational> coefficients;  // full difference, lowest degree first
};

/// prod (Z - a_i) - prod (Z - b_i). Throws SizeMismatch.
IdealPolyResult check_ideal_poly(const Multiset& a, const Multiset& b);

/// Elementwise scale * s + shift.
Multiset affine(const Multiset& s, const Rational& scale, const Rational& shift);

enum class Family { Degree6Raw, Degree6Normalized, Degree12, Degree12Normalized };

struct FamilyPoint {
  Family family;
  Rational m;
  Rational n;
  Rational shift;  // additive constant of the raw families
  Rational scale = Rational(1);
};

struct FamilyPair {
  Multiset a;
  Multiset b;  // one element short for the normalized families (the 1 is implicit)
};

/// Raw family: 6 + 6 elements with the additive constant `shift`.
/// Normalized: shift chosen so b_6 = 1, which is dropped, and rescaled to
/// rational coefficients. Throws DegenerateFamily when the sets coincide and
/// BadParameter when m or n is zero.
FamilyPair family6(const Rational& m, const Rational& n, bool normalized, const Rational& shift = 0);

/// Symmetric size-12 family about `shift`; degree-11 solution for every m.
FamilyPair family12(const Rational& m, const Rational& shift = 0);

/// family12 translated so that the shift - 148 m entry is 1, which is dropped.
FamilyPair family12_normalized(const Rational& m);

FamilyPair family_pair(const FamilyPoint& p);

/// prod (1 - a_i) = prod (Z - a_i) - (Z - 1) prod (Z - b_i) identically in Z.
/// Throws SizeMismatch unless |b| = |a| - 1.
bool check_6abmeq(const Multiset& a, const Multiset& b);

/// alpha_n = (a_1..a_m; q)_n q^{mn} / ((b_1 q..b_{m-1} q, q; q)_n); its partial
/// sums are the beta_n term.
template <class B>
HyperTerm<B> pte_alpha_term(const B& be, const Multiset& a, const Multiset& b) {
  const auto q = be.q();
  HyperTerm<B> t(be);
  for (const auto& x : a.elements()) t.num(be.constant(x), q);
  for (const auto& x : b.elements()) t.den(be.constant(x) * q, q);
  t.den(q, q).geo(be.q(static_cast<long>(a.size())));
  return t;
}

/// (a_1 q..a_m q; q)_n / ((b_1 q..b_{m-1} q, q; q)_n)
template <class B>
HyperTerm<B> pte_beta_term(const B& be, const Multiset& a, const Multiset& b) {
  const auto q = be.q();
  HyperTerm<B> t(be);
  for (const auto& x : a.elements()) t.num(be.constant(x) * q, q);
  for (const auto& x : b.elements()) t.den(be.constant(x) * q, q);
  t.den(q, q);
  return t;
}

struct PteSequences {
  AlphaSequence alpha;
  SeriesSequence beta;
};

/// Throws PteConditionFailed unless check_6abmeq holds and every b is nonzero.
PteSequences pte_alpha_beta(const Multiset& a, const Multiset& b, Exponent order);

}  // namespace qverify
