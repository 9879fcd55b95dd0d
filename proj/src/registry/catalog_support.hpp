#pragma once

// Shared plumbing for the catalog translation units.

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qverify/bailey.hpp"
#include "qverify/registry.hpp"

namespace qverify::catalog_detail {

constexpr auto kDD = ErrorKind::DegenerateDenominator;

template <class Build>
void add(std::vector<IdentityRecord>& out, IdentityRecord rec, Build build) {
  rec.exact_sides = [build](const ExactBackend& be) {
    auto [l, r] = build(be);
    return std::pair<ExactValue, ExactValue>{ExactValue(l), ExactValue(r)};
  };
  rec.numeric_sides = [build](const NumericBackend& be) {
    auto [l, r] = build(be);
    return std::pair<Decimal, Decimal>{Decimal(l), Decimal(r)};
  };
  out.push_back(std::move(rec));
}

inline ParamSpec mono(std::string s, std::string constraint, bool liftable = false) {
  return {std::move(s), ParamValue::Kind::Monomial, std::move(constraint), liftable};
}
inline ParamSpec rational(std::string s, std::string constraint) {
  return {std::move(s), ParamValue::Kind::Rational, std::move(constraint), false};
}
inline ParamSpec integer(std::string s, std::string constraint) {
  return {std::move(s), ParamValue::Kind::Integer, std::move(constraint), false};
}

/// Finitely supported sequence read from parameters alpha0..alpha{count-1}.
template <class B>
auto alpha_from_params(const B& be, int count) {
  std::vector<typename B::value> v;
  for (int i = 0; i < count; ++i) v.push_back(be.param("alpha" + std::to_string(i)));
  return [v, zero = be.zero()](long n) { return n < static_cast<long>(v.size()) ? v[n] : zero; };
}

inline std::vector<ParamSpec> alpha_schema(int count) {
  std::vector<ParamSpec> out;
  for (int i = 0; i < count; ++i) out.push_back(rational("alpha" + std::to_string(i), "any rational"));
  return out;
}

inline void draw_alpha(Draw& d, int count) {
  for (int i = 0; i < count; ++i) d.rational("alpha" + std::to_string(i), d.coefficient());
}

/// x = c q^{1..2}, y, z = c q^{0..2}
inline void draw_xyz(Draw& d) {
  d.mono("x", d.coefficient(), d.uniform(1, 2));
  d.mono("y", d.coefficient(), d.uniform(0, 2));
  d.mono("z", d.coefficient(), d.uniform(0, 2));
}

inline std::vector<ParamSpec> xyz_schema() {
  return {mono("x", "exponent >= 1", true), mono("y", "exponent >= 0", true),
          mono("z", "exponent >= 0", true)};
}

/// Left and right sides of the central summation built from extra factors
/// added to the two standard terms.
template <class B, class Left, class Right>
auto central_sides(const B& be, Left&& decorate_left, Right&& decorate_right) {
  const auto x = be.param("x"), y = be.param("y"), z = be.param("z");
  HyperTerm<B> left = cor_left_term(be, x, y, z);
  decorate_left(left);
  HyperTerm<B> right = cor_right_term(be, x, y, z);
  decorate_right(right);
  const auto lhs = be.sum(left);
  return std::pair{lhs, cor_prefactor(be, x, y, z) * be.sum(right)};
}

/// Sum_{n>=0} (-1)^n q^{n(n+1)/2}
template <class B>
typename B::value false_theta_one(const B& be) {
  HyperTerm<B> t(be);
  t.quad(be.q()).geo(-be.q());
  return be.sum(t);
}

/// Sum_{n>=0} q^{n(3n+1)/2} (1 - q^{2n+1})
template <class B>
typename B::value false_theta_two(const B& be) {
  HyperTerm<B> t(be);
  t.quad(be.q(3)).geo(be.q(2)).times([&be](long n) { return be.one() - be.q(2 * n + 1); });
  return be.sum(t);
}

template <class B>
typename B::value pinf(const B& be, long long c, long long e, long long base) {
  return be.poch_inf(be.mono(Rational(c), Rational(e)), be.q(base));
}

void add_core_records(std::vector<IdentityRecord>& out);
void add_pte_records(std::vector<IdentityRecord>& out);
void add_rrs_records(std::vector<IdentityRecord>& out);
void add_theta_records(std::vector<IdentityRecord>& out);

}  // namespace qverify::catalog_detail
