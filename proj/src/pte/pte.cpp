#include "qverify/pte.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "qverify/error.hpp"

namespace qverify {

namespace {

void require_same_size(const Multiset& a, const Multiset& b) {
  if (a.size() != b.size()) {
    throw QError(ErrorKind::SizeMismatch, "multisets of sizes " + std::to_string(a.size()) + " and " +
                                              std::to_string(b.size()));
  }
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Multiset quadratic_family(const Rational& m, const Rational& n, const Rational& shift,
                          const std::vector<std::array<int, 3>>& forms) {
  std::vector<Rational> out;
  for (const auto& [mm, mn, nn] : forms) out.push_back(mm * m * m + mn * m * n + nn * n * n + shift);
  return out;
}

Multiset symmetric_family(const Rational& m, const Rational& shift, std::initializer_list<int> offsets) {
  std::vector<Rational> out;
  for (int c : offsets) {
    out.push_back(shift + c * m);
    out.push_back(shift - c * m);
  }
  return out;
}

}  // namespace

Multiset Multiset::with(const Rational& extra) const {
  std::vector<Rational> v = elements_;
  v.push_back(extra);
  return v;
}

std::string Multiset::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? ", " : "") << elements_[i].str();
  os << '}';
  return os.str();
}

bool operator==(const Multiset& a, const Multiset& b) {
  return a.size() == b.size() && sorted(a.elements_) == sorted(b.elements_);
}

Rational power_sums(const Multiset& s, int e) {
  Rational total;
  for (const auto& x : s.elements()) total += x.pow(e);
  return total;
}

PteResult check_pte(const Multiset& a, const Multiset& b, int k) {
  require_same_size(a, b);
  for (int e = 1; e <= k; ++e) {
    if (power_sums(a, e) != power_sums(b, e)) return {false, e};
  }
  return {};
}

std::vector<Rational> monic_from_roots(const Multiset& s) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& root : s.elements()) {
    c.insert(c.begin(), Rational(0));
    for (std::size_t i = 0; i + 1 < c.size(); ++i) c[i] -= root * c[i + 1];
  }
  return c;
}

IdealPolyResult check_ideal_poly(const Multiset& a, const Multiset& b) {
  require_same_size(a, b);
  const auto pa = monic_from_roots(a), pb = monic_from_roots(b);
  IdealPolyResult r;
  for (std::size_t i = 0; i < pa.size(); ++i) r.coefficients.push_back(pa[i] - pb[i]);
  r.difference = r.coefficients.front();
  r.constant = std::all_of(r.coefficients.begin() + 1, r.coefficients.end(),
                           [](const Rational& c) { return c.is_zero(); });
  return r;
}

Multiset affine(const Multiset& s, const Rational& scale, const Rational& shift) {
  std::vector<Rational> out;
  for (const auto& x : s.elements()) out.push_back(scale * x + shift);
  return out;
}

FamilyPair family6(const Rational& m, const Rational& n, bool normalized, const Rational& shift) {
  if (m.is_zero() || n.is_zero()) throw QError(ErrorKind::BadParameter, "family parameters must be nonzero");
  FamilyPair p;
  if (normalized) {
    p.a = quadratic_family(m, n, 1, {{-3, 7, -2}, {-2, 8, 2}, {-1, 0, -1}, {2, 3, 1}, {1, 2, -3}, {0, 10, 0}});
    p.b = quadratic_family(m, n, 1, {{-3, 8, 1}, {-2, 3, -3}, {-1, 10, -1}, {2, 2, -2}, {1, 7, 2}});
    if (p.a == p.b.with(1)) throw QError(ErrorKind::DegenerateFamily, "the two multisets coincide");
  } else {
    p.a = quadratic_family(m, n, shift,
                           {{-5, 4, -3}, {-3, 6, 5}, {-1, -10, -1}, {5, -4, 3}, {3, -6, -5}, {1, 10, 1}});
    p.b = quadratic_family(m, n, shift,
                           {{-5, 6, 3}, {-3, -4, -5}, {-1, 10, -1}, {5, -6, -3}, {3, 4, 5}, {1, -10, 1}});
    if (p.a == p.b) throw QError(ErrorKind::DegenerateFamily, "the two multisets coincide");
  }
  return p;
}

FamilyPair family12(const Rational& m, const Rational& shift) {
  if (m.is_zero()) throw QError(ErrorKind::BadParameter, "family parameter must be nonzero");
  return {symmetric_family(m, shift, {22, 61, 86, 127, 140, 151}),
          symmetric_family(m, shift, {35, 47, 94, 121, 146, 148})};
}

FamilyPair family12_normalized(const Rational& m) {
  FamilyPair p = family12(m, 1 + 148 * m);
  std::vector<Rational> b = p.b.elements();
  b.erase(std::find(b.begin(), b.end(), Rational(1)));
  p.b = std::move(b);
  return p;
}

FamilyPair family_pair(const FamilyPoint& p) {
  switch (p.family) {
    case Family::Degree6Raw: {
      FamilyPair f = family6(p.m, p.n, false, p.shift);
      return {affine(f.a, p.scale, 0), affine(f.b, p.scale, 0)};
    }
    case Family::Degree6Normalized:
      return family6(p.m, p.n, true);
    case Family::Degree12:
      return family12(p.m, p.shift);
    case Family::Degree12Normalized:
      return family12_normalized(p.m);
  }
  throw QError(ErrorKind::BadParameter, "unknown family");
}

bool check_6abmeq(const Multiset& a, const Multiset& b) {
  if (b.size() + 1 != a.size()) {
    throw QError(ErrorKind::SizeMismatch, "need |B| = |A| - 1, got " + std::to_string(a.size()) + " and " +
                                              std::to_string(b.size()));
  }
  const IdealPolyResult r = check_ideal_poly(a, b.with(1));
  Rational expected(1);
  for (const auto& x : a.elements()) expected *= 1 - x;
  return r.constant && r.difference == expected;
}

PteSequences pte_alpha_beta(const Multiset& a, const Multiset& b, Exponent order) {
  if (!check_6abmeq(a, b)) throw QError(ErrorKind::PteConditionFailed, "polynomial condition fails");
  for (const auto& x : b.elements()) {
    if (x.is_zero()) throw QError(ErrorKind::PteConditionFailed, "zero lower parameter");
  }
  auto run = [a, b, order](bool alpha, long n) {
    return evaluate_exact_value(
        [&](const ExactBackend& be) {
          HyperTerm<ExactBackend> t = alpha ? pte_alpha_term(be, a, b) : pte_beta_term(be, a, b);
          return t(n);
        },
        nullptr, 1, order);
  };
  PteSequences out;
  out.alpha.alpha = [run](long n) { return run(true, n); };
  out.beta = [run](long n) { return run(false, n); };
  return out;
}

}  // namespace qverify
