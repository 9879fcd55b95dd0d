// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qverify/bailey.hpp"
#include "qverify/error.hpp"
#include "qverify/pte.hpp"
#include "qverify/qfunc.hpp"
#include "qverify/registry.hpp"

using namespace qverify;

namespace {

// pinned tolerances and sizes
constexpr Exponent kSuiteOrder = 40;
constexpr int kSuiteSamples = 3;
constexpr std::uint64_t kSuiteSeed = 1;
constexpr double kSuiteBudgetSeconds = 120;
constexpr Exponent kCorOrder = 30;
constexpr Exponent kChainOrder = 30;
constexpr int kMaxFaultExponent = 35;

int failures = 0;

void verdict(int number, const std::string& title, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << title << " -- " << detail << std::endl;
  if (!ok) ++failures;
}

LaurentSeries q(Exponent e, Rational c = 1) { return LaurentSeries::monomial(c, e); }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  return Rational(num(rng), den(rng));
}

Rational nonzero_rational(std::mt19937_64& rng) {
  for (;;) {
    Rational r = random_rational(rng);
    if (!r.is_zero()) return r;
  }
}

SeriesSequence finite_alpha(std::vector<Rational> v) {
  return [v](long n) {
    return n < static_cast<long>(v.size()) ? LaurentSeries::constant(v[n]) : LaurentSeries::zero();
  };
}

std::vector<Rational> random_support(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::vector<Rational> v(len(rng));
  for (auto& x : v) x = random_rational(rng);
  return v;
}

std::string stripped(const std::vector<VerificationReport>& r, const SuiteOptions& o) {
  auto doc = nlohmann::json::parse(report_json(r, o, "-"));
  doc["metadata"].erase("timestamp");
  for (auto& rep : doc["reports"]) rep.erase("millis");
  return doc.dump();
}

SuiteOptions suite_options(unsigned threads) {
  SuiteOptions o;
  o.order = kSuiteOrder;
  o.seed = kSuiteSeed;
  o.samples = kSuiteSamples;
  o.strategy = Strategy::Auto;
  o.threads = threads;
  return o;
}

std::vector<VerificationReport> first_run;

void full_suite() {
  const auto start = std::chrono::steady_clock::now();
  first_run = verify_suite(suite_options(0));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::map<std::string, bool> verified;
  int mismatch = 0, skipped = 0, exact = 0;
  for (const auto& r : first_run) {
    verified[r.id] = verified[r.id] || r.status == Status::Equal;
    mismatch += r.status == Status::Mismatch;
    skipped += r.status == Status::Skipped;
    exact += r.status == Status::Equal && r.strategy == Strategy::Exact;
  }
  int unverified = 0;
  for (const auto& [id, ok] : verified) unverified += !ok;
  std::ostringstream d;
  d << first_run.size() << " reports over " << verified.size() << " records, " << exact << " exact Equal, "
    << mismatch << " mismatch, " << skipped << " skipped, " << unverified << " unverified, " << secs << " s";
  verdict(1, "full suite N=40 seed=1 samples=3", verified.size() == catalog().size() && mismatch == 0 &&
                                                      unverified == 0 && secs < kSuiteBudgetSeconds,
          d.str());
}

void central_relation() {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> ex(0, 3), nn(0, 8);
  int checked = 0, bad = 0;
  while (checked < 20) {
    const LaurentSeries a = q(ex(rng), nonzero_rational(rng));
    const auto support = random_support(rng, 9);
    const WPPair pair{finite_alpha(support), a, a * q(1)};
    try {
      for (long n = 0; n <= 8; ++n) {
        Rational partial;
        for (long j = 0; j <= n && j < static_cast<long>(support.size()); ++j) partial += support[j];
        const LaurentSeries beta = wp_beta(pair, n, kCorOrder);
        bad += beta != LaurentSeries::constant(partial).truncated(kCorOrder);
      }
      ++checked;
    } catch (const QError& e) {
      if (e.kind() != ErrorKind::DegenerateDenominator) throw;
    }
  }
  verdict(2, "k = aq collapses the pair relation to partial sums", bad == 0,
          std::to_string(checked) + " alpha sequences, n <= 8, " + std::to_string(bad) + " differences");
}

void chain_closure() {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> ex(1, 4), num(-3, 3), den(1, 2);
  int checked = 0, bad = 0;
  const Exponent N = kChainOrder;
  while (checked < 5) {
    const LaurentSeries a = q(ex(rng));
    const ChainParams params{q(ex(rng), Rational(num(rng), den(rng))), q(ex(rng)), q(ex(rng))};
    if (params.rho1.is_zero()) continue;
    try {
      const ChainStep step = wp_chain_step(unit_pair(a, params.c(a, N)), params, 3 * N);
      for (long n = 0; n <= 6; ++n) bad += wp_beta(step.pair, n, 2 * N).truncated(N) != step.beta(n).truncated(N);
      ++checked;
    } catch (const QError& e) {
      if (e.kind() != ErrorKind::DegenerateDenominator && e.kind() != ErrorKind::DegenerateVWP) throw;
    }
  }
  verdict(3, "one chain step from the unit pair is again a pair", bad == 0,
          std::to_string(checked) + " specializations, n <= 6, " + std::to_string(bad) + " differences");
}

void corollary_engine() {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> ex_x(1, 2), ex_yz(0, 2);
  int checked = 0, bad = 0;
  for (int i = 0; i < 20; ++i) {
    const AlphaSequence alpha{finite_alpha(random_support(rng, 6))};
    for (int t = 0; t < 3;) {
      const LaurentSeries x = q(ex_x(rng), nonzero_rational(rng));
      const LaurentSeries y = q(ex_yz(rng), nonzero_rational(rng));
      const LaurentSeries z = q(ex_yz(rng), nonzero_rational(rng));
      try {
        const SeriesSides s = cor_sides(alpha, x, y, z, kCorOrder);
        bad += s.lhs.truncated(kCorOrder) != s.rhs.truncated(kCorOrder);
        ++checked;
        ++t;
      } catch (const QError& e) {
        if (e.kind() != ErrorKind::DegenerateDenominator && e.kind() != ErrorKind::DegenerateVWP) throw;
      }
    }
  }
  verdict(4, "central summation for arbitrary finite alpha", bad == 0,
          std::to_string(checked) + " cases to q^30, " + std::to_string(bad) + " differences");
}

Multiset random_multiset(std::mt19937_64& rng, std::size_t size) {
  std::uniform_int_distribution<int> d(0, 9);
  std::vector<Rational> v(size);
  for (auto& x : v) x = d(rng);
  return v;
}

void pte_battery() {
  std::vector<std::string> notes;
  bool ok = true;
  const Multiset a{1, 5, 6}, b{2, 3, 7};
  const PteResult k2 = check_pte(a, b, 2), k3 = check_pte(a, b, 3);
  const bool example = k2.holds && !k3.holds && k3.first_failure == 3;
  ok &= example;
  notes.push_back(std::string("{1,5,6}/{2,3,7} ") + (example ? "ok" : "wrong"));

  std::mt19937_64 rng(5);
  int kuosa = 0;
  for (int i = 0; i < 3; ++i) {
    const FamilyPair f = family12(nonzero_rational(rng), random_rational(rng));
    kuosa += check_pte(f.a, f.b, 11).holds;
  }
  ok &= kuosa == 3;
  notes.push_back(std::to_string(kuosa) + "/3 degree-11");

  int fam6 = 0, tried = 0;
  while (tried < 10) {
    try {
      const FamilyPair f = family6(nonzero_rational(rng), nonzero_rational(rng), true);
      ++tried;
      fam6 += check_6abmeq(f.a, f.b) && check_pte(f.a, f.b.with(1), 5).holds;
    } catch (const QError& e) {
      if (e.kind() != ErrorKind::DegenerateFamily) throw;
    }
  }
  ok &= fam6 == 10;
  notes.push_back(std::to_string(fam6) + "/10 normalized degree-5");

  // half random, half affine images of ideal solutions so both outcomes occur
  const std::vector<std::pair<Multiset, Multiset>> ideal = {
      {{0, 3}, {1, 2}}, {{1, 5, 6}, {2, 3, 7}}, {{0, 4, 7, 11}, {1, 2, 9, 10}}};
  int agree = 0, ideal_count = 0;
  for (int i = 0; i < 50; ++i) {
    Multiset x, y;
    if (i % 2 == 0) {
      std::uniform_int_distribution<std::size_t> size(2, 5);
      const std::size_t s = size(rng);
      x = random_multiset(rng, s);
      y = random_multiset(rng, s);
    } else {
      const auto& [p, r] = ideal[(i / 2) % ideal.size()];
      const Rational scale = nonzero_rational(rng), shift = random_rational(rng);
      x = affine(p, scale, shift);
      y = affine(r, scale, shift);
    }
    const bool by_sums = check_pte(x, y, static_cast<int>(x.size()) - 1).holds;
    const bool by_poly = check_ideal_poly(x, y).constant;
    agree += by_sums == by_poly;
    ideal_count += by_sums;
  }
  ok &= agree == 50;
  notes.push_back(std::to_string(agree) + "/50 criteria agree (" + std::to_string(ideal_count) + " ideal)");

  std::string detail;
  for (const auto& n : notes) detail += (detail.empty() ? "" : ", ") + n;
  verdict(5, "PTE battery", ok, detail);
}

void kernel_properties() {
  bool ok = true;
  const LaurentSeries euler = poch_infinite(QMonomial::q(), QMonomial::q(), 40);
  for (Exponent e = 0; e <= 40; ++e) {
    const Rational c = euler.coeff(e);
    ok &= c == 0 || c == 1 || c == -1;
  }
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> ex(0, 3), len(0, 10);
  int split = 0;
  for (int i = 0; i < 50; ++i) {
    const QMonomial a(random_rational(rng), ex(rng));
    const int n = len(rng), m = len(rng);
    const LaurentSeries as = a.to_series();
    const bool finite = poch_finite(as, QMonomial::q(), n + m) ==
                        poch_finite(as, QMonomial::q(), n) * poch_finite(as * q(n), QMonomial::q(), m);
    const bool infinite =
        poch_infinite(a, QMonomial::q(), 30) ==
        (poch_finite(as, QMonomial::q(), n) * poch_infinite(a * QMonomial::q(n), QMonomial::q(), 30)).truncated(30);
    split += finite && infinite;
  }
  ok &= split == 50;
  int inverses = 0;
  const Exponent N = 30;
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> c(len(rng) + 1);
    for (auto& x : c) x = random_rational(rng);
    c.front() = nonzero_rational(rng);
    const Exponent v = ex(rng) - 1;
    const LaurentSeries s = LaurentSeries::from_coeffs(v, c, N);
    const LaurentSeries product = s * series_invert(s, N);
    const Exponent upto = N - 2 * std::max<Exponent>(v, 0) - 1;
    inverses += product.order() >= upto && product.truncated(upto) == LaurentSeries::one().truncated(upto);
  }
  ok &= inverses == 50;
  verdict(6, "kernel properties", ok,
          "pentagonal to q^40, " + std::to_string(split) + "/50 splitting, " + std::to_string(inverses) +
              "/50 inverses");
}

void fault_sensitivity() {
  std::mt19937_64 rng(7);
  std::vector<const IdentityRecord*> records;
  for (const auto& r : catalog()) records.push_back(&r);
  std::shuffle(records.begin(), records.end(), rng);
  std::uniform_int_distribution<int> jd(1, kMaxFaultExponent);
  int hit = 0;
  std::string detail;
  for (int i = 0; i < 10; ++i) {
    const IdentityRecord& r = *records[i];
    const ParamAssignment p = sample_params(r.id, 1, 1).front();
    const long j = jd(rng);
    // the first coefficient that moves sits j above the right side's valuation
    const ExactSides clean = evaluate_exact(r.exact_sides, &p, r.denominator, kSuiteOrder * r.denominator);
    const Rational shift(clean.rhs.valuation(), r.denominator);
    VerifyOptions o;
    o.strategy = Strategy::Exact;
    o.fault = j;
    const auto rep = verify_one(r, p, kSuiteOrder + 5, o);
    const bool ok = rep.status == Status::Mismatch && rep.mismatch->exponent &&
                    *rep.mismatch->exponent == Rational(j) + shift;
    hit += ok;
    detail += (detail.empty() ? "" : ", ") + r.id + "@" + std::to_string(j) +
              (shift.is_zero() ? "" : "+" + shift.str()) + (ok ? "" : "!");
  }
  verdict(7, "fault injection located exactly", hit == 10, std::to_string(hit) + "/10: " + detail);
}

void determinism() {
  const SuiteOptions base = suite_options(0);
  const std::string reference = stripped(first_run, base);
  bool ok = true;
  for (unsigned threads : {1u, 4u}) ok &= stripped(verify_suite(suite_options(threads)), base) == reference;
  verdict(8, "suite output independent of run and thread count", ok,
          "3 runs (all cores, 1, 4 threads) compared without timestamp and millis");
}

}  // namespace

int main() {
  full_suite();
  central_relation();
  chain_closure();
  corollary_engine();
  pte_battery();
  kernel_properties();
  fault_sensitivity();
  determinism();
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
