#include <algorithm>
#include <cctype>

#include "catalog_support.hpp"
#include "qverify/error.hpp"

namespace qverify {

namespace {

std::vector<IdentityRecord> build_catalog() {
  std::vector<IdentityRecord> out;
  catalog_detail::add_core_records(out);
  catalog_detail::add_pte_records(out);
  catalog_detail::add_rrs_records(out);
  catalog_detail::add_theta_records(out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

bool glob(std::string_view pattern, std::string_view text) {
  // iterative '*' backtracking
  std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
  auto eq = [](char a, char b) {
    return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
  };
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || eq(pattern[p], text[t]))) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Trial evaluation at low order; false for degenerate specializations and
/// for those whose right side vanishes identically (a fault there could not
/// be seen).
bool admissible(const IdentityRecord& r, const ParamAssignment& params, bool numeric) {
  constexpr Exponent kTrialOrder = 12;
  try {
    if (numeric) {
      const NumericBackend be(&params);
      const auto [lhs, rhs] = r.numeric_sides(be);
      return abs(rhs) > Decimal("1e-20");
    }
    const ExactSides s = evaluate_exact(r.exact_sides, &params, r.denominator, kTrialOrder * r.denominator);
    return !s.rhs.is_zero();
  } catch (const QError& e) {
    switch (e.kind()) {
      case ErrorKind::DegenerateDenominator:
      case ErrorKind::DegenerateVWP:
      case ErrorKind::LowerParameterPole:
      case ErrorKind::ZeroLeadingCoefficient:
      case ErrorKind::PteConditionFailed:
      case ErrorKind::DegenerateFamily:
      case ErrorKind::BadParameter:
        return false;
      default:
        // convergence trouble is for the verifier to report, not to hide
        return true;
    }
  }
}

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Exact:
      return "exact";
    case Strategy::Numeric:
      return "numeric";
    case Strategy::Auto:
      return "auto";
  }
  return "?";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "exact") return Strategy::Exact;
  if (text == "numeric") return Strategy::Numeric;
  if (text == "auto") return Strategy::Auto;
  throw QError(ErrorKind::BadParameter, "unknown strategy '" + std::string(text) + "'");
}

int Draw::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool Draw::coin() { return uniform(0, 1) == 1; }

Rational Draw::coefficient() {
  const int num = uniform(1, 4), den = uniform(1, 3);
  return Rational(coin() ? -num : num, den);
}

Rational Draw::small() {
  int i = uniform(1, 5);
  return Rational(coin() ? -i : i, 8);
}

void Draw::mono(const std::string& name, Rational c, Rational e) {
  params.set(name, ParamValue::monomial(std::move(c), std::move(e)));
}

void Draw::rational(const std::string& name, Rational v) { params.set(name, ParamValue::rational(std::move(v))); }

void Draw::integer(const std::string& name, long long v) { params.set(name, ParamValue::whole(v)); }

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> records = build_catalog();
  return records;
}

const IdentityRecord* lookup(std::string_view id) {
  for (const auto& r : catalog()) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

bool matches_filter(const IdentityRecord& r, std::string_view filter) {
  return filter.empty() || glob(filter, r.id) || glob(filter, r.group);
}

std::vector<ParamAssignment> sample_params(std::string_view id, std::uint64_t seed, int count,
                                           Strategy strategy) {
  const IdentityRecord* r = lookup(id);
  if (r == nullptr) throw QError(ErrorKind::UnknownIdentity, std::string(id));
  const bool numeric = strategy == Strategy::Numeric || !r->exact;
  std::mt19937_64 rng(seed ^ fnv1a(id));
  std::vector<ParamAssignment> out;
  int rejected = 0;
  for (int i = 0; i < count; ++i) {
    for (;;) {
      Draw d{rng, numeric, i, {}};
      r->sampler(d);
      if (numeric) {
        for (const auto& spec : r->schema) {
          if (spec.liftable) d.rational(spec.symbol, d.small());
        }
        d.params.set_numeric_q(Rational(1, d.uniform(5, 12)));
      }
      if (admissible(*r, d.params, numeric)) {
        out.push_back(std::move(d.params));
        break;
      }
      if (++rejected >= 10000) {
        throw QError(ErrorKind::SamplerExhausted, std::string(id) + ": 10000 draws rejected");
      }
    }
  }
  return out;
}

}  // namespace qverify
