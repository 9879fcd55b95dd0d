#pragma once

// The identity catalog, its parameter samplers and the verification driver.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qverify/backend.hpp"

namespace qverify {

enum class Strategy { Exact, Numeric, Auto };

std::string_view to_string(Strategy s);
/// Throws BadParameter for anything but "exact", "numeric" or "auto".
Strategy parse_strategy(std::string_view text);

struct ParamSpec {
  std::string symbol;
  ParamValue::Kind kind = ParamValue::Kind::Monomial;
  std::string constraint;
  /// Replaced by a small rational constant when sampling for numeric checks.
  bool liftable = false;
};

/// State handed to a record's sampler for one draw.
struct Draw {
  std::mt19937_64& rng;
  bool numeric = false;
  int index = 0;  // sample index within the request
  ParamAssignment params;

  int uniform(int lo, int hi);
  bool coin();
  /// +-(1..4) / (1..3)
  Rational coefficient();
  /// i/8 with 0 < |i| <= 5
  Rational small();
  void mono(const std::string& name, Rational c, Rational e);
  void rational(const std::string& name, Rational v);
  void integer(const std::string& name, long long v);
};

using ExactSidesFn = std::function<std::pair<ExactValue, ExactValue>(const ExactBackend&)>;
using NumericSidesFn = std::function<std::pair<Decimal, Decimal>(const NumericBackend&)>;

struct IdentityRecord {
  std::string id;
  std::string group;
  std::string anchor;
  std::string note;
  std::vector<ParamSpec> schema;
  int denominator = 1;  // exponents live in (1/denominator) Z
  bool exact = true;
  bool numeric = true;
  ExactSidesFn exact_sides;
  NumericSidesFn numeric_sides;
  std::function<void(Draw&)> sampler;
};

/// All records, sorted by id.
const std::vector<IdentityRecord>& catalog();
const IdentityRecord* lookup(std::string_view id);

/// Case-insensitive glob ('*', '?') against the id or the group; an empty
/// filter matches everything.
bool matches_filter(const IdentityRecord& r, std::string_view filter);

/// Deterministic admissible assignments. Throws UnknownIdentity or
/// SamplerExhausted after 10,000 rejected draws.
std::vector<ParamAssignment> sample_params(std::string_view id, std::uint64_t seed, int count,
                                           Strategy strategy = Strategy::Exact);

enum class Status { Equal, Mismatch, Skipped };
std::string_view to_string(Status s);

struct MismatchInfo {
  std::optional<Rational> exponent;  // exact comparisons only
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string id;
  int sample = 0;
  ParamAssignment params;
  Exponent order = 0;
  Strategy strategy = Strategy::Exact;  // the path that produced the status
  Status status = Status::Skipped;
  std::optional<MismatchInfo> mismatch;
  std::string reason;
  std::string note;
  double millis = 0;
};

struct VerifyOptions {
  Strategy strategy = Strategy::Auto;
  /// Multiplies the right side by (1 + q^j).
  std::optional<long> fault;
  Decimal tolerance = default_tolerance();
};

VerificationReport verify_one(const IdentityRecord& r, const ParamAssignment& params, Exponent order,
                              const VerifyOptions& options = {});
/// Throws UnknownIdentity.
VerificationReport verify_one(std::string_view id, const ParamAssignment& params, Exponent order,
                              const VerifyOptions& options = {});

struct SuiteOptions {
  std::string filter;
  Exponent order = 40;
  std::uint64_t seed = 1;
  int samples = 3;
  Strategy strategy = Strategy::Auto;
  unsigned threads = 0;  // 0: hardware concurrency
  std::optional<long> fault;
};

/// Reports ordered by (id, sample index) whatever the thread count.
std::vector<VerificationReport> verify_suite(const SuiteOptions& options);

/// Ids whose reports are all Skipped.
std::vector<std::string> unverified_ids(const std::vector<VerificationReport>& reports);

std::string report_json(const std::vector<VerificationReport>& reports, const SuiteOptions& options,
                        const std::string& timestamp);
std::string report_text(const std::vector<VerificationReport>& reports);

}  // namespace qverify
