#include <atomic>
#include <chrono>
#include <thread>

#include "qverify/error.hpp"
#include "qverify/registry.hpp"

namespace qverify {

namespace {

bool falls_back(ErrorKind k) {
  return k == ErrorKind::NonTruncatable || k == ErrorKind::ValuationStall || k == ErrorKind::OrderInsufficient;
}

void run_exact(const IdentityRecord& r, const ParamAssignment& params, Exponent order,
               const VerifyOptions& options, VerificationReport& out) {
  out.strategy = Strategy::Exact;
  auto build = [&](const ExactBackend& be) {
    auto sides = r.exact_sides(be);
    if (options.fault) sides.second = sides.second * (be.one() + be.q(Rational(*options.fault)));
    return sides;
  };
  const Exponent target = order * r.denominator;
  const ExactSides s = evaluate_exact(build, &params, r.denominator, target);
  const SeriesComparison c = series_compare(s.lhs, s.rhs, target);
  if (c.equal) {
    out.status = Status::Equal;
  } else {
    out.status = Status::Mismatch;
    out.mismatch = MismatchInfo{Rational(c.exponent, r.denominator), c.lhs.str(), c.rhs.str()};
  }
}

void run_numeric(const IdentityRecord& r, const ParamAssignment& params, const VerifyOptions& options,
                 VerificationReport& out) {
  out.strategy = Strategy::Numeric;
  const NumericBackend be(&params, options.tolerance);
  auto [lhs, rhs] = r.numeric_sides(be);
  if (options.fault) rhs *= 1 + be.q(Rational(*options.fault));
  if (abs(lhs - rhs) <= options.tolerance) {
    out.status = Status::Equal;
  } else {
    out.status = Status::Mismatch;
    out.mismatch = MismatchInfo{std::nullopt, decimal_str(lhs), decimal_str(rhs)};
  }
}

void skip(VerificationReport& out, std::string reason) {
  out.status = Status::Skipped;
  out.mismatch.reset();
  out.reason = std::move(reason);
}

void run(const IdentityRecord& r, const ParamAssignment& params, Exponent order, const VerifyOptions& options,
         VerificationReport& out) {
  const bool want_exact = options.strategy != Strategy::Numeric;
  if (want_exact && r.exact) {
    try {
      run_exact(r, params, order, options, out);
      return;
    } catch (const QError& e) {
      if (!(options.strategy == Strategy::Auto && falls_back(e.kind()) && r.numeric)) {
        skip(out, e.what());
        return;
      }
    }
  } else if (options.strategy == Strategy::Exact) {
    skip(out, "no exact builder");
    return;
  }
  if (!r.numeric) {
    skip(out, "no numeric builder");
    return;
  }
  try {
    run_numeric(r, params, options, out);
  } catch (const QError& e) {
    skip(out, e.what());
  }
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Equal:
      return "Equal";
    case Status::Mismatch:
      return "Mismatch";
    case Status::Skipped:
      return "Skipped";
  }
  return "?";
}

VerificationReport verify_one(const IdentityRecord& r, const ParamAssignment& params, Exponent order,
                              const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport out;
  out.id = r.id;
  out.params = params;
  out.order = order;
  out.note = r.note;
  out.strategy = options.strategy;
  run(r, params, order, options, out);
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

VerificationReport verify_one(std::string_view id, const ParamAssignment& params, Exponent order,
                              const VerifyOptions& options) {
  const IdentityRecord* r = lookup(id);
  if (r == nullptr) throw QError(ErrorKind::UnknownIdentity, std::string(id));
  return verify_one(*r, params, order, options);
}

std::vector<VerificationReport> verify_suite(const SuiteOptions& options) {
  std::vector<const IdentityRecord*> records;
  for (const auto& r : catalog()) {
    if (matches_filter(r, options.filter)) records.push_back(&r);
  }

  struct Sampled {
    std::vector<ParamAssignment> params;
    std::string error;
  };
  std::vector<Sampled> sampled(records.size());
  const Strategy sampling = options.strategy == Strategy::Numeric ? Strategy::Numeric : Strategy::Exact;
  parallel_for(records.size(), options.threads, [&](std::size_t i) {
    try {
      sampled[i].params = sample_params(records[i]->id, options.seed, options.samples, sampling);
    } catch (const QError& e) {
      sampled[i].error = e.what();
    }
  });

  struct Task {
    std::size_t record;
    int sample;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!sampled[i].error.empty()) {
      tasks.push_back({i, -1});
      continue;
    }
    for (int s = 0; s < static_cast<int>(sampled[i].params.size()); ++s) tasks.push_back({i, s});
  }

  std::vector<VerificationReport> reports(tasks.size());
  VerifyOptions vo;
  vo.strategy = options.strategy;
  vo.fault = options.fault;
  parallel_for(tasks.size(), options.threads, [&](std::size_t t) {
    const auto& [ri, si] = tasks[t];
    const IdentityRecord& r = *records[ri];
    if (si < 0) {
      VerificationReport& out = reports[t];
      out.id = r.id;
      out.order = options.order;
      out.strategy = options.strategy;
      out.note = r.note;
      skip(out, sampled[ri].error);
      return;
    }
    reports[t] = verify_one(r, sampled[ri].params[si], options.order, vo);
    reports[t].sample = si;
  });
  return reports;
}

std::vector<std::string> unverified_ids(const std::vector<VerificationReport>& reports) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < reports.size();) {
    std::size_t j = i;
    bool any = false;
    for (; j < reports.size() && reports[j].id == reports[i].id; ++j) any |= reports[j].status != Status::Skipped;
    if (!any) out.push_back(reports[i].id);
    i = j;
  }
  return out;
}

}  // namespace qverify
