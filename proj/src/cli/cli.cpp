#include "qverify/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qverify/error.hpp"
#include "qverify/pte.hpp"
#include "qverify/registry.hpp"

namespace qverify {

namespace {

/// Bad input detected after parsing; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string id;
  std::string filter;
  long order = 40;
  std::uint64_t seed = 1;
  int samples = 3;
  std::string strategy = "auto";
  std::string format = "text";
  std::string out;
  std::string params_file;
  unsigned threads = 0;
  std::optional<long> fault;
  std::string a, b;
  int k = 0;
  std::string family = "6";
  std::string m = "1", n = "2", K = "0";
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Rational rational_arg(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("--") + flag + ": not a rational: '" + text + "'");
  }
}

Multiset multiset_arg(const std::string& text, const char* flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(rational_arg(item, flag));
  if (out.empty()) throw UsageError(std::string("--") + flag + " is empty");
  return out;
}

Strategy strategy_arg(const std::string& text) {
  try {
    return parse_strategy(text);
  } catch (const QError&) {
    throw UsageError("--strategy must be exact, numeric or auto");
  }
}

/// JSON object of symbol -> value string; the key "q" sets the numeric q.
ParamAssignment read_params(const std::string& path, const IdentityRecord& r) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (!doc.is_object()) throw UsageError(path + ": expected an object of symbol -> value strings");
  ParamAssignment p;
  for (const auto& [key, value] : doc.items()) {
    const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    try {
      if (key == "q") {
        p.set_numeric_q(Rational::parse(text));
      } else {
        p.set(key, ParamValue::parse(text));
      }
    } catch (const std::exception& e) {
      throw UsageError(path + ": " + key + ": " + e.what());
    }
  }
  for (const auto& spec : r.schema) {
    if (!p.has(spec.symbol)) throw UsageError(path + ": missing symbol '" + spec.symbol + "'");
  }
  return p;
}

void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

SuiteOptions suite_options(const Config& c) {
  SuiteOptions o;
  o.filter = c.filter;
  o.order = c.order;
  o.seed = c.seed;
  o.samples = c.samples;
  o.strategy = strategy_arg(c.strategy);
  o.threads = c.threads;
  o.fault = c.fault;
  return o;
}

int finish(const Config& c, const std::vector<VerificationReport>& reports, const SuiteOptions& o,
           std::ostream& out) {
  emit(c, c.format == "json" ? report_json(reports, o, utc_timestamp()) : report_text(reports), out);
  const bool mismatch = std::any_of(reports.begin(), reports.end(),
                                    [](const auto& r) { return r.status == Status::Mismatch; });
  return mismatch ? kExitFailure : kExitOk;
}

int cmd_list(const Config& c, std::ostream& out) {
  std::ostringstream os;
  if (c.format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& r : catalog()) {
      nlohmann::ordered_json params = nlohmann::ordered_json::array();
      for (const auto& s : r.schema) params.push_back(s.symbol);
      doc.push_back({{"id", r.id}, {"group", r.group}, {"anchor", r.anchor}, {"params", params}});
    }
    os << doc.dump(2) << '\n';
  } else {
    for (const auto& r : catalog()) os << r.id << '\t' << r.group << '\t' << r.anchor << '\n';
  }
  emit(c, os.str(), out);
  return kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const IdentityRecord* r = lookup(c.id);
  if (r == nullptr) throw UsageError("unknown identity '" + c.id + "' (see `list`)");
  SuiteOptions o = suite_options(c);
  o.filter = c.id;
  VerifyOptions vo;
  vo.strategy = o.strategy;
  vo.fault = c.fault;
  std::vector<VerificationReport> reports;
  if (!c.params_file.empty()) {
    reports.push_back(verify_one(*r, read_params(c.params_file, *r), c.order, vo));
  } else {
    const Strategy sampling = o.strategy == Strategy::Numeric ? Strategy::Numeric : Strategy::Exact;
    const auto samples = sample_params(c.id, c.seed, c.samples, sampling);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      reports.push_back(verify_one(*r, samples[i], c.order, vo));
      reports.back().sample = static_cast<int>(i);
    }
  }
  return finish(c, reports, o, out);
}

int cmd_suite(const Config& c, std::ostream& out) {
  const SuiteOptions o = suite_options(c);
  return finish(c, verify_suite(o), o, out);
}

int cmd_pte_check(const Config& c, std::ostream& out) {
  const Multiset a = multiset_arg(c.a, "a"), b = multiset_arg(c.b, "b");
  if (a.size() != b.size()) throw UsageError("--a and --b must have the same size");
  const int k = c.k > 0 ? c.k : static_cast<int>(a.size()) - 1;
  std::ostringstream os;
  os << "A = " << a.str() << "\nB = " << b.str() << '\n';
  for (int e = 1; e <= k; ++e) {
    os << "e=" << e << "  " << power_sums(a, e).str() << "  " << power_sums(b, e).str() << '\n';
  }
  const PteResult r = check_pte(a, b, k);
  if (r.holds) {
    os << "power sums agree for e = 1.." << k << '\n';
  } else {
    os << "failure at e=" << *r.first_failure << '\n';
  }
  const IdealPolyResult poly = check_ideal_poly(a, b);
  os << "prod(Z - a) - prod(Z - b) "
     << (poly.constant ? "is the constant " + poly.difference.str() : std::string("is not constant")) << '\n';
  emit(c, os.str(), out);
  return r.holds ? kExitOk : kExitFailure;
}

int cmd_pte_family(const Config& c, std::ostream& out) {
  FamilyPoint p;
  p.m = rational_arg(c.m, "m");
  p.n = rational_arg(c.n, "n");
  p.shift = rational_arg(c.K, "K");
  int degree = 5;
  if (c.family == "6") {
    p.family = Family::Degree6Raw;
  } else if (c.family == "6n") {
    p.family = Family::Degree6Normalized;
  } else if (c.family == "12") {
    p.family = Family::Degree12;
    degree = 11;
  } else if (c.family == "12n") {
    p.family = Family::Degree12Normalized;
    degree = 11;
  } else {
    throw UsageError("--family must be 6, 6n, 12 or 12n");
  }
  std::ostringstream os;
  bool ok = true;
  try {
    const FamilyPair f = family_pair(p);
    const bool normalized = p.family == Family::Degree6Normalized || p.family == Family::Degree12Normalized;
    const Multiset b = normalized ? f.b.with(1) : f.b;
    os << "A = " << f.a.str() << "\nB = " << b.str() << '\n';
    const PteResult r = check_pte(f.a, b, degree);
    ok = r.holds;
    os << "degree " << degree << ": " << (r.holds ? "holds" : "fails at e=" + std::to_string(*r.first_failure))
       << '\n';
    if (normalized) {
      const bool cond = check_6abmeq(f.a, f.b);
      ok = ok && cond;
      os << "prod(Z - a) - (Z - 1) prod(Z - b) = prod(1 - a): " << (cond ? "holds" : "fails") << '\n';
    }
  } catch (const QError& e) {
    if (e.kind() == ErrorKind::BadParameter) throw UsageError(e.what());
    os << e.what() << '\n';
    ok = false;
  }
  emit(c, os.str(), out);
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric verification of q-series identities"};
  app.require_subcommand(1);
  Config c;

  auto common = [&c](CLI::App* s) {
    s->add_option("--order", c.order, "truncation order N")->check(CLI::PositiveNumber);
    s->add_option("--seed", c.seed, "sampler seed");
    s->add_option("--samples", c.samples, "assignments per identity")->check(CLI::PositiveNumber);
    s->add_option("--strategy", c.strategy, "exact, numeric or auto");
    s->add_option("--fault", c.fault, "multiply every right side by (1 + q^J)");
  };
  auto output = [&c](CLI::App* s) {
    s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--out", c.out, "write the report here instead of stdout");
  };

  CLI::App* list = app.add_subcommand("list", "catalog ids with their anchors");
  output(list);

  CLI::App* verify = app.add_subcommand("verify", "check one identity");
  verify->add_option("--id", c.id, "catalog id")->required();
  verify->add_option("--params", c.params_file, "JSON object of symbol -> value strings");
  common(verify);
  output(verify);

  CLI::App* suite = app.add_subcommand("suite", "check every matching identity");
  suite->add_option("--filter", c.filter, "glob over ids and groups, case-insensitive");
  suite->add_option("--threads", c.threads, "worker threads (0: all cores)");
  common(suite);
  output(suite);

  CLI::App* pte_check = app.add_subcommand("pte-check", "compare power sums of two multisets");
  pte_check->add_option("--a", c.a, "comma-separated rationals")->required();
  pte_check->add_option("--b", c.b, "comma-separated rationals")->required();
  pte_check->add_option("--k", c.k, "highest power (default: size - 1)")->check(CLI::PositiveNumber);
  output(pte_check);

  CLI::App* pte_family = app.add_subcommand("pte-family", "instantiate a parametric ideal family");
  pte_family->add_option("--family", c.family, "6, 6n, 12 or 12n");
  pte_family->add_option("--m", c.m, "first parameter");
  pte_family->add_option("--n", c.n, "second parameter (degree 6 only)");
  pte_family->add_option("--K", c.K, "additive constant of the raw families");
  output(pte_family);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*list) return cmd_list(c, out);
    if (*verify) return cmd_verify(c, out);
    if (*suite) return cmd_suite(c, out);
    if (*pte_check) return cmd_pte_check(c, out);
    if (*pte_family) return cmd_pte_family(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const QError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::SamplerExhausted ? kExitFailure : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qverify
