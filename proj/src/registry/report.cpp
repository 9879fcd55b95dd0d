#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

#include "qverify/registry.hpp"

namespace qverify {

namespace {

nlohmann::ordered_json params_json(const ParamAssignment& p) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [name, v] : p.values()) out[name] = v.str();
  return out;
}

}  // namespace

std::string report_json(const std::vector<VerificationReport>& reports, const SuiteOptions& options,
                        const std::string& timestamp) {
  nlohmann::ordered_json doc;
  doc["metadata"] = {{"N", options.order},
                     {"seed", options.seed},
                     {"samples", options.samples},
                     {"strategy", to_string(options.strategy)},
                     {"filter", options.filter},
                     {"timestamp", timestamp}};
  auto& list = doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["sample"] = r.sample;
    j["params"] = params_json(r.params);
    if (r.strategy == Strategy::Numeric) j["q"] = r.params.numeric_q().str();
    j["strategy"] = to_string(r.strategy);
    j["status"] = to_string(r.status);
    if (r.mismatch) {
      j["mismatch"] = {{"exponent", r.mismatch->exponent ? r.mismatch->exponent->str() : ""},
                       {"lhs", r.mismatch->lhs},
                       {"rhs", r.mismatch->rhs}};
    } else {
      j["mismatch"] = nullptr;
    }
    j["reason"] = r.reason;
    j["note"] = r.note;
    j["millis"] = static_cast<long long>(r.millis);
    list.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string report_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  std::map<Status, int> counts;
  for (const auto& r : reports) {
    ++counts[r.status];
    os << std::left << std::setw(20) << r.id << " #" << r.sample << "  " << std::setw(8) << to_string(r.strategy)
       << std::setw(9) << to_string(r.status);
    if (!r.params.values().empty()) os << "  " << r.params.str();
    if (r.strategy == Strategy::Numeric) os << "  q=" << r.params.numeric_q().str();
    if (r.mismatch) {
      if (r.mismatch->exponent) os << "  at q^" << r.mismatch->exponent->str();
      os << "  lhs=" << r.mismatch->lhs << " rhs=" << r.mismatch->rhs;
    }
    if (!r.reason.empty()) os << "  (" << r.reason << ")";
    if (!r.note.empty()) os << "  [" << r.note << "]";
    os << '\n';
  }
  os << counts[Status::Equal] << " equal, " << counts[Status::Mismatch] << " mismatch, " << counts[Status::Skipped]
     << " skipped\n";
  for (const auto& id : unverified_ids(reports)) os << "no successful strategy: " << id << '\n';
  return os.str();
}

}  // namespace qverify
