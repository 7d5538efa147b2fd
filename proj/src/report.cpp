#include "liskron/report.hpp"

namespace liskron {

std::string target_name(VerifyTarget t) {
  switch (t) {
    case VerifyTarget::c1: return "C1";
    case VerifyTarget::ineq3: return "Ineq3";
    case VerifyTarget::c3: return "C3";
    case VerifyTarget::c4: return "C4";
    case VerifyTarget::t1: return "T1";
    case VerifyTarget::es: return "ES";
    case VerifyTarget::table_validation: return "TableValidation";
  }
  return "?";
}

std::string status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::verified: return "verified";
    case VerifyStatus::counterexample: return "counterexample";
    case VerifyStatus::error: return "error";
  }
  return "?";
}

void VerificationReport::set_config(const std::string& key,
                                    const std::string& value) {
  for (auto& kv : config) {
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  }
  config.emplace_back(key, value);
}

nlohmann::ordered_json VerificationReport::to_json(bool include_elapsed) const {
  nlohmann::ordered_json j;
  j["target"] = target_name(target);
  j["n"] = n;
  j["status"] = status_name(status);
  auto ws = nlohmann::ordered_json::array();
  for (const auto& w : witnesses) {
    nlohmann::ordered_json wj;
    wj["k"] = w.k;
    if (w.nu) wj["nu"] = w.nu->str();
    wj["lhs"] = w.lhs;
    wj["rhs"] = w.rhs;
    if (!w.detail.empty()) wj["detail"] = w.detail;
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  if (include_elapsed) j["elapsed_ms"] = elapsed_ms;
  auto cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config) cfg[key] = value;
  j["config"] = std::move(cfg);
  return j;
}

std::string VerificationReport::to_text() const {
  std::string out = target_name(target) + "  n=" + std::to_string(n) + "  " +
                    status_name(status) + "  (" + std::to_string(elapsed_ms) +
                    " ms)";
  for (const auto& [key, value] : config) {
    out += "\n  " + key + ": " + value;
  }
  for (const auto& w : witnesses) {
    out += "\n  witness k=" + std::to_string(w.k);
    if (w.nu) out += " nu=" + w.nu->str();
    out += " lhs=" + w.lhs + " rhs=" + w.rhs;
    if (!w.detail.empty()) out += "  [" + w.detail + "]";
  }
  out += '\n';
  return out;
}

}  // namespace liskron
