#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "liskron/partition.hpp"

namespace liskron {

enum class VerifyTarget { c1, ineq3, c3, c4, t1, es, table_validation };
enum class VerifyStatus { verified, counterexample, error };

std::string target_name(VerifyTarget t);
std::string status_name(VerifyStatus s);

// One failed (or otherwise notable) comparison. lhs/rhs are exact integers
// kept as decimal strings; for counterexamples lhs > rhs, or the negative
// Schur coefficient sits in lhs with rhs = "0".
struct VerifyWitness {
  int k = 0;
  std::optional<Partition> nu;
  std::string lhs;
  std::string rhs;
  std::string detail;  // extra identification for table/ES findings
};

struct VerificationReport {
  VerifyTarget target = VerifyTarget::c1;
  int n = 0;
  VerifyStatus status = VerifyStatus::verified;
  std::vector<VerifyWitness> witnesses;
  std::int64_t elapsed_ms = 0;
  // echo of the inputs and per-target notes, in insertion order
  std::vector<std::pair<std::string, std::string>> config;

  bool verified() const { return status == VerifyStatus::verified; }
  void set_config(const std::string& key, const std::string& value);

  // Wall time is inherently nondeterministic, so determinism checks compare
  // reports serialized without it.
  nlohmann::ordered_json to_json(bool include_elapsed = true) const;
  std::string to_text() const;
};

}  // namespace liskron
