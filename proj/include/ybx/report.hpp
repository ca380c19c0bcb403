#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace ybx {

/// Outcome of a verifier: pass/fail plus a bounded list of mismatch descriptions.
struct Report {
  std::string check;     // short verifier name, e.g. "te-rrrr"
  std::string identity;  // the identity being verified, in words
  bool pass = true;
  long cases = 0;
  std::vector<std::string> mismatches;
  nlohmann::json detail = nlohmann::json::object();
  nlohmann::json summary = nlohmann::json::object();  // extra top-level keys such as lhs_terms

  static constexpr std::size_t kMaxMismatches = 64;

  void fail(std::string what) {
    pass = false;
    if (mismatches.size() < kMaxMismatches) mismatches.push_back(std::move(what));
  }

  /// Folds a sub-report into this one (cases add up, first mismatches kept).
  void absorb(const Report& sub) {
    cases += sub.cases;
    if (!sub.pass) pass = false;
    for (const auto& m : sub.mismatches) {
      if (mismatches.size() >= kMaxMismatches) break;
      mismatches.push_back(m);
    }
  }

  nlohmann::json to_json() const {
    nlohmann::json out = {{"schema", "ybx/1"},   {"check", check},           {"identity", identity}, {"equal", pass},
                          {"cases", cases},      {"mismatches", mismatches}, {"detail", detail}};
    for (const auto& [key, value] : summary.items()) out[key] = value;
    return out;
  }
};

}  // namespace ybx
