#pragma once

#include <string>

#include <json.hpp>

namespace dbo {

using ojson = nlohmann::ordered_json;

/// Structured result of a norm scan or verification experiment. The document
/// keeps a fixed key order so repeated runs serialize byte-identically.
struct Report {
  ojson doc;

  std::string kind() const { return doc.value("kind", ""); }
  std::string verdict() const { return doc.value("verdict", ""); }

  bool passed() const {
    const std::string v = verdict();
    return v == "pass" || v == "consistent-with-membership" || v == "hypothesis-unmet" ||
           v == "no-divergence-evidence";
  }

  std::string dump(int indent = 2) const { return doc.dump(indent) + "\n"; }
};

}  // namespace dbo
