#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spexcess/analysis.hpp"
#include "spexcess/classify.hpp"
#include "spexcess/theorems.hpp"

namespace spexcess {

inline constexpr int kSchemaVersion = 1;

/// Rounds to 15 significant digits; non-finite values become null.
nlohmann::json number(double value);

nlohmann::json to_json(const TheoremReport& report, bool include_witnesses);
nlohmann::json to_json(const Classification& c);

/// The full analysis document (schemaVersion 1).
nlohmann::json analysis_report(const Analysis& a, const Classification& c,
                               const std::vector<TheoremReport>& reports,
                               bool include_witnesses = false);

/// Plain-text digest of the same content.
std::string pretty_summary(const Analysis& a, const Classification& c,
                           const std::vector<TheoremReport>& reports);

}  // namespace spexcess
