#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sphereconf/core.hpp"

namespace sphereconf {

struct AnalysisResult {
  nlohmann::json report;
  // "section: hypothesis" for every section skipped on a hypothesis violation
  std::vector<std::string> hypothesis_failures;
};

/// Runs every analysis that applies to `config` and collects the reports.
/// Sections whose hypotheses fail carry {"error", "hypothesis"} instead of a
/// report; failing identities are data, not errors.
AnalysisResult analyze(const PointConfigd& config, const Tolerances& tol);

}  // namespace sphereconf
