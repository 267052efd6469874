#include "sphereconf/analysis.hpp"

#include <functional>

#include "sphereconf/chords.hpp"
#include "sphereconf/frames.hpp"
#include "sphereconf/report.hpp"
#include "sphereconf/spectrum.hpp"
#include "sphereconf/symmetry.hpp"

namespace sphereconf {

namespace {

void section(AnalysisResult& result, const char* name, const std::function<nlohmann::json()>& body) {
  try {
    result.report[name] = body();
  } catch (const HypothesisViolation& e) {
    result.report[name] = {{"error", e.what()}, {"hypothesis", e.hypothesis()}};
    result.hypothesis_failures.push_back(std::string(name) + ": " + e.hypothesis());
  } catch (const StructuralError& e) {
    result.report[name] = {{"error", e.what()}, {"hypothesis", "structure"}};
    result.hypothesis_failures.push_back(std::string(name) + ": structure");
  }
}

}  // namespace

AnalysisResult analyze(const PointConfigd& config, const Tolerances& tol) {
  tol.check();
  AnalysisResult result;
  const auto& c = config.center();
  result.report["input"] = {{"dimension", config.dimension()},
                            {"count", config.size()},
                            {"radius", config.radius()},
                            {"center", std::vector<double>(c.data(), c.data() + c.size())}};
  result.report["tolerances"] = to_json(tol);
  result.report["validation"] = to_json(validate(config, tol));

  section(result, "chords", [&] {
    const auto chords = analyze_chords(config, tol);
    auto j = to_json(chords);
    j["routes_agree"] = routes_agree(chords, tol);
    j["corollary"] = to_json(check_corollary(config, chords, tol));
    return j;
  });

  const auto checks = run_all_checks(config, tol);
  result.report["symmetry"] = to_json(checks);

  section(result, "spectrum", [&] { return to_json(distance_spectrum(config, tol)); });

  if (checks.antipodal_symmetric) {
    section(result, "symmetric_sum", [&] {
      auto j = to_json(check_symmetric_sum(config, tol));
      j["passes"] = j["residual"].get<double>() <= tol.identity_tol * std::max(1.0, j["expected"].get<double>());
      return j;
    });
  } else if (checks.distance_profile_homogeneous && checks.centroid_at_origin) {
    section(result, "symmetrization", [&] { return to_json(symmetrization_bounds(config, tol)); });
  }

  section(result, "frames", [&] {
    auto j = to_json(analyze_frames(config, tol));
    j["triple_agreement"] =
        j["discrepancy"].get<double>() <= tol.identity_tol * std::max(1.0, j["fp_naive"].get<double>());
    return j;
  });
  return result;
}

}  // namespace sphereconf
