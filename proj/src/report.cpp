#include "sphereconf/report.hpp"

#include <vector>

namespace sphereconf {

nlohmann::json to_json(const Tolerances& tol) {
  return {{"on_sphere_tol", tol.on_sphere_tol}, {"dedup_tol", tol.dedup_tol}, {"identity_tol", tol.identity_tol}};
}

nlohmann::json to_json(const ValidationReport<double>& report) {
  return {{"valid", report.valid()},
          {"deviations", report.deviations},
          {"flagged", report.flagged},
          {"worst_index", report.worst_index},
          {"worst_deviation", report.worst_deviation}};
}

nlohmann::json to_json(const ChordReport<double>& report) {
  return {{"pair_count", report.pair_count},
          {"direct_sum", report.direct_sum},
          {"centroid_formula", report.centroid_formula},
          {"inertia_formula", report.inertia_formula},
          {"centroid_distance", report.centroid_distance},
          {"max_abs_discrepancy", report.max_abs_discrepancy},
          {"expected_squared_chord", report.expected_squared_chord},
          {"lagrange_residual", report.lagrange_residual}};
}

nlohmann::json to_json(const CorollaryCheck& check) {
  return {{"bound_holds", check.bound_holds},
          {"centroid_at_center", check.centroid_at_center},
          {"sum_attains_bound", check.sum_attains_bound},
          {"equality_consistent", check.equality_consistent}};
}

nlohmann::json to_json(const DistanceSpectrum<double>& spectrum) {
  return {{"squared_lengths", spectrum.squared_lengths},
          {"multiplicities", spectrum.multiplicities},
          {"k", spectrum.k},
          {"has_diameter", spectrum.has_diameter},
          {"sum_of_squares", spectrum.sum_of_squares},
          {"zero_length_pairs", spectrum.zero_length_pairs},
          {"dedup_tol", spectrum.dedup_tol}};
}

nlohmann::json to_json(const PythagoreanPairing<double>& pairing) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : pairing.pairs) {
    pairs.push_back({{"d_squared", p.d_squared}, {"e_squared", p.e_squared}, {"residual", p.residual}});
  }
  return {{"pairs", std::move(pairs)}, {"max_residual", pairing.max_residual}};
}

nlohmann::json to_json(const SymmetricSumCheck<double>& check) {
  return {{"spectrum", to_json(check.spectrum)},
          {"sum_of_squares", check.spectrum.sum_of_squares},
          {"expected", check.expected},
          {"residual", check.residual},
          {"pairing", to_json(check.pairing)}};
}

nlohmann::json to_json(const SymmetrizationReport<double>& report) {
  const auto& h = report.hypothesis_checks;
  return {{"original_k", report.original_k},
          {"antisym_spectrum", to_json(report.antisym_spectrum)},
          {"r", report.r},
          {"new_squared_lengths", report.new_squared_lengths},
          {"lower_bound", report.lower_bound},
          {"upper_bound", report.upper_bound},
          {"sum_of_squares", report.sum_of_squares},
          {"hypothesis_checks",
           {{"antipodal_symmetric", h.antipodal_symmetric},
            {"transitivity_necessary", h.transitivity_necessary},
            {"centroid_at_origin", h.centroid_at_origin}}},
          {"bounds_hold", report.bounds_hold}};
}

nlohmann::json to_json(const SymmetryChecks<double>& checks) {
  return {{"antipodal_symmetric", checks.antipodal_symmetric},
          {"distance_profile_homogeneous", checks.distance_profile_homogeneous},
          {"centroid_at_origin", checks.centroid_at_origin},
          {"worst_antipode_deviation", checks.worst_antipode_deviation},
          {"profile_max_deviation", checks.profile_max_deviation}};
}

nlohmann::json to_json(const FrameReport<double>& report) {
  const Eigen::Index n = report.frame_operator.rows();
  std::vector<double> row_major;
  row_major.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) row_major.push_back(report.frame_operator(r, c));
  }
  return {{"fp_naive", report.fp_naive},
          {"fp_operator", report.fp_operator},
          {"fp_lifted", report.fp_lifted},
          {"frame_operator", row_major},
          {"frame_operator_dimension", n},
          {"is_tight", report.is_tight},
          {"discrepancy", report.discrepancy}};
}

}  // namespace sphereconf
