#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "sphereconf/core.hpp"
#include "sphereconf/symmetry.hpp"

namespace sphereconf {

/// Distinct squared chord lengths of a point set.
///
/// Squared lengths are clustered by single linkage on the sorted values: a new
/// cluster starts whenever the gap to the previous value exceeds dedup_tol.
/// Each cluster is represented by the mean of its members. Clusters whose
/// representative is within dedup_tol of zero are not chord lengths; their
/// pairs are counted in `zero_length_pairs` instead.
template <typename Scalar>
struct DistanceSpectrum {
  std::vector<Scalar> squared_lengths;
  std::vector<std::int64_t> multiplicities;
  std::int64_t k = 0;
  bool has_diameter = false;
  Scalar sum_of_squares = 0;
  std::int64_t zero_length_pairs = 0;
  double dedup_tol = 0;
};

template <typename Scalar>
struct PythagoreanPair {
  Scalar d_squared;
  Scalar e_squared;
  Scalar residual;  // |d^2 + e^2 - 4|
};

/// Pairs each non-diameter squared length d^2 with the spectrum value nearest
/// to 4 - d^2. On an antipodally symmetric set the partner is the squared
/// distance to the antipode of the far endpoint.
template <typename Scalar>
struct PythagoreanPairing {
  std::vector<PythagoreanPair<Scalar>> pairs;
  Scalar max_residual = 0;
};

template <typename Scalar>
struct SymmetricSumCheck {
  DistanceSpectrum<Scalar> spectrum;
  Scalar expected;  // 2k + 2
  Scalar residual;  // |sum_of_squares - expected|
  PythagoreanPairing<Scalar> pairing;
};

struct HypothesisFlags {
  bool antipodal_symmetric;
  bool transitivity_necessary;
  bool centroid_at_origin;
};

template <typename Scalar>
struct SymmetrizationReport {
  std::int64_t original_k;
  DistanceSpectrum<Scalar> antisym_spectrum;
  std::int64_t r;
  std::vector<Scalar> new_squared_lengths;  // non-diameter lengths of V u -V missing from V
  Scalar lower_bound;                       // 2k - 2r
  Scalar upper_bound;                       // 2k + 2r
  Scalar sum_of_squares;
  HypothesisFlags hypothesis_checks;
  bool bounds_hold;
};

namespace detail {

template <typename Scalar>
std::vector<std::pair<Scalar, std::int64_t>> cluster_sorted(const std::vector<Scalar>& sorted, double tol) {
  std::vector<std::pair<Scalar, std::int64_t>> clusters;
  Scalar total(0);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] - sorted[i - 1] > Scalar(tol)) {
      clusters.emplace_back(total / static_cast<Scalar>(count), count);
      total = 0;
      count = 0;
    }
    total += sorted[i];
    ++count;
  }
  if (count > 0) clusters.emplace_back(total / static_cast<Scalar>(count), count);
  return clusters;
}

template <typename Scalar>
bool contains_within(const std::vector<Scalar>& sorted, Scalar value, double tol) {
  using std::abs;
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value - Scalar(tol));
  return it != sorted.end() && abs(*it - value) <= Scalar(tol);
}

template <typename Scalar>
Scalar nearest_value(const std::vector<Scalar>& sorted, Scalar value) {
  using std::abs;
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it == sorted.end()) return sorted.back();
  if (it == sorted.begin()) return *it;
  const Scalar above = *it;
  const Scalar below = *(it - 1);
  return abs(above - value) < abs(value - below) ? above : below;
}

}  // namespace detail

template <typename Scalar>
DistanceSpectrum<Scalar> distance_spectrum(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  using std::abs;
  tol.check();
  if (config.size() < 2) throw StructuralError("a distance spectrum needs at least two points");
  const auto& pts = config.points();
  std::vector<Scalar> values;
  values.reserve(static_cast<std::size_t>(config.size() * (config.size() - 1) / 2));
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    for (Eigen::Index j = i + 1; j < config.size(); ++j) {
      const Scalar s = squared_distance(pts.col(i), pts.col(j));
      if (s == Scalar(0) && (pts.col(i).array() == pts.col(j).array()).all()) {
        throw HypothesisViolation("distinct_points", "points " + std::to_string(i) + " and " + std::to_string(j) +
                                                         " coincide; the spectrum is defined on sets");
      }
      values.push_back(s);
    }
  }
  std::sort(values.begin(), values.end());

  DistanceSpectrum<Scalar> spectrum;
  spectrum.dedup_tol = tol.dedup_tol;
  for (const auto& [value, count] : detail::cluster_sorted(values, tol.dedup_tol)) {
    if (value <= Scalar(tol.dedup_tol)) {
      spectrum.zero_length_pairs += count;
      continue;
    }
    spectrum.squared_lengths.push_back(value);
    spectrum.multiplicities.push_back(count);
    spectrum.sum_of_squares += value;
  }
  spectrum.k = static_cast<std::int64_t>(spectrum.squared_lengths.size());
  const Scalar diameter2 = Scalar(4) * config.radius() * config.radius();
  spectrum.has_diameter =
      !spectrum.squared_lengths.empty() && abs(spectrum.squared_lengths.back() - diameter2) <= Scalar(tol.dedup_tol);
  return spectrum;
}

template <typename Scalar>
PythagoreanPairing<Scalar> pythagorean_pairing(const DistanceSpectrum<Scalar>& spectrum) {
  using std::abs;
  PythagoreanPairing<Scalar> pairing;
  const auto& lengths = spectrum.squared_lengths;
  for (const Scalar d2 : lengths) {
    if (abs(d2 - Scalar(4)) <= Scalar(spectrum.dedup_tol)) continue;
    const Scalar e2 = detail::nearest_value(lengths, Scalar(4) - d2);
    const Scalar residual = abs(d2 + e2 - Scalar(4));
    pairing.pairs.push_back({d2, e2, residual});
    pairing.max_residual = std::max(pairing.max_residual, residual);
  }
  return pairing;
}

/// V u -V. The points of V are kept as given; an antipode is added unless it
/// matches an existing point, first by its coordinates rounded to 12 decimals
/// and then by Euclidean distance within dedup_tol. Output order is V followed
/// by the new antipodes in input order.
template <typename Scalar>
PointConfig<Scalar> antipodal_symmetrize(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  using std::llround;
  using std::sqrt;
  if (!config.center().isZero(Scalar(0))) {
    throw HypothesisViolation("center_at_origin", "antipodal symmetrization requires the sphere centered at the origin");
  }
  const Eigen::Index n = config.dimension();
  auto key_of = [n](const auto& p) {
    std::vector<long long> key(static_cast<std::size_t>(n));
    for (Eigen::Index c = 0; c < n; ++c) key[static_cast<std::size_t>(c)] = llround(static_cast<double>(p(c)) * 1e12);
    return key;
  };

  std::set<std::vector<long long>> seen;
  std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> kept;
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    kept.emplace_back(config.point(i));
    seen.insert(key_of(config.point(i)));
  }
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> anti = -config.point(i);
    auto key = key_of(anti);
    if (seen.count(key) > 0) continue;
    bool merged = false;
    for (const auto& p : kept) {
      if (sqrt(squared_distance(p, anti)) <= Scalar(tol.dedup_tol)) {
        merged = true;
        break;
      }
    }
    if (merged) continue;
    seen.insert(std::move(key));
    kept.push_back(anti);
  }

  typename PointConfig<Scalar>::Matrix out(n, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = kept[i];
  return PointConfig<Scalar>(std::move(out), config.center(), config.radius());
}

/// The distinct-distance identity for antipodally symmetric, vertex-transitive
/// sets on the unit sphere: the squared distinct lengths sum to 2k + 2.
template <typename Scalar>
SymmetricSumCheck<Scalar> check_symmetric_sum(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  using std::abs;
  require_unit_sphere_at_origin(config, tol);
  const auto antipodal = check_antipodal(config, tol);
  if (!antipodal.symmetric) {
    throw HypothesisViolation("antipodal_symmetric",
                              "configuration is not closed under the antipodal map (worst deviation " +
                                  std::to_string(static_cast<double>(antipodal.worst_deviation)) + ")");
  }
  const auto profile = check_transitive_necessary(config, tol);
  if (!profile.homogeneous) {
    throw HypothesisViolation("transitivity_necessary",
                              "distance profiles differ between points (max deviation " +
                                  std::to_string(static_cast<double>(profile.max_deviation)) + ")");
  }
  auto spectrum = distance_spectrum(config, tol);
  const Scalar expected = Scalar(2 * spectrum.k + 2);
  const Scalar residual = abs(spectrum.sum_of_squares - expected);
  auto pairing = pythagorean_pairing(spectrum);
  return {std::move(spectrum), expected, residual, std::move(pairing)};
}

/// Computes k, r and the 2k -/+ 2r bounds without enforcing the hypotheses
/// under which the bounds are guaranteed; the flags record which hold.
template <typename Scalar>
SymmetrizationReport<Scalar> compute_symmetrization(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  using std::abs;
  using std::max;
  require_unit_sphere_at_origin(config, tol);
  const auto checks = run_all_checks(config, tol);
  const auto original = distance_spectrum(config, tol);
  auto anti = distance_spectrum(antipodal_symmetrize(config, tol), tol);

  SymmetrizationReport<Scalar> report{};
  report.original_k = original.k;
  for (const Scalar value : anti.squared_lengths) {
    if (abs(value - Scalar(4)) <= Scalar(tol.dedup_tol)) continue;
    if (!detail::contains_within(original.squared_lengths, value, tol.dedup_tol)) {
      report.new_squared_lengths.push_back(value);
    }
  }
  report.r = static_cast<std::int64_t>(report.new_squared_lengths.size());
  report.antisym_spectrum = std::move(anti);
  report.lower_bound = Scalar(2 * report.original_k - 2 * report.r);
  report.upper_bound = Scalar(2 * report.original_k + 2 * report.r);
  report.sum_of_squares = original.sum_of_squares;
  report.hypothesis_checks = {checks.antipodal_symmetric, checks.distance_profile_homogeneous,
                              checks.centroid_at_origin};
  const Scalar slack = Scalar(tol.identity_tol) * max(Scalar(1), report.upper_bound);
  report.bounds_hold =
      report.lower_bound - slack <= report.sum_of_squares && report.sum_of_squares <= report.upper_bound + slack;
  return report;
}

/// Bounds on the distinct-distance sum of a set that is vertex-transitive but
/// not antipodally symmetric, via its antipodal symmetrization. The hypothesis
/// that the center is the only point fixed by every symmetry is checked through
/// the necessary condition that the centroid sits at the origin.
template <typename Scalar>
SymmetrizationReport<Scalar> symmetrization_bounds(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  auto report = compute_symmetrization(config, tol);
  const auto& flags = report.hypothesis_checks;
  if (flags.antipodal_symmetric) {
    throw AdvisoryError("not_antipodal_symmetric",
                        "configuration is already antipodally symmetric; use check_symmetric_sum");
  }
  if (!flags.transitivity_necessary) {
    throw HypothesisViolation("transitivity_necessary", "distance profiles differ between points");
  }
  if (!flags.centroid_at_origin) {
    throw HypothesisViolation("centroid_at_origin", "centroid is not at the origin");
  }
  if (report.r > report.original_k) {
    throw Error("r = " + std::to_string(report.r) + " exceeds k = " + std::to_string(report.original_k));
  }
  return report;
}

}  // namespace sphereconf
