#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "sphereconf/core.hpp"

namespace sphereconf {

template <typename Scalar>
struct AntipodalCheck {
  bool symmetric;
  Scalar worst_deviation;  // max over P of the distance from -P to its nearest point
};

template <typename Scalar>
struct ProfileCheck {
  bool homogeneous;
  Scalar max_deviation;  // entrywise, on sorted squared-distance profiles
};

template <typename Scalar>
struct SymmetryChecks {
  bool antipodal_symmetric;
  bool distance_profile_homogeneous;
  bool centroid_at_origin;
  Scalar worst_antipode_deviation;
  Scalar profile_max_deviation;
};

namespace detail {

template <typename Scalar>
AntipodalCheck<Scalar> antipodal_deviation(const PointConfig<Scalar>& config, const Tolerances& tol) {
  using std::sqrt;
  const auto& pts = config.points();
  Scalar worst(0);
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    Scalar nearest = std::numeric_limits<Scalar>::infinity();
    for (Eigen::Index j = 0; j < config.size(); ++j) {
      Scalar s(0);
      for (Eigen::Index c = 0; c < config.dimension(); ++c) {
        const Scalar sum = pts(c, i) + pts(c, j);
        s += sum * sum;
      }
      nearest = std::min(nearest, s);
    }
    worst = std::max(worst, sqrt(nearest));
  }
  return {worst <= Scalar(tol.dedup_tol), worst};
}

/// Sorted squared distances from point `i` to every other point.
template <typename Scalar>
void distance_profile(const PointConfig<Scalar>& config, Eigen::Index i, std::vector<Scalar>& out) {
  out.clear();
  for (Eigen::Index j = 0; j < config.size(); ++j) {
    if (j != i) out.push_back(squared_distance(config.point(i), config.point(j)));
  }
  std::sort(out.begin(), out.end());
}

}  // namespace detail

/// Whether the configuration is closed under P -> -P, up to dedup_tol in
/// Euclidean distance.
template <typename Scalar>
AntipodalCheck<Scalar> check_antipodal(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  if (!config.center().isZero(Scalar(0))) {
    throw HypothesisViolation("center_at_origin", "antipodal check requires the sphere centered at the origin");
  }
  return detail::antipodal_deviation(config, tol);
}

/// Every point of a vertex-transitive configuration sees the same multiset of
/// distances to the others. Passing this check is necessary, not sufficient.
template <typename Scalar>
ProfileCheck<Scalar> check_transitive_necessary(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  using std::abs;
  if (config.size() < 2) return {true, Scalar(0)};
  std::vector<Scalar> reference;
  std::vector<Scalar> profile;
  detail::distance_profile(config, 0, reference);
  Scalar worst(0);
  for (Eigen::Index i = 1; i < config.size(); ++i) {
    detail::distance_profile(config, i, profile);
    for (std::size_t t = 0; t < profile.size(); ++t) worst = std::max(worst, abs(profile[t] - reference[t]));
  }
  return {worst <= Scalar(tol.dedup_tol), worst};
}

template <typename Scalar>
SymmetryChecks<Scalar> run_all_checks(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  const auto antipodal = detail::antipodal_deviation(config, tol);
  const auto profile = check_transitive_necessary(config, tol);
  const bool origin_centered = config.center().isZero(Scalar(0));
  const Scalar d = centroid(config).coords.norm();
  return {antipodal.symmetric && origin_centered, profile.homogeneous, d <= Scalar(tol.dedup_tol),
          antipodal.worst_deviation, profile.max_deviation};
}

}  // namespace sphereconf
