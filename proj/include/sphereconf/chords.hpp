#pragma once

#include <algorithm>
#include <cstdint>

#include "sphereconf/core.hpp"

namespace sphereconf {

/// Moment-of-inertia quantities of a configuration about its sphere center and
/// about its centroid. J(Q) is the sum of squared distances from the points to Q.
template <typename Scalar>
struct InertiaDecomposition {
  Scalar j_about_center;
  Scalar j_about_centroid;
  Scalar lagrange_residual;  // J(center) - J(centroid) - V d^2
  Scalar chord_sum;          // V J(centroid)
};

/// The sum of squared chord lengths by three independent routes.
///
/// `direct_sum` runs over unordered pairs i < j; the ordered-pair sum is twice
/// that. `expected_squared_chord` is E[|PQ|^2] for P, Q drawn independently
/// *with replacement* from the configuration: (2 / V^2) direct_sum, which is
/// 2 (1 - d^2) on the unit sphere (self pairs contribute zero-length chords).
template <typename Scalar>
struct ChordReport {
  std::int64_t pair_count;
  Scalar direct_sum;
  Scalar centroid_formula;
  Scalar inertia_formula;
  Scalar centroid_distance;
  Scalar max_abs_discrepancy;
  Scalar expected_squared_chord;
  Scalar lagrange_residual;
};

/// Sum of |P_i - P_j|^2 over i < j, accumulated in index order.
template <typename Scalar>
Scalar chord_sum_direct(const PointConfig<Scalar>& config) {
  Scalar sum(0);
  const auto& pts = config.points();
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    for (Eigen::Index j = i + 1; j < config.size(); ++j) sum += squared_distance(pts.col(i), pts.col(j));
  }
  return sum;
}

/// V^2 (r^2 - d^2), with d the centroid's distance to the sphere center. On
/// the unit sphere this is V^2 (1 - d^2); other radii are an extension.
template <typename Scalar>
Scalar chord_sum_centroid(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  require_on_sphere(config, tol);
  const auto v = static_cast<Scalar>(config.size());
  const Scalar d = centroid(config).distance_to_center;
  const Scalar r = config.radius();
  return v * v * (r * r - d * d);
}

template <typename Scalar>
InertiaDecomposition<Scalar> chord_sum_inertia(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  require_on_sphere(config, tol);
  const auto c = centroid(config);
  Scalar j_center(0);
  Scalar j_centroid(0);
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    j_center += squared_distance(config.point(i), config.center());
    j_centroid += squared_distance(config.point(i), c.coords);
  }
  const auto v = static_cast<Scalar>(config.size());
  const Scalar residual = j_center - j_centroid - v * c.distance_to_center * c.distance_to_center;
  return {j_center, j_centroid, residual, v * j_centroid};
}

template <typename Scalar>
ChordReport<Scalar> analyze_chords(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  using std::abs;
  tol.check();
  const Scalar direct = chord_sum_direct(config);
  const Scalar closed = chord_sum_centroid(config, tol);
  const auto inertia = chord_sum_inertia(config, tol);
  const Scalar d = centroid(config).distance_to_center;
  const Scalar r = config.radius();
  const auto v = static_cast<std::int64_t>(config.size());
  const Scalar discrepancy =
      std::max({abs(direct - closed), abs(direct - inertia.chord_sum), abs(closed - inertia.chord_sum)});
  return {v * (v - 1) / 2, direct, closed, inertia.chord_sum, d, discrepancy, Scalar(2) * (r * r - d * d),
          inertia.lagrange_residual};
}

/// True when the three routes agree within identity_tol * max(1, direct_sum).
template <typename Scalar>
bool routes_agree(const ChordReport<Scalar>& report, const Tolerances& tol) {
  using std::max;
  return report.max_abs_discrepancy <= Scalar(tol.identity_tol) * max(Scalar(1), report.direct_sum);
}

/// Checks the bound sum <= V^2 and both directions of its equality case, with
/// the tolerance carried across: d <= 1e-9 forces |sum - V^2| <= tol V^2, and
/// |sum - V^2| <= tol V^2 forces d <= 2 sqrt(tol).
struct CorollaryCheck {
  bool bound_holds;
  bool centroid_at_center;
  bool sum_attains_bound;
  bool equality_consistent;
};

template <typename Scalar>
CorollaryCheck check_corollary(const PointConfig<Scalar>& config, const ChordReport<Scalar>& report,
                               const Tolerances& tol) {
  using std::abs;
  using std::sqrt;
  const auto v = static_cast<Scalar>(config.size());
  const Scalar r2 = config.radius() * config.radius();
  const Scalar bound = v * v * r2;
  const Scalar slack = Scalar(tol.identity_tol) * bound;
  CorollaryCheck check{};
  check.bound_holds = report.direct_sum <= bound + slack;
  check.centroid_at_center = report.centroid_distance <= Scalar(1e-9);
  check.sum_attains_bound = abs(report.direct_sum - bound) <= slack;
  const bool forward = !check.centroid_at_center || check.sum_attains_bound;
  const bool backward = !check.sum_attains_bound || report.centroid_distance <= Scalar(2) * sqrt(Scalar(tol.identity_tol));
  check.equality_consistent = forward && backward;
  return check;
}

}  // namespace sphereconf
