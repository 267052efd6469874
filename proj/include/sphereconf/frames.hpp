#pragma once

#include <algorithm>
#include <cmath>

#include "sphereconf/chords.hpp"
#include "sphereconf/core.hpp"

namespace sphereconf {

/// Frame potential FP = sum over ordered pairs (i, j), i == j included, of
/// <P_i, P_j>^2, evaluated three ways.
///
/// fp_operator is the squared Frobenius norm of the frame operator
/// S = sum_i P_i P_i^T; fp_lifted applies the chord-sum identity to the outer
/// products P_i P_i^T viewed as unit vectors in R^(n*n).
template <typename Scalar>
struct FrameReport {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Scalar fp_naive;
  Scalar fp_operator;
  Scalar fp_lifted;
  Matrix frame_operator;
  bool is_tight;
  Scalar discrepancy;
};

template <typename Scalar>
struct FrameOperatorResult {
  Scalar potential;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> frame_operator;
};

/// O(n V^2) double sum straight from the definition.
template <typename Scalar>
Scalar frame_potential_naive(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  require_unit_sphere_at_origin(config, tol);
  const auto& pts = config.points();
  Scalar fp(0);
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    for (Eigen::Index j = 0; j < config.size(); ++j) {
      const Scalar ip = pts.col(i).dot(pts.col(j));
      fp += ip * ip;
    }
  }
  return fp;
}

/// O(n^2 V): accumulates the upper triangle of S, then sums squared entries.
template <typename Scalar>
FrameOperatorResult<Scalar> frame_potential_operator(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  require_unit_sphere_at_origin(config, tol);
  const Eigen::Index n = config.dimension();
  const auto& pts = config.points();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> s = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Scalar x = pts(c, i);
      for (Eigen::Index r = 0; r <= c; ++r) s(r, c) += pts(r, i) * x;
    }
  }
  Scalar fp(0);
  for (Eigen::Index c = 0; c < n; ++c) {
    fp += s(c, c) * s(c, c);
    for (Eigen::Index r = 0; r < c; ++r) {
      fp += Scalar(2) * s(r, c) * s(r, c);
      s(c, r) = s(r, c);
    }
  }
  return {fp, std::move(s)};
}

/// Each point P mapped to its outer product P P^T, flattened column-major.
/// Outer products of unit vectors have unit Frobenius norm, so the result is
/// again a configuration on the unit sphere at the origin.
template <typename Scalar>
PointConfig<Scalar> lift_outer_products(const PointConfig<Scalar>& config) {
  const Eigen::Index n = config.dimension();
  typename PointConfig<Scalar>::Matrix lifted(n * n, config.size());
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    const auto p = config.point(i);
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index r = 0; r < n; ++r) lifted(c * n + r, i) = p(r) * p(c);
    }
  }
  return PointConfig<Scalar>(std::move(lifted));
}

/// Summing |P_i P_i^T - P_j P_j^T|_F^2 = 2 - 2 <P_i, P_j>^2 over ordered pairs
/// gives 2 V^2 - 2 FP, and the ordered sum is twice the unordered chord sum C,
/// so FP = V^2 - C.
template <typename Scalar>
Scalar frame_potential_lifted(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  require_unit_sphere_at_origin(config, tol);
  const auto v = static_cast<Scalar>(config.size());
  return v * v - chord_sum_direct(lift_outer_products(config));
}

/// (sum of every coordinate of every point)^2. This is NOT the frame
/// potential: it is the closed form sometimes quoted for it, kept so that its
/// disagreement with the definition can be demonstrated (orthonormal basis of
/// R^2: FP = 2, this gives 4).
template <typename Scalar>
Scalar coordinate_total_squared(const PointConfig<Scalar>& config) {
  const Scalar total = config.points().sum();
  return total * total;
}

/// Tight when S = (V/n) I entrywise within identity_tol * V / n.
template <typename Scalar>
bool is_tight_operator(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& frame_operator, Eigen::Index count,
                       const Tolerances& tol) {
  const Eigen::Index n = frame_operator.rows();
  const Scalar scale = static_cast<Scalar>(count) / static_cast<Scalar>(n);
  const Scalar deviation =
      (frame_operator - scale * Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n)).cwiseAbs().maxCoeff();
  return deviation <= Scalar(tol.identity_tol) * scale;
}

template <typename Scalar>
bool is_tight_frame(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  if (config.size() < config.dimension()) {
    throw AdvisoryError("spanning", std::to_string(config.size()) + " vectors cannot span R^" +
                                        std::to_string(config.dimension()));
  }
  const auto op = frame_potential_operator(config, tol);
  return is_tight_operator(op.frame_operator, config.size(), tol);
}

/// Fewer points than dimensions is reported as not tight rather than raised.
template <typename Scalar>
FrameReport<Scalar> analyze_frames(const PointConfig<Scalar>& config, const Tolerances& tol = {}) {
  using std::abs;
  tol.check();
  const Scalar naive = frame_potential_naive(config, tol);
  auto op = frame_potential_operator(config, tol);
  const Scalar lifted = frame_potential_lifted(config, tol);
  const bool tight = config.size() >= config.dimension() && is_tight_operator(op.frame_operator, config.size(), tol);
  const Scalar discrepancy = std::max({abs(naive - op.potential), abs(naive - lifted), abs(op.potential - lifted)});
  return {naive, op.potential, lifted, std::move(op.frame_operator), tight, discrepancy};
}

}  // namespace sphereconf
