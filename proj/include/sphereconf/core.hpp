#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace sphereconf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: ragged point lists, dimension mismatches, empty sets.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Out-of-range generator or command parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The input is well formed but does not satisfy the hypothesis an operation
/// requires (points off the sphere, duplicate points, missing symmetry...).
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(std::string hypothesis, const std::string& what)
      : Error(what), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// A hypothesis failure that points at a better-suited operation.
class AdvisoryError : public HypothesisViolation {
 public:
  using HypothesisViolation::HypothesisViolation;
};

struct Tolerances {
  double on_sphere_tol = 1e-9;  // absolute, on |‖P - center‖ - radius|
  double dedup_tol = 1e-9;      // absolute, on squared lengths
  double identity_tol = 1e-9;   // relative, closed form vs oracle

  /// Sets all three tolerances to `t`.
  static Tolerances uniform(double t) { return {t, t, t}; }

  void check() const {
    if (!(on_sphere_tol > 0) || !(dedup_tol > 0) || !(identity_tol > 0)) {
      throw ParameterError("tolerances must be strictly positive");
    }
  }
};

/// A multiset of V points in R^n, stored one point per column, together with
/// the sphere (center, radius) the points are nominally on.
template <typename Scalar>
class PointConfig {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  PointConfig(Matrix points, Vector center, Scalar radius)
      : points_(std::move(points)), center_(std::move(center)), radius_(radius) {
    if (points_.rows() < 1) throw StructuralError("dimension must be at least 1");
    if (points_.cols() < 1) throw StructuralError("a configuration needs at least one point");
    if (center_.size() != points_.rows()) {
      throw StructuralError("center has dimension " + std::to_string(center_.size()) +
                            ", points have dimension " + std::to_string(points_.rows()));
    }
    if (!(radius_ > Scalar(0))) throw StructuralError("radius must be positive");
  }

  /// Points on the unit sphere centered at the origin.
  explicit PointConfig(Matrix points)
      : PointConfig(Matrix(points), Vector::Zero(points.rows()), Scalar(1)) {}

  /// Builds a configuration from a list of coordinate rows, checking that each
  /// has exactly `dimension` entries.
  static PointConfig from_rows(Eigen::Index dimension, const std::vector<std::vector<Scalar>>& rows,
                               Vector center, Scalar radius) {
    if (dimension < 1) throw StructuralError("dimension must be at least 1");
    Matrix pts(dimension, static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<Eigen::Index>(rows[i].size()) != dimension) {
        throw StructuralError("point " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                              " coordinates, expected " + std::to_string(dimension));
      }
      for (Eigen::Index j = 0; j < dimension; ++j) pts(j, static_cast<Eigen::Index>(i)) = rows[i][j];
    }
    return PointConfig(std::move(pts), std::move(center), radius);
  }

  static PointConfig from_rows(Eigen::Index dimension, const std::vector<std::vector<Scalar>>& rows) {
    return from_rows(dimension, rows, Vector::Zero(dimension), Scalar(1));
  }

  Eigen::Index dimension() const { return points_.rows(); }
  Eigen::Index size() const { return points_.cols(); }
  const Matrix& points() const { return points_; }
  auto point(Eigen::Index i) const { return points_.col(i); }
  const Vector& center() const { return center_; }
  Scalar radius() const { return radius_; }

  bool centered_unit() const { return radius_ == Scalar(1) && center_.isZero(Scalar(0)); }

  template <typename Other>
  PointConfig<Other> cast() const {
    return PointConfig<Other>(points_.template cast<Other>(), center_.template cast<Other>(),
                              static_cast<Other>(radius_));
  }

 private:
  Matrix points_;
  Vector center_;
  Scalar radius_;
};

using PointConfigd = PointConfig<double>;

template <typename Scalar>
struct Centroid {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> coords;
  Scalar distance_to_center;
};

template <typename Scalar>
struct ValidationReport {
  std::vector<Scalar> deviations;  // |‖P_i - center‖ - radius|, per point
  std::vector<Eigen::Index> flagged;
  Eigen::Index worst_index = 0;
  Scalar worst_deviation = 0;

  bool valid() const { return flagged.empty(); }
};

/// Squared Euclidean distance between two points of equal dimension.
template <typename DerivedP, typename DerivedQ>
auto squared_distance(const Eigen::MatrixBase<DerivedP>& p, const Eigen::MatrixBase<DerivedQ>& q) {
  using Scalar = typename DerivedP::Scalar;
  if (p.size() != q.size()) {
    throw StructuralError("cannot compare points of dimension " + std::to_string(p.size()) + " and " +
                          std::to_string(q.size()));
  }
  Scalar s(0);
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    const Scalar diff = p(j) - q(j);
    s += diff * diff;
  }
  return s;
}

template <typename Scalar>
ValidationReport<Scalar> validate(const PointConfig<Scalar>& config, const Tolerances& tol) {
  using std::abs;
  using std::sqrt;
  ValidationReport<Scalar> report;
  report.deviations.reserve(static_cast<std::size_t>(config.size()));
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    const Scalar dev = abs(sqrt(squared_distance(config.point(i), config.center())) - config.radius());
    report.deviations.push_back(dev);
    if (!(dev <= Scalar(tol.on_sphere_tol))) report.flagged.push_back(i);
    if (i == 0 || !(dev <= report.worst_deviation)) {
      report.worst_deviation = dev;
      report.worst_index = i;
    }
  }
  return report;
}

/// Throws HypothesisViolation naming the worst point when validation fails.
template <typename Scalar>
void require_on_sphere(const PointConfig<Scalar>& config, const Tolerances& tol) {
  const auto report = validate(config, tol);
  if (!report.valid()) {
    throw HypothesisViolation(
        "on_sphere", "point " + std::to_string(report.worst_index) + " is off the sphere by " +
                         std::to_string(static_cast<double>(report.worst_deviation)) + " (tolerance " +
                         std::to_string(tol.on_sphere_tol) + ")");
  }
}

/// Validates and additionally requires the unit sphere centered at the origin.
template <typename Scalar>
void require_unit_sphere_at_origin(const PointConfig<Scalar>& config, const Tolerances& tol) {
  if (!config.centered_unit()) {
    throw HypothesisViolation("unit_sphere_at_origin",
                              "operation requires the unit sphere centered at the origin");
  }
  require_on_sphere(config, tol);
}

template <typename Scalar>
Centroid<Scalar> centroid(const PointConfig<Scalar>& config) {
  using std::sqrt;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> sum = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(config.dimension());
  for (Eigen::Index i = 0; i < config.size(); ++i) sum += config.point(i);
  sum /= static_cast<Scalar>(config.size());
  const Scalar d = sqrt(squared_distance(sum, config.center()));
  return {std::move(sum), d};
}

}  // namespace sphereconf
