#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <json.hpp>

#include "sphereconf/core.hpp"

namespace sphereconf {

enum class Family {
  polygon,
  simplex,
  cross_polytope,
  hypercube,
  prism,
  antiprism,
  permutahedron,
  signed_perm_orbit,
  random_sphere,
};

std::string_view to_string(Family family);

/// A generated configuration on the unit sphere at the origin. The known_*
/// flags are set only when the property holds by construction.
struct GeneratedConfig {
  PointConfigd config;
  Family family;
  nlohmann::json params;
  bool known_transitive = false;
  bool known_antipodal = false;
};

/// Vertices (cos 2 pi i / E, sin 2 pi i / E), i = 0..E-1.
GeneratedConfig regular_polygon(int edges);

/// n + 1 unit vectors in R^n with pairwise inner product -1/n.
GeneratedConfig regular_simplex(int n);

/// +-e_1, ..., +-e_n.
GeneratedConfig cross_polytope(int n);

/// All 2^n sign vectors scaled by 1/sqrt(n).
GeneratedConfig hypercube(int n);

/// Two regular base_edges-gons at z = +-cos(polar_angle) with ring radius
/// sin(polar_angle), lower ring aligned with the upper one.
GeneratedConfig prism(int base_edges, double polar_angle);

/// As prism, with the lower ring rotated by pi / base_edges.
GeneratedConfig antiprism(int base_edges, double polar_angle);

/// Permutations of (1, ..., n), centered and scaled to unit norm.
GeneratedConfig permutahedron(int n);

/// Orbit of `seed` under all coordinate permutations, and also all sign
/// changes when `signs` is set.
GeneratedConfig signed_perm_orbit(const Eigen::VectorXd& seed, bool signs);

/// V points uniform on S^(n-1), from normalized standard Gaussian vectors.
GeneratedConfig random_sphere(int n, int count, std::uint64_t seed);

/// Haar-distributed orthogonal n x n matrix (QR of a Gaussian matrix with the
/// signs of R's diagonal folded into Q).
Eigen::MatrixXd random_orthogonal(int n, std::uint64_t seed);

}  // namespace sphereconf
