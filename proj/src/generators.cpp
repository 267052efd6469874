#include "sphereconf/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/QR>

#include "sphereconf/symmetry.hpp"

namespace sphereconf {

namespace {

constexpr double kPi = std::numbers::pi;

PointConfigd from_columns(const std::vector<Eigen::VectorXd>& columns) {
  Eigen::MatrixXd pts(columns.front().size(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t i = 0; i < columns.size(); ++i) pts.col(static_cast<Eigen::Index>(i)) = columns[i];
  return PointConfigd(std::move(pts));
}

// Metadata must never be wrong: a flag that disagrees with the numbers is a
// bug in the generator, not an input problem.
void verify_antipodal_flag(const GeneratedConfig& g) {
  const auto check = check_antipodal(g.config, Tolerances{});
  if (check.symmetric != g.known_antipodal) {
    throw std::logic_error(std::string(to_string(g.family)) + ": antipodal flag " +
                           (g.known_antipodal ? "true" : "false") + " contradicts generated coordinates");
  }
}

GeneratedConfig two_rings(Family family, int base_edges, double polar_angle, double lower_offset) {
  if (base_edges < 3) throw ParameterError("base_edges must be at least 3");
  if (!(polar_angle > 0.0 && polar_angle < kPi / 2)) throw ParameterError("polar_angle must lie in (0, pi/2)");
  const double z = std::cos(polar_angle);
  const double ring = std::sin(polar_angle);
  std::vector<Eigen::VectorXd> cols;
  for (int level = 0; level < 2; ++level) {
    const double offset = level == 0 ? 0.0 : lower_offset;
    for (int i = 0; i < base_edges; ++i) {
      const double theta = 2.0 * kPi * i / base_edges + offset;
      cols.push_back(Eigen::Vector3d(ring * std::cos(theta), ring * std::sin(theta), level == 0 ? z : -z));
    }
  }
  GeneratedConfig g{from_columns(cols), family, {{"base_edges", base_edges}, {"polar_angle", polar_angle}}, true, false};
  // -P sits on the other ring at angle theta + pi; that is a vertex there iff
  // pi - offset is a multiple of 2 pi / base_edges.
  g.known_antipodal = family == Family::prism ? base_edges % 2 == 0 : base_edges % 2 == 1;
  verify_antipodal_flag(g);
  return g;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::polygon: return "polygon";
    case Family::simplex: return "simplex";
    case Family::cross_polytope: return "cross_polytope";
    case Family::hypercube: return "hypercube";
    case Family::prism: return "prism";
    case Family::antiprism: return "antiprism";
    case Family::permutahedron: return "permutahedron";
    case Family::signed_perm_orbit: return "signed_perm_orbit";
    case Family::random_sphere: return "random_sphere";
  }
  return "unknown";
}

GeneratedConfig regular_polygon(int edges) {
  if (edges < 2) throw ParameterError("a polygon needs at least 2 vertices");
  std::vector<Eigen::VectorXd> cols;
  for (int i = 0; i < edges; ++i) {
    const double theta = 2.0 * kPi * i / edges;
    cols.push_back(Eigen::Vector2d(std::cos(theta), std::sin(theta)));
  }
  GeneratedConfig g{from_columns(cols), Family::polygon, {{"edges", edges}}, true, edges % 2 == 0};
  verify_antipodal_flag(g);
  return g;
}

GeneratedConfig regular_simplex(int n) {
  if (n < 1) throw ParameterError("simplex dimension must be at least 1");
  const Eigen::Index m = n + 1;
  // Columns 1..n of Q span the hyperplane orthogonal to (1, ..., 1).
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(m, m);
  a.col(0).setOnes();
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
  const Eigen::MatrixXd basis = q.rightCols(n);

  std::vector<Eigen::VectorXd> cols;
  for (Eigen::Index i = 0; i < m; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Constant(m, -1.0 / static_cast<double>(m));
    e(i) += 1.0;
    Eigen::VectorXd p = basis.transpose() * e;
    cols.push_back(p / p.norm());
  }
  GeneratedConfig g{from_columns(cols), Family::simplex, {{"n", n}}, true, n == 1};
  verify_antipodal_flag(g);
  return g;
}

GeneratedConfig cross_polytope(int n) {
  if (n < 1) throw ParameterError("cross-polytope dimension must be at least 1");
  std::vector<Eigen::VectorXd> cols;
  for (int i = 0; i < n; ++i) {
    for (double sign : {1.0, -1.0}) {
      Eigen::VectorXd p = Eigen::VectorXd::Zero(n);
      p(i) = sign;
      cols.push_back(p);
    }
  }
  GeneratedConfig g{from_columns(cols), Family::cross_polytope, {{"n", n}}, true, true};
  verify_antipodal_flag(g);
  return g;
}

GeneratedConfig hypercube(int n) {
  if (n < 1) throw ParameterError("hypercube dimension must be at least 1");
  if (n > 20) throw ParameterError("hypercube dimension " + std::to_string(n) + " exceeds the size guard of 20");
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Eigen::VectorXd> cols;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Eigen::VectorXd p(n);
    for (int c = 0; c < n; ++c) p(c) = (mask >> c) & 1u ? -s : s;
    cols.push_back(p);
  }
  GeneratedConfig g{from_columns(cols), Family::hypercube, {{"n", n}}, true, true};
  verify_antipodal_flag(g);
  return g;
}

GeneratedConfig prism(int base_edges, double polar_angle) {
  return two_rings(Family::prism, base_edges, polar_angle, 0.0);
}

GeneratedConfig antiprism(int base_edges, double polar_angle) {
  return two_rings(Family::antiprism, base_edges, polar_angle, kPi / base_edges);
}

GeneratedConfig permutahedron(int n) {
  if (n < 2) throw ParameterError("permutahedron order must be at least 2");
  if (n > 8) throw ParameterError("permutahedron order " + std::to_string(n) + " exceeds the size guard of 8");
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  const double mean = (n + 1) / 2.0;
  std::vector<Eigen::VectorXd> cols;
  do {
    Eigen::VectorXd p(n);
    for (int c = 0; c < n; ++c) p(c) = perm[static_cast<std::size_t>(c)] - mean;
    cols.push_back(p / p.norm());
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Reversing the coordinates of a centered permutation negates it, so the
  // vertex set is always closed under P -> -P.
  GeneratedConfig g{from_columns(cols), Family::permutahedron, {{"n", n}}, true, true};
  verify_antipodal_flag(g);
  return g;
}

GeneratedConfig signed_perm_orbit(const Eigen::VectorXd& seed, bool signs) {
  const Eigen::Index n = seed.size();
  if (n < 1) throw ParameterError("seed point must have at least one coordinate");
  if (std::abs(seed.norm() - 1.0) > 1e-9) throw ParameterError("seed point must lie on the unit sphere");

  // Coordinates are grouped into classes of equal value (equal magnitude when
  // signs are applied); permuting class labels enumerates each distinct
  // rearrangement exactly once.
  std::vector<double> values;
  for (Eigen::Index c = 0; c < n; ++c) values.push_back(signs ? std::abs(seed(c)) : seed(c));
  auto key = [](double x) { return std::llround(x * 1e12); };
  std::vector<double> reps;
  std::vector<int> labels;
  {
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    for (double x : sorted) {
      if (reps.empty() || key(reps.back()) != key(x)) reps.push_back(x);
      labels.push_back(static_cast<int>(reps.size()) - 1);
    }
  }

  double orbit_size = std::tgamma(static_cast<double>(n) + 1.0);
  for (std::size_t cls = 0; cls < reps.size(); ++cls) {
    const auto mult = std::count(labels.begin(), labels.end(), static_cast<int>(cls));
    orbit_size /= std::tgamma(static_cast<double>(mult) + 1.0);
  }
  int nonzero = 0;
  if (signs) {
    for (int label : labels) nonzero += key(reps[static_cast<std::size_t>(label)]) != 0 ? 1 : 0;
    orbit_size *= std::pow(2.0, nonzero);
  }
  if (orbit_size > 1e5) {
    throw ParameterError("orbit of " + std::to_string(static_cast<long long>(orbit_size)) +
                         " points exceeds the size guard of 100000");
  }

  std::vector<Eigen::VectorXd> cols;
  do {
    Eigen::VectorXd base(n);
    for (Eigen::Index c = 0; c < n; ++c) base(c) = reps[static_cast<std::size_t>(labels[static_cast<std::size_t>(c)])];
    if (!signs) {
      cols.push_back(base);
      continue;
    }
    std::vector<Eigen::Index> flippable;
    for (Eigen::Index c = 0; c < n; ++c) {
      if (key(base(c)) != 0) flippable.push_back(c);
    }
    for (std::uint32_t mask = 0; mask < (1u << flippable.size()); ++mask) {
      Eigen::VectorXd p = base;
      for (std::size_t b = 0; b < flippable.size(); ++b) {
        if ((mask >> b) & 1u) p(flippable[b]) = -p(flippable[b]);
      }
      cols.push_back(p);
    }
  } while (std::next_permutation(labels.begin(), labels.end()));

  std::vector<double> seed_coords(seed.data(), seed.data() + n);
  GeneratedConfig g{from_columns(cols), Family::signed_perm_orbit, {{"seed", seed_coords}, {"signs", signs}}, true,
                    signs};
  if (signs) verify_antipodal_flag(g);
  return g;
}

GeneratedConfig random_sphere(int n, int count, std::uint64_t seed) {
  if (n < 1) throw ParameterError("dimension must be at least 1");
  if (count < 1) throw ParameterError("count must be at least 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd pts(n, count);
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd p(n);
    do {
      for (int c = 0; c < n; ++c) p(c) = gauss(rng);
    } while (p.norm() == 0.0);
    pts.col(i) = p / p.norm();
  }
  return {PointConfigd(std::move(pts)), Family::random_sphere,
          {{"n", n}, {"count", count}, {"seed", seed}}, false, false};
}

Eigen::MatrixXd random_orthogonal(int n, std::uint64_t seed) {
  if (n < 1) throw ParameterError("dimension must be at least 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) a(r, c) = gauss(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < n; ++c) {
    if (r(c, c) < 0) q.col(c) = -q.col(c);
  }
  return q;
}

}  // namespace sphereconf
