#include "sphereconf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "sphereconf/chords.hpp"
#include "sphereconf/frames.hpp"
#include "sphereconf/generators.hpp"
#include "sphereconf/spectrum.hpp"

namespace sphereconf {

namespace {

constexpr double kPi = std::numbers::pi;

class Table {
 public:
  explicit Table(std::string suite) : suite_(std::move(suite)) {}

  void add(std::string name, double residual, double tolerance) {
    rows_.push_back({suite_, std::move(name), residual, tolerance, residual <= tolerance});
  }

  std::vector<CheckRow> take() { return std::move(rows_); }

 private:
  std::string suite_;
  std::vector<CheckRow> rows_;
};

double rel(double value, double expected) { return std::abs(value - expected) / std::max(1.0, std::abs(expected)); }

PointConfigd rotated(const PointConfigd& config, std::uint64_t seed) {
  const Eigen::MatrixXd q = random_orthogonal(static_cast<int>(config.dimension()), seed);
  return PointConfigd(q * config.points());
}

PointConfigd with_antipodes(const PointConfigd& config) {
  Eigen::MatrixXd pts(config.dimension(), 2 * config.size());
  pts << config.points(), -config.points();
  return PointConfigd(std::move(pts));
}

std::vector<CheckRow> chords_suite(std::uint64_t seed) {
  Table t("chords");
  const Tolerances tol;
  for (int e = 2; e <= 64; ++e) {
    const auto r = analyze_chords(regular_polygon(e).config, tol);
    const double expected = double(e) * e;
    const double worst = std::max({rel(r.direct_sum, expected), rel(r.centroid_formula, expected),
                                   rel(r.inertia_formula, expected)});
    t.add("polygon_sum_equals_E2.E=" + std::to_string(e), worst, 1e-9);
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(2, 16);
  std::uniform_int_distribution<int> count(1, 200);
  double routes = 0, lagrange = 0, rotation = 0, bound = 0, equality = 0;
  for (int i = 0; i < 200; ++i) {
    const auto config = random_sphere(dim(rng), count(rng), rng()).config;
    const auto r = analyze_chords(config, tol);
    const double v2 = double(config.size()) * double(config.size());
    routes = std::max(routes, r.max_abs_discrepancy / std::max(1.0, r.direct_sum));
    lagrange = std::max(lagrange, std::abs(r.lagrange_residual) / std::max(1.0, double(config.size())));
    rotation = std::max(rotation, rel(chord_sum_direct(rotated(config, rng())), r.direct_sum));
    bound = std::max(bound, std::max(0.0, r.direct_sum - v2) / v2);
  }
  for (int i = 0; i < 50; ++i) {
    const auto config = with_antipodes(random_sphere(dim(rng), count(rng) / 2 + 1, rng()).config);
    const double v2 = double(config.size()) * double(config.size());
    equality = std::max(equality, std::abs(chord_sum_direct(config) - v2) / v2);
  }
  t.add("random.three_route_agreement", routes, 1e-9);
  t.add("random.lagrange_residual", lagrange, 1e-9);
  t.add("random.rotation_invariance", rotation, 1e-9);
  t.add("random.bound_V2", bound, 1e-9);
  t.add("antipodal_pairs.attains_V2", equality, 1e-9);
  return t.take();
}

void symmetric_rows(Table& t, const std::string& name, const PointConfigd& config) {
  const Tolerances tol;
  const auto check = check_symmetric_sum(config, tol);
  t.add("sum_equals_2k_plus_2." + name, check.residual, 1e-8);
  t.add("pythagorean_pairing." + name, check.pairing.max_residual, 1e-8);
  t.add("diameter_present." + name, check.spectrum.has_diameter ? 0.0 : 1.0, 0.0);
}

void bounds_rows(Table& t, const std::string& name, const PointConfigd& config) {
  const auto report = symmetrization_bounds(config, Tolerances{});
  const double excess =
      std::max({0.0, report.lower_bound - report.sum_of_squares, report.sum_of_squares - report.upper_bound});
  t.add("r_le_k." + name, double(std::max<std::int64_t>(0, report.r - report.original_k)), 0.0);
  t.add("bounds_2k_pm_2r." + name, excess, 1e-8);
  t.add("antisym_count_k_plus_r_plus_1." + name,
        std::abs(double(report.antisym_spectrum.k - (report.original_k + report.r + 1))), 0.0);
}

std::vector<CheckRow> spectrum_suite(std::uint64_t seed) {
  Table t("spectrum");
  const Tolerances tol;
  for (int e = 3; e <= 31; e += 2) {
    const auto s = distance_spectrum(regular_polygon(e).config, tol);
    t.add("odd_polygon_sum_equals_E.E=" + std::to_string(e), std::abs(s.sum_of_squares - e), 1e-8);
  }
  for (int e = 2; e <= 64; e += 2) symmetric_rows(t, "polygon.E=" + std::to_string(e), regular_polygon(e).config);
  for (int n = 1; n <= 16; ++n) symmetric_rows(t, "cross_polytope.n=" + std::to_string(n), cross_polytope(n).config);
  for (int n = 1; n <= 10; ++n) symmetric_rows(t, "hypercube.n=" + std::to_string(n), hypercube(n).config);
  for (double angle : {0.5, kPi / 4, kPi / 3}) {
    symmetric_rows(t, "hexagonal_prism.angle=" + std::to_string(angle), prism(6, angle).config);
  }
  for (int n = 3; n <= 5; ++n) symmetric_rows(t, "permutahedron.n=" + std::to_string(n), permutahedron(n).config);
  std::mt19937_64 rng(seed);
  for (int n = 2; n <= 5; ++n) {
    for (int s = 0; s < 5; ++s) {
      const Eigen::VectorXd point = random_sphere(n, 1, rng()).config.point(0);
      symmetric_rows(t, "signed_perm_orbit.n=" + std::to_string(n) + ".seed=" + std::to_string(s),
                     signed_perm_orbit(point, true).config);
    }
  }

  const auto remark = prism(3, kPi / 4).config;
  const auto spectrum = distance_spectrum(remark, tol);
  const auto bounds = symmetrization_bounds(remark, tol);
  const std::vector<double> expected{1.5, 2.0, 3.5};
  double worst = spectrum.k == 3 ? 0.0 : 1.0;
  for (std::size_t i = 0; i < expected.size() && i < spectrum.squared_lengths.size(); ++i) {
    worst = std::max(worst, std::abs(spectrum.squared_lengths[i] - expected[i]));
  }
  t.add("remark_prism.k=3", std::abs(double(spectrum.k) - 3.0), 0.0);
  t.add("remark_prism.squared_lengths={1.5,2,3.5}", worst, 1e-9);
  t.add("remark_prism.r=2", std::abs(double(bounds.r) - 2.0), 0.0);
  t.add("remark_prism.sum=7", std::abs(bounds.sum_of_squares - 7.0), 1e-9);
  symmetric_rows(t, "remark_prism_symmetrized", antipodal_symmetrize(remark, tol));
  bounds_rows(t, "remark_prism", remark);

  for (int n = 2; n <= 8; ++n) bounds_rows(t, "simplex.n=" + std::to_string(n), regular_simplex(n).config);
  for (double angle : {0.5, kPi / 4, 1.2}) {
    const std::string a = ".angle=" + std::to_string(angle);
    for (int m : {3, 5, 7}) bounds_rows(t, "prism.m=" + std::to_string(m) + a, prism(m, angle).config);
    for (int m : {4, 6, 8}) bounds_rows(t, "antiprism.m=" + std::to_string(m) + a, antiprism(m, angle).config);
  }
  return t.take();
}

std::vector<CheckRow> frames_suite(std::uint64_t seed) {
  Table t("frames");
  const Tolerances tol;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(2, 16);
  std::uniform_int_distribution<int> count(1, 200);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const auto r = analyze_frames(random_sphere(dim(rng), count(rng), rng()).config, tol);
    worst = std::max(worst, r.discrepancy / std::max(1.0, r.fp_naive));
  }
  t.add("random.triple_equivalence", worst, 1e-9);
  for (int n = 1; n <= 16; ++n) {
    const auto basis = PointConfigd(Eigen::MatrixXd::Identity(n, n));
    const auto r = analyze_frames(basis, tol);
    t.add("orthonormal_basis_fp_equals_n.n=" + std::to_string(n),
          std::max({std::abs(r.fp_naive - n), std::abs(r.fp_operator - n), std::abs(r.fp_lifted - n)}), 1e-12);
  }
  for (int n = 1; n <= 16; ++n) {
    const auto r = analyze_frames(cross_polytope(n).config, tol);
    t.add("cross_polytope_fp_equals_4n.n=" + std::to_string(n), rel(r.fp_operator, 4.0 * n) + rel(r.fp_naive, 4.0 * n),
          1e-12);
    t.add("cross_polytope_tight.n=" + std::to_string(n), r.is_tight ? 0.0 : 1.0, 0.0);
  }
  const auto basis2 = PointConfigd(Eigen::MatrixXd::Identity(2, 2));
  const double fp = frame_potential_naive(basis2);
  t.add("coordinate_total_formula_disagrees.basis_R2(4-2=2)", std::abs(coordinate_total_squared(basis2) - fp - 2.0),
        1e-12);
  return t.take();
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "chords") return Suite::chords;
  if (name == "spectrum") return Suite::spectrum;
  if (name == "frames") return Suite::frames;
  if (name == "all") return Suite::all;
  throw ParameterError("unknown suite '" + std::string(name) + "' (expected chords, spectrum, frames or all)");
}

std::vector<CheckRow> run_verify(Suite suite, std::uint64_t seed) {
  std::vector<CheckRow> rows;
  auto append = [&rows](std::vector<CheckRow> more) { rows.insert(rows.end(), more.begin(), more.end()); };
  if (suite == Suite::chords || suite == Suite::all) append(chords_suite(seed));
  if (suite == Suite::spectrum || suite == Suite::all) append(spectrum_suite(seed));
  if (suite == Suite::frames || suite == Suite::all) append(frames_suite(seed));
  return rows;
}

}  // namespace sphereconf
