#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sphereconf/chords.hpp"
#include "sphereconf/generators.hpp"

using namespace sphereconf;

TEST_CASE("direct chord sum examples") {
  CHECK(chord_sum_direct(regular_polygon(5).config) == doctest::Approx(25.0).epsilon(1e-12));
  CHECK(chord_sum_direct(PointConfigd::from_rows(2, {{1, 0}, {-1, 0}})) == 4.0);
  CHECK(chord_sum_direct(PointConfigd::from_rows(2, {{0, 1}})) == 0.0);

  const auto random = random_sphere(4, 7, 3).config;
  const double direct = chord_sum_direct(random);
  CHECK(std::abs(direct - chord_sum_centroid(random)) <= 1e-9 * direct);
  CHECK(std::abs(direct - static_cast<double>(oracle::chord_sum(oracle::rows_of(random)))) <= 1e-12 * direct);
}

TEST_CASE("centroid formula examples") {
  CHECK(chord_sum_centroid(PointConfigd::from_rows(2, {{1, 0}})) == 0.0);
  CHECK(chord_sum_centroid(regular_polygon(9).config) == doctest::Approx(81.0).epsilon(1e-12));
  CHECK(chord_sum_centroid(PointConfigd::from_rows(2, {{1, 0}, {1, 0}, {1, 0}})) == 0.0);
  CHECK_THROWS_WITH_AS(chord_sum_centroid(PointConfigd::from_rows(2, {{1, 0}, {0, 2}})), doctest::Contains("point 1"),
                       HypothesisViolation);
}

TEST_CASE("centroid formula on a shifted, non-unit sphere") {
  const auto base = random_sphere(3, 40, 8).config;
  const Eigen::Vector3d center(1.0, -2.0, 0.5);
  const double radius = 2.5;
  const PointConfigd config((radius * base.points()).colwise() + center, center, radius);
  const double direct = chord_sum_direct(config);
  CHECK(std::abs(chord_sum_centroid(config) - direct) <= 1e-9 * direct);
  CHECK(std::abs(chord_sum_inertia(config).chord_sum - direct) <= 1e-9 * direct);
}

TEST_CASE("moment of inertia examples") {
  const auto pair = chord_sum_inertia(PointConfigd::from_rows(2, {{1, 0}, {-1, 0}}));
  CHECK(pair.j_about_center == 2.0);
  CHECK(pair.j_about_centroid == 2.0);
  CHECK(pair.chord_sum == 4.0);
  CHECK(pair.lagrange_residual == 0.0);

  const auto triangle = chord_sum_inertia(regular_polygon(3).config);
  CHECK(triangle.j_about_center == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(triangle.j_about_centroid == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(triangle.chord_sum == doctest::Approx(9.0).epsilon(1e-14));

  const auto random = chord_sum_inertia(random_sphere(5, 31, 4).config);
  CHECK(std::abs(random.lagrange_residual) <= 1e-9 * random.j_about_center);
}

TEST_CASE("analyze_chords aggregates three routes") {
  const auto square = analyze_chords(regular_polygon(4).config);
  CHECK(square.pair_count == 6);
  CHECK(square.direct_sum == doctest::Approx(16.0).epsilon(1e-14));
  CHECK(square.centroid_formula == doctest::Approx(16.0).epsilon(1e-14));
  CHECK(square.inertia_formula == doctest::Approx(16.0).epsilon(1e-14));
  CHECK(square.max_abs_discrepancy < 1e-12);

  const auto single = analyze_chords(PointConfigd::from_rows(3, {{0, 0, 1}}));
  CHECK(single.pair_count == 0);
  CHECK(single.direct_sum == 0.0);
  CHECK(single.centroid_formula == 0.0);
  CHECK(single.inertia_formula == 0.0);

  const auto big = analyze_chords(random_sphere(10, 100, 99).config);
  CHECK(routes_agree(big, Tolerances{}));
  CHECK(big.max_abs_discrepancy / big.direct_sum < 1e-9);
}

TEST_CASE("expected squared chord uses draws with replacement") {
  // Enumerate all V^2 ordered draws, self pairs included.
  const auto config = random_sphere(3, 9, 21).config;
  const auto rows = oracle::rows_of(config);
  long double total = 0;
  for (const auto& p : rows) {
    for (const auto& q : rows) total += oracle::dist2(p, q);
  }
  const double expectation = static_cast<double>(total / (rows.size() * rows.size()));
  CHECK(analyze_chords(config).expected_squared_chord == doctest::Approx(expectation).epsilon(1e-12));
}

TEST_CASE("property: three routes, Lagrange residual, rotation invariance") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(1, 12);
  std::uniform_int_distribution<int> count(1, 120);
  const Tolerances tol;
  for (int trial = 0; trial < 60; ++trial) {
    const auto config = random_sphere(dim(rng), count(rng), rng()).config;
    const auto r = analyze_chords(config, tol);
    CHECK(routes_agree(r, tol));
    CHECK(std::abs(r.lagrange_residual) <= tol.identity_tol * std::max(1.0, double(config.size())));
    const PointConfigd turned(random_orthogonal(int(config.dimension()), rng()) * config.points());
    CHECK(std::abs(chord_sum_direct(turned) - r.direct_sum) <= tol.identity_tol * std::max(1.0, r.direct_sum));
    const auto corollary = check_corollary(config, r, tol);
    CHECK(corollary.bound_holds);
    CHECK(corollary.equality_consistent);
  }
}

TEST_CASE("property: duplicating the multiset quadruples the centroid formula") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto config = random_sphere(4, 13, seed).config;
    Eigen::MatrixXd doubled(4, 26);
    doubled << config.points(), config.points();
    const double once = chord_sum_centroid(config);
    const double twice = chord_sum_centroid(PointConfigd(doubled));
    CHECK(twice == doctest::Approx(4 * once).epsilon(1e-13));
  }
}

TEST_CASE("corollary equality case") {
  const auto half = random_sphere(6, 25, 77).config;
  Eigen::MatrixXd pts(6, 50);
  pts << half.points(), -half.points();
  const PointConfigd balanced(pts);
  const auto r = analyze_chords(balanced);
  const auto check = check_corollary(balanced, r, Tolerances{});
  CHECK(check.centroid_at_center);
  CHECK(check.sum_attains_bound);
  CHECK(check.equality_consistent);

  const auto lopsided = PointConfigd::from_rows(2, {{1, 0}, {0, 1}});
  const auto r2 = analyze_chords(lopsided);
  const auto c2 = check_corollary(lopsided, r2, Tolerances{});
  CHECK(c2.bound_holds);
  CHECK_FALSE(c2.sum_attains_bound);
  CHECK_FALSE(c2.centroid_at_center);
}
