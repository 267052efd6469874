#include <doctest.h>

#include <cmath>
#include <limits>

#include "sphereconf/generators.hpp"
#include "sphereconf/io.hpp"

using namespace sphereconf;

TEST_CASE("JSON point sets") {
  const auto config = io::parse_json_config(R"({"dimension": 2, "points": [[1, 0], [0, 1]]})");
  CHECK(config.dimension() == 2);
  CHECK(config.size() == 2);
  CHECK(config.centered_unit());

  const auto shifted =
      io::parse_json_config(R"({"dimension": 3, "radius": 2.5, "center": [1, 2, 3], "points": [[3.5, 2, 3]]})");
  CHECK(shifted.radius() == 2.5);
  CHECK(shifted.center() == Eigen::Vector3d(1, 2, 3));

  CHECK_THROWS_WITH_AS(io::parse_json_config("{\"points\": [[1, 0],"), doctest::Contains("malformed JSON"),
                       StructuralError);
  CHECK_THROWS_AS(io::parse_json_config(R"({"dimension": 2})"), StructuralError);
  CHECK_THROWS_AS(io::parse_json_config(R"({"dimension": 2, "points": [[1, 0], [1]]})"), StructuralError);
  CHECK_THROWS_AS(io::parse_json_config(R"({"dimension": 2, "points": [[1, "x"]]})"), StructuralError);
  CHECK_THROWS_AS(io::parse_json_config(R"({"dimension": 2, "center": [0], "points": [[1, 0]]})"), StructuralError);
}

TEST_CASE("CSV point sets") {
  const auto with_header = io::parse_csv_config("x,y,z\n1,0,0\n0,1,0\n\n0,0,1\n");
  CHECK(with_header.dimension() == 3);
  CHECK(with_header.size() == 3);
  const auto bare = io::parse_csv_config("1, 0\n-1, 0\n");
  CHECK(bare.size() == 2);
  CHECK(bare.point(1) == Eigen::Vector2d(-1, 0));
  CHECK_THROWS_AS(io::parse_csv_config("1,0\n0,1,0\n"), StructuralError);
  CHECK_THROWS_AS(io::parse_csv_config("1,0\nfoo,bar\n"), StructuralError);
  CHECK_THROWS_AS(io::parse_csv_config("x,y\n"), StructuralError);
}

TEST_CASE("property: JSON and CSV output round-trips bit-exactly") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto config = random_sphere(1 + int(seed % 6), 1 + int(seed * 7 % 40), seed).config;
    const auto from_csv = io::parse_csv_config(io::config_to_csv(config));
    CHECK(from_csv.points() == config.points());
    const auto from_json = io::parse_json_config(io::dump_json(io::config_to_json(config)));
    CHECK(from_json.points() == config.points());
  }
}

TEST_CASE("JSON writer uses 17 significant digits") {
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(io::format_double(2.0) == "2.0");
  CHECK(io::format_double(-1e-20) == "-9.9999999999999995e-21");
  const nlohmann::json doc = {{"a", 0.1}, {"n", 3}, {"flag", true}, {"bad", std::numeric_limits<double>::quiet_NaN()},
                              {"v", {1.5, 2.5}}, {"s", "q\"uote"}};
  CHECK(io::dump_json(doc, 0) == R"({"a":0.10000000000000001,"bad":null,"flag":true,"n":3,"s":"q\"uote","v":[1.5,2.5]})");
  CHECK(nlohmann::json::parse(io::dump_json(doc)) == nlohmann::json::parse(io::dump_json(doc, 0)));
}

TEST_CASE("generated configs carry metadata") {
  const auto doc = io::generated_to_json(prism(3, 0.7853981633974483));
  CHECK(doc["dimension"] == 3);
  CHECK(doc["points"].size() == 6);
  CHECK(doc["metadata"]["family"] == "prism");
  CHECK(doc["metadata"]["known_transitive"] == true);
  CHECK(doc["metadata"]["known_antipodal"] == false);
  CHECK(doc["metadata"]["params"]["base_edges"] == 3);
}

TEST_CASE("digest and format helpers") {
  CHECK(io::digest("") == "cbf29ce484222325");
  CHECK(io::digest("a") == "af63dc4c8601ec8c");
  CHECK(io::format_for_path("pts.csv") == io::Format::csv);
  CHECK(io::format_for_path("pts.json") == io::Format::json);
  CHECK_THROWS_AS(io::parse_format("xml"), ParameterError);
}
