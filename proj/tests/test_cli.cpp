#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SPHERECONF_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("sphereconf_cli_" + std::to_string(getpid()));
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& contents = "") const {
    const auto p = path / name;
    if (!contents.empty()) std::ofstream(p) << contents;
    return p.string();
  }
};

}  // namespace

TEST_CASE("generate") {
  const auto pentagon = run("generate polygon --edges 5");
  REQUIRE(pentagon.code == 0);
  const auto doc = nlohmann::json::parse(pentagon.out);
  CHECK(doc["points"].size() == 5);
  CHECK(doc["metadata"]["family"] == "polygon");

  const auto prism = run("generate prism --base-edges 3 --polar-angle 0.7853981633974483");
  REQUIRE(prism.code == 0);
  CHECK(nlohmann::json::parse(prism.out)["points"].size() == 6);

  const auto a = run("generate random --dim 4 --count 50 --seed 7");
  const auto b = run("generate random --dim 4 --count 50 --seed 7");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["points"].size() == 50);

  const auto csv = run("generate cross-polytope --dim 3 --format csv");
  CHECK(csv.out == "1.0,0.0,0.0\n-1.0,0.0,0.0\n0.0,1.0,0.0\n0.0,-1.0,0.0\n0.0,0.0,1.0\n0.0,0.0,-1.0\n");

  CHECK(run("generate polygon --edges 1").code == 2);
  CHECK(run("generate hypercube --dim 30").code == 2);
  CHECK(run("generate nonsense").code == 2);
  CHECK(run("generate polygon --edges five").code == 2);
}

TEST_CASE("analyze") {
  TempDir tmp;
  const auto square = tmp.file("square.json", R"({"dimension": 2, "points": [[1,0],[0,1],[-1,0],[0,-1]]})");
  const auto r = run("analyze --in " + square);
  REQUIRE(r.code == 0);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report["symmetric_sum"]["sum_of_squares"].get<double>() == doctest::Approx(6.0));
  CHECK(report["symmetric_sum"]["expected"] == 6.0);
  CHECK(report["symmetric_sum"]["residual"].get<double>() == 0.0);
  CHECK(report["chords"]["direct_sum"].get<double>() == doctest::Approx(16.0));
  CHECK(report["frames"]["is_tight"] == true);
  CHECK_FALSE(report.contains("symmetrization"));

  const auto triangle = tmp.file("triangle.csv", "x,y\n1,0\n-0.5,0.8660254037844386\n-0.5,-0.8660254037844386\n");
  const auto t = run("analyze --in " + triangle);
  REQUIRE(t.code == 0);
  const auto tr = nlohmann::json::parse(t.out);
  CHECK(tr["symmetrization"]["r"] == 1);
  CHECK(tr["symmetrization"]["lower_bound"] == 0.0);
  CHECK(tr["symmetrization"]["upper_bound"] == 4.0);

  // Identity failures and skipped sections are data; strict mode surfaces
  // hypothesis violations as exit code 3.
  const auto off = tmp.file("off.json", R"({"dimension": 2, "points": [[1,0],[0,2]]})");
  const auto o = run("analyze --in " + off);
  CHECK(o.code == 0);
  CHECK(nlohmann::json::parse(o.out)["chords"]["hypothesis"] == "on_sphere");
  CHECK(run("analyze --strict --in " + off).code == 3);

  const auto bad = tmp.file("bad.json", "{\"points\": [[1, 0],");
  CHECK(run("analyze --in " + bad).code == 2);
  CHECK(run("analyze --in " + tmp.file("missing.json")).code == 2);

  const auto again = run("analyze --in " + square);
  CHECK(again.out == r.out);
}

TEST_CASE("manifest is written next to --out") {
  TempDir tmp;
  const auto out = tmp.file("pts.json");
  REQUIRE(run("generate simplex --dim 3 --out " + out).code == 0);
  REQUIRE(fs::exists(out));
  const auto manifest = nlohmann::json::parse(std::ifstream(out + ".manifest.json"));
  CHECK(manifest["command"] == "generate");
  CHECK(manifest["outputs"][0] == out);
  CHECK(manifest["tolerances"]["dedup_tol"] == 1e-9);

  const auto report = tmp.file("report.json");
  REQUIRE(run("analyze --in " + out + " --out " + report + " --tolerance 1e-8").code == 0);
  const auto m2 = nlohmann::json::parse(std::ifstream(report + ".manifest.json"));
  CHECK(m2["input_digest"].get<std::string>().size() == 16);
  CHECK(m2["tolerances"]["identity_tol"] == 1e-8);
}

TEST_CASE("verify") {
  const auto chords = run("verify --suite chords --seed 1");
  REQUIRE(chords.code == 0);
  CHECK(chords.out.rfind("suite,name,residual,tolerance,pass\n", 0) == 0);
  CHECK(chords.out.find(",false\n") == std::string::npos);

  const auto frames = run("verify --suite frames --format json --strict");
  REQUIRE(frames.code == 0);
  for (const auto& row : nlohmann::json::parse(frames.out)) CHECK(row["pass"] == true);

  CHECK(run("verify --suite bogus").code == 2);
}

TEST_CASE("bench") {
  const auto r = run("bench --dim 3 --counts 8,16 --repeats 1");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("dim,count,naive_seconds") != std::string::npos);
  CHECK(r.out.find("\n3,8,") != std::string::npos);
  CHECK(r.out.find("\n3,16,") != std::string::npos);
  CHECK(r.out.find(",false\n") == std::string::npos);
}
