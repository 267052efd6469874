// sphereconf: generate point configurations on spheres, analyze them, verify
// the chord and distinct-distance identities, and benchmark frame-potential
// evaluation.
//
// Exit codes: 0 ran to completion, 2 input or parameter error, 3 hypothesis
// violation (analyze/verify with --strict).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphereconf/analysis.hpp"
#include "sphereconf/frames.hpp"
#include "sphereconf/generators.hpp"
#include "sphereconf/io.hpp"
#include "sphereconf/report.hpp"
#include "sphereconf/verify.hpp"

namespace {

using namespace sphereconf;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitHypothesis = 3;

struct GlobalOptions {
  std::optional<double> tolerance;
  std::optional<double> on_sphere_tol;
  std::optional<double> dedup_tol;
  std::optional<double> identity_tol;
  std::string out;
  std::string format;
  bool strict = false;
  std::uint64_t seed = 0;

  Tolerances tolerances() const {
    Tolerances tol = tolerance ? Tolerances::uniform(*tolerance) : Tolerances{};
    if (on_sphere_tol) tol.on_sphere_tol = *on_sphere_tol;
    if (dedup_tol) tol.dedup_tol = *dedup_tol;
    if (identity_tol) tol.identity_tol = *identity_tol;
    tol.check();
    return tol;
  }
};

struct GenerateOptions {
  std::string family;
  int edges = 0;
  int dim = 0;
  int base_edges = 0;
  double polar_angle = 0.7853981633974483;
  std::vector<double> seed_point;
  bool no_signs = false;
  int count = 0;
};

struct AnalyzeOptions {
  std::string in;
};

struct VerifyOptions {
  std::string suite = "all";
};

struct BenchOptions {
  int dim = 8;
  std::vector<int> counts{64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384};
  int repeats = 3;
};

/// Writes `text` to --out (or stdout) and emits the run manifest next to it:
/// <out>.manifest.json, or a single JSON line on stderr when writing to stdout.
void emit(const GlobalOptions& g, const std::string& command, json params, const std::string& text,
          const std::string& input_digest = "") {
  json manifest = {{"command", command},
                   {"params", std::move(params)},
                   {"tolerances", to_json(g.tolerances())},
                   {"input_digest", input_digest.empty() ? json(nullptr) : json(input_digest)},
                   {"outputs", json::array()}};
  if (g.out.empty()) {
    std::cout << text;
    manifest["outputs"].push_back("-");
    std::cerr << io::dump_json(manifest, 0) << "\n";
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw StructuralError("cannot write " + g.out);
  file << text;
  const std::string manifest_path = g.out + ".manifest.json";
  manifest["outputs"].push_back(g.out);
  manifest["outputs"].push_back(manifest_path);
  std::ofstream mf(manifest_path, std::ios::binary);
  if (!mf) throw StructuralError("cannot write " + manifest_path);
  mf << io::dump_json(manifest) << "\n";
}

GeneratedConfig build(const GenerateOptions& o, std::uint64_t seed) {
  auto need = [](int value, const char* flag) {
    if (value == 0) throw ParameterError(std::string("missing ") + flag);
    return value;
  };
  const std::string& f = o.family;
  if (f == "polygon") return regular_polygon(need(o.edges, "--edges"));
  if (f == "simplex") return regular_simplex(need(o.dim, "--dim"));
  if (f == "cross-polytope") return cross_polytope(need(o.dim, "--dim"));
  if (f == "hypercube") return hypercube(need(o.dim, "--dim"));
  if (f == "prism") return prism(need(o.base_edges, "--base-edges"), o.polar_angle);
  if (f == "antiprism") return antiprism(need(o.base_edges, "--base-edges"), o.polar_angle);
  if (f == "permutahedron") return permutahedron(need(o.dim, "--dim"));
  if (f == "signed-perm-orbit") {
    if (o.seed_point.empty()) throw ParameterError("missing --seed-point");
    return signed_perm_orbit(Eigen::Map<const Eigen::VectorXd>(o.seed_point.data(), Eigen::Index(o.seed_point.size())),
                             !o.no_signs);
  }
  if (f == "random") return random_sphere(need(o.dim, "--dim"), need(o.count, "--count"), seed);
  throw ParameterError("unknown family '" + f + "'");
}

int run_generate(const GlobalOptions& g, const GenerateOptions& o) {
  const auto generated = build(o, g.seed);
  const auto format = io::parse_format(g.format.empty() ? "json" : g.format);
  const std::string text = format == io::Format::json ? io::dump_json(io::generated_to_json(generated)) + "\n"
                                                      : io::config_to_csv(generated.config);
  emit(g, "generate",
       {{"family", o.family}, {"generator_params", generated.params}, {"format", g.format.empty() ? "json" : g.format},
        {"seed", g.seed}},
       text);
  return kExitOk;
}

int run_analyze(const GlobalOptions& g, const AnalyzeOptions& o) {
  const std::string raw = io::read_file(o.in);
  const auto format = g.format.empty() ? io::format_for_path(o.in) : io::parse_format(g.format);
  const auto config = format == io::Format::csv ? io::parse_csv_config(raw) : io::parse_json_config(raw);
  const auto tol = g.tolerances();
  auto result = analyze(config, tol);
  result.report["hypothesis_failures"] = result.hypothesis_failures;
  emit(g, "analyze", {{"in", o.in}, {"strict", g.strict}}, io::dump_json(result.report) + "\n", io::digest(raw));
  if (g.strict && !result.hypothesis_failures.empty()) {
    for (const auto& failure : result.hypothesis_failures) std::cerr << "hypothesis violation: " << failure << "\n";
    return kExitHypothesis;
  }
  return kExitOk;
}

int run_verify_cmd(const GlobalOptions& g, const VerifyOptions& o) {
  const auto rows = run_verify(parse_suite(o.suite), g.seed);
  const auto format = io::parse_format(g.format.empty() ? "csv" : g.format);
  std::string text;
  std::size_t failed = 0;
  if (format == io::Format::json) {
    json table = json::array();
    for (const auto& r : rows) {
      table.push_back({{"suite", r.suite}, {"name", r.name}, {"residual", r.residual}, {"tolerance", r.tolerance},
                       {"pass", r.pass}});
      failed += r.pass ? 0 : 1;
    }
    text = io::dump_json(table) + "\n";
  } else {
    text = "suite,name,residual,tolerance,pass\n";
    for (const auto& r : rows) {
      text += r.suite + "," + r.name + "," + io::format_double(r.residual) + "," + io::format_double(r.tolerance) +
              "," + (r.pass ? "true" : "false") + "\n";
      failed += r.pass ? 0 : 1;
    }
  }
  emit(g, "verify", {{"suite", o.suite}, {"seed", g.seed}}, text);
  std::cerr << rows.size() - failed << "/" << rows.size() << " checks passed\n";
  return g.strict && failed > 0 ? kExitHypothesis : kExitOk;
}

template <typename F>
double best_time(int repeats, F&& f) {
  double best = INFINITY;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    best = std::min(best, elapsed.count());
  }
  return best;
}

int run_bench(const GlobalOptions& g, const BenchOptions& o) {
  if (o.dim < 1 || o.repeats < 1) throw ParameterError("--dim and --repeats must be positive");
  std::ostringstream out;
  out << "# frame potential: naive double sum O(n V^2) vs frame operator O(n^2 V)\n"
      << "# the closed form (sum of all coordinates)^2 would cost O(n V) but does not equal the frame potential\n"
      << "# (orthonormal basis of R^2: 4 vs 2), so no O(n V) route exists to benchmark\n"
      << "dim,count,naive_seconds,operator_seconds,speedup,fp_naive,fp_operator,relative_difference,agree\n";
  for (int count : o.counts) {
    if (count < 1) throw ParameterError("--counts entries must be positive");
    const auto config = random_sphere(o.dim, count, g.seed).config;
    double naive = 0, op = 0;
    const double t_naive = best_time(o.repeats, [&] { naive = frame_potential_naive(config); });
    const double t_op = best_time(o.repeats, [&] { op = frame_potential_operator(config).potential; });
    const double diff = std::abs(naive - op) / std::max(1.0, naive);
    out << o.dim << "," << count << "," << io::format_double(t_naive) << "," << io::format_double(t_op) << ","
        << io::format_double(t_naive / t_op) << "," << io::format_double(naive) << "," << io::format_double(op) << ","
        << io::format_double(diff) << "," << (diff <= 1e-9 ? "true" : "false") << "\n";
  }
  emit(g, "bench", {{"dim", o.dim}, {"counts", o.counts}, {"repeats", o.repeats}, {"seed", g.seed}}, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point configurations on unit spheres: chord sums, distance spectra, frame potentials"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--tolerance", g.tolerance, "Set all three tolerances");
  app.add_option("--on-sphere-tol", g.on_sphere_tol, "Absolute on-sphere tolerance");
  app.add_option("--dedup-tol", g.dedup_tol, "Absolute tolerance on squared lengths");
  app.add_option("--identity-tol", g.identity_tol, "Relative closed-form vs oracle tolerance");
  app.add_option("--out", g.out, "Output path (default stdout)");
  app.add_option("--format", g.format, "json or csv");
  app.add_flag("--strict", g.strict, "Exit 3 on hypothesis violations");
  app.add_option("--seed", g.seed, "RNG seed");

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Emit a point configuration");
  generate->add_option("family", gen.family,
                       "polygon | simplex | cross-polytope | hypercube | prism | antiprism | permutahedron | "
                       "signed-perm-orbit | random")
      ->required();
  generate->add_option("--edges", gen.edges, "Polygon vertex count");
  generate->add_option("--dim", gen.dim, "Dimension / order");
  generate->add_option("--base-edges", gen.base_edges, "Prism or antiprism base size");
  generate->add_option("--polar-angle", gen.polar_angle, "Angle of the rings from the z-axis");
  generate->add_option("--seed-point", gen.seed_point, "Seed coordinates for signed-perm-orbit")->delimiter(',');
  generate->add_flag("--no-signs", gen.no_signs, "Permutations only, no sign changes");
  generate->add_option("--count", gen.count, "Number of random points");

  AnalyzeOptions an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a point configuration");
  analyze_cmd->add_option("--in", an.in, "Input point set (JSON or CSV)")->required();

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Run the identity suites");
  verify->add_option("--suite", ver.suite, "chords | spectrum | frames | all");

  BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "Time naive vs frame-operator frame potential");
  bench->add_option("--dim", bo.dim, "Dimension");
  bench->add_option("--counts", bo.counts, "Point counts")->delimiter(',');
  bench->add_option("--repeats", bo.repeats, "Repetitions per count (best time kept)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*generate) return run_generate(g, gen);
    if (*analyze_cmd) return run_analyze(g, an);
    if (*verify) return run_verify_cmd(g, ver);
    if (*bench) return run_bench(g, bo);
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violation (" << e.hypothesis() << "): " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
