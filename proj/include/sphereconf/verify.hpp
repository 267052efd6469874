#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sphereconf {

/// One verification check: passes when residual <= tolerance.
struct CheckRow {
  std::string suite;
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

enum class Suite { chords, spectrum, frames, all };

Suite parse_suite(std::string_view name);

/// Runs the identity checks of a suite over the generator families and over
/// random configurations derived from `seed`.
std::vector<CheckRow> run_verify(Suite suite, std::uint64_t seed);

}  // namespace sphereconf
