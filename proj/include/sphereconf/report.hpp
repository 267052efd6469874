#pragma once

#include <json.hpp>

#include "sphereconf/chords.hpp"
#include "sphereconf/core.hpp"
#include "sphereconf/frames.hpp"
#include "sphereconf/spectrum.hpp"
#include "sphereconf/symmetry.hpp"

// JSON forms of the analysis reports. Field names match the struct members.
namespace sphereconf {

nlohmann::json to_json(const Tolerances& tol);
nlohmann::json to_json(const ValidationReport<double>& report);
nlohmann::json to_json(const ChordReport<double>& report);
nlohmann::json to_json(const CorollaryCheck& check);
nlohmann::json to_json(const DistanceSpectrum<double>& spectrum);
nlohmann::json to_json(const PythagoreanPairing<double>& pairing);
nlohmann::json to_json(const SymmetricSumCheck<double>& check);
nlohmann::json to_json(const SymmetrizationReport<double>& report);
nlohmann::json to_json(const SymmetryChecks<double>& checks);
/// frame_operator is emitted row-major as a flat array.
nlohmann::json to_json(const FrameReport<double>& report);

}  // namespace sphereconf
