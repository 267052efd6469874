#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sphereconf/core.hpp"
#include "sphereconf/generators.hpp"

namespace sphereconf::io {

enum class Format { json, csv };

Format parse_format(std::string_view name);

/// `.csv` selects CSV; anything else is read as JSON.
Format format_for_path(const std::filesystem::path& path);

/// {"dimension": n, "radius": r?, "center": [...]?, "points": [[...], ...]}
PointConfigd parse_json_config(std::string_view text);

/// One point per row, optional header row, center at the origin, radius 1.
PointConfigd parse_csv_config(std::string_view text);

PointConfigd read_config(const std::filesystem::path& path, std::optional<Format> format = std::nullopt);

nlohmann::json config_to_json(const PointConfigd& config);

/// The interchange JSON plus a "metadata" block with family, params and the
/// known_* flags.
nlohmann::json generated_to_json(const GeneratedConfig& generated);

std::string config_to_csv(const PointConfigd& config);

/// Serializes with every floating-point number written to 17 significant
/// digits; non-finite numbers become null.
std::string dump_json(const nlohmann::json& value, int indent = 2);

/// 17 significant digits, the shortest width that round-trips any double.
std::string format_double(double value);

/// FNV-1a 64-bit checksum, hex encoded.
std::string digest(std::string_view bytes);

std::string read_file(const std::filesystem::path& path);

}  // namespace sphereconf::io
