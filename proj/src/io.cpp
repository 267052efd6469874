#include "sphereconf/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace sphereconf::io {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  return fields;
}

std::optional<double> parse_number(const std::string& field) {
  if (field.empty()) return std::nullopt;
  std::size_t used = 0;
  try {
    const double value = std::stod(field, &used);
    if (used != field.size()) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<double> number_array(const nlohmann::json& node, const std::string& what) {
  if (!node.is_array()) throw StructuralError(what + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : node) {
    if (!x.is_number()) throw StructuralError(what + " must contain only numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

void write_json(std::string& out, const nlohmann::json& value, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* newline = indent > 0 ? "\n" : "";
  switch (value.type()) {
    case nlohmann::json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += newline;
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) {
          out += ",";
          out += newline;
        }
        first = false;
        out += pad;
        out += nlohmann::json(key).dump();
        out += indent > 0 ? ": " : ":";
        write_json(out, item, indent, depth + 1);
      }
      out += newline;
      out += close_pad;
      out += "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line; points and matrices read better.
      bool flat = true;
      for (const auto& item : value) flat = flat && !item.is_structured();
      out += "[";
      if (!flat) out += newline;
      bool first = true;
      for (const auto& item : value) {
        if (!first) {
          out += ",";
          out += flat ? (indent > 0 ? " " : "") : newline;
        }
        first = false;
        if (!flat) out += pad;
        write_json(out, item, indent, depth + 1);
      }
      if (!flat) {
        out += newline;
        out += close_pad;
      }
      out += "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double x = value.get<double>();
      out += std::isfinite(x) ? format_double(x) : "null";
      return;
    }
    default:
      out += value.dump();
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw ParameterError("unknown format '" + std::string(name) + "' (expected json or csv)");
}

Format format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? Format::csv : Format::json;
}

PointConfigd parse_json_config(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StructuralError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw StructuralError("point-set JSON must be an object");
  if (!doc.contains("points")) throw StructuralError("point-set JSON is missing \"points\"");
  const auto& points = doc.at("points");
  if (!points.is_array() || points.empty()) throw StructuralError("\"points\" must be a non-empty array");

  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < points.size(); ++i) rows.push_back(number_array(points[i], "point " + std::to_string(i)));

  Eigen::Index dimension = static_cast<Eigen::Index>(rows.front().size());
  if (doc.contains("dimension")) {
    if (!doc.at("dimension").is_number_integer()) throw StructuralError("\"dimension\" must be an integer");
    dimension = doc.at("dimension").get<Eigen::Index>();
  }
  Eigen::VectorXd center = Eigen::VectorXd::Zero(std::max<Eigen::Index>(dimension, 0));
  if (doc.contains("center")) {
    const auto coords = number_array(doc.at("center"), "\"center\"");
    if (static_cast<Eigen::Index>(coords.size()) != dimension) {
      throw StructuralError("\"center\" has " + std::to_string(coords.size()) + " coordinates, expected " +
                            std::to_string(dimension));
    }
    center = Eigen::Map<const Eigen::VectorXd>(coords.data(), dimension);
  }
  double radius = 1.0;
  if (doc.contains("radius")) {
    if (!doc.at("radius").is_number()) throw StructuralError("\"radius\" must be a number");
    radius = doc.at("radius").get<double>();
  }
  return PointConfigd::from_rows(dimension, rows, std::move(center), radius);
}

PointConfigd parse_csv_config(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::stringstream ss{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto fields = split_fields(content);
    std::vector<double> row;
    bool numeric = true;
    for (const auto& f : fields) {
      const auto x = parse_number(f);
      if (!x) {
        numeric = false;
        break;
      }
      row.push_back(*x);
    }
    if (!numeric) {
      if (rows.empty() && line_no == 1) continue;  // header
      throw StructuralError("CSV line " + std::to_string(line_no) + " is not numeric");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw StructuralError("CSV input contains no points");
  return PointConfigd::from_rows(static_cast<Eigen::Index>(rows.front().size()), rows);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PointConfigd read_config(const std::filesystem::path& path, std::optional<Format> format) {
  const std::string text = read_file(path);
  return format.value_or(format_for_path(path)) == Format::csv ? parse_csv_config(text) : parse_json_config(text);
}

nlohmann::json config_to_json(const PointConfigd& config) {
  nlohmann::json points = nlohmann::json::array();
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    const auto p = config.point(i);
    points.push_back(std::vector<double>(p.data(), p.data() + p.size()));
  }
  const auto& c = config.center();
  return {{"dimension", config.dimension()},
          {"radius", config.radius()},
          {"center", std::vector<double>(c.data(), c.data() + c.size())},
          {"points", std::move(points)}};
}

nlohmann::json generated_to_json(const GeneratedConfig& generated) {
  auto doc = config_to_json(generated.config);
  doc["metadata"] = {{"family", std::string(to_string(generated.family))},
                     {"params", generated.params},
                     {"known_transitive", generated.known_transitive},
                     {"known_antipodal", generated.known_antipodal}};
  return doc;
}

std::string config_to_csv(const PointConfigd& config) {
  std::string out;
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    for (Eigen::Index c = 0; c < config.dimension(); ++c) {
      if (c > 0) out += ",";
      out += format_double(config.points()(c, i));
    }
    out += "\n";
  }
  return out;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  std::string s(buf);
  // Keep floats recognisable as floats when %g drops the decimal point.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string dump_json(const nlohmann::json& value, int indent) {
  std::string out;
  write_json(out, value, indent, 0);
  return out;
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sphereconf::io
