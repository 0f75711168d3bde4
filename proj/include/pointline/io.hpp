#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pointline/geometry.hpp"
#include "pointline/report.hpp"

namespace pl {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// Strict parse of a decimal/scientific double.  Throws IoError on garbage.
double parse_double(std::string_view s);

// Accepts either a plain double or an exact fraction "p/q".
double parse_real_or_fraction(std::string_view s);

// JSON configuration file (format_version 1): elements as round-trip decimal
// strings, optional claimed_delta, provenance, optional per-element labels.
std::string config_to_json(const Configuration& x, bool include_labels = true);
Configuration config_from_json(const std::string& text);

void write_config_file(const Configuration& x, const std::filesystem::path& path,
                       bool include_labels = true);
Configuration read_config_file(const std::filesystem::path& path);

std::string report_to_json(const BuildReport& report);
void write_report_file(const BuildReport& report,
                       const std::filesystem::path& path);

// CSV with header "x,y,theta", round-trip precision.
void write_csv(const Configuration& x, const std::filesystem::path& path);
Configuration read_csv(const std::filesystem::path& path);

// SVG rendering: unit-square frame, one marker per point, one line segment
// per element clipped to the square, optional translucent strips of vertical
// half-width strip_half_width (0 disables the bands).
std::string config_to_svg(const Configuration& x, double strip_half_width = 0.0);
void write_svg(const Configuration& x, const std::filesystem::path& path,
               double strip_half_width = 0.0);

}  // namespace pl
