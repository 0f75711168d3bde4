#include "pointline/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"

namespace pl {

namespace {

using nlohmann::json;

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << text;
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw IoError("malformed number: '" + std::string(s) + "'");
  }
  return v;
}

double parse_real_or_fraction(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return parse_double(s);
  }
  const double num = parse_double(s.substr(0, slash));
  const double den = parse_double(s.substr(slash + 1));
  if (den == 0.0) {
    throw IoError("fraction with zero denominator: '" + std::string(s) + "'");
  }
  return num / den;
}

std::string config_to_json(const Configuration& x, bool include_labels) {
  json j;
  j["format_version"] = 1;
  j["provenance"] = x.provenance();
  if (x.claimed_delta()) {
    j["claimed_delta"] = format_double(*x.claimed_delta());
  }
  json elems = json::array();
  for (const auto& e : x.elements()) {
    elems.push_back({format_double(e.x), format_double(e.y),
                     format_double(e.theta)});
  }
  j["elements"] = std::move(elems);
  if (include_labels && !x.labels().empty()) {
    json labels = json::array();
    for (const auto& l : x.labels()) {
      labels.push_back({l.base, l.shift, l.inner});
    }
    j["labels"] = std::move(labels);
  }
  return j.dump(2) + "\n";
}

Configuration config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed configuration file: ") + e.what());
  }
  try {
    if (!j.contains("format_version") || j["format_version"].get<int>() != 1) {
      throw IoError("unsupported format_version");
    }
    std::vector<ConfigElement> elems;
    for (const auto& row : j.at("elements")) {
      elems.push_back({parse_double(row.at(0).get<std::string>()),
                       parse_double(row.at(1).get<std::string>()),
                       parse_double(row.at(2).get<std::string>())});
    }
    std::optional<double> claimed;
    if (j.contains("claimed_delta")) {
      claimed = parse_double(j["claimed_delta"].get<std::string>());
    }
    std::string provenance = j.value("provenance", std::string{});
    Configuration cfg =
        Configuration::create(std::move(elems), claimed, std::move(provenance));
    if (j.contains("labels")) {
      std::vector<CellLabel> labels;
      for (const auto& row : j["labels"]) {
        labels.push_back({row.at(0).get<std::size_t>(),
                          row.at(1).get<long long>(),
                          row.at(2).get<std::size_t>()});
      }
      cfg.set_labels(std::move(labels));
    }
    return cfg;
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed configuration file: ") + e.what());
  }
}

void write_config_file(const Configuration& x, const std::filesystem::path& path,
                       bool include_labels) {
  write_text(path, config_to_json(x, include_labels));
}

Configuration read_config_file(const std::filesystem::path& path) {
  return config_from_json(read_text(path));
}

void write_csv(const Configuration& x, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "x,y,theta\n";
  for (const auto& e : x.elements()) {
    os << format_double(e.x) << ',' << format_double(e.y) << ','
       << format_double(e.theta) << '\n';
  }
  write_text(path, os.str());
}

Configuration read_csv(const std::filesystem::path& path) {
  std::istringstream in(read_text(path));
  std::string line;
  if (!std::getline(in, line) || line != "x,y,theta") {
    throw IoError("csv missing 'x,y,theta' header: " + path.string());
  }
  std::vector<ConfigElement> elems;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw IoError("malformed csv row: '" + line + "'");
    }
    elems.push_back({parse_double(std::string_view(line).substr(0, c1)),
                     parse_double(std::string_view(line).substr(c1 + 1, c2 - c1 - 1)),
                     parse_double(std::string_view(line).substr(c2 + 1))});
  }
  return Configuration::create(std::move(elems));
}

std::string config_to_svg(const Configuration& x, double strip_half_width) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\""
        " viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
  os << "  <defs><clipPath id=\"box\">"
        "<rect x=\"-1\" y=\"-1\" width=\"2\" height=\"2\"/>"
        "</clipPath></defs>\n";
  os << "  <rect x=\"-1\" y=\"-1\" width=\"2\" height=\"2\" fill=\"white\""
        " stroke=\"black\" stroke-width=\"0.01\"/>\n";
  // SVG's y axis points down; emit -y everywhere to draw in math orientation.
  if (strip_half_width > 0.0) {
    for (const auto& e : x.elements()) {
      const double yl = e.y + e.theta * (-1.0 - e.x);
      const double yr = e.y + e.theta * (1.0 - e.x);
      os << "  <polygon clip-path=\"url(#box)\" fill=\"#1f77b4\""
            " fill-opacity=\"0.15\" points=\""
         << "-1," << -(yl - strip_half_width) << " 1," << -(yr - strip_half_width)
         << " 1," << -(yr + strip_half_width) << " -1,"
         << -(yl + strip_half_width) << "\"/>\n";
    }
  }
  for (const auto& e : x.elements()) {
    const double yl = e.y + e.theta * (-1.0 - e.x);
    const double yr = e.y + e.theta * (1.0 - e.x);
    os << "  <line clip-path=\"url(#box)\" x1=\"-1\" y1=\"" << -yl
       << "\" x2=\"1\" y2=\"" << -yr
       << "\" stroke=\"#1f77b4\" stroke-width=\"0.004\"/>\n";
  }
  for (const auto& e : x.elements()) {
    os << "  <circle cx=\"" << e.x << "\" cy=\"" << -e.y
       << "\" r=\"0.012\" fill=\"#d62728\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_svg(const Configuration& x, const std::filesystem::path& path,
               double strip_half_width) {
  write_text(path, config_to_svg(x, strip_half_width));
}

}  // namespace pl
