#include "pointline/report.hpp"

#include <fstream>

#include "json.hpp"
#include "pointline/io.hpp"

namespace pl {

namespace {

using nlohmann::json;

json witness_json(const DistanceWitness& w) {
  json j;
  j["index_a"] = w.index_a;
  j["index_b"] = w.index_b;
  j["value"] = format_double(w.value);
  return j;
}

}  // namespace

std::string report_to_json(const BuildReport& r) {
  json j;
  j["provenance"] = r.provenance;
  j["size"] = r.size;
  if (r.claimed_delta) j["claimed_delta"] = format_double(*r.claimed_delta);
  if (r.measured_delta) j["measured_delta"] = format_double(*r.measured_delta);
  if (r.witness) j["witness"] = witness_json(*r.witness);
  j["verification"] = r.verification;
  j["attempts"] = r.attempts;
  j["success"] = r.success;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.levels.empty()) {
    json levels = json::array();
    for (const auto& row : r.levels) {
      json l;
      l["level"] = row.level;
      l["size"] = row.size;
      l["claimed_delta"] = format_double(row.claimed_delta);
      if (row.measured_delta) {
        l["measured_delta"] = format_double(*row.measured_delta);
      }
      l["gain"] = format_double(row.gain);
      l["gamma_emp"] = format_double(row.gamma_emp);
      l["verification"] = row.verification;
      levels.push_back(std::move(l));
    }
    j["levels"] = std::move(levels);
  }
  return j.dump(2) + "\n";
}

void write_report_file(const BuildReport& report,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << report_to_json(report);
}

}  // namespace pl
