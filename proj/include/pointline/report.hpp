#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pointline/analysis.hpp"
#include "pointline/geometry.hpp"

namespace pl {

// Construction metadata returned alongside a built configuration.
struct BuildReport {
  std::string provenance;
  std::size_t size = 0;
  std::optional<double> claimed_delta;
  std::optional<double> measured_delta;
  std::optional<DistanceWitness> witness;
  std::string verification;  // "full", "sampled", or "none"
  int attempts = 0;          // randomized builds: attempts consumed
  bool success = true;
  std::string note;
  std::vector<LevelRecord> levels;  // iterated builds: one row per level

  // Rendered by the io module (kept out of this header to avoid pulling the
  // JSON dependency into every consumer).
};

}  // namespace pl
