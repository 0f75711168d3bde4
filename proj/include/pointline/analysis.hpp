#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pointline/geometry.hpp"

namespace pl {

// Packing-style upper bound on the achievable minimum distance of an
// n-element configuration: 4*sqrt(2)/floor(sqrt(n-1)).  Deliberately loose;
// used as a tripwire against verifier bugs, not as a tight bound.  n >= 2.
double upper_bound_sanity(std::size_t n);

struct GainRecord {
  std::size_t n = 0;
  double delta = 0.0;      // verified minimum distance
  double gain = 0.0;       // n*delta/2, so the stacked baseline scores 1
  double gamma_emp = 0.0;  // ln(gain)/ln(1/delta)
  std::optional<DistanceWitness> witness;
  std::string provenance;
};

// ln(gain)/ln(1/delta); 0 when delta >= 1 (the exponent is undefined there).
double empirical_exponent(double gain, double delta);

// Measures d(X), checks it against the claim, and reports size/gain metrics.
// Throws PreconditionError when X has no claim or fewer than 2 elements;
// throws std::runtime_error when the claim fails verification.
GainRecord gain_report(const Configuration& x);

// One row per recursion level of an iterated composition.
struct LevelRecord {
  int level = 0;
  std::size_t size = 0;
  double claimed_delta = 0.0;
  std::optional<double> measured_delta;
  double gain = 0.0;
  double gamma_emp = 0.0;
  std::string verification;  // "full", "sampled", or "none"
};

struct LevelTable {
  std::vector<LevelRecord> rows;
  // Multiplicative step between consecutive rows; empty for < 2 rows.
  std::vector<double> size_ratio;
  std::vector<double> delta_ratio;
  std::vector<double> gain_factor;

  std::string to_text() const;
};

LevelTable level_table(const std::vector<LevelRecord>& rows);

}  // namespace pl
