#pragma once

#include <cstdint>

#include "pointline/geometry.hpp"
#include "pointline/report.hpp"

namespace pl {

// Derived quantities for the randomized construction at a given delta.
// The shape of the formulas (point budget ~ (1/delta) * ln(1/delta), slope
// grid spacing ~ delta * sqrt(point_count)) makes a random point survive the
// empty-strip test with probability >= 1/2, so roughly half the budget is
// kept per attempt.
struct RandomParams {
  double delta = 0.0;          // target minimum distance, in (0, 1)
  long long point_count = 0;   // floor(0.1 * (1/delta) * ln(1/delta))
  long long slope_grid = 0;    // floor(1 / (8 * delta * sqrt(point_count)))
  double slope_step = 0.0;     // 8 * delta * sqrt(point_count)
  double box_half = 0.0;       // 1 / (4 * sqrt(point_count)); diagnostic only
  long long size_target = 0;   // ceil(point_count / 2)
  std::uint64_t seed = 0;
  int max_retries = 20;
};

// Computes the derived fields.  Throws PreconditionError when delta is not in
// (0, 1) or is too large for the formulas to make sense (point_count < 2 or
// slope_grid < 1).
RandomParams derive_params(double delta, std::uint64_t seed = 0,
                           int max_retries = 20);

// A strip of vertical half-width `half_width` around the line of slope
// `theta` through (px, py).
struct StripQuery {
  double px = 0.0;
  double py = 0.0;
  double theta = 0.0;
  double half_width = 0.0;
};

// Closed containment test: |y - py - theta*(x - px)| <= half_width.
bool strip_contains(const StripQuery& q, double x, double y);

struct RandomBuild {
  Configuration config;
  BuildReport report;
};

// Randomized construction.  Per attempt: sample point_count points uniformly
// on the unit square; for each point scan slopes j*slope_step for
// j = 0, 1, -1, ..., slope_grid, -slope_grid and keep the point with the
// first slope whose strip (half-width delta) contains no other sampled
// point; succeed when >= size_target points are kept.  The kept points are
// shifted to the centered square [-1/2,1/2]^2 (a distance-preserving move)
// and claimed_delta is set to the measured minimum, which is > delta by the
// strip test.  Retries with a fresh seed stream up to max_retries; on
// exhaustion returns the best attempt with report.success = false.
RandomBuild build_random(const RandomParams& params);

}  // namespace pl
