#pragma once

#include <cstdint>
#include <vector>

#include "pointline/geometry.hpp"
#include "pointline/rescale.hpp"
#include "pointline/report.hpp"

namespace pl {

// Parameters of the self-affine composition step.
struct ComposeParams {
  double w = 0.0;           // cell scale, in (0, 1/2]
  double separation = 5.0;  // vertical spacing constant between cell stacks
  bool guaranteed = true;   // enforce the a-priori bound preconditions
  std::size_t verify_cap = 20000;       // full O(n^2) verification up to here
  std::uint64_t sample_pairs = 1000000; // sampled pairs above the cap
  std::uint64_t sample_seed = 0;

  // Largest |j| of the vertical shift index; 2*shift_range()+1 shifts total.
  long long shift_range() const;
};

// Image of the base under the fixed rescaler (0, 0, 0, 1/2); shrinks the
// base into [-1/2,1/2] x [-1/4,1/4] x [-1/2,1/2] so every element can serve
// as a cell center.  Distances scale by 1/4.
Configuration shrink_base(const Configuration& base);

struct ComposeResult {
  Configuration config;
  BuildReport report;
};

// Replaces every element (p_i, theta_i) of shrink_base(base) by
// 2*shift_range()+1 copies of `inner`, each mapped by the rescaler centered
// at p_i + (0, separation * j * w^2) with slope theta_i and scale w.  The
// result has exactly |base| * (2*shift_range()+1) * |inner| elements and
// carries CellLabels.
//
// Guaranteed path preconditions: separation >= 5, w <= 1/(4*separation^2),
// d(base) >= 4*separation^2*w; then claimed_delta = w^2 * min(d(inner), 1)
// holds a priori (and is still measured when size permits).  On the
// exploratory path claimed_delta is set from measurement instead.
ComposeResult compose(const Configuration& base, const Configuration& inner,
                      const ComposeParams& params);

// One ordered pair of composed elements whose distance falls short of the
// bound its label-case promises.
struct CaseViolation {
  std::size_t index_a = 0;
  std::size_t index_b = 0;
  int case_id = 0;  // 1: different base cells, 2: same base different shift,
                    // 3: same cell (exact scaling)
  double measured = 0.0;
  double required = 0.0;
};

struct CaseReport {
  std::size_t pairs_checked = 0;
  std::size_t violation_count = 0;
  std::vector<CaseViolation> violations;  // capped sample of the violations

  bool pass() const { return violation_count == 0; }
};

// Scans ordered pairs of a labeled composition and checks, per case:
// different base cells -> distance >= w; same base, different shift ->
// distance >= w^2; same cell -> distance == w^2 * inner distance to within
// 1e-12 relative.  Exhaustive when the pair count is modest, otherwise a
// seeded random sample of `sample_pairs` ordered pairs (same-cell pairs are
// always checked exhaustively).
CaseReport check_case_bounds(const Configuration& composed,
                             const Configuration& inner,
                             const ComposeParams& params);

struct RecursionPlan {
  int depth = 1;
  Configuration base;
  Configuration inner_seed;
  ComposeParams params;
  std::size_t max_size = 10000000;
};

// Folds compose `depth` times starting from inner_seed, recording one
// LevelRecord per level.  On the guaranteed path the final claimed_delta is
// the telescoped w^(2*depth) * min(d(inner_seed), 1); exploratory levels
// claim their measured value.
ComposeResult iterate_compose(const RecursionPlan& plan);

struct SearchBudget {
  int restarts = 8;
  long long iterations = 20000;
};

struct SearchResult {
  Configuration config;
  bool target_met = false;
  double best_distance = 0.0;
};

// Random-restart coordinate ascent maximizing d(X) over k-element
// configurations.  Restart 0 starts from the stacked baseline (so the
// result never scores below 2/k); with a zero iteration budget that seed is
// returned unchanged.
SearchResult search_base(int k_target, double delta_target,
                         const SearchBudget& budget, std::uint64_t seed);

}  // namespace pl
