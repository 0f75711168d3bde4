#include "pointline/compose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pointline/detail/rng.hpp"

namespace pl {

namespace {

// Minimum distance guaranteed by the composition for a same-base pair with
// different shift indices is w^2; for pairs from different base elements it
// is w.  Same-cell pairs reproduce the inner distance scaled by exactly w^2.
constexpr double kSameCellAbsFloor = 2e-15;

double min_distance_or_unit(const Configuration& x) {
  if (x.size() < 2) return 1.0;
  return std::min(min_distance(x).value, 1.0);
}

std::string fmt(double v) {
  std::string s = std::to_string(v);
  return s;
}

}  // namespace

long long ComposeParams::shift_range() const {
  if (!(w > 0.0 && w <= 0.5)) {
    throw PreconditionError("composition scale w must be in (0, 1/2]");
  }
  return static_cast<long long>(std::floor(1.0 / w)) - 1;
}

Configuration shrink_base(const Configuration& base) {
  const Rescaler half{0.0, 0.0, 0.0, 0.5};
  return rescale_configuration(half, base);
}

ComposeResult compose(const Configuration& base, const Configuration& inner,
                      const ComposeParams& params) {
  if (base.size() == 0 || inner.size() == 0) {
    throw PreconditionError("compose requires nonempty base and inner");
  }
  const long long jmax = params.shift_range();
  const double w = params.w;
  const double w2 = w * w;
  const double c = params.separation;
  if (!(c > 0.0)) {
    throw PreconditionError("separation constant must be positive");
  }

  const double inner_min = min_distance_or_unit(inner);
  if (params.guaranteed) {
    if (c < 5.0) {
      throw PreconditionError("guaranteed path requires C >= 5, got C = " +
                              fmt(c));
    }
    const double w_cap = 1.0 / (4.0 * c * c);
    if (w > w_cap) {
      throw PreconditionError("guaranteed path requires w <= 1/(4C^2): w = " +
                              fmt(w) + " > " + fmt(w_cap));
    }
    if (base.size() >= 2) {
      const double d_base = min_distance(base).value;
      const double need = 4.0 * c * c * w;
      if (d_base < need) {
        throw PreconditionError("guaranteed path requires d(X0) >= 4C^2*w: "
                                "d(X0) = " +
                                fmt(d_base) + " < 4C^2*w = " + fmt(need));
      }
    }
  }

  const Configuration centers = shrink_base(base);
  std::vector<ConfigElement> elems;
  std::vector<CellLabel> labels;
  elems.reserve(base.size() * static_cast<std::size_t>(2 * jmax + 1) *
                inner.size());
  labels.reserve(elems.capacity());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const ConfigElement& p = centers.elements()[i];
    for (long long j = -jmax; j <= jmax; ++j) {
      const double cy = p.y + c * static_cast<double>(j) * w2;
      // On the guaranteed path the centres must stay in the half box (that
      // is what makes every cell rescaler automatically domain-safe); the
      // exploratory path only requires the actual elements to stay in the
      // domain, which apply_element enforces below.
      if (params.guaranteed && (std::abs(p.x) > 0.5 || std::abs(cy) > 0.5)) {
        throw PreconditionError(
            "cell centre (" + fmt(p.x) + ", " + fmt(cy) +
            ") leaves the half box; reduce w or the separation constant");
      }
      const Rescaler cell{p.x, cy, p.theta, w};
      for (std::size_t m = 0; m < inner.size(); ++m) {
        elems.push_back(apply_element(cell, inner.elements()[m]));
        labels.push_back({i, j, m});
      }
    }
  }

  ComposeResult out;
  out.report.provenance = "compose(k=" + std::to_string(base.size()) +
                          ",w=" + fmt(w) + ",C=" + fmt(c) +
                          (params.guaranteed ? ",guaranteed)" : ",exploratory)");
  try {
    out.config = Configuration::create(std::move(elems), std::nullopt,
                                       out.report.provenance);
  } catch (const PreconditionError& err) {
    throw PreconditionError(std::string("composed cells overlap: ") +
                            err.what());
  }
  out.config.set_labels(std::move(labels));
  out.report.size = out.config.size();

  // Measure: full scan below the cap, otherwise exhaustive same-cell checks
  // plus a seeded sample of cross-cell pairs.
  double measured = std::numeric_limits<double>::infinity();
  if (out.config.size() <= params.verify_cap) {
    const MinDistanceResult m = min_distance(out.config);
    measured = m.value;
    out.report.witness = m.witness;
    out.report.verification = "full";
  } else {
    const auto& e = out.config.elements();
    const auto& lab = out.config.labels();
    const std::size_t n = e.size();
    const std::size_t cell_size = inner.size();
    DistanceWitness best{0, 0, std::numeric_limits<double>::infinity()};
    // Same-cell pairs, exhaustively (elements of one cell are contiguous).
    for (std::size_t start = 0; start < n; start += cell_size) {
      for (std::size_t a = start; a < start + cell_size; ++a) {
        for (std::size_t b = start; b < start + cell_size; ++b) {
          if (a == b) continue;
          const double d = vertical_distance(e[a], e[b]);
          if (d < best.value) best = {a, b, d};
        }
      }
    }
    // Cross-cell sample.
    auto rng = detail::make_rng(params.sample_seed, 0xC0DE);
    for (std::uint64_t s = 0; s < params.sample_pairs; ++s) {
      const auto a = static_cast<std::size_t>(rng() % n);
      const auto b = static_cast<std::size_t>(rng() % n);
      if (a == b) continue;
      if (lab[a].base == lab[b].base && lab[a].shift == lab[b].shift) continue;
      const double d = vertical_distance(e[a], e[b]);
      if (d < best.value) best = {a, b, d};
    }
    measured = best.value;
    out.report.witness = best;
    out.report.verification = "sampled";
    out.report.note = "size above verify cap; same-cell pairs checked "
                      "exhaustively, cross-cell pairs sampled";
  }
  out.report.measured_delta = measured;

  double claimed;
  if (params.guaranteed) {
    claimed = w2 * inner_min;
  } else {
    claimed = measured;
  }
  out.config.set_claimed_delta(claimed);
  out.report.claimed_delta = claimed;
  out.report.success = measured >= claimed - kClaimTolerance;
  return out;
}

CaseReport check_case_bounds(const Configuration& composed,
                             const Configuration& inner,
                             const ComposeParams& params) {
  const auto& e = composed.elements();
  const auto& lab = composed.labels();
  if (lab.size() != e.size() || e.empty()) {
    throw PreconditionError("case check requires a labeled composition");
  }
  const double w = params.w;
  const double w2 = w * w;
  constexpr std::size_t kMaxViolationsKept = 64;

  CaseReport rep;
  auto check_pair = [&](std::size_t a, std::size_t b) {
    ++rep.pairs_checked;
    const double d = vertical_distance(e[a], e[b]);
    int case_id;
    double required;
    bool bad;
    if (lab[a].base != lab[b].base) {
      case_id = 1;
      required = w;
      bad = d < required - kClaimTolerance;
    } else if (lab[a].shift != lab[b].shift) {
      case_id = 2;
      required = w2;
      bad = d < required - kClaimTolerance;
    } else {
      case_id = 3;
      const double di = vertical_distance(inner.elements()[lab[a].inner],
                                          inner.elements()[lab[b].inner]);
      required = w2 * di;
      const double tol = std::max(1e-12 * required, kSameCellAbsFloor);
      bad = std::abs(d - required) > tol;
    }
    if (bad) {
      ++rep.violation_count;
      if (rep.violations.size() < kMaxViolationsKept) {
        rep.violations.push_back({a, b, case_id, d, required});
      }
    }
  };

  const std::size_t n = e.size();
  const bool exhaustive = n * n <= 20000000ull;
  if (exhaustive) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b) check_pair(a, b);
      }
    }
    return rep;
  }

  // Large composition: all same-cell pairs (contiguous blocks) plus a seeded
  // random sample of cross-cell pairs.
  const std::size_t cell_size = inner.size();
  for (std::size_t start = 0; start < n; start += cell_size) {
    for (std::size_t a = start; a < start + cell_size; ++a) {
      for (std::size_t b = start; b < start + cell_size; ++b) {
        if (a != b) check_pair(a, b);
      }
    }
  }
  auto rng = detail::make_rng(params.sample_seed, 0xCA5E);
  for (std::uint64_t s = 0; s < params.sample_pairs; ++s) {
    const auto a = static_cast<std::size_t>(rng() % n);
    const auto b = static_cast<std::size_t>(rng() % n);
    if (a == b) continue;
    if (lab[a].base == lab[b].base && lab[a].shift == lab[b].shift) continue;
    check_pair(a, b);
  }
  return rep;
}

ComposeResult iterate_compose(const RecursionPlan& plan) {
  if (plan.depth < 1) {
    throw PreconditionError("recursion depth must be at least 1");
  }
  const long long shifts = 2 * plan.params.shift_range() + 1;
  const double w2 = plan.params.w * plan.params.w;

  Configuration x = plan.inner_seed;
  double telescoped = min_distance_or_unit(plan.inner_seed);

  ComposeResult last;
  std::vector<LevelRecord> levels;
  for (int t = 1; t <= plan.depth; ++t) {
    const std::size_t next_size =
        plan.base.size() * static_cast<std::size_t>(shifts) * x.size();
    if (next_size > plan.max_size) {
      throw PreconditionError("level " + std::to_string(t) + " would have " +
                              std::to_string(next_size) +
                              " elements, above the configured cap");
    }
    last = compose(plan.base, x, plan.params);
    if (plan.params.guaranteed) {
      // Telescoped claim: exact product of dyadic factors, and a valid lower
      // bound since each level's guarantee is at least this tight.
      telescoped *= w2;
      last.config.set_claimed_delta(telescoped);
      last.report.claimed_delta = telescoped;
    }
    LevelRecord row;
    row.level = t;
    row.size = last.config.size();
    row.claimed_delta = *last.config.claimed_delta();
    row.measured_delta = last.report.measured_delta;
    row.gain = row.claimed_delta / (2.0 / static_cast<double>(row.size));
    row.gamma_emp = empirical_exponent(row.gain, row.claimed_delta);
    row.verification = last.report.verification;
    levels.push_back(row);
    x = last.config;
  }
  last.report.levels = std::move(levels);
  last.report.provenance = "iterate(depth=" + std::to_string(plan.depth) +
                           "," + last.report.provenance + ")";
  return last;
}

namespace {

double raw_min_distance(const std::vector<ConfigElement>& e) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = 0; b < e.size(); ++b) {
      if (a == b) continue;
      best = std::min(best, vertical_distance(e[a], e[b]));
    }
  }
  return best;
}

bool collides(const std::vector<ConfigElement>& e, std::size_t skip,
              const ConfigElement& cand) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i != skip && e[i] == cand) return true;
  }
  return false;
}

}  // namespace

SearchResult search_base(int k_target, double delta_target,
                         const SearchBudget& budget, std::uint64_t seed) {
  if (k_target < 2) {
    throw PreconditionError("search needs at least 2 elements");
  }
  if (delta_target > 4.0) {
    throw PreconditionError(
        "delta_target above 4 exceeds the distance diameter of the box");
  }

  const Configuration stacked = trivial_configuration(k_target);
  if (budget.restarts <= 0 || budget.iterations <= 0) {
    const double d = min_distance_bruteforce(stacked).value;
    return {stacked, d >= delta_target, d};
  }

  std::vector<ConfigElement> best_elems;
  double best_d = -1.0;
  for (int r = 0; r < budget.restarts; ++r) {
    auto rng = detail::make_rng(seed, static_cast<std::uint64_t>(r));
    std::vector<ConfigElement> cur;
    if (r == 0) {
      cur = stacked.elements();
    } else {
      while (cur.size() < static_cast<std::size_t>(k_target)) {
        ConfigElement cand{detail::symmetric(rng), detail::symmetric(rng),
                           detail::symmetric(rng)};
        if (!collides(cur, cur.size(), cand)) cur.push_back(cand);
      }
    }
    double cur_d = raw_min_distance(cur);
    for (long long it = 0; it < budget.iterations; ++it) {
      // Step schedule decays geometrically from 0.5 to ~1e-4.
      const double frac = budget.iterations > 1
                              ? static_cast<double>(it) /
                                    static_cast<double>(budget.iterations - 1)
                              : 1.0;
      const double step = 0.5 * std::pow(2e-4, frac);
      const auto idx = static_cast<std::size_t>(
          rng() % static_cast<std::uint64_t>(k_target));
      const auto coord = static_cast<int>(rng() % 3);
      ConfigElement cand = cur[idx];
      double* v = coord == 0 ? &cand.x : coord == 1 ? &cand.y : &cand.theta;
      *v = std::clamp(*v + step * detail::symmetric(rng), -1.0, 1.0);
      if (collides(cur, idx, cand)) continue;
      const ConfigElement saved = cur[idx];
      cur[idx] = cand;
      const double d = raw_min_distance(cur);
      if (d >= cur_d) {
        cur_d = d;  // accept plateau moves to escape flat regions
      } else {
        cur[idx] = saved;
      }
    }
    if (cur_d > best_d) {
      best_d = cur_d;
      best_elems = cur;
    }
  }

  SearchResult out;
  out.config = Configuration::create(std::move(best_elems), best_d,
                                     "search(k=" + std::to_string(k_target) + ")");
  out.best_distance = best_d;
  out.target_met = best_d >= delta_target;
  return out;
}

}  // namespace pl
