#include "pointline/random_construct.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "pointline/detail/rng.hpp"

namespace pl {

RandomParams derive_params(double delta, std::uint64_t seed, int max_retries) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw PreconditionError("delta must be in (0, 1)");
  }
  RandomParams p;
  p.delta = delta;
  p.point_count =
      static_cast<long long>(std::floor(0.1 / delta * std::log(1.0 / delta)));
  if (p.point_count < 2) {
    throw PreconditionError("delta too large: point budget below 2");
  }
  const double root = std::sqrt(static_cast<double>(p.point_count));
  p.slope_step = 8.0 * delta * root;
  p.slope_grid = static_cast<long long>(std::floor(1.0 / (8.0 * delta * root)));
  if (p.slope_grid < 1) {
    throw PreconditionError("delta too large: empty slope grid");
  }
  p.box_half = 1.0 / (4.0 * root);
  p.size_target = (p.point_count + 1) / 2;
  p.seed = seed;
  p.max_retries = max_retries;
  return p;
}

bool strip_contains(const StripQuery& q, double x, double y) {
  return std::abs(y - q.py - q.theta * (x - q.px)) <= q.half_width;
}

namespace {

struct Attempt {
  std::vector<ConfigElement> kept;  // still in [0,1]^2 coordinates
};

Attempt run_attempt(const RandomParams& p, std::uint64_t stream) {
  auto rng = detail::make_rng(p.seed, stream);
  const auto n = static_cast<std::size_t>(p.point_count);
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = detail::canonical(rng);
    ys[i] = detail::canonical(rng);
  }

  Attempt out;
  for (std::size_t i = 0; i < n; ++i) {
    // Scan slopes outward from zero: 0, +step, -step, +2*step, ...
    for (long long rank = 0; rank <= 2 * p.slope_grid; ++rank) {
      const long long j = (rank % 2 == 1) ? (rank + 1) / 2 : -(rank / 2);
      const StripQuery q{xs[i], ys[i], static_cast<double>(j) * p.slope_step,
                         p.delta};
      bool empty = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && strip_contains(q, xs[k], ys[k])) {
          empty = false;
          break;
        }
      }
      if (empty) {
        out.kept.push_back({xs[i], ys[i], q.theta});
        break;
      }
    }
  }
  return out;
}

}  // namespace

RandomBuild build_random(const RandomParams& p) {
  if (p.max_retries < 1) {
    throw PreconditionError("max_retries must be at least 1");
  }

  Attempt best;
  int attempts = 0;
  bool success = false;
  for (int t = 0; t < p.max_retries; ++t) {
    Attempt a = run_attempt(p, static_cast<std::uint64_t>(t));
    ++attempts;
    if (a.kept.size() > best.kept.size()) {
      best = std::move(a);
    }
    if (best.kept.size() >= static_cast<std::size_t>(p.size_target)) {
      success = true;
      break;
    }
  }

  // Centre the unit square on the origin; a pure shift preserves every
  // pairwise distance, so the strip guarantee carries over unchanged.
  std::vector<ConfigElement> elems;
  elems.reserve(best.kept.size());
  for (const auto& e : best.kept) {
    elems.push_back({e.x - 0.5, e.y - 0.5, e.theta});
  }

  RandomBuild out;
  out.report.provenance = "random(delta=" + std::to_string(p.delta) +
                          ",seed=" + std::to_string(p.seed) + ")";
  out.report.attempts = attempts;
  out.report.success = success;
  out.config = Configuration::create(std::move(elems), std::nullopt,
                                     out.report.provenance);
  out.report.size = out.config.size();
  if (out.config.size() >= 2) {
    const MinDistanceResult m = min_distance(out.config);
    out.config.set_claimed_delta(m.value);
    out.report.claimed_delta = m.value;
    out.report.measured_delta = m.value;
    out.report.witness = m.witness;
    out.report.verification = "full";
  } else {
    out.report.verification = "none";
    out.report.note = "fewer than 2 points kept; no distance to claim";
  }
  if (!success) {
    out.report.note += (out.report.note.empty() ? "" : "; ");
    out.report.note += "retries exhausted: best attempt kept " +
                       std::to_string(out.config.size()) + " of target " +
                       std::to_string(p.size_target);
  }
  return out;
}

}  // namespace pl
