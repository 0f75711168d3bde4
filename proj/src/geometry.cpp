#include "pointline/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

#include "pointline/analysis.hpp"

namespace pl {

namespace {

std::tuple<double, double, double> as_tuple(const ConfigElement& e) {
  return {e.x, e.y, e.theta};
}

}  // namespace

bool in_domain(const ConfigElement& e) {
  return std::abs(e.x) <= 1.0 && std::abs(e.y) <= 1.0 && std::abs(e.theta) <= 1.0;
}

double vertical_distance(const ConfigElement& a, const ConfigElement& b) {
  return std::abs(a.y - b.y - b.theta * (a.x - b.x));
}

Configuration Configuration::create(std::vector<ConfigElement> elements,
                                    std::optional<double> claimed_delta,
                                    std::string provenance) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!in_domain(elements[i])) {
      throw PreconditionError("element " + std::to_string(i) +
                              " lies outside the domain box");
    }
  }
  // Distinctness: sort an index permutation and compare neighbours.
  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return as_tuple(elements[a]) < as_tuple(elements[b]);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (as_tuple(elements[order[i - 1]]) == as_tuple(elements[order[i]])) {
      throw PreconditionError("duplicate elements at indices " +
                              std::to_string(order[i - 1]) + " and " +
                              std::to_string(order[i]));
    }
  }
  if (claimed_delta && *claimed_delta < 0.0) {
    throw PreconditionError("claimed_delta must be nonnegative");
  }
  Configuration c;
  c.elements_ = std::move(elements);
  c.claimed_delta_ = claimed_delta;
  c.provenance_ = std::move(provenance);
  return c;
}

void Configuration::set_labels(std::vector<CellLabel> labels) {
  if (!labels.empty() && labels.size() != elements_.size()) {
    throw PreconditionError("label count must match element count");
  }
  labels_ = std::move(labels);
}

MinDistanceResult min_distance_bruteforce(const Configuration& x) {
  const auto& e = x.elements();
  const std::size_t n = e.size();
  if (n < 2) {
    throw PreconditionError("minimum distance needs at least 2 elements");
  }
  MinDistanceResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const double d = vertical_distance(e[a], e[b]);
      if (d < best.value) {
        best.value = d;
        best.witness = {a, b, d};
      }
    }
  }
  return best;
}

MinDistanceResult min_distance_grid(const Configuration& x, double cell) {
  const auto& e = x.elements();
  const std::size_t n = e.size();
  if (n < 2) {
    throw PreconditionError("minimum distance needs at least 2 elements");
  }
  if (!(cell > 0.0)) {
    throw PreconditionError("cell size must be positive");
  }

  constexpr double kLo = -1.0, kHi = 1.0;
  constexpr long long kMaxCells = 4096;
  const long long nx =
      std::clamp<long long>(static_cast<long long>(std::ceil((kHi - kLo) / cell)),
                            1, kMaxCells);
  const long long ny = nx;
  const double cx = (kHi - kLo) / static_cast<double>(nx);
  const double cy = (kHi - kLo) / static_cast<double>(ny);

  auto col_of = [&](double v) {
    auto i = static_cast<long long>((v - kLo) / cx);
    return std::clamp<long long>(i, 0, nx - 1);
  };
  auto row_of = [&](double v) {
    auto i = static_cast<long long>((v - kLo) / cy);
    return std::clamp<long long>(i, 0, ny - 1);
  };

  std::vector<std::vector<std::size_t>> buckets(
      static_cast<std::size_t>(nx * ny));
  for (std::size_t i = 0; i < n; ++i) {
    buckets[static_cast<std::size_t>(row_of(e[i].y) * nx + col_of(e[i].x))]
        .push_back(i);
  }

  // Small safety pad on the candidate band so edge-of-cell rounding can never
  // exclude the true minimizing pair; costs at most one extra row per side.
  constexpr double kPad = 1e-9;

  MinDistanceResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < n; ++b) {
    const double bx = e[b].x, by = e[b].y, bt = e[b].theta;
    for (long long ix = 0; ix < nx; ++ix) {
      const double x0 = kLo + static_cast<double>(ix) * cx;
      const double x1 = x0 + cx;
      const double ya = by + bt * (x0 - bx);
      const double yb = by + bt * (x1 - bx);
      double lo, hi;
      if (std::isinf(best.value)) {
        lo = kLo;
        hi = kHi;
      } else {
        lo = std::min(ya, yb) - best.value - kPad;
        hi = std::max(ya, yb) + best.value + kPad;
        if (hi < kLo || lo > kHi) continue;
      }
      const long long iy0 = row_of(lo);
      const long long iy1 = row_of(hi);
      for (long long iy = iy0; iy <= iy1; ++iy) {
        for (std::size_t a : buckets[static_cast<std::size_t>(iy * nx + ix)]) {
          if (a == b) continue;
          const double d = vertical_distance(e[a], e[b]);
          if (d < best.value) {
            best.value = d;
            best.witness = {a, b, d};
          }
        }
      }
    }
  }
  return best;
}

MinDistanceResult min_distance(const Configuration& x) {
  const double root = std::floor(std::sqrt(static_cast<double>(x.size())));
  const double cell = 2.0 / std::max(1.0, root);
  return min_distance_grid(x, cell);
}

VerifyOutcome verify_claim(const Configuration& x) {
  if (!x.claimed_delta()) {
    throw PreconditionError("verify_claim requires a claimed_delta");
  }
  VerifyOutcome out;
  if (x.size() < 2) {
    out.pass = true;
    out.degenerate = true;
    out.note = "degenerate: fewer than 2 elements, claim holds vacuously";
    return out;
  }
  const MinDistanceResult m = min_distance(x);
  out.measured = m.value;
  out.witness = m.witness;
  out.pass = m.value >= *x.claimed_delta() - kClaimTolerance;
  if (!out.pass) {
    out.note = "claim violated: measured " + std::to_string(m.value) +
               " < claimed " + std::to_string(*x.claimed_delta());
  }
  if (m.value > upper_bound_sanity(x.size())) {
    out.sanity_exceeded = true;
    out.note += (out.note.empty() ? "" : "; ");
    out.note += "measured distance exceeds the packing sanity bound";
  }
  return out;
}

Configuration trivial_configuration(int n) {
  if (n < 1) {
    throw PreconditionError("trivial_configuration requires n >= 1");
  }
  if (n == 1) {
    return Configuration::create({{0.0, 0.0, 0.0}}, std::nullopt, "trivial(1)");
  }
  const double h = 2.0 / static_cast<double>(n);
  // Build the nonnegative half of the stack outward from the centre, bumping
  // each level up by ulps until its gap to the previous level is at least h.
  // This realizes the evenly-spaced stack with measured minimum distance
  // exactly equal to the double 2.0/n (the naive formula -1 + (2i+1)/n can
  // fall short by an ulp near |y| = 1).
  std::vector<double> up;
  int reps;
  if (n % 2 == 1) {
    up.push_back(0.0);
    reps = n / 2;
  } else {
    up.push_back(h / 2.0);
    reps = n / 2 - 1;
  }
  for (int i = 0; i < reps; ++i) {
    double t = up.back() + h;
    while (t - up.back() < h) {
      t = std::nextafter(t, std::numeric_limits<double>::infinity());
    }
    up.push_back(t);
  }
  std::vector<ConfigElement> elems;
  elems.reserve(static_cast<std::size_t>(n));
  const std::size_t mirror_from = (n % 2 == 1) ? 1 : 0;
  for (std::size_t i = up.size(); i > mirror_from; --i) {
    elems.push_back({0.0, -up[i - 1], 0.0});
  }
  for (double v : up) {
    elems.push_back({0.0, v, 0.0});
  }
  return Configuration::create(std::move(elems), h,
                               "trivial(" + std::to_string(n) + ")");
}

Configuration pinned_configuration(double gap) {
  if (!(gap > 0.0 && gap <= 0.02)) {
    throw PreconditionError("pinned_configuration gap must be in (0, 0.02]");
  }
  // Two parabolic arcs with tangent lines: an upward arc y = x^2/2 and a
  // downward arc y = c - x^2/2 shifted 3*gap above it.  Tangency pins every
  // coordinate: along one arc consecutive point-to-tangent offsets equal
  // gap exactly, and the arcs pin each other through the 3*gap separation,
  // so any single-coordinate nudge of size gap/4 creates a pair below gap.
  const double h = std::sqrt(2.0 * gap);
  const double c = 3.0 * gap;
  std::vector<ConfigElement> elems;
  for (int k = -4; k <= 4; ++k) {
    const double x = static_cast<double>(k) * h;
    elems.push_back({x, x * x / 2.0, x});
  }
  for (int k = -4; k <= 4; ++k) {
    const double x = static_cast<double>(k) * h;
    elems.push_back({x, c - x * x / 2.0, -x});
  }
  Configuration cfg = Configuration::create(std::move(elems), std::nullopt,
                                            "pinned");
  cfg.set_claimed_delta(min_distance(cfg).value);
  return cfg;
}

}  // namespace pl
