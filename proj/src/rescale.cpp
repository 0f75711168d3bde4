#include "pointline/rescale.hpp"

#include <cmath>
#include <string>

namespace pl {

namespace {

// Clamp a coordinate that overshoots the box boundary by float noise only.
double clamp_ulps(double v, const char* what, bool require_domain) {
  constexpr double kSlack = 1e-13;
  if (std::abs(v) <= 1.0) return v;
  if (std::abs(v) <= 1.0 + kSlack) return v < 0.0 ? -1.0 : 1.0;
  if (require_domain) {
    throw PreconditionError(std::string("rescaled ") + what +
                            " leaves the domain box: " + std::to_string(v));
  }
  return v;
}

}  // namespace

bool Rescaler::domain_safe() const {
  return w > 0.0 && w <= 0.5 && std::abs(x0) <= 0.5 && std::abs(y0) <= 0.5 &&
         std::abs(theta0) <= 0.5;
}

std::pair<double, double> apply_point(const Rescaler& r, double x, double y) {
  if (!(r.w > 0.0)) {
    throw PreconditionError("rescaler scale must be positive");
  }
  return {r.x0 + r.w * x, r.y0 + r.w * r.theta0 * x + r.w * r.w * y};
}

ConfigElement apply_element(const Rescaler& r, const ConfigElement& e,
                            bool require_domain) {
  const auto [px, py] = apply_point(r, e.x, e.y);
  const double t = r.theta0 + r.w * e.theta;
  return {clamp_ulps(px, "x", require_domain),
          clamp_ulps(py, "y", require_domain),
          clamp_ulps(t, "theta", require_domain)};
}

Configuration rescale_configuration(const Rescaler& r, const Configuration& x,
                                    bool require_domain) {
  std::vector<ConfigElement> out;
  out.reserve(x.size());
  for (const auto& e : x.elements()) {
    out.push_back(apply_element(r, e, require_domain));
  }
  std::optional<double> claimed;
  if (x.claimed_delta()) {
    claimed = r.w * r.w * *x.claimed_delta();
  }
  Configuration img = Configuration::create(std::move(out), claimed,
                                            x.provenance());
  return img;
}

}  // namespace pl
