#pragma once

#include <utility>

#include "pointline/geometry.hpp"

namespace pl {

// Parameters of the affine map
//   (x, y, theta) -> (x0 + w*x, y0 + w*theta0*x + w^2*y, theta0 + w*theta),
// which contracts the domain box by w horizontally and w^2 vertically and
// shears it to slope theta0 at (x0, y0).  Pairwise vertical distances scale
// by exactly w^2 under this map.
struct Rescaler {
  double x0 = 0.0;
  double y0 = 0.0;
  double theta0 = 0.0;
  double w = 1.0;

  // When true, the image of the whole domain box stays inside the box.
  bool domain_safe() const;
};

std::pair<double, double> apply_point(const Rescaler& r, double x, double y);

// Maps one element.  With require_domain, throws PreconditionError if the
// image leaves the box (never happens for domain-safe rescalers); coordinate
// overshoot within a few ulps of the boundary is clamped, not rejected.
ConfigElement apply_element(const Rescaler& r, const ConfigElement& e,
                            bool require_domain = true);

// Element-wise image; claimed_delta (if set) becomes w^2 * claimed_delta.
Configuration rescale_configuration(const Rescaler& r, const Configuration& x,
                                    bool require_domain = true);

}  // namespace pl
