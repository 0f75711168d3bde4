#include "doctest.h"

#include <cmath>

#include "pointline/detail/rng.hpp"
#include "pointline/geometry.hpp"
#include "pointline/rescale.hpp"

using namespace pl;

TEST_CASE("apply_point follows the affine formula") {
  const Rescaler identity{0, 0, 0, 1.0};
  CHECK(apply_point(identity, 0.3, -0.7) == std::pair{0.3, -0.7});

  const Rescaler half{0, 0, 0, 0.5};
  CHECK(apply_point(half, 1.0, 1.0) == std::pair{0.5, 0.25});

  const Rescaler off{0.5, 0.5, 0.5, 0.5};
  CHECK(apply_point(off, 0.0, 0.0) == std::pair{0.5, 0.5});

  CHECK_THROWS_AS(apply_point(Rescaler{0, 0, 0, 0.0}, 0, 0),
                  PreconditionError);
}

TEST_CASE("apply_element specializations and boundary containment") {
  const Rescaler half{0, 0, 0, 0.5};
  const ConfigElement img = apply_element(half, {0.8, -0.4, 0.6});
  CHECK(img.x == 0.4);
  CHECK(img.y == -0.1);
  CHECK(img.theta == 0.3);

  // The extreme corner under the extreme safe rescaler lands exactly on the
  // domain corner: 0.5+0.5, 0.5+0.25+0.25, 0.5+0.5.
  const Rescaler corner{0.5, 0.5, 0.5, 0.5};
  const ConfigElement c = apply_element(corner, {1, 1, 1});
  CHECK(c.x == 1.0);
  CHECK(c.y == 1.0);
  CHECK(c.theta == 1.0);
}

TEST_CASE("domain-safe rescalers keep every element inside the box") {
  auto rng = detail::make_rng(5, 0);
  for (int i = 0; i < 100000; ++i) {
    const Rescaler r{0.5 * detail::symmetric(rng), 0.5 * detail::symmetric(rng),
                     0.5 * detail::symmetric(rng),
                     0.5 * detail::canonical(rng) + 1e-9};
    REQUIRE(r.domain_safe());
    const ConfigElement e{detail::symmetric(rng), detail::symmetric(rng),
                          detail::symmetric(rng)};
    const ConfigElement img = apply_element(r, e);
    CHECK(in_domain(img));
  }
}

TEST_CASE("unsafe images are rejected unless the caller opts out") {
  const Rescaler r{0.9, 0.9, 0.0, 0.5};
  CHECK_FALSE(r.domain_safe());
  CHECK_THROWS_AS(apply_element(r, {1, 1, 0}), PreconditionError);
  const ConfigElement img = apply_element(r, {1, 1, 0}, false);
  CHECK(img.x == doctest::Approx(1.4));
}

TEST_CASE("pairwise distances scale by exactly w^2") {
  auto rng = detail::make_rng(6, 0);
  for (int i = 0; i < 1000; ++i) {
    const Rescaler r{0.5 * detail::symmetric(rng), 0.5 * detail::symmetric(rng),
                     0.5 * detail::symmetric(rng),
                     0.1 + 0.4 * detail::canonical(rng)};
    ConfigElement a{detail::symmetric(rng), detail::symmetric(rng),
                    detail::symmetric(rng)};
    ConfigElement b{detail::symmetric(rng), detail::symmetric(rng),
                    detail::symmetric(rng)};
    const double d = vertical_distance(a, b);
    if (d < 0.05) continue;  // keep the relative comparison well-conditioned
    const double lhs = vertical_distance(apply_element(r, a, false),
                                         apply_element(r, b, false));
    const double rhs = r.w * r.w * d;
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
  }
}

TEST_CASE("composing two rescalers is a rescaler with scale w1*w2") {
  auto rng = detail::make_rng(7, 0);
  for (int i = 0; i < 500; ++i) {
    const Rescaler r1{0.25 * detail::symmetric(rng),
                      0.25 * detail::symmetric(rng),
                      0.25 * detail::symmetric(rng),
                      0.1 + 0.4 * detail::canonical(rng)};
    const Rescaler r2{0.25 * detail::symmetric(rng),
                      0.25 * detail::symmetric(rng),
                      0.25 * detail::symmetric(rng),
                      0.1 + 0.4 * detail::canonical(rng)};
    // Closed-form composite (apply r1, then r2).
    const Rescaler r3{r2.x0 + r2.w * r1.x0,
                      r2.y0 + r2.w * r2.theta0 * r1.x0 + r2.w * r2.w * r1.y0,
                      r2.theta0 + r2.w * r1.theta0, r1.w * r2.w};
    const ConfigElement e{detail::symmetric(rng), detail::symmetric(rng),
                          detail::symmetric(rng)};
    const ConfigElement two = apply_element(r2, apply_element(r1, e, false), false);
    const ConfigElement one = apply_element(r3, e, false);
    CHECK(two.x == doctest::Approx(one.x).epsilon(1e-12));
    CHECK(two.y == doctest::Approx(one.y).epsilon(1e-12));
    CHECK(two.theta == doctest::Approx(one.theta).epsilon(1e-12));
  }
}

TEST_CASE("rescale_configuration scales the claim and the measurement") {
  const Rescaler half{0, 0, 0, 0.5};
  const Configuration img = rescale_configuration(half, trivial_configuration(4));
  CHECK(*img.claimed_delta() == 0.125);
  CHECK(min_distance_bruteforce(img).value == 0.125);

  const Rescaler unit{0, 0, 0, 1.0};
  const Configuration same = rescale_configuration(unit, trivial_configuration(5));
  CHECK(min_distance_bruteforce(same).value == 2.0 / 5.0);

  const Configuration single =
      rescale_configuration(half, trivial_configuration(1));
  CHECK(single.size() == 1);
  CHECK_FALSE(single.claimed_delta().has_value());
}
