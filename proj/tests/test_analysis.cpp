#include "doctest.h"

#include <cmath>

#include "pointline/analysis.hpp"
#include "pointline/compose.hpp"
#include "pointline/geometry.hpp"

using namespace pl;

TEST_CASE("packing sanity bound") {
  CHECK(upper_bound_sanity(2) == 4.0 * std::sqrt(2.0));
  CHECK(upper_bound_sanity(101) == doctest::Approx(4.0 * std::sqrt(2.0) / 10.0));
  CHECK(min_distance_bruteforce(trivial_configuration(100)).value <=
        upper_bound_sanity(100));
  CHECK_THROWS_AS(upper_bound_sanity(1), PreconditionError);
}

TEST_CASE("empirical exponent arithmetic") {
  // gain 4 at delta = 2^-24: ln 4 / (24 ln 2) = 1/12.
  CHECK(empirical_exponent(4.0, std::ldexp(1.0, -24)) ==
        doctest::Approx(std::log(4.0) / (24.0 * std::log(2.0))));
  CHECK(empirical_exponent(4.0, std::ldexp(1.0, -24)) ==
        doctest::Approx(0.0833333333));
  CHECK(empirical_exponent(1.0, 0.1) == 0.0);
  CHECK(empirical_exponent(2.0, 1.0) == 0.0);  // undefined -> 0 by convention
}

TEST_CASE("the stacked baseline scores gain exactly 1") {
  for (int n : {2, 4, 10, 100, 1000}) {
    const GainRecord rec = gain_report(trivial_configuration(n));
    CHECK(rec.n == static_cast<std::size_t>(n));
    CHECK(rec.delta == 2.0 / n);
    CHECK(rec.gain == 1.0);  // exact float, not approx
    CHECK(rec.gamma_emp == 0.0);
  }
}

TEST_CASE("gain report rejects unusable inputs") {
  CHECK_THROWS_AS(gain_report(trivial_configuration(1)), PreconditionError);
  auto unclaimed = Configuration::create({{0, 0, 0}, {0, 0.5, 0}});
  CHECK_THROWS_AS(gain_report(unclaimed), PreconditionError);
  auto lying = Configuration::create({{0, 0, 0}, {0, 0.5, 0}}, 0.9);
  CHECK_THROWS_AS(gain_report(lying), std::runtime_error);
}

TEST_CASE("level table ratios track the exact recurrences") {
  RecursionPlan plan;
  plan.depth = 2;
  plan.base = trivial_configuration(3);
  plan.inner_seed = Configuration::create({{0, 0, 0}});
  plan.params.w = 1.0 / 8.0;
  plan.params.guaranteed = false;
  const ComposeResult r = iterate_compose(plan);
  const LevelTable t = level_table(r.report.levels);
  REQUIRE(t.rows.size() == 2);
  REQUIRE(t.size_ratio.size() == 1);
  CHECK(t.size_ratio[0] == 45.0);  // k * (2*floor(1/w) - 1) = 3 * 15
  CHECK(t.delta_ratio[0] == doctest::Approx(1.0 / 64.0).epsilon(1e-12));
  CHECK(t.gain_factor[0] ==
        doctest::Approx(45.0 / 64.0).epsilon(1e-12));
  CHECK(t.to_text().find("level") != std::string::npos);

  const LevelTable single = level_table({r.report.levels[0]});
  CHECK(single.rows.size() == 1);
  CHECK(single.size_ratio.empty());
}
