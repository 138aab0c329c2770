#include "doctest.h"
#include "testkit.hpp"

TEST_CASE("every property suite passes under the fixed seed") {
  for (const auto& r : testkit::all_properties(20240601)) {
    INFO(r.name << " (" << r.cases << " cases): " << r.first_failure);
    CHECK(r.ok());
  }
}

TEST_CASE("property suites are deterministic in the seed") {
  const auto a = testkit::prop_weierstrass_anchor(5, 10);
  const auto b = testkit::prop_weierstrass_anchor(5, 10);
  CHECK(a.cases == b.cases);
  CHECK(a.failures == b.failures);
}
