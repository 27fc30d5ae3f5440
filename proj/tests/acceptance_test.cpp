// Acceptance suite: runs every verification criterion at full size and
// prints one pass/fail line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "bondcycle/verification.hpp"

TEST_CASE("verification criteria") {
  const auto results = bondcycle::run_verification(&std::cout);
  REQUIRE(results.size() == 10);
  for (const auto& r : results) {
    CAPTURE(r.id);
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
}
