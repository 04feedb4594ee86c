#include <catch2/catch.hpp>

#include "iskk/corpus.hpp"
#include "iskk/error.hpp"

using namespace iskk;

TEST_CASE("single criteria run on their own", "[corpus]") {
  for (int id : {1, 2, 5}) {
    auto c = run_criterion(id);
    INFO(c.report.to_text());
    REQUIRE(c.id == id);
    REQUIRE(c.passed());
    REQUIRE_FALSE(c.report.checks().empty());
  }
}

TEST_CASE("criterion ids are checked", "[corpus]") {
  REQUIRE_THROWS_AS(run_criterion(0), Error);
  REQUIRE_THROWS_AS(run_criterion(criterion_count + 1), Error);
}
