#include <catch2/catch.hpp>

#include "iskk/error.hpp"
#include "iskk/serialize.hpp"
#include "support.hpp"

using namespace iskk;
using iskk::test::spectrum_of;

namespace {

  ErrorCode code_of(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::MalformedInput;
  }

  std::string message_of(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.what();
    }
    return "";
  }

}  // namespace

TEST_CASE("semigroup JSON round trip", "[serialize]") {
  for (auto spec : {"chain:3", "diamond", "cyclic:3", "symmetric_inverse:2", "brandt_unital:2",
                    "group_with_zero:2"}) {
    INFO(spec);
    auto s    = build_spec(spec);
    auto j    = to_json(s);
    auto back = semigroup_from_json(j);
    REQUIRE(back.size() == s.size());
    for (std::size_t a = 0; a < s.size(); ++a) {
      REQUIRE(back.name(a) == s.name(a));
      for (std::size_t b = 0; b < s.size(); ++b) {
        REQUIRE(back.mul(a, b) == s.mul(a, b));
      }
    }
    REQUIRE(back.unit() == s.unit());
    REQUIRE(back.zero() == s.zero());
    REQUIRE(to_json(back).dump() == j.dump());
  }
}

TEST_CASE("malformed semigroup JSON names the field", "[serialize]") {
  auto good = to_json(build_spec("chain:2"));

  auto j = good;
  j.erase("table");
  REQUIRE(code_of([&] { semigroup_from_json(j); }) == ErrorCode::MalformedInput);
  REQUIRE_THAT(message_of([&] { semigroup_from_json(j); }), Catch::Contains("field 'table'"));

  j = good;
  j["unit"] = "nope";
  REQUIRE_THAT(message_of([&] { semigroup_from_json(j); }), Catch::Contains("field 'unit'"));

  j = good;
  j["table"][0].erase(0);
  REQUIRE_THAT(message_of([&] { semigroup_from_json(j); }), Catch::Contains("field 'table'"));

  j = good;
  j["elements"] = Json::array();
  REQUIRE_THAT(message_of([&] { semigroup_from_json(j); }), Catch::Contains("field 'elements'"));

  // Structurally fine but not associative.
  Json bad = {{"elements", {"1", "a", "b"}},
              {"table", {{0, 1, 2}, {1, 2, 1}, {2, 2, 2}}},
              {"unit", "1"},
              {"zero", nullptr}};
  REQUIRE(code_of([&] { semigroup_from_json(bad); }) != ErrorCode::MalformedInput);
}

TEST_CASE("rationals", "[serialize]") {
  REQUIRE(to_json(Rational(3, 4)) == "3/4");
  REQUIRE(to_json(Rational(-2)) == "-2");
  REQUIRE(rational_from_json("3/4") == Rational(3, 4));
  REQUIRE(rational_from_json(5) == Rational(5));
  REQUIRE(code_of([] { rational_from_json("1/0"); }) == ErrorCode::MalformedInput);
  REQUIRE(code_of([] { rational_from_json("x"); }) == ErrorCode::MalformedInput);
}

TEST_CASE("algebra JSON round trip", "[serialize]") {
  auto x = spectrum_of("symmetric_inverse:2");
  auto G = ActingSet::plain(x);
  for (auto kind : {CrossedKind::universal, CrossedKind::sieben}) {
    auto a    = crossed(c0x(G), kind).algebra;
    auto back = algebra_from_json(to_json(a));
    REQUIRE(back.dim() == a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      REQUIRE(back.star(back.basis(i)) == a.star(a.basis(i)));
      for (std::size_t j = 0; j < a.dim(); ++j) {
        REQUIRE(back.product(i, j) == a.product(i, j));
      }
    }
    REQUIRE(to_json(back).dump() == to_json(a).dump());
  }
  REQUIRE(code_of([] { algebra_from_json(Json{{"basis", {"a"}}}); }) ==
          ErrorCode::MalformedInput);
}

TEST_CASE("element set specs", "[serialize]") {
  auto s = build_spec("symmetric_inverse:2");
  REQUIRE(parse_element_set(s, "idempotents") == idempotents(s));
  REQUIRE(parse_element_set(s, "all") == s.full_set());
  REQUIRE(members(parse_element_set(s, "unit")) == std::vector<std::size_t>{s.unit()});
  auto gen = parse_element_set(s, "generated:21");
  REQUIRE(members(gen).size() == 2);
  REQUIRE(parse_element_set(s, "12,21") == gen);
  REQUIRE(code_of([&] { parse_element_set(s, "12,zz"); }) == ErrorCode::MalformedInput);
}

TEST_CASE("coefficient specs", "[serialize]") {
  auto x = spectrum_of("chain:3");
  auto G = ActingSet::plain(x);
  REQUIRE(parse_coefficient(G, "trivial").dim() == 1);
  REQUIRE(parse_coefficient(G, "c0x").dim() == 3);
  auto p = parse_coefficient(G, "point:e2");
  REQUIRE(p.dim() == 1);
  REQUIRE(validate_g_algebra(p).passed());
  REQUIRE(code_of([&] { parse_coefficient(G, "point:zz"); }) == ErrorCode::MalformedInput);
  REQUIRE(code_of([&] { parse_coefficient(G, "nonsense"); }) == ErrorCode::MalformedInput);
}

TEST_CASE("JSON output is deterministic", "[serialize]") {
  auto x  = spectrum_of("brandt_unital:2");
  auto G  = ActingSet::plain(x);
  auto a1 = to_json(crossed(c0x(G), CrossedKind::universal).algebra).dump();
  auto a2 = to_json(crossed(c0x(G), CrossedKind::universal).algebra).dump();
  REQUIRE(a1 == a2);
  auto g1 = to_json(gram(*x), *x).dump();
  REQUIRE(g1 == to_json(gram(*spectrum_of("brandt_unital:2")), *x).dump());
}
