#include <catch2/catch.hpp>

#include "iskk/error.hpp"
#include "iskk/semigroup.hpp"

#include <set>

using namespace iskk;

namespace {

  // Naive closure: repeat all pairwise products and stars until stable.
  std::set<std::size_t> naive_closure(FiniteInvSgp const& s, std::set<std::size_t> gens) {
    gens.insert(s.unit());
    bool grew = true;
    while (grew) {
      grew = false;
      auto cur = gens;
      for (auto a : cur) {
        grew |= gens.insert(s.star(a)).second;
        for (auto b : cur) {
          grew |= gens.insert(s.mul(a, b)).second;
        }
      }
    }
    return gens;
  }

  std::set<std::size_t> as_set(ElementSet const& e) {
    auto m = members(e);
    return {m.begin(), m.end()};
  }

  std::size_t idx(FiniteInvSgp const& s, std::string const& n) {
    auto i = s.index_of(n);
    REQUIRE(i);
    return *i;
  }

  std::size_t binom(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  std::size_t fact(std::size_t n) {
    return n <= 1 ? 1 : n * fact(n - 1);
  }

  ErrorCode code_of(Table t, std::size_t unit) {
    try {
      validate(std::move(t), unit);
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("expected validation failure");
    return ErrorCode::MalformedInput;
  }

  std::vector<std::string> const kinds{"trivial",
                                       "chain:2",
                                       "chain:4",
                                       "diamond",
                                       "boolean:3",
                                       "cyclic:2",
                                       "cyclic:3",
                                       "symmetric_group:3",
                                       "group_with_zero:2",
                                       "brandt_unital:2",
                                       "brandt_unital:3",
                                       "symmetric_inverse:2",
                                       "symmetric_inverse:3",
                                       "product:chain:2,cyclic:2",
                                       "adjoin_zero:chain:2"};

}  // namespace

TEST_CASE("validate accepts groups and semilattices", "[semigroup]") {
  auto z2 = validate({{0, 1}, {1, 0}}, 0);
  REQUIRE(z2.stars() == std::vector<std::size_t>{0, 1});
  auto c2 = validate({{0, 1}, {1, 1}}, 0);
  REQUIRE(c2.stars() == std::vector<std::size_t>{0, 1});
  REQUIRE(members(idempotents(c2)) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("validate rejects with the right error", "[semigroup]") {
  // Left-zero semigroup {a, b}: xy = x. Every element inverts every other.
  REQUIRE(code_of({{0, 0}, {1, 1}}, 0) == ErrorCode::NoUniqueInverse);
  // x·y = 1 - x fails associativity on {0, 1}.
  REQUIRE(code_of({{1, 1}, {0, 0}}, 0) == ErrorCode::NotAssociative);
  // 2-chain with the wrong unit.
  REQUIRE(code_of({{0, 1}, {1, 1}}, 1) == ErrorCode::BadUnit);
  REQUIRE_THROWS_AS(FiniteInvSgp::validate({{0, 1}, {1, 1}}, 0, 0), Error);
}

TEST_CASE("builder sizes", "[semigroup]") {
  REQUIRE(build("chain", "2").size() == 2);
  REQUIRE(build("brandt_unital", "2").size() == 6);
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t expected = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      expected += binom(n, k) * binom(n, k) * fact(k);
    }
    auto s = build("symmetric_inverse", std::to_string(n));
    REQUIRE(s.size() == expected);
    REQUIRE(s.zero());
  }
  REQUIRE(build_spec("symmetric_inverse:2").size() == 7);
  REQUIRE(build_spec("product:(product:chain:2,chain:2),cyclic:2").size() == 8);
  REQUIRE_THROWS_AS(build("symmetric_inverse", "4"), Error);
  REQUIRE_THROWS_AS(build("nonsense", "1"), Error);
  try {
    build("symmetric_inverse", "4");
  } catch (Error const& e) {
    REQUIRE(e.code() == ErrorCode::UnsupportedSize);
  }
}

TEST_CASE("idempotents of B2 with unit", "[semigroup]") {
  auto s = build("brandt_unital", "2");
  std::set<std::size_t> expected{idx(s, "1"), idx(s, "(1,1)"), idx(s, "(2,2)"), idx(s, "0")};
  REQUIRE(as_set(idempotents(s)) == expected);
  REQUIRE(as_set(idempotents(build("cyclic", "2"))) == std::set<std::size_t>{0});
}

TEST_CASE("natural order", "[semigroup]") {
  auto c = build("chain", "2");
  REQUIRE(leq(c, 1, 0));
  REQUIRE_FALSE(leq(c, 0, 1));
  auto b = build("brandt_unital", "2");
  REQUIRE(leq(b, idx(b, "0"), idx(b, "(1,2)")));
  REQUIRE_FALSE(leq(b, idx(b, "(1,1)"), idx(b, "(1,2)")));
}

TEST_CASE("E-unitarity", "[semigroup]") {
  REQUIRE(is_e_unitary(build("cyclic", "3")));
  REQUIRE(is_e_unitary(build("diamond", "")));
  REQUIRE(is_e_unitary(build("brandt_unital", "2")));
  REQUIRE(is_e_unitary(build("symmetric_inverse", "2")));
  // In I3 the idempotent fixing only 1 lies below the transposition of 2 and 3.
  REQUIRE_FALSE(is_e_unitary(build("symmetric_inverse", "3")));
}

TEST_CASE("generate", "[semigroup]") {
  auto z3 = build("cyclic", "3");
  REQUIRE(generate(z3, z3.empty_set()).count() == 1);
  auto g = z3.empty_set();
  g.set(1);
  REQUIRE(generate(z3, g).count() == 3);
  auto b = build("brandt_unital", "2");
  auto h = b.empty_set();
  h.set(idx(b, "(1,2)"));
  std::set<std::size_t> expected{idx(b, "1"),     idx(b, "(1,2)"), idx(b, "(2,1)"),
                                 idx(b, "(1,1)"), idx(b, "(2,2)"), idx(b, "0")};
  REQUIRE(as_set(generate(b, h)) == expected);
  REQUIRE(naive_closure(b, {idx(b, "(1,2)")}) == expected);
}

TEST_CASE("semigroup properties over the builder corpus", "[semigroup][property]") {
  for (auto const& k : kinds) {
    INFO(k);
    auto const s = build_spec(k);
    auto const n = s.size();
    for (std::size_t g = 0; g < n; ++g) {
      REQUIRE(s.star(s.star(g)) == g);
      for (std::size_t h = 0; h < n; ++h) {
        REQUIRE(s.star(s.mul(g, h)) == s.mul(s.star(h), s.star(g)));
        if (s.leq(g, h) && s.leq(h, g)) {
          REQUIRE(g == h);
        }
        // leq against the definition: some idempotent e with g = e h.
        bool def = false;
        for (auto e : s.idempotent_list()) {
          def |= s.mul(e, h) == g;
        }
        REQUIRE(s.leq(g, h) == def);
      }
    }
    auto const& E = s.idempotent_list();
    for (auto e : E) {
      for (auto f : E) {
        auto ef = s.mul(e, f);
        REQUIRE(s.is_idempotent(ef));
        // ef is the meet of e and f.
        REQUIRE(s.leq(ef, e));
        REQUIRE(s.leq(ef, f));
        for (auto d : E) {
          if (s.leq(d, e) && s.leq(d, f)) {
            REQUIRE(s.leq(d, ef));
          }
        }
      }
    }
    // generate is idempotent, monotone and agrees with the naive closure.
    for (std::size_t g = 0; g < n; ++g) {
      auto one = s.empty_set();
      one.set(g);
      auto c = generate(s, one);
      REQUIRE(generate(s, c) == c);
      REQUIRE(as_set(c) == naive_closure(s, {g}));
      REQUIRE(is_subsemigroup(s, c));
      auto two = one;
      two.set(s.star(g));
      two.set((g + 1) % n);
      REQUIRE(c.is_subset_of(generate(s, two)));
    }
  }
}
