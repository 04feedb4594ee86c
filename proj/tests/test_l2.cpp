#include <catch2/catch.hpp>

#include "iskk/l2.hpp"

using namespace iskk;

namespace {

  SpectrumPtr spectrum_of(std::string const& spec) {
    return std::make_shared<Spectrum const>(std::make_shared<FiniteInvSgp const>(build_spec(spec)));
  }

  std::vector<std::string> const corpus{"trivial",          "chain:2",
                                        "chain:4",          "diamond",
                                        "boolean:3",        "cyclic:2",
                                        "cyclic:5",         "symmetric_group:3",
                                        "group_with_zero:3", "brandt_unital:2",
                                        "brandt_unital:3",  "symmetric_inverse:2",
                                        "symmetric_inverse:3", "product:chain:2,cyclic:2",
                                        "adjoin_zero:cyclic:2"};

}  // namespace

TEST_CASE("inner products of the φ-basis", "[l2]") {
  auto z3 = spectrum_of("cyclic:3");
  for (std::size_t g = 0; g < 3; ++g) {
    for (std::size_t h = 0; h < 3; ++h) {
      REQUIRE(phi_inner(*z3, g, h) == AlgStar{g == h ? 1 : 0});
    }
  }
  auto c = spectrum_of("chain:2");
  // Characters: 0 generated by 1, 1 generated by e.
  REQUIRE(phi_inner(*c, 0, 1) == AlgStar{0, 1});
  REQUIRE(phi_inner(*c, 1, 1) == AlgStar{0, 1});
  REQUIRE(phi_inner(*c, 0, 0) == AlgStar{1, 1});
  auto b = spectrum_of("brandt_unital:2");
  auto z = *b->semigroup().zero();
  REQUIRE(phi_inner_set(*b, z, z).none());
}

TEST_CASE("Gram matrices", "[l2]") {
  auto z2 = spectrum_of("cyclic:2");
  REQUIRE(gram(*z2).at(0) == Matrix::identity(2));
  auto c  = spectrum_of("chain:2");
  auto gm = gram(*c);
  Matrix ones(2, 2), corner(2, 2);
  ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1;
  corner(0, 0) = 1;
  REQUIRE(gm.at(*c->character_of(1)) == ones);
  REQUIRE(gm.at(*c->character_of(0)) == corner);
  auto b = spectrum_of("brandt_unital:2");
  REQUIRE(gram(*b).basis().size() == 5);
}

TEST_CASE("l2 action", "[l2]") {
  auto c = build("chain", "2");
  L2Vector v{{0, Rational(3)}};
  REQUIRE(l2_act(c, 0, v) == v);
  REQUIRE(l2_act(c, 1, v) == L2Vector{{1, Rational(3)}});
  auto z2 = build("cyclic", "2");
  REQUIRE(l2_act(z2, 1, L2Vector{{1, Rational(1)}}) == L2Vector{{0, Rational(1)}});
  auto b  = build("brandt_unital", "2");
  auto e11 = *b.index_of("(1,1)"), e22 = *b.index_of("(2,2)");
  REQUIRE(l2_act(b, e11, L2Vector{{e22, Rational(1)}}).empty());
}

TEST_CASE("positivity, independence and module axioms on the corpus", "[l2][property]") {
  for (auto const& k : corpus) {
    INFO(k);
    auto       x  = spectrum_of(k);
    auto const gm = gram(*x);
    REQUIRE(check_psd(gm).passed());
    auto ind = check_independence(*x);
    REQUIRE(ind.passed());
    REQUIRE(ind.data()["rank"] == gm.basis().size());
    REQUIRE(check_module_axioms(*x).passed());
    auto const& s = x->semigroup();
    for (auto g : gm.basis()) {
      REQUIRE(phi_inner_set(*x, g, g) == x->proj(s.mul(g, s.star(g))));
      for (auto h : gm.basis()) {
        auto bound = x->proj(s.mul(g, s.star(g))) & x->proj(s.mul(h, s.star(h)));
        REQUIRE(phi_inner_set(*x, g, h).is_subset_of(bound));
      }
    }
  }
}

TEST_CASE("the zero spans a null vector", "[l2]") {
  auto b = spectrum_of("brandt_unital:2");
  auto z = *b->semigroup().zero();
  for (std::size_t g = 0; g < b->semigroup().size(); ++g) {
    REQUIRE(phi_inner_set(*b, z, g).none());
  }
}
