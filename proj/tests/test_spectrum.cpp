#include <catch2/catch.hpp>

#include "iskk/error.hpp"
#include "iskk/spectrum.hpp"

#include <set>

using namespace iskk;

namespace {

  SpectrumPtr spectrum_of(std::string const& spec) {
    return std::make_shared<Spectrum const>(std::make_shared<FiniteInvSgp const>(build_spec(spec)));
  }

  // Filters of E: upward closed, meet closed, containing 1, avoiding 0.
  std::vector<std::set<std::size_t>> filters(FiniteInvSgp const& s) {
    auto const& E = s.idempotent_list();
    std::vector<std::set<std::size_t>> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << E.size()); ++mask) {
      std::set<std::size_t> F;
      for (std::size_t i = 0; i < E.size(); ++i) {
        if (mask >> i & 1) {
          F.insert(E[i]);
        }
      }
      bool ok = F.count(s.unit()) && !(s.zero() && F.count(*s.zero()));
      for (auto e : F) {
        for (auto f : E) {
          if (s.leq(e, f) && !F.count(f)) {
            ok = false;
          }
        }
        for (auto f : F) {
          if (!F.count(s.mul(e, f))) {
            ok = false;
          }
        }
      }
      if (ok) {
        out.push_back(F);
      }
    }
    return out;
  }

  // Germ model: (g, P) is the set of pairs (g f, f) over generators f of P.
  using Germs = std::set<std::pair<std::size_t, std::size_t>>;

  Germs germs(Spectrum const& x, ExtendedElement const& a) {
    Germs out;
    for (auto c = a.P.find_first(); c != ProjectionSet::npos; c = a.P.find_next(c)) {
      auto f = x.generator(c);
      out.emplace(x.semigroup().mul(a.g, f), f);
    }
    return out;
  }

  Germs germ_mul(FiniteInvSgp const& s, Germs const& a, Germs const& b) {
    Germs out;
    for (auto [x, fx] : a) {
      for (auto [y, fy] : b) {
        if (fx == s.mul(s.mul(y, fy), s.star(y))) {
          out.emplace(s.mul(x, y), fy);
        }
      }
    }
    return out;
  }

  Germs germ_star(FiniteInvSgp const& s, Germs const& a) {
    Germs out;
    for (auto [x, f] : a) {
      out.emplace(s.star(x), s.mul(x, s.star(x)));
    }
    return out;
  }

  // Every canonical element (g, P) with P inside proj(g*g).
  std::vector<ExtendedElement> all_extended(Spectrum const& x) {
    auto const&                  s = x.semigroup();
    std::set<ExtendedElement>    seen;
    for (std::size_t g = 0; g < s.size(); ++g) {
      auto const dom = members(x.proj(s.mul(s.star(g), g)));
      for (std::size_t mask = 0; mask < (std::size_t(1) << dom.size()); ++mask) {
        ProjectionSet P = x.empty();
        for (std::size_t i = 0; i < dom.size(); ++i) {
          if (mask >> i & 1) {
            P.set(dom[i]);
          }
        }
        seen.insert(x.canonical(g, P));
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<std::string> const small{"chain:2",   "chain:3",           "diamond",
                                       "boolean:2", "cyclic:3",          "group_with_zero:2",
                                       "brandt_unital:2", "symmetric_inverse:2",
                                       "product:chain:2,cyclic:2"};

}  // namespace

TEST_CASE("characters", "[spectrum]") {
  REQUIRE(characters(build("chain", "2")).size() == 2);
  REQUIRE(characters(build("cyclic", "3")).size() == 1);
  REQUIRE(characters(build("diamond", "")).size() == 4);
  for (auto const& k : small) {
    auto s = build_spec(k);
    INFO(k);
    auto const expected = s.idempotent_list().size() - (s.zero() ? 1 : 0);
    REQUIRE(characters(s).size() == expected);
    REQUIRE(filters(s).size() == expected);
  }
}

TEST_CASE("proj", "[spectrum]") {
  auto x = spectrum_of("chain:2");
  REQUIRE(x->proj(0) == x->full());
  REQUIRE(x->proj(1).count() == 1);
  REQUIRE(x->proj(1).test(*x->character_of(1)));
  auto b = spectrum_of("brandt_unital:2");
  REQUIRE(b->proj(*b->semigroup().zero()).none());
  REQUIRE_THROWS_AS(b->proj(*b->semigroup().index_of("(1,2)")), Error);
}

TEST_CASE("proj is a lattice embedding", "[spectrum][property]") {
  for (auto const& k : small) {
    INFO(k);
    auto        x = spectrum_of(k);
    auto const& s = x->semigroup();
    auto const  F = filters(s);
    for (auto e : s.idempotent_list()) {
      // The filter whose least element generates character c decides χ_c(e).
      for (std::size_t c = 0; c < x->size(); ++c) {
        std::size_t matches = 0;
        for (auto const& f : F) {
          std::size_t least = x->generator(c);
          bool        gen   = f.count(least) > 0;
          for (auto m : f) {
            gen = gen && s.leq(least, m);
          }
          if (gen) {
            ++matches;
            REQUIRE(x->eval(c, e) == (f.count(e) > 0));
          }
        }
        REQUIRE(matches == 1);
      }
      for (auto f : s.idempotent_list()) {
        REQUIRE(x->proj(s.mul(e, f)) == (x->proj(e) & x->proj(f)));
        if (s.leq(e, f)) {
          REQUIRE(x->proj(e).is_subset_of(x->proj(f)));
        }
      }
    }
  }
}

TEST_CASE("act_proj", "[spectrum]") {
  auto x = spectrum_of("chain:2");
  REQUIRE(x->act_proj(0, x->proj(1)) == x->proj(1));
  REQUIRE(x->act_proj(1, x->full()) == x->proj(1));
  auto i2 = spectrum_of("symmetric_inverse:2");
  auto const& s = i2->semigroup();
  for (std::size_t g = 0; g < s.size(); ++g) {
    for (auto e : s.idempotent_list()) {
      if (s.leq(e, s.mul(s.star(g), g))) {
        REQUIRE(i2->act_proj(g, i2->proj(e)) == i2->proj(s.mul(s.mul(g, e), s.star(g))));
      }
    }
  }
}

TEST_CASE("extended semigroup products", "[spectrum]") {
  auto x = spectrum_of("chain:2");
  auto one = x->embed(0);
  REQUIRE(x->tilde_mul(one, one) == one);
  auto pe  = x->canonical(0, x->proj(1));
  auto pec = x->canonical(0, ~x->proj(1));
  REQUIRE(x->tilde_mul(pec, pe) == x->zero());
  auto z2 = spectrum_of("cyclic:2");
  REQUIRE(z2->tilde_mul(z2->embed(1), z2->embed(1)) == z2->embed(0));
}

TEST_CASE("extended semigroup agrees with the germ model", "[spectrum][property]") {
  for (auto const& k : small) {
    INFO(k);
    auto        x   = spectrum_of(k);
    auto const& s   = x->semigroup();
    auto const  all = all_extended(*x);
    // Canonical forms are in bijection with germ sets.
    std::set<Germs> distinct;
    for (auto const& a : all) {
      distinct.insert(germs(*x, a));
    }
    REQUIRE(distinct.size() == all.size());
    for (auto const& a : all) {
      REQUIRE(germs(*x, x->tilde_star(a)) == germ_star(s, germs(*x, a)));
      REQUIRE(x->tilde_star(x->tilde_star(a)) == a);
      for (auto const& b : all) {
        auto ab = x->tilde_mul(a, b);
        REQUIRE(germs(*x, ab) == germ_mul(s, germs(*x, a), germs(*x, b)));
        REQUIRE(x->tilde_star(ab) == x->tilde_mul(x->tilde_star(b), x->tilde_star(a)));
      }
    }
    if (all.size() <= 40) {
      for (auto const& a : all) {
        for (auto const& b : all) {
          auto ab = x->tilde_mul(a, b);
          for (auto const& c : all) {
            REQUIRE(x->tilde_mul(ab, c) == x->tilde_mul(a, x->tilde_mul(b, c)));
          }
        }
      }
    }
    // Embedding of G is injective away from the zero.
    std::set<ExtendedElement> images;
    for (std::size_t g = 0; g < s.size(); ++g) {
      if (!s.is_zero(g)) {
        images.insert(x->embed(g));
      }
    }
    REQUIRE(images.size() == s.size() - (s.zero() ? 1 : 0));
  }
}

TEST_CASE("E-continuity witness", "[spectrum]") {
  auto x = spectrum_of("chain:3");
  auto [f, w] = e_cont_sup(*x, 1);
  REQUIRE(f == x->indicator(x->proj(1)));
  REQUIRE(members(w) == std::vector<std::size_t>{1});
  auto z3 = spectrum_of("cyclic:3");
  auto [f2, w2] = e_cont_sup(*z3, 1);
  REQUIRE(f2 == AlgStar{0});
  REQUIRE(w2.none());
  auto b = spectrum_of("brandt_unital:2");
  auto [f3, w3] = e_cont_sup(*b, *b->semigroup().index_of("(1,2)"));
  REQUIRE(f3 == AlgStar(b->size(), 0));
  REQUIRE(w3.none());
}

TEST_CASE("E-continuity sup and witness minimality", "[spectrum][property]") {
  for (auto const& k : small) {
    INFO(k);
    auto        x = spectrum_of(k);
    auto const& s = x->semigroup();
    for (std::size_t g = 0; g < s.size(); ++g) {
      auto [f, w] = e_cont_sup(*x, g);
      ProjectionSet full = x->empty(), from_w = x->empty();
      for (auto e : s.idempotent_list()) {
        if (s.leq(e, g)) {
          full |= x->proj(e);
        }
      }
      for (auto e : members(w)) {
        from_w |= x->proj(e);
      }
      REQUIRE(f == x->indicator(full));
      REQUIRE(from_w == full);
      for (auto drop : members(w)) {
        ProjectionSet less = x->empty();
        for (auto e : members(w)) {
          if (e != drop) {
            less |= x->proj(e);
          }
        }
        REQUIRE(less != full);
      }
    }
  }
}
