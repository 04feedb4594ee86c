#include <catch2/catch.hpp>

#include "iskk/crossed.hpp"
#include "iskk/error.hpp"
#include "iskk/induction.hpp"
#include "support.hpp"

#include <algorithm>
#include <numeric>

using namespace iskk;
using iskk::test::spectrum_of;

namespace {

  // Σ_g rank α_{gg*}, computed from dense ranks.
  std::size_t expected_dim(GAlgebra const& a) {
    auto const& h = a.acting();
    std::size_t total = 0;
    for (std::size_t g = 0; g < h.size(); ++g) {
      if (auto gg = h.mul(g, h.star(g))) {
        total += rank(a.action(*gg).to_dense());
      }
    }
    return total;
  }

  std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  std::size_t sum_of_squares(std::vector<std::size_t> const& v) {
    return std::accumulate(v.begin(), v.end(), std::size_t{0},
                           [](std::size_t s, std::size_t n) { return s + n * n; });
  }

  std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  // Irreducible degrees of S_k for k ≤ 3.
  std::vector<std::size_t> symmetric_degrees(std::size_t k) {
    switch (k) {
      case 1: return {1};
      case 2: return {1, 1};
      case 3: return {1, 1, 2};
    }
    return {};
  }

  // Contracted algebra of I_n as ⊕_k M_{C(n,k)}(ℂS_k), k ≥ 1.
  std::vector<std::size_t> rook_monoid_blocks(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k <= n; ++k) {
      for (auto d : symmetric_degrees(k)) {
        out.push_back(binomial(n, k) * d);
      }
    }
    return sorted(out);
  }

  Algebra dual_numbers() {
    std::vector<std::vector<SparseRow>> p(2, std::vector<SparseRow>(2));
    p[0][0] = {{0, Rational(1)}};
    p[0][1] = {{1, Rational(1)}};
    p[1][0] = {{1, Rational(1)}};
    return Algebra({"1", "x"}, std::move(p), SparseMatrix::identity(2));
  }

}  // namespace

TEST_CASE("crossed product dimensions", "[crossed]") {
  SECTION("group algebra") {
    auto g = ActingSet::plain(spectrum_of("cyclic:2"));
    auto c = crossed(trivial_algebra(g), CrossedKind::universal);
    REQUIRE(c.algebra.dim() == 2);
    REQUIRE(c.algebra.is_commutative());
  }
  SECTION("semilattice") {
    auto g = ActingSet::plain(spectrum_of("chain:2"));
    auto c = crossed(trivial_algebra(g), CrossedKind::universal);
    REQUIRE(c.algebra.dim() == 2);
    REQUIRE(c.algebra.is_commutative());
    REQUIRE(crossed(trivial_algebra(g), CrossedKind::sieben).algebra.dim() == 1);
  }
  SECTION("contracted semigroup algebra") {
    auto x = spectrum_of("symmetric_inverse:2");
    auto c = crossed(trivial_algebra(ActingSet::plain(x)), CrossedKind::universal);
    REQUIRE(c.algebra.dim() == Algebra::semigroup_algebra(x->semigroup()).dim());
    REQUIRE(c.algebra.dim() == 6);
  }
  SECTION("dimension formula") {
    for (auto spec : {"chain:3", "diamond", "boolean:2", "cyclic:3", "symmetric_inverse:2",
                      "brandt_unital:2", "symmetric_group:3"}) {
      auto g = ActingSet::plain(spectrum_of(spec));
      for (auto const& a : {trivial_algebra(g), c0x(g)}) {
        auto c = crossed(a, CrossedKind::universal);
        INFO(spec << " " << a.label());
        REQUIRE(c.algebra.dim() == expected_dim(a));
        REQUIRE(validate_algebra(c.algebra).passed());
      }
    }
  }
}

TEST_CASE("Sieben quotient is no larger than the universal one", "[crossed][property]") {
  for (auto spec : {"chain:2", "chain:3", "diamond", "cyclic:3", "symmetric_group:3",
                    "symmetric_inverse:2", "brandt_unital:2"}) {
    auto x = spectrum_of(spec);
    auto g = ActingSet::plain(x);
    for (auto const& a : {trivial_algebra(g), c0x(g)}) {
      auto u = crossed(a, CrossedKind::universal);
      auto s = crossed(a, CrossedKind::sieben);
      INFO(spec << " " << a.label());
      REQUIRE(s.algebra.dim() <= u.algebra.dim());
      bool trivial_e = g->idempotents().size() == 1;
      REQUIRE((s.algebra.dim() == u.algebra.dim()) == trivial_e);
    }
  }
}

TEST_CASE("crossed product errors", "[crossed]") {
  auto g = ActingSet::plain(spectrum_of("cyclic:2"));
  REQUIRE_THROWS_MATCHES(crossed(trivial_algebra(g), CrossedKind::groupoid), Error,
                         Catch::Predicate<Error>([](Error const& e) {
                           return e.code() == ErrorCode::InvalidAction;
                         }));
  auto bad = GAlgebra(Algebra::scalars(), g,
                      {SparseMatrix::identity(1), SparseMatrix(1, 1)}, "bad");
  REQUIRE_THROWS_MATCHES(crossed(bad, CrossedKind::universal), Error,
                         Catch::Predicate<Error>([](Error const& e) {
                           return e.code() == ErrorCode::InvalidAction;
                         }));
}

TEST_CASE("groupoid crossed product", "[crossed]") {
  auto x = spectrum_of("symmetric_inverse:2");
  auto g = ActingSet::plain(x);
  SECTION("group") {
    auto h = assoc_groupoid(x, iskk::test::subset(x->semigroup(), {"12", "21"}));
    auto c = crossed(trivial_coefficient(g, h), CrossedKind::groupoid);
    REQUIRE(c.algebra.dim() == 2);
    REQUIRE(blocks(c.algebra).count() == 2);
  }
  SECTION("units only") {
    auto h = assoc_groupoid(x, x->semigroup().idempotent_set());
    auto a = restrict(c0x(g), h);
    auto c = crossed(a, CrossedKind::groupoid);
    REQUIRE(c.algebra.dim() == expected_dim(a));
    REQUIRE(c.algebra.is_commutative());
    REQUIRE(validate_algebra(c.algebra).passed());
  }
}

TEST_CASE("semisimple quotient", "[crossed]") {
  SECTION("group algebra") {
    auto g  = ActingSet::plain(spectrum_of("cyclic:2"));
    auto ss = semisimple_quotient(crossed(trivial_algebra(g), CrossedKind::universal).algebra);
    REQUIRE(ss.radical_dim == 0);
    REQUIRE(ss.center_dim == 2);
  }
  SECTION("semilattice algebra") {
    auto g  = ActingSet::plain(spectrum_of("chain:2"));
    auto ss = semisimple_quotient(crossed(trivial_algebra(g), CrossedKind::universal).algebra);
    REQUIRE(ss.radical_dim == 0);
    REQUIRE(ss.center_dim == 2);
  }
  SECTION("matrices") {
    auto ss = semisimple_quotient(Algebra::matrices(2));
    REQUIRE(ss.radical_dim == 0);
    REQUIRE(ss.center_dim == 1);
    REQUIRE(center_dim(Algebra::matrices(3)) == 1);
  }
  SECTION("diagonal") {
    for (std::size_t k = 1; k <= 4; ++k) {
      REQUIRE(center_dim(Algebra::diagonal(k)) == k);
    }
  }
  SECTION("dual numbers") {
    auto ss = semisimple_quotient(dual_numbers());
    REQUIRE(ss.radical_dim == 1);
    REQUIRE(ss.quotient.algebra.dim() == 1);
    REQUIRE(ss.center_dim == 1);
  }
}

TEST_CASE("semisimple quotient is idempotent", "[crossed][property]") {
  std::vector<Algebra> algebras{dual_numbers(), tensor(dual_numbers(), Algebra::matrices(2)),
                                direct_sum(dual_numbers(), Algebra::diagonal(2))};
  for (auto spec : {"chain:3", "symmetric_inverse:2", "brandt_unital:2"}) {
    auto g = ActingSet::plain(spectrum_of(spec));
    algebras.push_back(crossed(c0x(g), CrossedKind::universal).algebra);
  }
  for (auto const& a : algebras) {
    auto ss = semisimple_quotient(a);
    REQUIRE(semisimple_quotient(ss.quotient.algebra).radical_dim == 0);
    REQUIRE(ss.quotient.algebra.dim() + ss.radical_dim == a.dim());
  }
}

TEST_CASE("block structure", "[crossed]") {
  SECTION("group algebras") {
    auto count = [](char const* spec) {
      auto g = ActingSet::plain(spectrum_of(spec));
      return blocks(crossed(trivial_algebra(g), CrossedKind::universal).algebra).count();
    };
    REQUIRE(count("cyclic:2") == 2);
    REQUIRE(count("cyclic:3") == 3);
    REQUIRE(count("symmetric_group:3") == 3);
  }
  SECTION("S3 splits exactly") {
    auto g = ActingSet::plain(spectrum_of("symmetric_group:3"));
    auto b = blocks(crossed(trivial_algebra(g), CrossedKind::universal).algebra, false);
    REQUIRE(b.method == BlockMethod::exact);
    REQUIRE(sorted(b.sizes) == std::vector<std::size_t>{1, 1, 2});
  }
  SECTION("Z/3 needs an extension") {
    auto g = ActingSet::plain(spectrum_of("cyclic:3"));
    auto a = crossed(trivial_algebra(g), CrossedKind::universal).algebra;
    try {
      blocks(a, false);
      FAIL("expected CenterDoesNotSplit");
    } catch (Error const& e) {
      REQUIRE(e.code() == ErrorCode::CenterDoesNotSplit);
      REQUIRE(std::string(e.what()).find("x^2+x+1") != std::string::npos);
    }
    auto b = blocks(a);
    REQUIRE(b.method == BlockMethod::numeric);
    REQUIRE(b.witness == "x^2+x+1");
    REQUIRE(b.sizes == std::vector<std::size_t>{1, 1, 1});
    REQUIRE(b.residual < 1e-9);
  }
  SECTION("rook monoids") {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto g = ActingSet::plain(spectrum_of("symmetric_inverse:" + std::to_string(n)));
      auto a = crossed(trivial_algebra(g), CrossedKind::universal).algebra;
      auto b = blocks(a);
      INFO("I_" << n);
      REQUIRE(b.ss.radical_dim == 0);
      REQUIRE(sorted(b.sizes) == rook_monoid_blocks(n));
    }
  }
  SECTION("matrices") {
    auto b = blocks(Algebra::matrices(3));
    REQUIRE(b.sizes == std::vector<std::size_t>{3});
  }
  SECTION("zero algebra") {
    REQUIRE(blocks(Algebra::zero()).count() == 0);
  }
}

TEST_CASE("numeric blocks agree with exact blocks", "[crossed][property]") {
  for (auto spec : {"chain:3", "diamond", "symmetric_inverse:2", "brandt_unital:2",
                    "symmetric_group:3", "boolean:2", "cyclic:2"}) {
    auto g = ActingSet::plain(spectrum_of(spec));
    for (auto const& a : {trivial_algebra(g), c0x(g)}) {
      for (auto kind : {CrossedKind::universal, CrossedKind::sieben}) {
        auto alg = crossed(a, kind).algebra;
        auto ex  = blocks(alg, false);
        for (unsigned seed : {0u, 7u}) {
          auto nu = numeric_blocks(alg, seed);
          INFO(spec << " " << a.label() << " " << to_string(kind) << " seed " << seed);
          REQUIRE(sorted(nu.sizes) == sorted(ex.sizes));
          REQUIRE(nu.residual < 1e-9);
          REQUIRE(ex.count() == ex.ss.center_dim);
          REQUIRE(sum_of_squares(ex.sizes) == ex.ss.quotient.algebra.dim());
        }
      }
    }
  }
}
