#include <catch2/catch.hpp>

#include "iskk/error.hpp"
#include "iskk/galgebra.hpp"

using namespace iskk;

namespace {

  SpectrumPtr spectrum_of(std::string const& spec) {
    return std::make_shared<Spectrum const>(std::make_shared<FiniteInvSgp const>(build_spec(spec)));
  }

  SparseMatrix diag(std::vector<int> d) {
    std::vector<SparseRow> cols(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] != 0) {
        cols[i] = {{i, Rational(d[i])}};
      }
    }
    return SparseMatrix::from_columns(d.size(), std::move(cols));
  }

  // The two-unit groupoid {(1, proj(e)), (1, X \ proj(e))} inside the 2-chain.
  ActingPtr two_unit_groupoid(SpectrumPtr x) {
    auto pe  = x->canonical(0, x->proj(1));
    auto pec = x->canonical(0, ~x->proj(1));
    return std::make_shared<ActingSet const>(x, std::vector<ExtendedElement>{pe, pec},
                                             std::vector<std::string>{"e", "1-e"},
                                             std::vector<std::optional<std::size_t>>(2), true);
  }

}  // namespace

TEST_CASE("validate_g_algebra", "[galgebra]") {
  auto g = ActingSet::plain(spectrum_of("chain:2"));
  REQUIRE(validate_g_algebra(trivial_algebra(g)).passed());
  REQUIRE(validate_g_algebra(c0x(g)).passed());
  // α_e(a, b) = (a, a) is a *-endomorphism but not multiplication by a central element.
  SparseMatrix squash = SparseMatrix::from_columns(2, {{{0, Rational(1)}, {1, Rational(1)}}, {}});
  GAlgebra bad(Algebra::diagonal(2), g, {SparseMatrix::identity(2), squash});
  auto r = validate_g_algebra(bad);
  REQUIRE_FALSE(r.passed());
  REQUIRE(r.first_failure()->name == "idempotents act centrally");
  // A semigroup with zero cannot act trivially.
  auto b = ActingSet::plain(spectrum_of("brandt_unital:2"));
  REQUIRE_FALSE(validate_g_algebra(trivial_algebra(b)).passed());
  REQUIRE(validate_g_algebra(c0x(b)).passed());
}

TEST_CASE("balanced tensor", "[galgebra]") {
  auto g   = ActingSet::plain(spectrum_of("chain:2"));
  auto cx  = c0x(g);
  auto bal = balanced_tensor(cx, cx);
  REQUIRE(bal.dim() == 2);
  REQUIRE(validate_g_algebra(bal).passed());
  auto ce  = trivial_algebra(g);
  auto c1e = commutative_algebra(g, {"p"}, {{0}, {std::nullopt}});
  REQUIRE(validate_g_algebra(c1e).passed());
  REQUIRE(balanced_tensor(ce, c1e).dim() == 0);
  auto z3 = ActingSet::plain(spectrum_of("cyclic:3"));
  auto m2 = trivial_action(Algebra::matrices(2), z3);
  REQUIRE(balanced_tensor(m2, trivial_algebra(z3)).dim() == 4);
}

TEST_CASE("balanced tensor dimension bound", "[galgebra][property]") {
  for (auto k : {"chain:3", "diamond", "brandt_unital:2", "symmetric_inverse:2"}) {
    INFO(k);
    auto g  = ActingSet::plain(spectrum_of(k));
    auto cx = c0x(g);
    auto t  = balanced_tensor(cx, cx);
    REQUIRE(t.dim() == g->spectrum().size());
    REQUIRE(validate_g_algebra(t).passed());
  }
}

TEST_CASE("cutdown", "[galgebra]") {
  auto g  = ActingSet::plain(spectrum_of("chain:2"));
  auto cx = c0x(g);
  auto [a, b] = cutdown(cx, 0);
  REQUIRE(a.dim() == 2);
  REQUIRE(b.dim() == 0);
  auto [p, q] = cutdown(cx, 1);
  REQUIRE(p.dim() == 1);
  REQUIRE(q.dim() == 1);
  GAlgebra c3(Algebra::diagonal(3), g, {SparseMatrix::identity(3), diag({1, 1, 0})});
  REQUIRE(validate_g_algebra(c3).passed());
  auto [x, y] = cutdown(c3, 1);
  REQUIRE(x.dim() == 2);
  REQUIRE(y.dim() == 1);
  REQUIRE(validate_g_algebra(x).passed());
  REQUIRE(validate_g_algebra(y).passed());
  auto s3 = ActingSet::plain(spectrum_of("symmetric_inverse:2"));
  // The idempotent fixing only the first point does not commute with the swap.
  auto e1 = *s3->index_of_plain(*s3->semigroup().index_of("1-"));
  REQUIRE_THROWS_AS(cutdown(c0x(s3), e1), Error);
}

TEST_CASE("cutdown reassembles the algebra", "[galgebra][property]") {
  auto g  = ActingSet::plain(spectrum_of("boolean:2"));
  auto cx = c0x(g);
  for (auto p : g->idempotents()) {
    auto [a, b] = cutdown(cx, p);
    REQUIRE(a.dim() + b.dim() == cx.dim());
    auto sum = direct_sum(a, b);
    // Both are commutative with the same number of minimal idempotents and
    // the reassembled action matches blockwise.
    REQUIRE(sum.algebra().is_commutative());
    REQUIRE(validate_g_algebra(sum).passed());
  }
}

TEST_CASE("restrict", "[galgebra]") {
  auto x  = spectrum_of("chain:2");
  auto g  = ActingSet::plain(x);
  auto cx = c0x(g);
  auto same = restrict(cx, g);
  REQUIRE(same.dim() == 2);
  auto one = ActingSet::plain(x, generate(x->semigroup(), x->semigroup().empty_set()));
  auto r1  = restrict(cx, one);
  REQUIRE(r1.dim() == 2);
  REQUIRE(r1.action(0).is_identity());
  auto h  = two_unit_groupoid(x);
  auto rh = restrict(cx, h);
  REQUIRE(rh.dim() == 2);
  REQUIRE(validate_g_algebra(rh).passed());
  REQUIRE(rh.action(0).nonzeros() == 1);
  REQUIRE(rh.action(1).nonzeros() == 1);
  REQUIRE((rh.action(0) + rh.action(1)).is_identity());
  // Restricting in two steps agrees.
  auto twice = restrict(restrict(cx, one), one);
  REQUIRE(twice.dim() == r1.dim());
  REQUIRE(twice.actions() == r1.actions());
}

TEST_CASE("star homomorphism checks", "[galgebra]") {
  auto c = Algebra::scalars();
  auto m = Algebra::matrices(2);
  auto unital = SparseMatrix::from_columns(4, {{{0, Rational(1)}, {3, Rational(1)}}});
  auto corner = SparseMatrix::from_columns(4, {{{0, Rational(1)}}});
  REQUIRE(check_star_hom(c, m, unital).passed());
  REQUIRE(check_star_hom(c, m, corner).passed());
  auto twice = SparseMatrix::from_columns(4, {{{0, Rational(2)}}});
  REQUIRE_FALSE(check_star_hom(c, m, twice).passed());
  REQUIRE(is_bijective(SparseMatrix::identity(3)));
  REQUIRE_FALSE(is_bijective(corner));
}
