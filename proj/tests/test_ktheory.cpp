#include <catch2/catch.hpp>

#include "iskk/error.hpp"
#include "iskk/ktheory.hpp"
#include "support.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>

using namespace iskk;
using iskk::test::spectrum_of;
using iskk::test::subset;

namespace {

  using IntMatrix = std::vector<std::vector<long>>;

  SparseMatrix columns(std::size_t rows, std::vector<SparseRow> cols) {
    return SparseMatrix::from_columns(rows, std::move(cols));
  }

  SparseRow unit(std::size_t i) {
    return {{i, Rational(1)}};
  }

  ErrorCode code_of(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::MalformedInput;
  }

  // Independent count of the multiplicity of ℂ inside M_n through a unital
  // or corner embedding: the rank of the image of 1.
  long image_rank(SparseMatrix const& f, std::size_t n) {
    Matrix m(n, n);
    for (auto const& [k, c] : f.column(0)) {
      m(k / n, k % n) = c;
    }
    return static_cast<long>(rank(m));
  }

  std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  Algebra group_algebra(char const* spec) {
    return crossed(trivial_algebra(ActingSet::plain(spectrum_of(spec))), CrossedKind::universal)
        .algebra;
  }

}  // namespace

TEST_CASE("k0 of basic algebras", "[ktheory]") {
  REQUIRE(k0(Algebra::scalars()).rank == 1);
  for (std::size_t k = 1; k <= 4; ++k) {
    REQUIRE(k0(Algebra::diagonal(k)).rank == k);
  }
  auto m = k0(Algebra::matrices(3));
  REQUIRE(m.rank == 1);
  REQUIRE(m.block_dims == std::vector<std::size_t>{3});
  REQUIRE(k0(Algebra::zero()).rank == 0);
}

TEST_CASE("k0 of semilattice crossed products", "[ktheory]") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto x = spectrum_of("chain:" + std::to_string(n));
    auto g = ActingSet::plain(x);
    // Characters of a finite semilattice without zero correspond to its elements.
    REQUIRE(x->size() == n);
    REQUIRE(k0(crossed(trivial_algebra(g), CrossedKind::universal).algebra).rank == x->size());
    REQUIRE(k0(crossed(trivial_algebra(g), CrossedKind::sieben).algebra).rank == 1);
  }
  for (auto spec : {"diamond", "boolean:2", "boolean:3"}) {
    auto x = spectrum_of(spec);
    auto g = ActingSet::plain(x);
    INFO(spec);
    REQUIRE(k0(crossed(trivial_algebra(g), CrossedKind::universal).algebra).rank ==
            x->semigroup().size());
    REQUIRE(k0(crossed(trivial_algebra(g), CrossedKind::sieben).algebra).rank == 1);
  }
  auto x   = spectrum_of("chain:3");
  auto one = ActingSet::plain(x, subset(x->semigroup(), {"1"}));
  REQUIRE(k0(crossed(trivial_algebra(one), CrossedKind::sieben).algebra).rank == 1);
}

TEST_CASE("k0 is additive", "[ktheory][property]") {
  std::vector<Algebra> algebras{Algebra::scalars(), Algebra::matrices(2), Algebra::diagonal(3),
                                group_algebra("symmetric_group:3"), group_algebra("cyclic:3")};
  for (auto spec : {"chain:3", "symmetric_inverse:2", "brandt_unital:2"}) {
    algebras.push_back(crossed(c0x(ActingSet::plain(spectrum_of(spec))), CrossedKind::universal)
                           .algebra);
  }
  for (auto const& a : algebras) {
    for (auto const& b : algebras) {
      auto ka = k0(a), kb = k0(b), ks = k0(direct_sum(a, b));
      REQUIRE(ks.rank == ka.rank + kb.rank);
      auto dims = ka.block_dims;
      dims.insert(dims.end(), kb.block_dims.begin(), kb.block_dims.end());
      REQUIRE(sorted(ks.block_dims) == sorted(dims));
    }
  }
}

TEST_CASE("k0 group invariants", "[ktheory][property]") {
  for (auto spec : {"chain:3", "cyclic:3", "symmetric_inverse:3", "brandt_unital:2", "diamond"}) {
    auto g = ActingSet::plain(spectrum_of(spec));
    for (auto const& a : {trivial_algebra(g), c0x(g)}) {
      for (auto kind : {CrossedKind::universal, CrossedKind::sieben}) {
        auto k = k0(crossed(a, kind).algebra);
        std::size_t squares = 0;
        for (auto n : k.block_dims) {
          squares += n * n;
        }
        REQUIRE(squares == k.quotient_dim);
        REQUIRE(k.rank == k.block_dims.size());
      }
    }
  }
}

TEST_CASE("k0 maps", "[ktheory]") {
  SECTION("identity") {
    for (auto const& a : {Algebra::diagonal(3), Algebra::matrices(2),
                          group_algebra("symmetric_group:3")}) {
      auto m = k0_map(a, a, SparseMatrix::identity(a.dim()));
      REQUIRE(m.matrix == identity_matrix(m.source.rank));
    }
  }
  SECTION("unital embedding into M2") {
    // e11 and e22 sit at positions 0 and 3.
    auto f = columns(4, {{{0, Rational(1)}, {3, Rational(1)}}});
    auto m = k0_map(Algebra::scalars(), Algebra::matrices(2), f);
    REQUIRE(m.matrix == IntMatrix{{image_rank(f, 2)}});
    REQUIRE(m.matrix == IntMatrix{{2}});
    REQUIRE(m.target.block_dims == std::vector<std::size_t>{2});
  }
  SECTION("corner embedding into M2") {
    auto f = columns(4, {unit(0)});
    REQUIRE(k0_map(Algebra::scalars(), Algebra::matrices(2), f).matrix == IntMatrix{{1}});
  }
  SECTION("coordinate projection") {
    auto f = columns(1, {unit(0), {}});
    REQUIRE(k0_map(Algebra::diagonal(2), Algebra::scalars(), f).matrix == IntMatrix{{1, 0}});
  }
  SECTION("functoriality") {
    auto diag = columns(2, {{{0, Rational(1)}, {1, Rational(1)}}});      // ℂ → ℂ²
    auto into = columns(4, {unit(0), unit(3)});                           // ℂ² → M2
    auto f    = k0_map(Algebra::scalars(), Algebra::diagonal(2), diag);
    auto g    = k0_map(Algebra::diagonal(2), Algebra::matrices(2), into);
    auto gf   = k0_map(Algebra::scalars(), Algebra::matrices(2), into * diag);
    REQUIRE(f.matrix == IntMatrix{{1}, {1}});
    REQUIRE(g.matrix == IntMatrix{{1, 1}});
    REQUIRE(compose(g, f).matrix == gf.matrix);
  }
  SECTION("numeric blocks") {
    auto a = group_algebra("cyclic:3");
    auto id = k0_map(a, a, SparseMatrix::identity(3));
    REQUIRE(id.source.method == BlockMethod::numeric);
    REQUIRE(id.matrix == identity_matrix(3));
    // δ_g ↦ 1 lands in exactly one block.
    auto aug = columns(1, {unit(0), unit(0), unit(0)});
    auto m   = k0_map(a, Algebra::scalars(), aug);
    long ones = 0, total = 0;
    for (auto v : m.matrix[0]) {
      ones += v == 1;
      total += v;
    }
    REQUIRE(ones == 1);
    REQUIRE(total == 1);
    // The unit maps onto every block once.
    auto u = k0_map(Algebra::scalars(), a, columns(3, {*a.unit()}));
    REQUIRE(u.matrix == IntMatrix{{1}, {1}, {1}});
    REQUIRE(compose(m, u).matrix == IntMatrix{{1}});
  }
  SECTION("errors") {
    auto half = columns(2, {{{0, Rational(1, 2)}}});
    REQUIRE(code_of([&] { k0_map(Algebra::scalars(), Algebra::diagonal(2), half); }) ==
            ErrorCode::NonIntegralMultiplicity);
    REQUIRE(code_of([&] {
              k0_map(Algebra::scalars(), Algebra::diagonal(2), SparseMatrix(3, 1));
            }) == ErrorCode::DimensionMismatch);
    std::vector<std::vector<SparseRow>> p(2, std::vector<SparseRow>(2));
    p[0][0] = unit(0);
    p[0][1] = unit(1);
    p[1][0] = unit(1);
    Algebra dual({"1", "x"}, std::move(p), SparseMatrix::identity(2));
    REQUIRE(code_of([&] { k0_map(dual, Algebra::scalars(), columns(1, {unit(0), unit(0)})); }) ==
            ErrorCode::NotSemisimple);
  }
}

TEST_CASE("remark counterexamples", "[ktheory]") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto r = verify_remark_counterexamples(spectrum_of("chain:" + std::to_string(n)));
    INFO(r.to_text());
    REQUIRE(r.passed());
    REQUIRE(r.data().at("m") == n);
    REQUIRE(r.checks().size() == 6);
  }
  auto g = verify_remark_counterexamples(spectrum_of("cyclic:2"));
  REQUIRE(g.passed());
  REQUIRE(g.data().contains("ind_vanishing"));
  REQUIRE(g.data().contains("semilattice"));
  auto i2 = verify_remark_counterexamples(spectrum_of("symmetric_inverse:2"));
  REQUIRE(i2.passed());
  REQUIRE(i2.checks().size() == 4);
}

TEST_CASE("green-julg diagram", "[ktheory]") {
  SECTION("trivial subsemigroup") {
    auto x = spectrum_of("chain:2");
    auto g = ActingSet::plain(x);
    auto r = verify_green_julg_diagram(x, subset(x->semigroup(), {"1"}), {trivial_algebra(g)});
    INFO(r.to_text());
    REQUIRE(r.passed());
    REQUIRE(r.data().at("units") == 1);
  }
  SECTION("semilattice") {
    auto x = spectrum_of("chain:2");
    auto g = ActingSet::plain(x);
    auto r = verify_green_julg_diagram(x, x->semigroup().idempotent_set(), {trivial_algebra(g)});
    INFO(r.to_text());
    REQUIRE(r.passed());
    REQUIRE(r.data().at("units") == 2);
  }
  SECTION("group inside I2, three summands") {
    auto x = spectrum_of("symmetric_inverse:2");
    auto g = ActingSet::plain(x);
    auto c = point_algebra(g, *x->character_of(x->semigroup().unit()));
    auto r = verify_green_julg_diagram(x, subset(x->semigroup(), {"12", "21"}), {c, c, c});
    INFO(r.to_text());
    REQUIRE(r.passed());
    auto const& last = r.checks().back();
    REQUIRE(last.detail.at("sum") == 6);
  }
  SECTION("no minimal projection") {
    auto x = spectrum_of("symmetric_inverse:2");
    auto r = verify_green_julg_diagram(x, x->semigroup().idempotent_set(), {});
    REQUIRE_FALSE(r.passed());
    REQUIRE(r.checks().size() == 1);
  }
}

TEST_CASE("imprimitivity", "[ktheory]") {
  SECTION("classical") {
    for (auto spec : {"cyclic:2", "cyclic:3", "symmetric_group:3"}) {
      auto x  = spectrum_of(spec);
      auto g  = ActingSet::plain(x);
      auto hp = x->semigroup().empty_set();
      hp.set(x->semigroup().unit());
      auto h = assoc_groupoid(x, hp);
      auto r = verify_imprimitivity(x, hp, trivial_coefficient(g, h));
      INFO(spec);
      REQUIRE(r.passed());
      auto const& d = r.checks().front().detail;
      REQUIRE(d.at("induced").at("rank") == 1);
      REQUIRE(d.at("induced").at("block_dims") == Json::array({x->semigroup().size()}));
    }
  }
  SECTION("2-chain with Res C") {
    auto x  = spectrum_of("chain:2");
    auto g  = ActingSet::plain(x);
    auto hp = x->semigroup().idempotent_set();
    auto h  = assoc_groupoid(x, hp);
    REQUIRE(verify_imprimitivity(x, hp, trivial_coefficient(g, h)).passed());
  }
  SECTION("I2 with the unit space") {
    auto x  = spectrum_of("symmetric_inverse:2");
    auto hp = x->semigroup().idempotent_set();
    auto h  = assoc_groupoid(x, hp);
    REQUIRE(verify_imprimitivity(x, hp, unit_space_algebra(h)).passed());
  }
}

TEST_CASE("imprimitivity across the corpus", "[ktheory][property]") {
  for (auto spec : {"chain:2", "chain:3", "diamond", "boolean:2", "cyclic:2", "cyclic:3",
                    "symmetric_group:3", "symmetric_inverse:2", "brandt_unital:2",
                    "group_with_zero:2"}) {
    auto x = spectrum_of(spec);
    auto& s = x->semigroup();
    auto one = s.empty_set();
    one.set(s.unit());
    for (auto const& hp : {one, s.idempotent_set()}) {
      auto h = assoc_groupoid(x, hp);
      std::vector<GAlgebra> coeffs{unit_space_algebra(h)};
      if (h->idempotents().size() == 1) {
        coeffs.push_back(trivial_coefficient(ActingSet::plain(x), h));
      }
      for (auto const& f : coeffs) {
        auto r = verify_imprimitivity(x, hp, f);
        INFO(spec << " " << f.label() << " " << r.to_text());
        REQUIRE(r.passed());
      }
    }
  }
}

TEST_CASE("golden K0 table", "[ktheory][golden]") {
  std::ifstream in(std::string(ISKK_GOLDEN_DIR) + "/k0_table.json");
  REQUIRE(in.good());
  auto table = Json::parse(in);
  REQUIRE(table.size() > 0);
  for (auto const& row : table) {
    auto g     = ActingSet::plain(spectrum_of(row.at("builder").get<std::string>()));
    auto coeff = row.at("coeff").get<std::string>();
    auto a     = coeff == "trivial" ? trivial_algebra(g) : c0x(g);
    auto k     = k0(crossed(a, parse_crossed_kind(row.at("kind").get<std::string>())).algebra);
    INFO(row.dump());
    REQUIRE(k.rank == row.at("rank").get<std::size_t>());
    REQUIRE(sorted(k.block_dims) == row.at("block_dims").get<std::vector<std::size_t>>());
    REQUIRE(to_string(k.method) == row.at("method").get<std::string>());
  }
}
