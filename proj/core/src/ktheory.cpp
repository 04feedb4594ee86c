#include "iskk/ktheory.hpp"

#include "iskk/error.hpp"

#include <algorithm>
#include <cmath>

namespace iskk {

  Json K0Group::to_json() const {
    Json j{{"rank", rank},
           {"block_dims", block_dims},
           {"method", to_string(method)},
           {"radical_dim", radical_dim},
           {"quotient_dim", quotient_dim}};
    if (!witness.empty()) {
      j["witness"] = witness;
    }
    return j;
  }

  Json K0Map::to_json() const {
    return {{"matrix", matrix}, {"source", source.to_json()}, {"target", target.to_json()}};
  }

  K0Group k0(Algebra const& a, bool allow_numeric, unsigned seed) {
    K0Group out;
    out.blocks       = blocks(a, allow_numeric, seed);
    out.rank         = out.blocks.count();
    out.block_dims   = out.blocks.sizes;
    out.method       = out.blocks.method;
    out.radical_dim  = out.blocks.ss.radical_dim;
    out.quotient_dim = out.blocks.ss.quotient.algebra.dim();
    out.witness      = out.blocks.witness;
    return out;
  }

  std::vector<std::vector<long>> identity_matrix(std::size_t n) {
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = 1;
    }
    return m;
  }

  K0Map compose(K0Map const& after, K0Map const& before) {
    if (after.source.rank != before.target.rank) {
      throw Error(ErrorCode::DimensionMismatch, "K0 maps are not composable");
    }
    K0Map out{{}, before.source, after.target};
    out.matrix.assign(after.rows(), std::vector<long>(before.cols(), 0));
    for (std::size_t j = 0; j < after.rows(); ++j) {
      for (std::size_t i = 0; i < before.cols(); ++i) {
        for (std::size_t k = 0; k < before.rows(); ++k) {
          out.matrix[j][i] += after.matrix[j][k] * before.matrix[k][i];
        }
      }
    }
    return out;
  }

  namespace {

    // Preimage under the quotient map supported on the non-pivot columns.
    SparseRow lift(Quotient const& q, SparseRow const& y) {
      std::vector<std::size_t> keep;
      for (std::size_t c = 0; c < q.map.cols(); ++c) {
        if (!q.ideal.is_pivot(c)) {
          keep.push_back(c);
        }
      }
      SparseRow out;
      for (auto const& [i, v] : y) {
        out.emplace_back(keep[i], v);
      }
      return out;
    }

    CVec lift(Quotient const& q, CVec const& y) {
      CVec        out(q.map.cols());
      std::size_t i = 0;
      for (std::size_t c = 0; c < q.map.cols(); ++c) {
        if (!q.ideal.is_pivot(c)) {
          out[c] = y[i++];
        }
      }
      return out;
    }

    CVec numeric_apply(SparseMatrix const& m, CVec const& v) {
      CVec out(m.rows());
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (v[j] == 0.0) {
          continue;
        }
        for (auto const& [i, c] : m.column(j)) {
          out[i] += c.get_d() * v[j];
        }
      }
      return out;
    }

    CVec to_complex(SparseRow const& v, std::size_t n) {
      CVec out(n);
      for (auto const& [i, c] : v) {
        out[i] = c.get_d();
      }
      return out;
    }

    std::vector<CVec> numeric_idempotents(Blocks const& b) {
      if (b.method == BlockMethod::numeric) {
        return b.numeric_idempotents;
      }
      std::vector<CVec> out;
      for (auto const& e : b.idempotents) {
        out.push_back(to_complex(e, b.ss.quotient.algebra.dim()));
      }
      return out;
    }

    Vec trace_vector(Algebra const& a) {
      Vec tr(a.dim());
      for (std::size_t l = 0; l < a.dim(); ++l) {
        for (std::size_t k = 0; k < a.dim(); ++k) {
          tr[l] += entry(a.product(l, k), k);
        }
      }
      return tr;
    }

  }  // namespace

  K0Map k0_map(Algebra const& a, Algebra const& b, SparseMatrix const& f, bool allow_numeric,
               unsigned seed) {
    if (f.rows() != b.dim() || f.cols() != a.dim()) {
      throw Error(ErrorCode::DimensionMismatch, "map does not fit the algebras");
    }
    K0Map       out{{}, k0(a, allow_numeric, seed), k0(b, allow_numeric, seed)};
    auto const& qa = out.source.blocks.ss.quotient;
    auto const& qb = out.target.blocks.ss.quotient;
    for (auto const& r : qa.ideal.sparse_basis()) {
      if (!qb.map.apply(f.apply(r)).empty()) {
        throw Error(ErrorCode::NotSemisimple, "map does not preserve the radical");
      }
    }
    auto const& nA = out.source.block_dims;
    auto const& nB = out.target.block_dims;
    out.matrix.assign(nB.size(), std::vector<long>(nA.size(), 0));
    Vec const tr = trace_vector(qb.algebra);

    bool const exact = out.source.method == BlockMethod::exact &&
                       out.target.method == BlockMethod::exact;
    if (exact) {
      for (std::size_t i = 0; i < nA.size(); ++i) {
        auto x = qb.map.apply(f.apply(lift(qa, out.source.blocks.idempotents[i])));
        for (std::size_t j = 0; j < nB.size(); ++j) {
          auto     y = qb.algebra.mul(out.target.blocks.idempotents[j], x);
          Rational t;
          for (auto const& [l, c] : y) {
            t += c * tr[l];
          }
          Rational m = t / Rational(static_cast<long>(nA[i] * nB[j]));
          if (m.get_den() != 1 || m < 0) {
            throw Error(ErrorCode::NonIntegralMultiplicity, "multiplicity " + m.get_str());
          }
          out.matrix[j][i] = m.get_num().get_si();
        }
      }
      return out;
    }

    auto ea = numeric_idempotents(out.source.blocks);
    auto eb = numeric_idempotents(out.target.blocks);
    for (std::size_t i = 0; i < nA.size(); ++i) {
      auto x = numeric_apply(qb.map, numeric_apply(f, lift(qa, ea[i])));
      for (std::size_t j = 0; j < nB.size(); ++j) {
        auto                 y = numeric_mul(qb.algebra, eb[j], x);
        std::complex<double> t = 0;
        for (std::size_t l = 0; l < y.size(); ++l) {
          t += y[l] * tr[l].get_d();
        }
        auto   m       = t / static_cast<double>(nA[i] * nB[j]);
        double rounded = std::round(m.real());
        if (std::abs(m - rounded) > 1e-9 || rounded < 0) {
          throw Error(ErrorCode::NonIntegralMultiplicity,
                      "multiplicity " + std::to_string(m.real()) + "+" +
                          std::to_string(m.imag()) + "i");
        }
        out.matrix[j][i] = static_cast<long>(rounded);
      }
    }
    return out;
  }

  GAlgebra unit_space_algebra(ActingPtr h) {
    auto const&              units = h->idempotents();
    std::vector<std::string> names;
    std::vector<std::optional<std::size_t>> pos(h->size());
    for (std::size_t i = 0; i < units.size(); ++i) {
      pos[units[i]] = i;
      names.push_back("1_" + h->name(units[i]));
    }
    std::vector<std::vector<std::optional<std::size_t>>> maps;
    for (std::size_t k = 0; k < h->size(); ++k) {
      std::vector<std::optional<std::size_t>> m(units.size());
      auto src = h->mul(h->star(k), k);
      auto rng = h->mul(k, h->star(k));
      if (src && rng) {
        m[*pos[*src]] = *pos[*rng];
      }
      maps.push_back(std::move(m));
    }
    return commutative_algebra(std::move(h), std::move(names), std::move(maps), "C0(H0)");
  }

  namespace {

    bool connected_with_unit(FiniteInvSgp const& s, std::size_t p) {
      for (std::size_t g = 0; g < s.size(); ++g) {
        auto l = s.mul(s.star(g), g);
        auto r = s.mul(g, s.star(g));
        if ((l == s.unit() && r == p) || (r == s.unit() && l == p)) {
          return true;
        }
      }
      return false;
    }

    // Product of the nonzero idempotents of sub, if nonzero.
    std::optional<std::size_t> minimal_projection(FiniteInvSgp const& s, ElementSet const& sub) {
      std::size_t e = s.unit();
      for (auto f : s.idempotent_list()) {
        if (sub.test(f) && !s.is_zero(f)) {
          e = s.mul(e, f);
        }
      }
      if (s.is_zero(e)) {
        return std::nullopt;
      }
      return e;
    }

    ElementSet single(FiniteInvSgp const& s, std::size_t g) {
      ElementSet out = s.empty_set();
      out.set(g);
      return out;
    }

  }  // namespace

  Report verify_remark_counterexamples(SpectrumPtr x) {
    auto const& s = x->semigroup();
    Report      r("remark counterexamples");
    auto        G = ActingSet::plain(x);

    std::vector<std::size_t> lower;
    for (auto p : s.idempotent_list()) {
      if (p == s.unit() || s.is_zero(p)) {
        continue;
      }
      if (connected_with_unit(s, p)) {
        throw Error(ErrorCode::HypothesesNotMet,
                    "projection " + s.name(p) + " is connected with the unit");
      }
      lower.push_back(p);
    }

    // Ind over H = {1}: every projection below the unit kills Ind ℂ.
    if (lower.empty()) {
      r.set("ind_vanishing", "not applicable: no projection below the unit");
    } else {
      auto           H = assoc_groupoid(x, single(s, s.unit()));
      InducedAlgebra ind(compute_GH(G, H), trivial_coefficient(G, H));
      auto const&    alg   = ind.algebra();
      auto const&    space = ind.space();
      auto           point = space.index_of(H->element(0));
      bool           found = point && ind.fibers().fibers[space.class_of[*point]].algebra.dim() == 1;
      r.add("H-coset carries a copy of C", found);
      if (found) {
        auto one = ind.fibers().basis(space.class_of[*point], 0);
        Json kill, vanish;
        for (auto p : lower) {
          auto const& act = alg.plain_action(p);
          for (std::size_t j = 0; j < alg.dim(); ++j) {
            if (!alg.algebra().mul(one, act.column(j)).empty() && kill.is_null()) {
              kill = {{"p", s.name(p)}, {"a", alg.algebra().name(j)}};
            }
          }
          if (!act.is_zero() && vanish.is_null()) {
            vanish = {{"p", s.name(p)}};
          }
        }
        r.add("1_H annihilates alpha_p(Ind C) for every p < 1", kill.is_null(), kill);
        r.add("alpha_p vanishes on Ind C for every p < 1", vanish.is_null(), vanish);
      }
      r.set("ind_dim", alg.dim());
    }

    bool const semilattice = s.idempotent_set().count() == s.size();
    auto       m           = x->size();
    r.set("m", m);
    if (!semilattice) {
      r.set("semilattice", "not applicable: G is not a semilattice");
    } else {
      auto k = k0(crossed(trivial_algebra(G), CrossedKind::universal).algebra);
      r.add("K(C x E) has rank m", k.rank == m, {{"rank", k.rank}, {"m", m}});
      if (auto e = minimal_projection(s, s.full_set())) {
        // H = {e} has e as its unit, so it is not a unital subsemigroup of E;
        // its groupoid is the single unit (e, proj(e)).
        auto           H = make_groupoid(x, {x->canonical(*e, x->proj(*e))});
        InducedAlgebra ind(compute_GH(G, H), trivial_action(Algebra::scalars(), H, "C"));
        r.add("Ind_e^E C is one-dimensional", ind.algebra().dim() == 1,
              {{"dim", ind.algebra().dim()}});
      } else {
        r.set("minimal_projection", "not applicable: E has no nonzero minimum");
      }
    }

    auto trivial_h = ActingSet::plain(x, single(s, s.unit()));
    auto kh        = k0(crossed(trivial_algebra(trivial_h), CrossedKind::sieben).algebra);
    r.add("K(C x^ {1}) has rank 1", kh.rank == 1, {{"rank", kh.rank}});
    return r;
  }

  Report verify_green_julg_diagram(SpectrumPtr x, ElementSet const& hprime,
                                   std::vector<GAlgebra> const& parts) {
    auto const& s = x->semigroup();
    Report      r("green-julg diagram");
    auto        H = assoc_groupoid(x, hprime);
    auto        e = minimal_projection(s, hprime);
    if (!r.add("E(H') has a nonzero minimal projection", e.has_value())) {
      return r;
    }
    auto chi = x->character_of(*e);
    auto C   = unit_space_algebra(H);

    auto const&                units = H->idempotents();
    std::optional<std::size_t> slot;
    for (std::size_t i = 0; i < units.size(); ++i) {
      if (H->element(units[i]).P.test(*chi)) {
        slot = i;
      }
    }
    if (!r.add("the point e lies in X_H", slot.has_value())) {
      return r;
    }
    auto one = C.algebra().basis(*slot);
    Json moved;
    for (std::size_t k = 0; k < H->size() && moved.is_null(); ++k) {
      auto img = C.action(k).apply(one);
      if (!img.empty() && img != one) {
        moved = {{"h", H->name(k)}};
      }
    }
    if (!r.add("H fixes 1_e", moved.is_null(), moved)) {
      return r;
    }

    auto         sub = subalgebra(C.algebra(), {one}, "e");
    auto         ce  = restrict_to_subspace(C, sub, "C_e");
    SparseMatrix f   = sub.embedding;
    SparseMatrix p(1, C.dim());
    p.set_column(*slot, {{0, Rational(1)}});
    r.merge(check_equivariant_hom(ce, C, f, "f"));
    r.merge(check_equivariant_hom(C, ce, p, "p"));
    r.add("p f = id", (p * f).is_identity());

    auto kf = k0_map(ce.algebra(), C.algebra(), f);
    auto kp = k0_map(C.algebra(), ce.algebra(), p);
    r.add("K0(p) K0(f) = id", compose(kp, kf).matrix == identity_matrix(kf.cols()),
          {{"f", kf.matrix}, {"p", kp.matrix}});
    r.add("K0(f) K0(p) is the identity on the image of K0(f)",
          compose(kf, compose(kp, kf)).matrix == kf.matrix);

    if (!parts.empty()) {
      std::vector<std::size_t> ranks, dims;
      std::size_t              total = 0;
      for (auto const& b : parts) {
        auto k = k0(crossed(restrict(b, H), CrossedKind::groupoid).algebra);
        ranks.push_back(k.rank);
        total += k.rank;
        dims.insert(dims.end(), k.block_dims.begin(), k.block_dims.end());
      }
      GAlgebra sum = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) {
        sum = direct_sum(sum, parts[i]);
      }
      auto k = k0(crossed(restrict(sum, H), CrossedKind::groupoid).algebra);
      auto whole = k.block_dims;
      std::sort(dims.begin(), dims.end());
      std::sort(whole.begin(), whole.end());
      r.add("K0 of the sum is the sum of the K0", k.rank == total && whole == dims,
            {{"parts", ranks}, {"sum", k.rank}});
    }
    r.set("units", units.size());
    r.set("e", s.name(*e));
    return r;
  }

  Report verify_imprimitivity(SpectrumPtr x, ElementSet const& hprime, GAlgebra const& f) {
    Report         r("imprimitivity");
    auto           G = ActingSet::plain(x);
    auto           H = assoc_groupoid(x, hprime);
    InducedAlgebra ind(compute_GH(G, H), f);
    auto           lhs = k0(crossed(ind.algebra(), CrossedKind::sieben).algebra);
    auto           rhs = k0(crossed(f, CrossedKind::groupoid).algebra);
    r.add("rank K(Ind F x^ G) = rank K(F x^ H)", lhs.rank == rhs.rank,
          {{"induced", lhs.to_json()}, {"coefficient", rhs.to_json()}});
    r.set("ind_dim", ind.algebra().dim());
    return r;
  }

}  // namespace iskk
