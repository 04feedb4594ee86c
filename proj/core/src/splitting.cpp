#include "iskk/error.hpp"
#include "iskk/induction.hpp"
#include "union_find.hpp"

#include <iterator>
#include <set>

namespace iskk {

  namespace {
    std::vector<std::size_t> nonzero_members(FiniteInvSgp const& s, ElementSet const& set) {
      std::vector<std::size_t> out;
      for (auto g : members(set)) {
        if (!s.is_zero(g)) {
          out.push_back(g);
        }
      }
      return out;
    }

    void require_full(GAlgebra const& d) {
      auto const& s = d.acting().semigroup();
      std::size_t nonzero = s.size() - (s.zero() ? 1 : 0);
      if (d.acting().is_groupoid() || d.acting().size() != nonzero) {
        throw Error(ErrorCode::HypothesesNotMet, "coefficient must be a G-algebra");
      }
    }

    // Classes of K_H under y ~ l y (l in L) and y ~ y t (t in H), indexed by
    // their least point.
    std::vector<std::vector<std::size_t>> double_classes(GHSpace const& sp,
                                                         std::vector<std::size_t> const& l) {
      auto const&       x = sp.K->spectrum();
      detail::UnionFind uf(sp.size());
      for (std::size_t y = 0; y < sp.size(); ++y) {
        uf.unite(y, sp.reps[sp.class_of[y]]);
        for (auto g : l) {
          auto z = sp.index_of(x.tilde_mul(x.embed(g), sp.points[y]));
          if (z) {
            uf.unite(y, *z);
          }
        }
      }
      std::map<std::size_t, std::vector<std::size_t>> by_root;
      for (std::size_t y = 0; y < sp.size(); ++y) {
        by_root[uf.find(y)].push_back(y);
      }
      std::vector<std::vector<std::size_t>> out;
      for (auto& [root, pts] : by_root) {
        out.push_back(std::move(pts));
      }
      return out;
    }

    SparseMatrix hcat(std::size_t rows, std::vector<SparseMatrix> const& parts) {
      std::vector<SparseRow> cols;
      for (auto const& m : parts) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          cols.push_back(m.column(j));
        }
      }
      return SparseMatrix::from_columns(rows, std::move(cols));
    }
  }  // namespace

  SplitResult technical_split(SpectrumPtr x, ElementSet const& uprime, ElementSet const& L,
                              ExtendedElement const& g, GAlgebra const& d) {
    auto const& s = x->semigroup();
    require_full(d);
    if (!is_subsemigroup(s, L)) {
      throw Error(ErrorCode::NotSubsemigroup, "L is not a unital subsemigroup");
    }
    auto const G     = d.acting_ptr();
    auto const U     = assoc_groupoid(x, uprime);
    auto const bigsp = compute_GH(G, U);
    if (!bigsp->index_of(g)) {
      throw Error(ErrorCode::HypothesesNotMet, x->name(g) + " is not a point of G_U");
    }
    InducedAlgebra big(bigsp, restrict(d, U));
    auto const     crU = corner(d, *U);
    auto const     ls  = nonzero_members(s, L);

    SplitResult out{{}, {}, 0, big.algebra().dim(), {}, {}, Algebra::zero(), {},
                    Report("technical_split")};
    out.report.set("g", x->name(g));

    auto const gs  = x->tilde_star(g);
    auto const ggs = x->tilde_mul(g, gs);
    std::set<ExtendedElement> left, right;
    for (auto l : ls) {
      auto m = x->tilde_mul(x->tilde_mul(ggs, x->embed(l)), ggs);
      if (m.P.any()) {
        left.insert(m);
      }
    }
    for (auto const& u : U->elements()) {
      auto m = x->tilde_mul(x->tilde_mul(g, u), gs);
      if (m.P.any()) {
        right.insert(m);
      }
    }
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                          std::back_inserter(out.M));

    ElementSet gens = L;
    for (auto e : s.idempotent_list()) {
      if (uprime.test(e)) {
        gens.set(s.mul(s.mul(g.g, e), s.star(g.g)));
      }
    }
    out.Lprime = generate(s, gens);

    std::set<std::size_t> carrier;
    for (auto l : ls) {
      for (auto const& u : U->elements()) {
        auto y = bigsp->index_of(x->tilde_mul(x->tilde_mul(x->embed(l), g), u));
        if (y) {
          carrier.insert(bigsp->class_of[*y]);
        }
      }
    }
    out.carrier.assign(carrier.begin(), carrier.end());
    out.report.set("M", out.M.size());

    if (out.M.empty()) {
      // Only possible when g g* is not in M, i.e. never for a point of G_U;
      // the induced algebra is then the empty function.
      out.theta = SparseMatrix(big.algebra().dim(), 0);
      out.report.add("empty", true);
      return out;
    }

    auto const Lp  = ActingSet::plain(x, out.Lprime);
    auto const Mg  = make_groupoid(x, out.M);
    auto const smsp = compute_GH(Lp, Mg);
    InducedAlgebra small(smsp, restrict(d, Mg));
    auto const     crM = corner(d, *Mg);
    out.source_dim     = small.algebra().dim();
    out.source         = small.algebra().algebra();
    out.report.set("source_dim", out.source_dim);
    out.report.set("target_dim", out.target_dim);

    std::set<ExtendedElement> expected;
    for (auto l : nonzero_members(s, out.Lprime)) {
      if (ggs.P.is_subset_of(x->proj(s.mul(s.star(l), l)))) {
        expected.insert(x->tilde_mul(x->embed(l), ggs));
      }
    }
    out.report.add("points of (L')_M are l g g*",
                   std::vector<ExtendedElement>(expected.begin(), expected.end()) == smsp->points);

    // θ(f)(l g u) = u* g* (f(l g g*)), in corner coordinates of Res_U(D).
    auto formula = [&](InducedAlgebra::Function const& f, std::size_t l,
                       ExtendedElement const& u) -> std::optional<SparseRow> {
      auto y = smsp->index_of(x->tilde_mul(x->embed(l), ggs));
      if (!y) {
        return std::nullopt;
      }
      auto const m   = d.extended_action(x->tilde_mul(x->tilde_star(u), gs));
      auto const val = m.apply(crM.embedding.apply(f[*y]));
      if (!crU.contains(val)) {
        return std::nullopt;
      }
      return crU.coordinates(val);
    };

    std::vector<std::vector<std::pair<std::size_t, ExtendedElement>>> reps_of(bigsp->size());
    for (auto l : ls) {
      for (auto const& u : U->elements()) {
        auto y = bigsp->index_of(x->tilde_mul(x->tilde_mul(x->embed(l), g), u));
        if (y) {
          reps_of[*y].emplace_back(l, u);
        }
      }
    }

    std::vector<SparseRow> cols;
    bool                   defined = true, consistent = true;
    for (std::size_t j = 0; j < out.source_dim; ++j) {
      auto const             f = small.function(small.algebra().algebra().basis(j));
      std::vector<SparseRow> vals(bigsp->classes.size());
      for (auto c : out.carrier) {
        auto const r = bigsp->reps[c];
        auto const v = formula(f, reps_of[r].front().first, reps_of[r].front().second);
        if (!v) {
          defined = false;
          continue;
        }
        vals[c] = *v;
      }
      SparseRow col;
      try {
        col = big.fibers().element(vals);
      } catch (Error const&) {
        defined = false;
      }
      auto const image = big.function(col);
      for (std::size_t y = 0; y < bigsp->size(); ++y) {
        for (auto const& [l, u] : reps_of[y]) {
          auto v = formula(f, l, u);
          consistent = consistent && v && *v == image[y];
        }
      }
      cols.push_back(std::move(col));
    }
    out.theta = SparseMatrix::from_columns(big.algebra().dim(), std::move(cols));
    out.report.add("values lie in Ind", defined);
    out.report.add("independent of the representation l g u", consistent);

    std::size_t carrier_dim = 0;
    for (auto c : out.carrier) {
      carrier_dim += big.fibers().fibers[c].algebra.dim();
    }
    Echelon img(big.algebra().dim());
    for (std::size_t j = 0; j < out.theta.cols(); ++j) {
      img.insert(out.theta.column(j));
    }
    out.report.add("bijective onto the carrier",
                   img.rank() == out.source_dim && carrier_dim == out.source_dim,
                   {{"rank", img.rank()}, {"carrier_dim", carrier_dim}});
    out.report.merge(check_star_hom(out.source, big.algebra().algebra(), out.theta));

    Json fail;
    for (auto l : ls) {
      auto const& al = small.algebra().action(*Lp->index_of_plain(l));
      out.l_action.push_back(al);
      if (fail.is_null() && out.theta * al != big.algebra().plain_action(l) * out.theta) {
        fail = {{"l", s.name(l)}};
      }
    }
    out.report.add("L-equivariant", fail.is_null(), fail);
    return out;
  }

  ResIndSplit res_ind_split(SpectrumPtr x, ElementSet const& hprime, ElementSet const& L,
                            GAlgebra const& d) {
    auto const& s = x->semigroup();
    require_full(d);
    auto const  H  = assoc_groupoid(x, hprime);
    auto const  sp = compute_GH(d.acting_ptr(), H);
    auto const  ls = nonzero_members(s, L);
    InducedAlgebra big(sp, restrict(d, H));

    ResIndSplit out{{}, {}, big.algebra().dim(), Report("res_ind_split")};
    std::vector<SparseMatrix> thetas;
    Algebra                   sum = Algebra::zero();
    std::vector<SparseMatrix> act(ls.size(), SparseMatrix(0, 0));
    std::vector<std::size_t>  owner(sp->classes.size(), 0);
    bool                      partition = true;
    for (auto const& cls : double_classes(*sp, ls)) {
      auto const& g = sp->points[cls.front()];
      out.J.push_back(g);
      auto r = technical_split(x, hprime, L, g, d);
      out.report.merge(r.report, sp->name(cls.front()) + ": ");
      out.summand_dims.push_back(r.source_dim);
      for (auto c : r.carrier) {
        partition = partition && owner[c]++ == 0;
      }
      thetas.push_back(r.theta);
      sum = direct_sum(sum, r.source);
      for (std::size_t i = 0; i < ls.size() && !r.l_action.empty(); ++i) {
        act[i] = block_diag(act[i], r.l_action[i]);
      }
    }
    for (auto n : owner) {
      partition = partition && n == 1;
    }
    std::size_t total = 0;
    for (auto n : out.summand_dims) {
      total += n;
    }
    out.report.set("J", out.J.size());
    out.report.set("dim", out.total_dim);
    out.report.add("carriers partition G_H/H", partition);
    out.report.add("dimension identity", total == out.total_dim,
                   {{"sum", total}, {"dim", out.total_dim}});
    auto const theta = hcat(big.algebra().dim(), thetas);
    out.report.add("assembled map is bijective", is_bijective(theta));
    out.report.merge(check_star_hom(sum, big.algebra().algebra(), theta, "assembled"),
                     "assembled ");
    Json fail;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (act[i].cols() != theta.cols()) {
        continue;
      }
      if (theta * act[i] != big.algebra().plain_action(ls[i]) * theta) {
        fail = {{"l", s.name(ls[i])}};
        break;
      }
    }
    out.report.add("assembled map is L-equivariant", fail.is_null(), fail);
    return out;
  }

  std::vector<std::size_t> invariant_ideal_dims(GAlgebra const& a) {
    auto const& alg = a.algebra();
    if (alg.dim() == 0) {
      return {};
    }
    if (!alg.is_commutative() || !alg.unit()) {
      throw Error(ErrorCode::HypothesesNotMet, "expected a unital commutative algebra");
    }
    std::vector<SparseRow> basis;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      basis.push_back(alg.basis(i));
    }
    auto const        idem = minimal_idempotents(alg, basis, *alg.unit());
    detail::UnionFind uf(idem.size());
    for (auto const& m : a.actions()) {
      for (std::size_t i = 0; i < idem.size(); ++i) {
        auto const img = m.apply(idem[i]);
        for (std::size_t j = 0; j < idem.size(); ++j) {
          if (!alg.mul(img, idem[j]).empty()) {
            uf.unite(i, j);
          }
        }
      }
    }
    std::map<std::size_t, std::size_t> size;
    for (std::size_t i = 0; i < idem.size(); ++i) {
      ++size[uf.find(i)];
    }
    std::vector<std::size_t> out;
    for (auto [root, n] : size) {
      out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  CI0Result ci0_enumerate(SpectrumPtr x, std::vector<ElementSet> const& chain) {
    if (chain.size() > 3) {
      throw Error(ErrorCode::ChainTooLong, "at most 3 subsemigroups are supported");
    }
    if (chain.empty()) {
      throw Error(ErrorCode::MalformedInput, "empty chain");
    }
    auto const& s = x->semigroup();
    auto const  G = ActingSet::plain(x);
    CI0Result   out{{}, 0, {}, {}, Report("ci0_enumerate")};

    auto       H1 = assoc_groupoid(x, chain[0]);
    auto       A1 = trivial_coefficient(G, H1);
    out.terms.push_back({H1, A1});
    GAlgebra iterated = InducedAlgebra(compute_GH(G, H1), A1).algebra();

    for (std::size_t k = 1; k < chain.size(); ++k) {
      auto const Hn = assoc_groupoid(x, chain[k]);
      auto const Lp = ActingSet::plain(x, chain[k]);
      auto const ls = nonzero_members(s, chain[k]);
      std::vector<CI0Term> next;
      for (auto const& term : out.terms) {
        auto const     sp = compute_GH(G, term.H);
        InducedAlgebra b(sp, term.A);
        auto const&    bg = b.algebra();
        std::vector<SparseMatrix> lact;
        for (auto l : ls) {
          lact.push_back(bg.plain_action(l));
        }
        GAlgebra const bl(bg.algebra(), Lp, lact, bg.label());
        auto const     resb = restrict(bl, Hn);
        auto const     crb  = corner(bl, *Hn);
        InducedAlgebra indres(compute_GH(G, Hn), resb);

        std::vector<SparseMatrix> pieces;
        Algebra                   domain = Algebra::zero();
        for (auto const& cls : double_classes(*sp, ls)) {
          std::set<std::size_t> blocks;
          for (auto y : cls) {
            blocks.insert(sp->class_of[y]);
          }
          std::vector<SparseRow> span;
          for (auto c : blocks) {
            for (std::size_t i = 0; i < b.fibers().fibers[c].algebra.dim(); ++i) {
              span.push_back(b.fibers().basis(c, i));
            }
          }
          auto const fsub = subalgebra(bg.algebra(), span, "f");
          auto const fl   = restrict_to_subspace(bl, fsub);
          auto const cf   = corner(fl, *Hn);
          if (cf.algebra.dim() == 0) {
            continue;
          }
          auto a = restrict(fl, Hn);
          // A → Res(B) through F ⊆ B.
          std::vector<SparseRow> cols;
          for (std::size_t j = 0; j < a.dim(); ++j) {
            cols.push_back(crb.coordinates(fsub.embedding.apply(cf.embedding.column(j))));
          }
          auto const incl = SparseMatrix::from_columns(resb.dim(), std::move(cols));
          InducedAlgebra ia(indres.space_ptr(), a);
          pieces.push_back(induce_hom(ia, indres, incl));
          domain = direct_sum(domain, ia.algebra().algebra());
          next.push_back({Hn, std::move(a)});
        }
        auto const whole = hcat(indres.algebra().dim(), pieces);
        out.report.add("step " + std::to_string(k) + " splits Ind Res " + bg.label(),
                       is_bijective(whole)
                           && check_star_hom(domain, indres.algebra().algebra(), whole)
                                  .passed());
      }
      out.terms = std::move(next);
      GAlgebra const resi = restrict(iterated, Hn);
      iterated            = InducedAlgebra(compute_GH(G, Hn), resi).algebra();
    }

    bool commutative = true;
    for (auto const& t : out.terms) {
      InducedAlgebra ind(compute_GH(G, t.H), t.A);
      commutative = commutative && t.A.algebra().is_commutative();
      out.total_dim += ind.algebra().dim();
      for (auto n : invariant_ideal_dims(ind.algebra())) {
        out.ideal_dims.push_back(n);
      }
    }
    std::sort(out.ideal_dims.begin(), out.ideal_dims.end());
    out.oracle_ideal_dims = invariant_ideal_dims(iterated);
    out.report.set("terms", out.terms.size());
    out.report.set("dim", iterated.dim());
    out.report.add("coefficients are commutative", commutative);
    out.report.add("dimensions add up", out.total_dim == iterated.dim(),
                   {{"sum", out.total_dim}, {"dim", iterated.dim()}});
    out.report.add("invariant ideals match", out.ideal_dims == out.oracle_ideal_dims);
    return out;
  }

}  // namespace iskk
