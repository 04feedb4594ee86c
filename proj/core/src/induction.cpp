#include "iskk/induction.hpp"

#include "iskk/error.hpp"
#include "union_find.hpp"

#include <set>

namespace iskk {

  namespace {
    ActingPtr groupoid_from(SpectrumPtr x, std::set<ExtendedElement> const& els) {
      std::vector<ExtendedElement>            elements(els.begin(), els.end());
      std::vector<std::string>                names;
      for (auto const& e : elements) {
        names.push_back(x->name(e));
      }
      std::vector<std::optional<std::size_t>> plain(elements.size());
      return std::make_shared<ActingSet const>(std::move(x), std::move(elements), std::move(names),
                                               std::move(plain), true);
    }

    SparseRow shift(SparseRow r, std::size_t by) {
      for (auto& [i, v] : r) {
        i += by;
      }
      return r;
    }
  }  // namespace

  ActingPtr assoc_groupoid(SpectrumPtr x, ElementSet const& hprime) {
    auto const& s = x->semigroup();
    if (!is_subsemigroup(s, hprime)) {
      throw Error(ErrorCode::NotSubsemigroup, "H' is not a unital subsemigroup");
    }
    std::vector<std::size_t> idem;
    for (auto e : members(hprime)) {
      if (s.is_idempotent(e)) {
        idem.push_back(e);
      }
    }
    std::map<std::vector<bool>, ProjectionSet> atoms;
    for (std::size_t c = 0; c < x->size(); ++c) {
      std::vector<bool> sig;
      for (auto e : idem) {
        sig.push_back(x->eval(c, e));
      }
      auto [it, fresh] = atoms.emplace(sig, x->empty());
      it->second.set(c);
    }
    std::set<ExtendedElement> els;
    for (auto h : members(hprime)) {
      auto const dom = x->proj(s.mul(s.star(h), h));
      for (auto const& [sig, a] : atoms) {
        if (a.is_subset_of(dom)) {
          els.insert(x->canonical(h, a));
        }
      }
    }
    return groupoid_from(std::move(x), els);
  }

  ActingPtr make_groupoid(SpectrumPtr x, std::vector<ExtendedElement> elements) {
    std::set<ExtendedElement> els;
    for (auto& e : elements) {
      if (e.P.any()) {
        els.insert(x->canonical(e.g, e.P));
      }
    }
    auto h = groupoid_from(std::move(x), els);
    for (std::size_t a = 0; a < h->size(); ++a) {
      auto const& sp = h->spectrum();
      auto const  s  = h->index_of(sp.source(h->element(a)));
      auto const  r  = h->index_of(sp.range(h->element(a)));
      if (!s || !r) {
        throw Error(ErrorCode::NotSubsemigroup, h->name(a) + " has a unit outside the set");
      }
    }
    return h;
  }

  std::optional<std::size_t> GHSpace::index_of(ExtendedElement const& a) const {
    auto it = index.find(a);
    if (it == index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::string GHSpace::name(std::size_t point) const {
    return K->spectrum().name(points[point]);
  }

  GHPtr compute_GH(ActingPtr K, ActingPtr H) {
    auto const& x  = K->spectrum();
    auto        gh = std::make_shared<GHSpace>();
    gh->K          = K;
    gh->H          = H;
    std::set<ExtendedElement> pts;
    for (auto const& k : K->elements()) {
      for (auto u : H->idempotents()) {
        auto const& pu = H->element(u).P;
        if (pu.is_subset_of(k.P)) {
          pts.insert(x.canonical(k.g, pu));
        }
      }
    }
    gh->points.assign(pts.begin(), pts.end());
    std::size_t const n = gh->points.size();
    for (std::size_t i = 0; i < n; ++i) {
      gh->index.emplace(gh->points[i], i);
    }
    gh->source.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      bool found = false;
      for (auto u : H->idempotents()) {
        if (H->element(u).P == gh->points[i].P) {
          gh->source[i] = u;
          found         = true;
        }
      }
      if (!found) {
        throw Error(ErrorCode::HypothesesNotMet, gh->name(i) + " has no unit of H as source");
      }
    }

    detail::UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto const& t : H->elements()) {
        auto z = x.tilde_mul(gh->points[i], t);
        if (z.P.none()) {
          continue;
        }
        auto j = gh->index_of(z);
        if (!j) {
          throw Error(ErrorCode::HypothesesNotMet,
                      gh->name(i) + "·" + x.name(t) + " leaves K_H; H must lie below K");
        }
        uf.unite(i, *j);
      }
    }
    gh->class_of.assign(n, 0);
    std::map<std::size_t, std::size_t> class_of_root;
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, fresh] = class_of_root.emplace(uf.find(i), gh->classes.size());
      if (fresh) {
        gh->classes.emplace_back();
        gh->reps.push_back(i);
      }
      gh->class_of[i] = it->second;
      gh->classes[it->second].push_back(i);
    }
    gh->from_rep.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      auto const& rep   = gh->points[gh->reps[gh->class_of[i]]];
      bool        found = false;
      for (std::size_t t = 0; t < H->size() && !found; ++t) {
        if (x.tilde_mul(rep, H->element(t)) == gh->points[i]) {
          gh->from_rep[i] = t;
          found           = true;
        }
      }
      if (!found) {
        throw Error(ErrorCode::HypothesesNotMet, gh->name(i) + " is not a translate of its representative");
      }
    }
    return gh;
  }

  namespace {
    FiberSum induced_fibers(GHSpace const& sp, GAlgebra const& coeff) {
      auto const& h = *sp.H;
      if (coeff.acting().elements() != h.elements()) {
        throw Error(ErrorCode::InvalidCoefficientAlgebra, "coefficient algebra is not an H-algebra");
      }
      auto rep = validate_g_algebra(coeff);
      if (!rep.passed()) {
        throw Error(ErrorCode::InvalidCoefficientAlgebra,
                    coeff.label() + " fails " + rep.first_failure()->name);
      }
      SparseMatrix units(coeff.dim(), coeff.dim());
      for (auto u : h.idempotents()) {
        units = units + coeff.action(u);
      }
      if (!units.is_identity()) {
        throw Error(ErrorCode::InvalidCoefficientAlgebra,
                    "units of H do not act as a partition of unity on " + coeff.label());
      }
      std::vector<std::vector<SparseRow>> spans;
      std::vector<std::string>            labels;
      for (auto r : sp.reps) {
        spans.push_back(nonzero_columns(coeff.action(sp.source[r])));
        labels.push_back(sp.name(r));
      }
      return fiber_sum(coeff.algebra(), spans, labels);
    }

    GAlgebra induced_action(GHSpace const& sp, GAlgebra const& coeff, FiberSum const& fibers) {
      auto const&               K = *sp.K;
      auto const&               x = K.spectrum();
      std::vector<SparseMatrix> act;
      for (std::size_t k = 0; k < K.size(); ++k) {
        auto const&                           kstar = K.element(K.star(k));
        std::vector<std::optional<BlockMove>> moves(sp.classes.size());
        for (std::size_t c = 0; c < sp.classes.size(); ++c) {
          auto z = sp.index_of(x.tilde_mul(kstar, sp.points[sp.reps[c]]));
          if (z) {
            auto t   = sp.from_rep[*z];
            moves[c] = BlockMove{sp.class_of[*z], coeff.action(sp.H->star(t))};
          }
        }
        act.push_back(fiber_map(fibers, fibers, moves));
      }
      return GAlgebra(fibers.algebra, sp.K, std::move(act), "Ind(" + coeff.label() + ")");
    }
  }  // namespace

  InducedAlgebra::InducedAlgebra(GHPtr space, GAlgebra coeff)
      : _space(std::move(space)),
        _coeff(std::move(coeff)),
        _fibers(induced_fibers(*_space, _coeff)),
        _algebra(induced_action(*_space, _coeff, _fibers)) {}

  InducedAlgebra::Function InducedAlgebra::function(SparseRow const& element) const {
    auto const vals = _fibers.values(element);
    Function   f(_space->size());
    for (std::size_t y = 0; y < f.size(); ++y) {
      auto t = _space->H->star(_space->from_rep[y]);
      f[y]   = _coeff.action(t).apply(vals[_space->class_of[y]]);
    }
    return f;
  }

  SparseRow InducedAlgebra::element(Function const& f) const {
    std::vector<SparseRow> vals;
    for (auto r : _space->reps) {
      vals.push_back(f[r]);
    }
    return _fibers.element(vals);
  }

  bool InducedAlgebra::is_induced(Function const& f) const {
    auto const& sp = *_space;
    auto const& x  = sp.K->spectrum();
    if (f.size() != sp.size()) {
      return false;
    }
    for (std::size_t y = 0; y < sp.size(); ++y) {
      if (_coeff.action(sp.source[y]).apply(f[y]) != f[y]) {
        return false;
      }
      for (std::size_t t = 0; t < sp.H->size(); ++t) {
        auto z = sp.index_of(x.tilde_mul(sp.points[y], sp.H->element(t)));
        if (z && f[*z] != _coeff.action(sp.H->star(t)).apply(f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  SparseMatrix induce_hom(InducedAlgebra const& a, InducedAlgebra const& b, SparseMatrix const& f) {
    if (a.space().points != b.space().points || a.space().H->elements() != b.space().H->elements()) {
      throw Error(ErrorCode::MalformedInput, "induced algebras over different spaces");
    }
    auto const& ca = a.coefficient();
    auto const& cb = b.coefficient();
    if (f.rows() != cb.dim() || f.cols() != ca.dim()) {
      throw Error(ErrorCode::DimensionMismatch, "homomorphism shape does not match coefficients");
    }
    for (std::size_t t = 0; t < a.space().H->size(); ++t) {
      if (f * ca.action(t) != cb.action(t) * f) {
        throw Error(ErrorCode::NotEquivariant, "fails at " + a.space().H->name(t));
      }
    }
    std::vector<std::optional<BlockMove>> moves;
    for (std::size_t c = 0; c < a.space().classes.size(); ++c) {
      moves.push_back(BlockMove{c, f});
    }
    return fiber_map(a.fibers(), b.fibers(), moves);
  }

  namespace {
    // Block c of C0(G_H/H, B) is the range of r_c r_c* in B.
    FiberSum orbit_fibers(GHSpace const& sp, GAlgebra const& b) {
      auto const&                         x = sp.K->spectrum();
      std::vector<std::vector<SparseRow>> spans;
      std::vector<std::string>            labels;
      for (auto r : sp.reps) {
        spans.push_back(nonzero_columns(b.extended_action(x.range(sp.points[r]))));
        labels.push_back(sp.name(r));
      }
      return fiber_sum(b.algebra(), spans, labels);
    }

    GAlgebra orbit_algebra(GHSpace const& sp, GAlgebra const& b, FiberSum const& fibers) {
      auto const&               G = *sp.K;
      auto const&               x = G.spectrum();
      std::vector<SparseMatrix> act;
      for (std::size_t k = 0; k < G.size(); ++k) {
        auto const&                           kstar = G.element(G.star(k));
        std::vector<std::optional<BlockMove>> moves(sp.classes.size());
        for (std::size_t c = 0; c < sp.classes.size(); ++c) {
          auto z = sp.index_of(x.tilde_mul(kstar, sp.points[sp.reps[c]]));
          if (z) {
            moves[c] = BlockMove{sp.class_of[*z], b.action(k)};
          }
        }
        act.push_back(fiber_map(fibers, fibers, moves));
      }
      return GAlgebra(fibers.algebra, sp.K, std::move(act), "C0(G_H/H," + b.label() + ")");
    }

    // id ⊗ r_c r_c* on the block of Ind(A) ⊗ B over class c.
    SparseMatrix tensor_projection(InducedAlgebra const& ia, GAlgebra const& b) {
      auto const&            sp = ia.space();
      auto const&            x  = sp.K->spectrum();
      std::size_t const      nb = b.dim();
      std::vector<SparseMatrix> ranges;
      for (auto r : sp.reps) {
        ranges.push_back(b.extended_action(x.range(sp.points[r])));
      }
      std::vector<SparseRow> cols;
      for (std::size_t i = 0; i < ia.algebra().dim(); ++i) {
        auto const& pc = ranges[ia.fibers().fiber_of(i)];
        for (std::size_t k = 0; k < nb; ++k) {
          cols.push_back(shift(pc.column(k), i * nb));
        }
      }
      return SparseMatrix::from_columns(ia.algebra().dim() * nb, std::move(cols));
    }

    std::size_t column_rank(SparseMatrix const& m) {
      Echelon e(m.rows());
      for (std::size_t j = 0; j < m.cols(); ++j) {
        e.insert(m.column(j));
      }
      return e.rank();
    }
  }  // namespace

  ThetaResult theta_res_ind(ActingPtr G, ActingPtr H, GAlgebra const& b) {
    ThetaResult out{Report("theta_res_ind"), {}, 0, 0};
    auto const  res   = restrict(b, H);
    auto const  cr    = corner(b, *H);
    auto        space = compute_GH(G, H);
    InducedAlgebra ind(space, res);
    auto const&    sp     = *space;
    auto const     fibers = orbit_fibers(sp, b);
    auto const     target = orbit_algebra(sp, b, fibers);

    std::vector<std::optional<BlockMove>> moves;
    for (std::size_t c = 0; c < sp.classes.size(); ++c) {
      moves.push_back(BlockMove{c, b.extended_action(sp.points[sp.reps[c]]) * cr.embedding});
    }
    out.source_dim = ind.algebra().dim();
    out.target_dim = target.dim();
    out.report.set("source_dim", out.source_dim);
    out.report.set("target_dim", out.target_dim);
    out.report.set("classes", sp.classes.size());
    try {
      out.map = fiber_map(ind.fibers(), fibers, moves);
    } catch (Error const& e) {
      out.report.add("maps into the target", false, {{"error", e.what()}});
      return out;
    }
    out.report.add("bijective", is_bijective(out.map));
    out.report.merge(check_equivariant_hom(ind.algebra(), target, out.map));
    out.report.add("target is a G-algebra", validate_g_algebra(target).passed());
    return out;
  }

  TensorDecomposition central_decomp_tensor(ActingPtr G, ActingPtr H, GAlgebra const& a,
                                            GAlgebra const& b) {
    InducedAlgebra ia(compute_GH(G, H), a);
    auto           t = tensor(ia.algebra(), b);
    auto           p = tensor_projection(ia, b);
    Report         rep("central_decomp_tensor");
    rep.add("idempotent", p * p == p);
    auto const& alg = t.algebra();
    Json        fail;
    for (std::size_t i = 0; i < alg.dim() && fail.is_null(); ++i) {
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        auto const pxy = p.apply(alg.product(i, j));
        if (pxy != alg.mul(alg.basis(i), p.column(j)) || pxy != alg.mul(p.column(i), alg.basis(j))) {
          fail = {{"x", alg.name(i)}, {"y", alg.name(j)}};
          break;
        }
      }
    }
    rep.add("central", fail.is_null(), fail);
    fail = nullptr;
    for (std::size_t k = 0; k < t.acting().size(); ++k) {
      if (p * t.action(k) != t.action(k) * p) {
        fail = {{"g", t.acting().name(k)}};
        break;
      }
    }
    rep.add("invariant", fail.is_null(), fail);
    std::size_t const rk = column_rank(p);
    std::size_t const n  = t.dim();
    rep.set("corner_dim", rk);
    rep.set("complement_dim", n - rk);
    rep.set("tensor_dim", n);
    return TensorDecomposition{std::move(t), std::move(p), rk, n - rk, std::move(rep)};
  }

  ThetaResult theta_res_ind_tensor(ActingPtr G, ActingPtr H, GAlgebra const& a,
                                   GAlgebra const& b) {
    ThetaResult out{Report("theta_res_ind_tensor"), {}, 0, 0};
    auto const  res   = restrict(b, H);
    auto const  cr    = corner(b, *H);
    auto        space = compute_GH(G, H);
    auto const& sp    = *space;

    auto const full = tensor(a.algebra(), res.algebra());
    auto const q    = quotient(full, balanced_relations(a, res));
    std::vector<std::size_t> lift;
    for (std::size_t c = 0; c < full.dim(); ++c) {
      if (!q.ideal.is_pivot(c)) {
        lift.push_back(c);
      }
    }
    InducedAlgebra dom(space, balanced_tensor(a, res));
    InducedAlgebra ia(space, a);
    auto const     t = tensor(ia.algebra(), b);
    auto const     p = tensor_projection(ia, b);
    auto const     pc = subalgebra(t.algebra(), nonzero_columns(p), "p");
    auto const     target = restrict_to_subspace(t, pc, "p(" + t.label() + ")");

    // a ⊗ r ↦ (a at r_c) ⊗ r_c(r), one map per class.
    std::vector<SparseMatrix> per_class;
    bool                      well_defined = true;
    for (std::size_t c = 0; c < sp.classes.size(); ++c) {
      auto const             rep = sp.points[sp.reps[c]];
      auto const&            ap  = a.action(sp.source[sp.reps[c]]);
      auto const&            fib = ia.fibers().fibers[c];
      std::vector<SparseRow> cols;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        cols.push_back(shift(fib.coordinates(ap.column(i)), ia.fibers().offset[c]));
      }
      auto const lc = SparseMatrix::from_columns(ia.algebra().dim(), std::move(cols));
      per_class.push_back(kron(lc, b.extended_action(rep) * cr.embedding));
      for (auto const& v : q.ideal.sparse_basis()) {
        well_defined = well_defined && per_class.back().apply(v).empty();
      }
    }
    out.report.add("well-defined on the balanced tensor", well_defined);

    std::vector<SparseRow> cols;
    bool                   into = true;
    for (std::size_t j = 0; j < dom.algebra().dim(); ++j) {
      auto const c = dom.fibers().fiber_of(j);
      auto const v = dom.fibers().fibers[c].embedding.column(j - dom.fibers().offset[c]);
      SparseRow  lifted;
      for (auto const& [k, s] : v) {
        lifted.emplace_back(lift[k], s);
      }
      auto img = per_class[c].apply(lifted);
      if (!pc.contains(img)) {
        into = false;
        cols.emplace_back();
        continue;
      }
      cols.push_back(pc.coordinates(img));
    }
    out.report.add("maps into the corner", into);
    out.map        = SparseMatrix::from_columns(target.dim(), std::move(cols));
    out.source_dim = dom.algebra().dim();
    out.target_dim = target.dim();
    out.report.set("source_dim", out.source_dim);
    out.report.set("target_dim", out.target_dim);
    out.report.set("tensor_dim", t.dim());
    out.report.add("bijective", is_bijective(out.map));
    out.report.merge(check_equivariant_hom(dom.algebra(), target, out.map));
    return out;
  }

  GAlgebra trivial_coefficient(ActingPtr G, ActingPtr H) {
    if (!G->semigroup().zero()) {
      return restrict(trivial_algebra(G), std::move(H));
    }
    if (H->idempotents().size() != 1) {
      throw Error(ErrorCode::HypothesesNotMet,
                  "the trivial algebra needs a zero-free semigroup or a single unit");
    }
    return trivial_action(Algebra::scalars(), std::move(H), "C");
  }

}  // namespace iskk
