#include "iskk/galgebra.hpp"

#include "iskk/error.hpp"

namespace iskk {

  GAlgebra::GAlgebra(Algebra algebra, ActingPtr acting, std::vector<SparseMatrix> action,
                     std::string label)
      : _algebra(std::move(algebra)),
        _acting(std::move(acting)),
        _action(std::move(action)),
        _label(std::move(label)),
        _cache(std::make_shared<Cache>()) {
    if (_action.size() != _acting->size()) {
      throw Error(ErrorCode::DimensionMismatch, "one action matrix per acting element expected");
    }
    for (auto const& m : _action) {
      if (m.rows() != _algebra.dim() || m.cols() != _algebra.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "action matrix has the wrong shape");
      }
    }
  }

  SparseMatrix GAlgebra::plain_action(std::size_t g) const {
    auto const& s = _acting->semigroup();
    if (s.is_zero(g)) {
      return SparseMatrix(dim(), dim());
    }
    auto k = _acting->index_of_plain(g);
    if (!k) {
      throw Error(ErrorCode::InvalidAction, s.name(g) + " does not act");
    }
    return _action[*k];
  }

  SparseMatrix const& GAlgebra::atom_projection(std::size_t atom) const {
    std::call_once(_cache->once, [this] {
      auto const& idem = _acting->idempotents();
      auto const  id   = SparseMatrix::identity(dim());
      for (auto const& a : _acting->atoms()) {
        SparseMatrix m = id;
        for (std::size_t i = 0; i < idem.size(); ++i) {
          m = a.below[i] ? _action[idem[i]] * m : (id - _action[idem[i]]) * m;
        }
        _cache->atoms.push_back(std::move(m));
      }
    });
    return _cache->atoms[atom];
  }

  SparseMatrix GAlgebra::projection(ProjectionSet const& P) const {
    SparseMatrix out(dim(), dim());
    auto const&  atoms = _acting->atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      auto const& pts = atoms[i].points;
      if (pts.is_subset_of(P)) {
        out = out + atom_projection(i);
      } else if (pts.intersects(P)) {
        throw Error(ErrorCode::InvalidAction,
                    _acting->spectrum().name(P) + " is not a union of atoms of "
                        + _acting->spectrum().name(pts));
      }
    }
    return out;
  }

  SparseMatrix GAlgebra::extended_action(ExtendedElement const& x) const {
    if (x.P.none()) {
      return SparseMatrix(dim(), dim());
    }
    auto const& sp = _acting->spectrum();
    for (std::size_t k = 0; k < _acting->size(); ++k) {
      auto const& el = _acting->element(k);
      if (x.P.is_subset_of(el.P) && sp.canonical(el.g, x.P) == x) {
        return _action[k] * projection(x.P);
      }
    }
    throw Error(ErrorCode::InvalidAction, sp.name(x) + " lies below no acting element");
  }

  Report validate_g_algebra(GAlgebra const& a, bool contracted) {
    Report      r("g-algebra " + a.label());
    auto const& alg = a.algebra();
    auto const& h   = a.acting();
    std::size_t const n = alg.dim();
    r.merge(validate_algebra(alg));

    Json fail;
    for (std::size_t x = 0; x < h.size() && fail.is_null(); ++x) {
      for (std::size_t y = 0; y < h.size(); ++y) {
        auto xy = h.mul(x, y);
        if (contracted && !xy) {
          continue;
        }
        auto expected = xy ? a.action(*xy) : SparseMatrix(n, n);
        if (a.action(x) * a.action(y) != expected) {
          fail = {{"a", h.name(x)}, {"b", h.name(y)}};
          break;
        }
      }
    }
    r.add(contracted ? "homomorphism on nonzero products" : "homomorphism", fail.is_null(), fail);

    if (h.unit()) {
      r.add("unit acts as identity", a.action(*h.unit()).is_identity(),
            {{"unit", h.name(*h.unit())}});
    }

    fail = nullptr;
    for (auto e : h.idempotents()) {
      auto const& m = a.action(e);
      for (std::size_t i = 0; i < n && fail.is_null(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (alg.mul(m.column(i), alg.basis(j)) != alg.mul(alg.basis(i), m.column(j))) {
            fail = {{"e", h.name(e)}, {"x", alg.name(i)}, {"y", alg.name(j)}};
            break;
          }
        }
      }
      if (!fail.is_null()) {
        break;
      }
    }
    r.add("idempotents act centrally", fail.is_null(), fail);

    fail = nullptr;
    for (std::size_t k = 0; k < h.size() && fail.is_null(); ++k) {
      auto const& m = a.action(k);
      for (std::size_t i = 0; i < n && fail.is_null(); ++i) {
        if (m.apply(alg.star(alg.basis(i))) != alg.star(m.column(i))) {
          fail = {{"g", h.name(k)}, {"x", alg.name(i)}, {"law", "star"}};
          break;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (m.apply(alg.product(i, j)) != alg.mul(m.column(i), m.column(j))) {
            fail = {{"g", h.name(k)}, {"x", alg.name(i)}, {"y", alg.name(j)}, {"law", "product"}};
            break;
          }
        }
      }
    }
    r.add("actions are *-endomorphisms", fail.is_null(), fail);
    return r;
  }

  GAlgebra trivial_action(Algebra a, ActingPtr acting, std::string label) {
    std::vector<SparseMatrix> act(acting->size(), SparseMatrix::identity(a.dim()));
    return GAlgebra(std::move(a), std::move(acting), std::move(act), std::move(label));
  }

  GAlgebra trivial_algebra(ActingPtr acting) {
    return trivial_action(Algebra::scalars(), std::move(acting), "C");
  }

  GAlgebra commutative_algebra(ActingPtr                                            acting,
                               std::vector<std::string>                             points,
                               std::vector<std::vector<std::optional<std::size_t>>> maps,
                               std::string                                          label) {
    std::size_t const n = points.size();
    if (maps.size() != acting->size()) {
      throw Error(ErrorCode::DimensionMismatch, "one partial map per acting element expected");
    }
    std::vector<SparseMatrix> act;
    for (auto const& m : maps) {
      if (m.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "partial map has the wrong size");
      }
      std::vector<SparseRow> cols(n);
      for (std::size_t s = 0; s < n; ++s) {
        if (m[s]) {
          cols[s] = {{*m[s], Rational(1)}};
        }
      }
      act.push_back(SparseMatrix::from_columns(n, std::move(cols)));
    }
    return GAlgebra(Algebra::diagonal(n, std::move(points)), std::move(acting), std::move(act),
                    std::move(label));
  }

  GAlgebra c0x(ActingPtr acting) {
    auto const&              x = acting->spectrum();
    std::vector<std::string> points;
    for (std::size_t c = 0; c < x.size(); ++c) {
      points.push_back("1_" + x.semigroup().name(x.generator(c)));
    }
    std::vector<std::vector<std::optional<std::size_t>>> maps;
    for (auto const& el : acting->elements()) {
      std::vector<std::optional<std::size_t>> m(x.size());
      for (auto c = el.P.find_first(); c != ProjectionSet::npos; c = el.P.find_next(c)) {
        ProjectionSet single = x.empty();
        single.set(c);
        m[c] = x.act_proj(el.g, single).find_first();
      }
      maps.push_back(std::move(m));
    }
    return commutative_algebra(std::move(acting), std::move(points), std::move(maps), "C0(X)");
  }

  GAlgebra point_algebra(ActingPtr acting, std::size_t chi) {
    auto const& x = acting->spectrum();
    auto const  name = x.semigroup().name(x.generator(chi));
    std::vector<std::vector<std::optional<std::size_t>>> maps;
    for (auto const& el : acting->elements()) {
      std::vector<std::optional<std::size_t>> m(1);
      if (el.P.test(chi)) {
        ProjectionSet single = x.empty();
        single.set(chi);
        if (x.act_proj(el.g, single) != single) {
          throw Error(ErrorCode::InvalidAction, "the point " + name + " is moved");
        }
        m[0] = 0;
      }
      maps.push_back(std::move(m));
    }
    return commutative_algebra(std::move(acting), {"1_" + name}, std::move(maps), "C_" + name);
  }

  namespace {
    void require_same_acting(GAlgebra const& a, GAlgebra const& b) {
      if (a.acting_ptr() != b.acting_ptr()
          && a.acting().elements() != b.acting().elements()) {
        throw Error(ErrorCode::MalformedInput, "algebras carry different acting sets");
      }
    }

    // Transports a linear map on A to the quotient, through the chosen
    // complement basis.
    SparseMatrix push_through(Quotient const& q, SparseMatrix const& m) {
      std::vector<SparseRow> cols;
      for (std::size_t c = 0; c < q.map.cols(); ++c) {
        if (!q.ideal.is_pivot(c)) {
          cols.push_back(q.map.apply(m.column(c)));
        }
      }
      return SparseMatrix::from_columns(q.algebra.dim(), std::move(cols));
    }
  }  // namespace

  GAlgebra direct_sum(GAlgebra const& a, GAlgebra const& b) {
    require_same_acting(a, b);
    std::vector<SparseMatrix> act;
    for (std::size_t k = 0; k < a.acting().size(); ++k) {
      act.push_back(block_diag(a.action(k), b.action(k)));
    }
    return GAlgebra(direct_sum(a.algebra(), b.algebra()), a.acting_ptr(), std::move(act),
                    a.label() + "⊕" + b.label());
  }

  GAlgebra tensor(GAlgebra const& a, GAlgebra const& b) {
    require_same_acting(a, b);
    std::vector<SparseMatrix> act;
    for (std::size_t k = 0; k < a.acting().size(); ++k) {
      act.push_back(kron(a.action(k), b.action(k)));
    }
    return GAlgebra(tensor(a.algebra(), b.algebra()), a.acting_ptr(), std::move(act),
                    a.label() + "⊗" + b.label());
  }

  std::vector<SparseRow> balanced_relations(GAlgebra const& a, GAlgebra const& b) {
    require_same_acting(a, b);
    std::size_t const      nb = b.dim();
    std::vector<SparseRow> rel;
    for (auto e : a.acting().idempotents()) {
      auto const& ea = a.action(e);
      auto const& eb = b.action(e);
      for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
          Vec v(a.dim() * nb);
          for (auto const& [r, x] : ea.column(i)) {
            v[r * nb + j] += x;
          }
          for (auto const& [s, y] : eb.column(j)) {
            v[i * nb + s] -= y;
          }
          auto sv = to_sparse(v);
          if (!sv.empty()) {
            rel.push_back(std::move(sv));
          }
        }
      }
    }
    return rel;
  }

  GAlgebra balanced_tensor(GAlgebra const& a, GAlgebra const& b) {
    auto const                full = tensor(a, b);
    auto                      q    = quotient(full.algebra(), balanced_relations(a, b));
    std::vector<SparseMatrix> act;
    for (auto const& m : full.actions()) {
      act.push_back(push_through(q, m));
    }
    return GAlgebra(std::move(q.algebra), a.acting_ptr(), std::move(act),
                    a.label() + "⊗X" + b.label());
  }

  GAlgebra restrict_to_subspace(GAlgebra const& a, Subalgebra const& sub, std::string label) {
    std::vector<SparseMatrix> act;
    for (auto const& m : a.actions()) {
      std::vector<SparseRow> cols;
      for (std::size_t j = 0; j < sub.algebra.dim(); ++j) {
        auto img = m.apply(sub.embedding.column(j));
        if (!sub.contains(img)) {
          throw Error(ErrorCode::InvalidAction, "subspace is not invariant");
        }
        cols.push_back(sub.coordinates(img));
      }
      act.push_back(SparseMatrix::from_columns(sub.algebra.dim(), std::move(cols)));
    }
    return GAlgebra(sub.algebra, a.acting_ptr(), std::move(act),
                    label.empty() ? a.label() : std::move(label));
  }

  std::pair<GAlgebra, GAlgebra> cutdown(GAlgebra const& a, std::size_t p) {
    auto const& h = a.acting();
    if (h.mul(p, p) != p) {
      throw Error(ErrorCode::NotIdempotent, h.name(p) + " is not an idempotent");
    }
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h.mul(k, p) != h.mul(p, k)) {
        throw Error(ErrorCode::NotCentral, h.name(p) + " does not commute with " + h.name(k));
      }
    }
    auto const& ap  = a.action(p);
    auto const  rest = SparseMatrix::identity(a.dim()) - ap;
    if (ap * ap != ap) {
      throw Error(ErrorCode::NotCentral, "action of " + h.name(p) + " is not a projection");
    }
    auto top    = subalgebra(a.algebra(), nonzero_columns(ap), "p");
    auto bottom = subalgebra(a.algebra(), nonzero_columns(rest), "q");
    return {restrict_to_subspace(a, top, "p" + a.label()),
            restrict_to_subspace(a, bottom, "(1-p)" + a.label())};
  }

  Subalgebra corner(GAlgebra const& a, ActingSet const& h) {
    return subalgebra(a.algebra(), nonzero_columns(a.projection(h.support())), "r");
  }

  GAlgebra restrict(GAlgebra const& a, ActingPtr h) {
    auto                      cr = corner(a, *h);
    std::vector<SparseMatrix> act;
    for (auto const& el : h->elements()) {
      auto const             m = a.extended_action(el);
      std::vector<SparseRow> cols;
      for (std::size_t j = 0; j < cr.algebra.dim(); ++j) {
        auto img = m.apply(cr.embedding.column(j));
        if (!cr.contains(img)) {
          throw Error(ErrorCode::InvalidAction, "corner is not invariant");
        }
        cols.push_back(cr.coordinates(img));
      }
      act.push_back(SparseMatrix::from_columns(cr.algebra.dim(), std::move(cols)));
    }
    return GAlgebra(std::move(cr.algebra), std::move(h), std::move(act),
                    "Res(" + a.label() + ")");
  }

  Report check_star_hom(Algebra const& a, Algebra const& b, SparseMatrix const& f,
                        std::string const& title) {
    Report r(title);
    if (f.rows() != b.dim() || f.cols() != a.dim()) {
      r.add("shape", false, {{"rows", f.rows()}, {"cols", f.cols()}});
      return r;
    }
    Json fail;
    for (std::size_t i = 0; i < a.dim() && fail.is_null(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        if (f.apply(a.product(i, j)) != b.mul(f.column(i), f.column(j))) {
          fail = {{"x", a.name(i)}, {"y", a.name(j)}};
          break;
        }
      }
    }
    r.add("multiplicative", fail.is_null(), fail);
    fail = nullptr;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (f.apply(a.star(a.basis(i))) != b.star(f.column(i))) {
        fail = {{"x", a.name(i)}};
        break;
      }
    }
    r.add("star-preserving", fail.is_null(), fail);
    return r;
  }

  Report check_equivariant_hom(GAlgebra const& a, GAlgebra const& b, SparseMatrix const& f,
                               std::string const& title) {
    Report r = check_star_hom(a.algebra(), b.algebra(), f, title);
    require_same_acting(a, b);
    Json fail;
    for (std::size_t k = 0; k < a.acting().size(); ++k) {
      if (f * a.action(k) != b.action(k) * f) {
        fail = {{"g", a.acting().name(k)}};
        break;
      }
    }
    r.add("equivariant", fail.is_null(), fail);
    return r;
  }

  bool is_bijective(SparseMatrix const& f) {
    if (f.rows() != f.cols()) {
      return false;
    }
    Echelon e(f.rows());
    for (std::size_t j = 0; j < f.cols(); ++j) {
      e.insert(f.column(j));
    }
    return e.rank() == f.rows();
  }

}  // namespace iskk
