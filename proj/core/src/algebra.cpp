#include "iskk/algebra.hpp"

#include "iskk/error.hpp"

#include <algorithm>

namespace iskk {

  namespace {

    // Dense scratch vector that remembers which slots were touched.
    class Accumulator {
     public:
      explicit Accumulator(std::size_t n) : _v(n), _seen(n, false) {}

      void add(Rational const& s, SparseRow const& r) {
        for (auto const& [i, x] : r) {
          if (!_seen[i]) {
            _seen[i] = true;
            _touched.push_back(i);
          }
          _v[i] += s * x;
        }
      }

      SparseRow take() {
        std::sort(_touched.begin(), _touched.end());
        SparseRow out;
        for (auto i : _touched) {
          if (sgn(_v[i]) != 0) {
            out.emplace_back(i, _v[i]);
          }
          _v[i]    = 0;
          _seen[i] = false;
        }
        _touched.clear();
        return out;
      }

     private:
      Vec                      _v;
      std::vector<bool>        _seen;
      std::vector<std::size_t> _touched;
    };

    std::vector<std::string> default_names(std::string const& prefix, std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(prefix + std::to_string(i));
      }
      return out;
    }

  }  // namespace

  Algebra::Algebra(std::vector<std::string>            names,
                   std::vector<std::vector<SparseRow>> products,
                   SparseMatrix                        star)
      : _names(std::move(names)), _products(std::move(products)), _star(std::move(star)) {
    std::size_t const n = _names.size();
    if (_products.size() != n || _star.rows() != n || _star.cols() != n) {
      throw Error(ErrorCode::DimensionMismatch, "algebra data sizes disagree");
    }
    for (auto const& row : _products) {
      if (row.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "structure constant table is not square");
      }
      for (auto const& p : row) {
        if (!p.empty() && p.back().first >= n) {
          throw Error(ErrorCode::DimensionMismatch, "structure constant out of range");
        }
      }
    }
    compute_unit();
  }

  void Algebra::compute_unit() {
    std::size_t const n = dim();
    if (n == 0) {
      _unit = SparseRow{};
      return;
    }
    // Unknown u = Σ u_k e_k with u e_i = e_i = e_i u. One equation per
    // (side, i, output coordinate j); augmented column n holds the target.
    std::map<std::pair<std::size_t, std::size_t>, SparseRow> left, right;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (auto const& [j, c] : _products[k][i]) {
          left[{i, j}].emplace_back(k, c);
        }
        for (auto const& [j, c] : _products[i][k]) {
          right[{i, j}].emplace_back(k, c);
        }
      }
    }
    Echelon sys(n + 1);
    auto    feed = [&](auto& eqs) {
      for (std::size_t i = 0; i < n; ++i) {
        eqs[{i, i}];
      }
      for (auto& [key, row] : eqs) {
        std::sort(row.begin(), row.end(),
                  [](auto const& a, auto const& b) { return a.first < b.first; });
        if (key.first == key.second) {
          row.emplace_back(n, Rational(1));
        }
        sys.insert(row);
      }
    };
    feed(left);
    feed(right);
    if (sys.is_pivot(n)) {
      _unit.reset();
      return;
    }
    // Particular solution: free variables zero, pivots read from the target column.
    SparseRow u;
    for (auto const& r : sys.sparse_basis()) {
      Rational t = entry(r, n);
      if (sgn(t) != 0) {
        u.emplace_back(r.front().first, t);
      }
    }
    _unit = std::move(u);
  }

  Algebra Algebra::zero() {
    return Algebra({}, {}, SparseMatrix(0, 0));
  }

  Algebra Algebra::scalars() {
    return diagonal(1, {"1"});
  }

  Algebra Algebra::diagonal(std::size_t n, std::vector<std::string> names) {
    if (names.empty()) {
      names = default_names("d", n);
    }
    std::vector<std::vector<SparseRow>> p(n, std::vector<SparseRow>(n));
    for (std::size_t i = 0; i < n; ++i) {
      p[i][i] = {{i, Rational(1)}};
    }
    return Algebra(std::move(names), std::move(p), SparseMatrix::identity(n));
  }

  Algebra Algebra::matrices(std::size_t n) {
    std::size_t const        d = n * n;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      }
    }
    std::vector<std::vector<SparseRow>> p(d, std::vector<SparseRow>(d));
    std::vector<SparseRow>              star(d);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        star[i * n + j] = {{j * n + i, Rational(1)}};
        for (std::size_t l = 0; l < n; ++l) {
          p[i * n + j][j * n + l] = {{i * n + l, Rational(1)}};
        }
      }
    }
    return Algebra(std::move(names), std::move(p), SparseMatrix::from_columns(d, std::move(star)));
  }

  Algebra Algebra::semigroup_algebra(FiniteInvSgp const& s) {
    std::vector<std::size_t>   basis;
    std::vector<std::optional<std::size_t>> pos(s.size());
    std::vector<std::string>   names;
    for (std::size_t g = 0; g < s.size(); ++g) {
      if (!s.is_zero(g)) {
        pos[g] = basis.size();
        basis.push_back(g);
        names.push_back(s.name(g));
      }
    }
    std::size_t const                   d = basis.size();
    std::vector<std::vector<SparseRow>> p(d, std::vector<SparseRow>(d));
    std::vector<SparseRow>              star(d);
    for (std::size_t a = 0; a < d; ++a) {
      star[a] = {{*pos[s.star(basis[a])], Rational(1)}};
      for (std::size_t b = 0; b < d; ++b) {
        auto ab = s.mul(basis[a], basis[b]);
        if (pos[ab]) {
          p[a][b] = {{*pos[ab], Rational(1)}};
        }
      }
    }
    return Algebra(std::move(names), std::move(p), SparseMatrix::from_columns(d, std::move(star)));
  }

  SparseRow Algebra::mul(SparseRow const& a, SparseRow const& b) const {
    Accumulator acc(dim());
    for (auto const& [i, x] : a) {
      for (auto const& [j, y] : b) {
        acc.add(x * y, _products[i][j]);
      }
    }
    return acc.take();
  }

  Vec Algebra::mul(Vec const& a, Vec const& b) const {
    return to_dense(mul(to_sparse(a), to_sparse(b)), dim());
  }

  bool Algebra::is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = i + 1; j < dim(); ++j) {
        if (_products[i][j] != _products[j][i]) {
          return false;
        }
      }
    }
    return true;
  }

  SparseMatrix Algebra::left_mult(SparseRow const& a) const {
    std::vector<SparseRow> cols(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      cols[j] = mul(a, basis(j));
    }
    return SparseMatrix::from_columns(dim(), std::move(cols));
  }

  SparseMatrix Algebra::right_mult(SparseRow const& a) const {
    std::vector<SparseRow> cols(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      cols[j] = mul(basis(j), a);
    }
    return SparseMatrix::from_columns(dim(), std::move(cols));
  }

  bool Algebra::is_central(SparseRow const& a) const {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (mul(a, basis(j)) != mul(basis(j), a)) {
        return false;
      }
    }
    return true;
  }

  namespace {
    SparseRow shift(SparseRow r, std::size_t by) {
      for (auto& [i, x] : r) {
        i += by;
      }
      return r;
    }
  }  // namespace

  Algebra direct_sum(Algebra const& a, Algebra const& b) {
    std::size_t const                   n = a.dim() + b.dim();
    std::vector<std::string>            names;
    std::vector<std::vector<SparseRow>> p(n, std::vector<SparseRow>(n));
    std::vector<SparseRow>              star(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      names.push_back(a.name(i) + "⊕0");
      star[i] = a.star_matrix().column(i);
      for (std::size_t j = 0; j < a.dim(); ++j) {
        p[i][j] = a.product(i, j);
      }
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
      names.push_back("0⊕" + b.name(i));
      star[a.dim() + i] = shift(b.star_matrix().column(i), a.dim());
      for (std::size_t j = 0; j < b.dim(); ++j) {
        p[a.dim() + i][a.dim() + j] = shift(b.product(i, j), a.dim());
      }
    }
    return Algebra(std::move(names), std::move(p), SparseMatrix::from_columns(n, std::move(star)));
  }

  namespace {
    SparseRow outer(SparseRow const& x, SparseRow const& y, std::size_t nb) {
      SparseRow out;
      for (auto const& [i, a] : x) {
        for (auto const& [j, b] : y) {
          out.emplace_back(i * nb + j, a * b);
        }
      }
      return out;
    }
  }  // namespace

  Algebra tensor(Algebra const& a, Algebra const& b) {
    std::size_t const                   nb = b.dim(), n = a.dim() * nb;
    std::vector<std::string>            names;
    std::vector<std::vector<SparseRow>> p(n, std::vector<SparseRow>(n));
    std::vector<SparseRow>              star(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t k = 0; k < nb; ++k) {
        std::size_t const x = i * nb + k;
        names.push_back(a.name(i) + "⊗" + b.name(k));
        star[x] = outer(a.star_matrix().column(i), b.star_matrix().column(k), nb);
        for (std::size_t j = 0; j < a.dim(); ++j) {
          for (std::size_t l = 0; l < nb; ++l) {
            p[x][j * nb + l] = outer(a.product(i, j), b.product(k, l), nb);
          }
        }
      }
    }
    return Algebra(std::move(names), std::move(p), SparseMatrix::from_columns(n, std::move(star)));
  }

  Report validate_algebra(Algebra const& a) {
    Report            r("algebra");
    std::size_t const n = a.dim();
    Json              fail;
    for (std::size_t i = 0; i < n && fail.is_null(); ++i) {
      for (std::size_t j = 0; j < n && fail.is_null(); ++j) {
        auto const& ij = a.product(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (a.mul(ij, a.basis(k)) != a.mul(a.basis(i), a.product(j, k))) {
            fail = {{"i", a.name(i)}, {"j", a.name(j)}, {"k", a.name(k)}};
            break;
          }
        }
      }
    }
    r.add("associative", fail.is_null(), fail);

    fail = nullptr;
    for (std::size_t i = 0; i < n && fail.is_null(); ++i) {
      if (a.star(a.star(a.basis(i))) != a.basis(i)) {
        fail = {{"i", a.name(i)}};
      }
    }
    r.add("star involutive", fail.is_null(), fail);

    fail = nullptr;
    for (std::size_t i = 0; i < n && fail.is_null(); ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a.star(a.product(i, j)) != a.mul(a.star(a.basis(j)), a.star(a.basis(i)))) {
          fail = {{"i", a.name(i)}, {"j", a.name(j)}};
          break;
        }
      }
    }
    r.add("star anti-multiplicative", fail.is_null(), fail);
    return r;
  }

  SparseRow Subalgebra::coordinates(SparseRow const& a) const {
    return to_sparse(span.coordinates(a));
  }

  Subalgebra subalgebra(Algebra const& a, std::vector<SparseRow> const& spanning,
                        std::string const& prefix) {
    Echelon span(a.dim());
    for (auto const& v : spanning) {
      span.insert(v);
    }
    auto const        basis = span.sparse_basis();
    std::size_t const d     = basis.size();
    std::vector<std::vector<SparseRow>> p(d, std::vector<SparseRow>(d));
    std::vector<SparseRow>              star(d);
    auto coords = [&](SparseRow const& v, char const* what) {
      if (!span.reduce(v).empty()) {
        throw Error(ErrorCode::MalformedInput, std::string("subspace not closed under ") + what);
      }
      return to_sparse(span.coordinates(v));
    };
    for (std::size_t i = 0; i < d; ++i) {
      star[i] = coords(a.star(basis[i]), "star");
      for (std::size_t j = 0; j < d; ++j) {
        p[i][j] = coords(a.mul(basis[i], basis[j]), "product");
      }
    }
    Algebra sub(default_names(prefix, d), std::move(p),
                SparseMatrix::from_columns(d, std::move(star)));
    return {std::move(sub), SparseMatrix::from_columns(a.dim(), basis), std::move(span)};
  }

  Echelon generated_ideal(Algebra const& a, std::vector<SparseRow> const& gens) {
    Echelon                ideal(a.dim());
    std::vector<SparseRow> queue;
    for (auto const& g : gens) {
      if (ideal.insert(g)) {
        queue.push_back(g);
      }
    }
    // Every new vector v contributes b v, v b and v*; the span of all such
    // images is the ideal once nothing new appears.
    while (!queue.empty()) {
      auto v = std::move(queue.back());
      queue.pop_back();
      std::vector<SparseRow> next{a.star(v)};
      for (std::size_t i = 0; i < a.dim(); ++i) {
        next.push_back(a.mul(a.basis(i), v));
        next.push_back(a.mul(v, a.basis(i)));
      }
      for (auto& w : next) {
        if (ideal.insert(w)) {
          queue.push_back(std::move(w));
        }
      }
    }
    return ideal;
  }

  Quotient quotient(Algebra const& a, std::vector<SparseRow> const& gens) {
    Echelon                  ideal = generated_ideal(a, gens);
    std::vector<std::size_t> keep;
    std::vector<std::optional<std::size_t>> pos(a.dim());
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (!ideal.is_pivot(c)) {
        pos[c] = keep.size();
        keep.push_back(c);
      }
    }
    // The class of v is its remainder, which vanishes on pivot columns.
    auto project = [&](SparseRow const& v) {
      SparseRow out;
      for (auto const& [i, x] : ideal.reduce(v)) {
        out.emplace_back(*pos[i], x);
      }
      return out;
    };
    std::size_t const                   d = keep.size();
    std::vector<std::vector<SparseRow>> p(d, std::vector<SparseRow>(d));
    std::vector<SparseRow>              star(d);
    std::vector<std::string>            names;
    for (std::size_t i = 0; i < d; ++i) {
      names.push_back("[" + a.name(keep[i]) + "]");
      star[i] = project(a.star(a.basis(keep[i])));
      for (std::size_t j = 0; j < d; ++j) {
        p[i][j] = project(a.product(keep[i], keep[j]));
      }
    }
    std::vector<SparseRow> map(a.dim());
    for (std::size_t c = 0; c < a.dim(); ++c) {
      map[c] = project(a.basis(c));
    }
    return {Algebra(std::move(names), std::move(p), SparseMatrix::from_columns(d, std::move(star))),
            SparseMatrix::from_columns(d, std::move(map)), std::move(ideal)};
  }

}  // namespace iskk

namespace iskk {

  std::vector<SparseRow> nonzero_columns(SparseMatrix const& m) {
    std::vector<SparseRow> out;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.column(j).empty()) {
        out.push_back(m.column(j));
      }
    }
    return out;
  }

  std::size_t FiberSum::fiber_of(std::size_t basis_index) const {
    auto it = std::upper_bound(offset.begin(), offset.end(), basis_index);
    // Empty fibers share offsets; the last block starting at or before the
    // index is the one that contains it.
    return std::size_t(it - offset.begin()) - 1;
  }

  std::vector<SparseRow> FiberSum::values(SparseRow const& element) const {
    std::vector<SparseRow> out(fibers.size());
    for (auto const& [i, x] : element) {
      auto c = fiber_of(i);
      out[c] = add_scaled(out[c], x, fibers[c].embedding.column(i - offset[c]));
    }
    return out;
  }

  SparseRow FiberSum::element(std::vector<SparseRow> const& vals) const {
    SparseRow out;
    for (std::size_t c = 0; c < fibers.size(); ++c) {
      if (vals[c].empty()) {
        continue;
      }
      if (!fibers[c].contains(vals[c])) {
        throw Error(ErrorCode::MalformedInput,
                    "value leaves fiber " + std::to_string(c));
      }
      for (auto const& [i, x] : fibers[c].coordinates(vals[c])) {
        out.emplace_back(offset[c] + i, x);
      }
    }
    return out;
  }

  FiberSum fiber_sum(Algebra const& ambient, std::vector<std::vector<SparseRow>> const& spans,
                     std::vector<std::string> const& labels) {
    FiberSum                            fs;
    std::vector<std::string>            names;
    std::size_t                         n = 0;
    for (std::size_t c = 0; c < spans.size(); ++c) {
      std::string lab = labels.empty() ? "c" + std::to_string(c) : labels[c];
      fs.fibers.push_back(subalgebra(ambient, spans[c], lab + "."));
      fs.offset.push_back(n);
      n += fs.fibers.back().algebra.dim();
      for (auto const& nm : fs.fibers.back().algebra.names()) {
        names.push_back(nm);
      }
    }
    std::vector<std::vector<SparseRow>> p(n, std::vector<SparseRow>(n));
    std::vector<SparseRow>              star(n);
    for (std::size_t c = 0; c < fs.fibers.size(); ++c) {
      auto const& f   = fs.fibers[c].algebra;
      auto const  off = fs.offset[c];
      auto        sh  = [off](SparseRow r) {
        for (auto& [i, x] : r) {
          i += off;
        }
        return r;
      };
      for (std::size_t i = 0; i < f.dim(); ++i) {
        star[off + i] = sh(f.star_matrix().column(i));
        for (std::size_t j = 0; j < f.dim(); ++j) {
          p[off + i][off + j] = sh(f.product(i, j));
        }
      }
    }
    fs.algebra = Algebra(std::move(names), std::move(p), SparseMatrix::from_columns(n, std::move(star)));
    return fs;
  }

  SparseMatrix fiber_map(FiberSum const& from, FiberSum const& to,
                         std::vector<std::optional<BlockMove>> const& moves) {
    std::vector<SparseRow> cols(from.algebra.dim());
    for (std::size_t t = 0; t < moves.size(); ++t) {
      if (!moves[t]) {
        continue;
      }
      auto const& mv  = *moves[t];
      auto const& src = from.fibers[mv.source];
      auto const& dst = to.fibers[t];
      for (std::size_t i = 0; i < src.algebra.dim(); ++i) {
        auto img = mv.map.apply(src.embedding.column(i));
        if (img.empty()) {
          continue;
        }
        if (!dst.contains(img)) {
          throw Error(ErrorCode::InvalidAction,
                      "block map leaves fiber " + std::to_string(t));
        }
        auto& col = cols[from.offset[mv.source] + i];
        for (auto const& [k, x] : dst.coordinates(img)) {
          col.emplace_back(to.offset[t] + k, x);
        }
      }
    }
    for (auto& c : cols) {
      std::sort(c.begin(), c.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
    }
    return SparseMatrix::from_columns(to.algebra.dim(), std::move(cols));
  }

}  // namespace iskk
