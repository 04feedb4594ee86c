#include "iskk/linalg.hpp"

#include "iskk/error.hpp"

#include <algorithm>

namespace iskk {

  SparseRow to_sparse(Vec const& v) {
    SparseRow r;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) != 0) {
        r.emplace_back(i, v[i]);
      }
    }
    return r;
  }

  Vec to_dense(SparseRow const& r, std::size_t n) {
    Vec v(n);
    for (auto const& [i, x] : r) {
      v[i] = x;
    }
    return v;
  }

  bool is_zero(Vec const& v) {
    return std::all_of(v.begin(), v.end(), [](Rational const& x) { return sgn(x) == 0; });
  }

  Vec zero_vec(std::size_t n) {
    return Vec(n);
  }

  Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
  }

  void axpy(Vec& y, Rational const& a, Vec const& x) {
    if (sgn(a) == 0) {
      return;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (sgn(x[i]) != 0) {
        y[i] += a * x[i];
      }
    }
  }

  void axpy(Vec& y, Rational const& a, SparseRow const& x) {
    if (sgn(a) == 0) {
      return;
    }
    for (auto const& [i, v] : x) {
      y[i] += a * v;
    }
  }

  SparseRow add_scaled(SparseRow const& a, Rational const& s, SparseRow const& b) {
    if (sgn(s) == 0) {
      return a;
    }
    SparseRow out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
        out.push_back(*ia++);
      } else if (ia == a.end() || ib->first < ia->first) {
        out.emplace_back(ib->first, s * ib->second);
        ++ib;
      } else {
        Rational x = ia->second + s * ib->second;
        if (sgn(x) != 0) {
          out.emplace_back(ia->first, std::move(x));
        }
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  SparseRow scaled(SparseRow const& a, Rational const& s) {
    if (sgn(s) == 0) {
      return {};
    }
    SparseRow out = a;
    for (auto& [i, x] : out) {
      x *= s;
    }
    return out;
  }

  Rational entry(SparseRow const& r, std::size_t i) {
    auto it = std::lower_bound(r.begin(), r.end(), i, [](auto const& p, std::size_t k) {
      return p.first < k;
    });
    if (it != r.end() && it->first == i) {
      return it->second;
    }
    return Rational(0);
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrix
  ////////////////////////////////////////////////////////////////////////

  Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  Matrix Matrix::operator*(Matrix const& that) const {
    if (_cols != that._rows) {
      throw Error(ErrorCode::DimensionMismatch, "matrix product");
    }
    Matrix out(_rows, that._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        Rational const& a = (*this)(i, k);
        if (sgn(a) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < that._cols; ++j) {
          if (sgn(that(k, j)) != 0) {
            out(i, j) += a * that(k, j);
          }
        }
      }
    }
    return out;
  }

  Vec Matrix::operator*(Vec const& v) const {
    if (_cols != v.size()) {
      throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    }
    Vec out(_rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        if (sgn(v[k]) != 0 && sgn((*this)(i, k)) != 0) {
          out[i] += (*this)(i, k) * v[k];
        }
      }
    }
    return out;
  }

  bool Matrix::operator==(Matrix const& that) const {
    return _rows == that._rows && _cols == that._cols && _data == that._data;
  }

  Matrix Matrix::transpose() const {
    Matrix t(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  bool Matrix::is_zero() const {
    return iskk::is_zero(_data);
  }

  ////////////////////////////////////////////////////////////////////////
  // SparseMatrix
  ////////////////////////////////////////////////////////////////////////

  SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      m._col[j] = {{j, Rational(1)}};
    }
    return m;
  }

  SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<SparseRow> cols) {
    SparseMatrix m(rows, cols.size());
    m._col = std::move(cols);
    return m;
  }

  SparseMatrix SparseMatrix::from_dense(Matrix const& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j) {
      for (std::size_t i = 0; i < d.rows(); ++i) {
        if (sgn(d(i, j)) != 0) {
          m._col[j].emplace_back(i, d(i, j));
        }
      }
    }
    return m;
  }

  Vec SparseMatrix::apply(Vec const& v) const {
    if (v.size() != _cols) {
      throw Error(ErrorCode::DimensionMismatch, "sparse apply");
    }
    Vec out(_rows);
    for (std::size_t j = 0; j < _cols; ++j) {
      if (sgn(v[j]) != 0) {
        axpy(out, v[j], _col[j]);
      }
    }
    return out;
  }

  SparseRow SparseMatrix::apply(SparseRow const& v) const {
    SparseRow out;
    for (auto const& [j, x] : v) {
      out = add_scaled(out, x, _col[j]);
    }
    return out;
  }

  SparseMatrix SparseMatrix::operator*(SparseMatrix const& that) const {
    if (_cols != that._rows) {
      throw Error(ErrorCode::DimensionMismatch, "sparse product");
    }
    SparseMatrix out(_rows, that._cols);
    for (std::size_t j = 0; j < that._cols; ++j) {
      out._col[j] = apply(that._col[j]);
    }
    return out;
  }

  SparseMatrix SparseMatrix::operator+(SparseMatrix const& that) const {
    if (_rows != that._rows || _cols != that._cols) {
      throw Error(ErrorCode::DimensionMismatch, "sparse sum");
    }
    SparseMatrix out(_rows, _cols);
    for (std::size_t j = 0; j < _cols; ++j) {
      out._col[j] = add_scaled(_col[j], Rational(1), that._col[j]);
    }
    return out;
  }

  SparseMatrix SparseMatrix::operator-(SparseMatrix const& that) const {
    if (_rows != that._rows || _cols != that._cols) {
      throw Error(ErrorCode::DimensionMismatch, "sparse difference");
    }
    SparseMatrix out(_rows, _cols);
    for (std::size_t j = 0; j < _cols; ++j) {
      out._col[j] = add_scaled(_col[j], Rational(-1), that._col[j]);
    }
    return out;
  }

  bool SparseMatrix::operator==(SparseMatrix const& that) const {
    return _rows == that._rows && _cols == that._cols && _col == that._col;
  }

  SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(_cols, _rows);
    for (std::size_t j = 0; j < _cols; ++j) {
      for (auto const& [i, x] : _col[j]) {
        t._col[i].emplace_back(j, x);
      }
    }
    return t;
  }

  Matrix SparseMatrix::to_dense() const {
    Matrix d(_rows, _cols);
    for (std::size_t j = 0; j < _cols; ++j) {
      for (auto const& [i, x] : _col[j]) {
        d(i, j) = x;
      }
    }
    return d;
  }

  bool SparseMatrix::is_zero() const {
    return std::all_of(_col.begin(), _col.end(), [](SparseRow const& c) { return c.empty(); });
  }

  bool SparseMatrix::is_identity() const {
    if (_rows != _cols) {
      return false;
    }
    for (std::size_t j = 0; j < _cols; ++j) {
      if (_col[j].size() != 1 || _col[j][0].first != j || _col[j][0].second != 1) {
        return false;
      }
    }
    return true;
  }

  std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (auto const& c : _col) {
      n += c.size();
    }
    return n;
  }

  ////////////////////////////////////////////////////////////////////////
  // Echelon
  ////////////////////////////////////////////////////////////////////////

  SparseRow Echelon::reduce(SparseRow row) const {
    if (_rows.empty()) {
      return row;
    }
    // Pivot rows are mutually reduced, so one pass over the original pivot
    // entries clears every pivot column.
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (auto const& [c, x] : row) {
      if (_rows.count(c) != 0) {
        hits.emplace_back(c, x);
      }
    }
    for (auto const& [c, x] : hits) {
      row = add_scaled(row, -x, _rows.at(c));
    }
    return row;
  }

  bool Echelon::insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) {
      return false;
    }
    std::size_t const pivot = row.front().first;
    Rational const    inv   = 1 / row.front().second;
    row                     = scaled(row, inv);
    for (auto& [p, r] : _rows) {
      Rational x = entry(r, pivot);
      if (sgn(x) != 0) {
        r = add_scaled(r, -x, row);
      }
    }
    _rows.emplace(pivot, std::move(row));
    return true;
  }

  Vec Echelon::coordinates(Vec const& v) const {
    Vec c;
    c.reserve(_rows.size());
    for (auto const& [p, r] : _rows) {
      c.push_back(v[p]);
    }
    return c;
  }

  Vec Echelon::coordinates(SparseRow const& v) const {
    Vec  c(_rows.size());
    auto it = _rows.begin();
    std::size_t k = 0;
    for (auto const& [i, x] : v) {
      while (it != _rows.end() && it->first < i) {
        ++it;
        ++k;
      }
      if (it != _rows.end() && it->first == i) {
        c[k] = x;
      }
    }
    return c;
  }

  std::vector<std::size_t> Echelon::pivots() const {
    std::vector<std::size_t> p;
    for (auto const& [c, r] : _rows) {
      p.push_back(c);
    }
    return p;
  }

  std::vector<Vec> Echelon::basis() const {
    std::vector<Vec> b;
    for (auto const& [c, r] : _rows) {
      b.push_back(to_dense(r, _ncols));
    }
    return b;
  }

  std::vector<SparseRow> Echelon::sparse_basis() const {
    std::vector<SparseRow> b;
    for (auto const& [c, r] : _rows) {
      b.push_back(r);
    }
    return b;
  }

  std::vector<Vec> Echelon::nullspace() const {
    std::vector<Vec> out;
    for (std::size_t f = 0; f < _ncols; ++f) {
      if (_rows.count(f) != 0) {
        continue;
      }
      Vec x(_ncols);
      x[f] = 1;
      for (auto const& [p, r] : _rows) {
        Rational v = entry(r, f);
        if (sgn(v) != 0) {
          x[p] = -v;
        }
      }
      out.push_back(std::move(x));
    }
    return out;
  }

  std::size_t rank(Matrix const& m) {
    Echelon e(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      SparseRow r;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (sgn(m(i, j)) != 0) {
          r.emplace_back(j, m(i, j));
        }
      }
      e.insert(std::move(r));
    }
    return e.rank();
  }

  std::vector<Vec> nullspace(Matrix const& m) {
    Echelon e(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      SparseRow r;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (sgn(m(i, j)) != 0) {
          r.emplace_back(j, m(i, j));
        }
      }
      e.insert(std::move(r));
    }
    return e.nullspace();
  }

  std::vector<Vec> span_basis(std::vector<Vec> const& vectors, std::size_t n) {
    Echelon e(n);
    for (auto const& v : vectors) {
      e.insert(v);
    }
    return e.basis();
  }

  std::optional<Matrix> inverse(Matrix const& m) {
    std::size_t const n = m.rows();
    if (m.cols() != n) {
      throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    }
    Matrix a = m;
    Matrix b = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && sgn(a(p, c)) == 0) {
        ++p;
      }
      if (p == n) {
        return std::nullopt;
      }
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(p, j), a(c, j));
          std::swap(b(p, j), b(c, j));
        }
      }
      Rational inv = 1 / a(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(c, j) *= inv;
        b(c, j) *= inv;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || sgn(a(i, c)) == 0) {
          continue;
        }
        Rational f = a(i, c);
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) -= f * a(c, j);
          b(i, j) -= f * b(c, j);
        }
      }
    }
    return b;
  }

  PsdCertificate ldlt_psd(Matrix a) {
    std::size_t const n = a.rows();
    PsdCertificate    cert;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < n; ++i) {
        if (!done[i] && (!best || a(i, i) > a(*best, *best))) {
          best = i;
        }
      }
      std::size_t const p = *best;
      if (sgn(a(p, p)) < 0) {
        cert.psd           = false;
        cert.failing_pivot = p;
        cert.reason        = "negative diagonal " + to_string(a(p, p)) + " at index "
                      + std::to_string(p);
        return cert;
      }
      if (sgn(a(p, p)) == 0) {
        // Every remaining diagonal is zero: PSD forces the remaining block to vanish.
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (!done[i] && !done[j] && sgn(a(i, j)) != 0) {
              cert.psd           = false;
              cert.failing_pivot = i;
              cert.reason        = "zero diagonal with nonzero off-diagonal at ("
                            + std::to_string(i) + "," + std::to_string(j) + ")";
              return cert;
            }
          }
        }
        return cert;
      }
      done[p] = true;
      ++cert.rank;
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i] || sgn(a(i, p)) == 0) {
          continue;
        }
        Rational f = a(i, p) / a(p, p);
        for (std::size_t j = 0; j < n; ++j) {
          if (!done[j] && sgn(a(p, j)) != 0) {
            a(i, j) -= f * a(p, j);
          }
        }
      }
    }
    return cert;
  }

  SparseMatrix block_diag(SparseMatrix const& a, SparseMatrix const& b) {
    std::vector<SparseRow> cols;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      cols.push_back(a.column(j));
    }
    for (std::size_t j = 0; j < b.cols(); ++j) {
      SparseRow c = b.column(j);
      for (auto& [i, x] : c) {
        i += a.rows();
      }
      cols.push_back(std::move(c));
    }
    return SparseMatrix::from_columns(a.rows() + b.rows(), std::move(cols));
  }

  SparseMatrix kron(SparseMatrix const& a, SparseMatrix const& b) {
    std::vector<SparseRow> cols;
    for (std::size_t i = 0; i < a.cols(); ++i) {
      for (std::size_t k = 0; k < b.cols(); ++k) {
        SparseRow c;
        for (auto const& [r, x] : a.column(i)) {
          for (auto const& [s, y] : b.column(k)) {
            c.emplace_back(r * b.rows() + s, x * y);
          }
        }
        cols.push_back(std::move(c));
      }
    }
    return SparseMatrix::from_columns(a.rows() * b.rows(), std::move(cols));
  }

}  // namespace iskk
