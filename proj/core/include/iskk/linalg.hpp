#pragma once

// Exact linear algebra over the rationals: dense vectors, sparse rows and
// column-sparse matrices, an incremental reduced-row-echelon engine, and a
// pivoted LDL^T positive-semidefiniteness certificate.

#include "iskk/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iskk {

  using Vec       = std::vector<Rational>;
  using SparseRow = std::vector<std::pair<std::size_t, Rational>>;  // sorted, no zeros

  SparseRow to_sparse(Vec const& v);
  Vec       to_dense(SparseRow const& r, std::size_t n);
  bool      is_zero(Vec const& v);
  Vec       zero_vec(std::size_t n);
  Vec       unit_vec(std::size_t n, std::size_t i);

  // y += a * x
  void axpy(Vec& y, Rational const& a, Vec const& x);
  void axpy(Vec& y, Rational const& a, SparseRow const& x);

  // a + s * b
  SparseRow add_scaled(SparseRow const& a, Rational const& s, SparseRow const& b);
  SparseRow scaled(SparseRow const& a, Rational const& s);
  Rational  entry(SparseRow const& r, std::size_t i);

  // Dense row-major rational matrix.
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : _rows(rows), _cols(cols), _data(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Rational& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    Rational const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    Matrix operator*(Matrix const& that) const;
    Vec    operator*(Vec const& v) const;
    bool   operator==(Matrix const& that) const;

    Matrix transpose() const;
    bool   is_zero() const;

   private:
    std::size_t _rows = 0;
    std::size_t _cols = 0;
    Vec         _data;
  };

  // Column-sparse rational matrix; the representation used for linear maps
  // between algebras (actions, involutions, homomorphisms).
  class SparseMatrix {
   public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : _rows(rows), _cols(cols), _col(cols) {}

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_columns(std::size_t rows, std::vector<SparseRow> cols);
    static SparseMatrix from_dense(Matrix const& m);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    SparseRow const& column(std::size_t j) const {
      return _col[j];
    }
    void set_column(std::size_t j, SparseRow c) {
      _col[j] = std::move(c);
    }

    Rational at(std::size_t i, std::size_t j) const {
      return entry(_col[j], i);
    }

    Vec       apply(Vec const& v) const;
    SparseRow apply(SparseRow const& v) const;

    SparseMatrix operator*(SparseMatrix const& that) const;
    SparseMatrix operator+(SparseMatrix const& that) const;
    SparseMatrix operator-(SparseMatrix const& that) const;
    bool         operator==(SparseMatrix const& that) const;

    SparseMatrix transpose() const;
    Matrix       to_dense() const;
    bool         is_zero() const;
    bool         is_identity() const;
    std::size_t  nonzeros() const;

   private:
    std::size_t            _rows = 0;
    std::size_t            _cols = 0;
    std::vector<SparseRow> _col;
  };

  // Incrementally maintained reduced row echelon form. Rows are kept fully
  // reduced against each other, so coordinates of a member vector are read
  // off at the pivot columns.
  class Echelon {
   public:
    explicit Echelon(std::size_t ncols = 0) : _ncols(ncols) {}

    std::size_t ncols() const noexcept {
      return _ncols;
    }
    std::size_t rank() const noexcept {
      return _rows.size();
    }

    // Returns true if the rank increased.
    bool insert(SparseRow row);
    bool insert(Vec const& v) {
      return insert(to_sparse(v));
    }

    // Remainder of row modulo the row space (zero iff row is in the span).
    SparseRow reduce(SparseRow row) const;
    bool      contains(Vec const& v) const {
      return reduce(to_sparse(v)).empty();
    }

    // Coordinates w.r.t. basis() of a vector assumed to be in the span.
    Vec coordinates(Vec const& v) const;
    Vec coordinates(SparseRow const& v) const;
    bool is_pivot(std::size_t c) const {
      return _rows.count(c) != 0;
    }

    std::vector<std::size_t> pivots() const;
    std::vector<Vec>         basis() const;  // RREF rows ordered by pivot
    std::vector<SparseRow>   sparse_basis() const;

    // Basis of {x : r.x = 0 for every row r}.
    std::vector<Vec> nullspace() const;

   private:
    std::size_t                      _ncols;
    std::map<std::size_t, SparseRow> _rows;  // pivot column -> row, row[pivot] = 1
  };

  // Block diagonal matrix diag(a, b).
  SparseMatrix block_diag(SparseMatrix const& a, SparseMatrix const& b);
  // Kronecker product; index i * b.rows() + k.
  SparseMatrix kron(SparseMatrix const& a, SparseMatrix const& b);

  std::size_t      rank(Matrix const& m);
  std::vector<Vec> nullspace(Matrix const& m);
  // Column space basis of the given vectors (RREF form).
  std::vector<Vec> span_basis(std::vector<Vec> const& vectors, std::size_t n);
  std::optional<Matrix> inverse(Matrix const& m);

  struct PsdCertificate {
    bool                       psd = true;
    std::size_t                rank = 0;
    std::optional<std::size_t> failing_pivot;
    std::string                reason;
  };

  // Exact symmetric LDL^T with complete (diagonal) pivoting: largest
  // remaining diagonal entry first. Succeeds iff the matrix is PSD.
  PsdCertificate ldlt_psd(Matrix a);

}  // namespace iskk
