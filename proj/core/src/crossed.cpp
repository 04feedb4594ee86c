#include "iskk/crossed.hpp"

#include "iskk/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace iskk {

  CrossedKind parse_crossed_kind(std::string_view text) {
    if (text == "universal") {
      return CrossedKind::universal;
    }
    if (text == "sieben") {
      return CrossedKind::sieben;
    }
    if (text == "groupoid") {
      return CrossedKind::groupoid;
    }
    throw Error(ErrorCode::MalformedInput, "unknown crossed product kind " + std::string(text));
  }

  std::string_view to_string(CrossedKind kind) {
    switch (kind) {
      case CrossedKind::universal: return "universal";
      case CrossedKind::sieben: return "sieben";
      case CrossedKind::groupoid: return "groupoid";
    }
    return "?";
  }

  std::string_view to_string(BlockMethod method) {
    return method == BlockMethod::exact ? "exact" : "numeric";
  }

  namespace {

    SparseRow shifted(Vec const& coords, std::size_t offset, Rational const& s = Rational(1)) {
      SparseRow out;
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) {
          out.emplace_back(offset + i, s * coords[i]);
        }
      }
      return out;
    }

    std::string element_name(Algebra const& a, SparseRow const& v, std::size_t index) {
      if (v.size() == 1 && v.front().second == 1) {
        return a.name(v.front().first);
      }
      return "r" + std::to_string(index);
    }

  }  // namespace

  CrossedProduct crossed(GAlgebra const& a, CrossedKind kind) {
    auto const& h   = a.acting();
    auto const& alg = a.algebra();
    if (kind == CrossedKind::groupoid && !h.is_groupoid()) {
      throw Error(ErrorCode::InvalidAction, "groupoid crossed product over a non-groupoid");
    }
    auto report = validate_g_algebra(a, true);
    if (auto const* f = report.first_failure()) {
      throw Error(ErrorCode::InvalidAction, f->name + " " + f->detail.dump());
    }

    std::size_t const        m = h.size();
    std::vector<Echelon>     range;
    std::vector<std::size_t> offset(m + 1, 0);
    std::vector<std::pair<std::size_t, SparseRow>> basis;  // (g, a)
    std::vector<std::string> names;
    for (std::size_t g = 0; g < m; ++g) {
      auto gg = h.mul(g, h.star(g));
      Echelon e(alg.dim());
      if (gg) {
        for (auto& c : nonzero_columns(a.action(*gg))) {
          e.insert(std::move(c));
        }
      }
      offset[g] = basis.size();
      auto rows = e.sparse_basis();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        names.push_back(element_name(alg, rows[i], i) + "δ" + h.name(g));
        basis.emplace_back(g, std::move(rows[i]));
      }
      range.push_back(std::move(e));
    }
    offset[m] = basis.size();
    std::size_t const n = basis.size();

    std::vector<std::vector<SparseRow>> products(n, std::vector<SparseRow>(n));
    for (std::size_t i = 0; i < n; ++i) {
      auto const& [g, x] = basis[i];
      for (std::size_t j = 0; j < n; ++j) {
        auto const& [k, y] = basis[j];
        auto gk = h.mul(g, k);
        if (!gk) {
          continue;
        }
        auto v = alg.mul(x, a.action(g).apply(y));
        if (!v.empty()) {
          products[i][j] = shifted(range[*gk].coordinates(v), offset[*gk]);
        }
      }
    }
    std::vector<SparseRow> star(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto const& [g, x] = basis[i];
      auto gs = h.star(g);
      star[i] = shifted(range[gs].coordinates(a.action(gs).apply(alg.star(x))), offset[gs]);
    }
    Algebra universal(names, std::move(products), SparseMatrix::from_columns(n, std::move(star)));

    CrossedProduct out{universal, kind, n, {}};
    for (auto const& [g, x] : basis) {
      out.acting_of.push_back(g);
    }
    if (kind != CrossedKind::sieben) {
      return out;
    }

    std::vector<SparseRow> gens;
    for (auto e : h.idempotents()) {
      for (auto f : h.idempotents()) {
        if (e == f || h.mul(e, f) != e) {
          continue;
        }
        for (std::size_t i = offset[e]; i < offset[e + 1]; ++i) {
          auto const& x = basis[i].second;
          SparseRow   lhs{{i, Rational(1)}};
          gens.push_back(add_scaled(lhs, Rational(-1), shifted(range[f].coordinates(x), offset[f])));
        }
      }
    }
    out.algebra = quotient(universal, gens).algebra;
    return out;
  }

  SemisimpleDecomposition semisimple_quotient(Algebra const& a) {
    std::size_t const n = a.dim();
    Vec               tr(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        tr[k] += entry(a.product(k, i), i);
      }
    }
    Echelon form(n);
    for (std::size_t i = 0; i < n; ++i) {
      SparseRow row;
      for (std::size_t j = 0; j < n; ++j) {
        Rational t;
        for (auto const& [k, c] : a.product(i, j)) {
          t += c * tr[k];
        }
        if (t != 0) {
          row.emplace_back(j, t);
        }
      }
      form.insert(std::move(row));
    }
    std::vector<SparseRow> radical;
    for (auto const& v : form.nullspace()) {
      radical.push_back(to_sparse(v));
    }
    SemisimpleDecomposition out;
    out.radical_dim = radical.size();
    out.quotient    = quotient(a, radical);
    out.center_dim  = center_basis(out.quotient.algebra).size();
    return out;
  }

  std::vector<SparseRow> center_basis(Algebra const& a) {
    std::size_t const n = a.dim();
    Echelon           eqs(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::map<std::size_t, SparseRow> rows;  // output coordinate -> equation over j
      for (std::size_t j = 0; j < n; ++j) {
        auto d = add_scaled(a.product(j, i), Rational(-1), a.product(i, j));
        for (auto const& [k, c] : d) {
          rows[k].emplace_back(j, c);
        }
      }
      for (auto& [k, row] : rows) {
        eqs.insert(std::move(row));
      }
    }
    std::vector<SparseRow> out;
    for (auto const& v : eqs.nullspace()) {
      out.push_back(to_sparse(v));
    }
    return out;
  }

  std::size_t center_dim(Algebra const& a) {
    return semisimple_quotient(a).center_dim;
  }

  namespace {

    std::size_t square_root(std::size_t m) {
      auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
      return r * r == m ? r : 0;
    }

  }  // namespace

  CVec numeric_mul(Algebra const& a, CVec const& x, CVec const& y) {
    CVec out(a.dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0) {
        continue;
      }
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] == 0.0) {
          continue;
        }
        for (auto const& [k, c] : a.product(i, j)) {
          out[k] += x[i] * y[j] * c.get_d();
        }
      }
    }
    return out;
  }

  Blocks blocks(Algebra const& a, bool allow_numeric, unsigned seed) {
    Blocks out;
    out.ss         = semisimple_quotient(a);
    auto const& q  = out.ss.quotient.algebra;
    if (q.dim() == 0) {
      return out;
    }
    try {
      out.idempotents = minimal_idempotents(q, center_basis(q), *q.unit());
      std::sort(out.idempotents.begin(), out.idempotents.end());
    } catch (Error const& e) {
      if (e.code() != ErrorCode::CenterDoesNotSplit || !allow_numeric) {
        throw;
      }
      auto numeric    = numeric_blocks(q, seed);
      numeric.ss      = std::move(out.ss);
      std::string w   = e.what();
      numeric.witness = w.substr(w.find(": ") + 2);
      return numeric;
    }
    for (auto const& e : out.idempotents) {
      Echelon ideal(q.dim());
      for (auto c : nonzero_columns(q.left_mult(e))) {
        ideal.insert(std::move(c));
      }
      auto n = square_root(ideal.rank());
      if (n == 0) {
        throw Error(ErrorCode::NonIntegralMultiplicity,
                    "block of dimension " + std::to_string(ideal.rank()));
      }
      out.sizes.push_back(n);
    }
    return out;
  }

  Blocks numeric_blocks(Algebra const& a, unsigned seed) {
    Blocks out;
    out.method      = BlockMethod::numeric;
    out.ss          = semisimple_quotient(a);
    auto const& q   = out.ss.quotient.algebra;
    std::size_t const n = q.dim();
    if (n == 0) {
      return out;
    }
    auto center = center_basis(q);

    std::mt19937                       rng(seed);
    std::uniform_int_distribution<int> coef(1, 1000);
    SparseRow                          z;
    for (auto const& c : center) {
      z = add_scaled(z, Rational(coef(rng)), c);
    }
    Eigen::MatrixXd lz = Eigen::MatrixXd::Zero(n, n);
    auto            lm = q.left_mult(z);
    for (std::size_t j = 0; j < n; ++j) {
      for (auto const& [i, c] : lm.column(j)) {
        lz(i, j) = c.get_d();
      }
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(lz);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::NotSemisimple, "eigen decomposition failed");
    }
    auto const values  = solver.eigenvalues();
    auto const vectors = solver.eigenvectors();
    for (std::size_t i = 0; i < n; ++i) {
      Eigen::VectorXcd v = vectors.col(i);
      double           r = (lz.cast<std::complex<double>>() * v - values(i) * v).norm() / v.norm();
      out.residual       = std::max(out.residual, r / std::max(1.0, lz.norm()));
    }
    if (out.residual > 1e-9) {
      throw Error(ErrorCode::NotSemisimple, "eigenvector residual " + std::to_string(out.residual));
    }

    double const scale = std::max(1.0, lz.norm());
    std::vector<std::complex<double>> clusters;
    std::vector<std::size_t>          counts;
    for (std::size_t i = 0; i < n; ++i) {
      auto   lambda = values(i);
      bool   found  = false;
      for (std::size_t c = 0; c < clusters.size(); ++c) {
        if (std::abs(clusters[c] - lambda) < 1e-6 * scale) {
          ++counts[c];
          found = true;
          break;
        }
      }
      if (!found) {
        clusters.push_back(lambda);
        counts.push_back(1);
      }
    }
    for (auto m : counts) {
      auto s = square_root(m);
      if (s == 0) {
        throw Error(ErrorCode::NonIntegralMultiplicity,
                    "eigenvalue multiplicity " + std::to_string(m) + " is not a square");
      }
      out.sizes.push_back(s);
    }

    // Central idempotents as Lagrange polynomials in z.
    CVec unit(n), zc(n);
    for (auto const& [i, c] : *q.unit()) {
      unit[i] = c.get_d();
    }
    for (auto const& [i, c] : z) {
      zc[i] = c.get_d();
    }
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      CVec e = unit;
      for (std::size_t d = 0; d < clusters.size(); ++d) {
        if (d == c) {
          continue;
        }
        CVec factor(n);
        for (std::size_t i = 0; i < n; ++i) {
          factor[i] = (zc[i] - clusters[d] * unit[i]) / (clusters[c] - clusters[d]);
        }
        e = numeric_mul(q, e, factor);
      }
      out.numeric_idempotents.push_back(std::move(e));
    }
    return out;
  }

}  // namespace iskk
