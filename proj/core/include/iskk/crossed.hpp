#pragma once

// Algebraic crossed products of finite-dimensional algebras by acting sets,
// semisimple quotients and their block structure.

#include "iskk/galgebra.hpp"

#include <complex>
#include <string_view>

namespace iskk {

  enum class CrossedKind { universal, sieben, groupoid };

  CrossedKind      parse_crossed_kind(std::string_view text);
  std::string_view to_string(CrossedKind kind);

  struct CrossedProduct {
    Algebra                  algebra;
    CrossedKind              kind;
    std::size_t              universal_dim = 0;
    std::vector<std::size_t> acting_of;  // acting element of each universal basis vector
  };

  // span{a δ_g : a ∈ α_{gg*}(A)} with (a δ_g)(b δ_h) = a α_g(b) δ_{gh} and
  // (a δ_g)* = α_{g*}(a*) δ_{g*}; products with gh = 0 vanish. The Sieben
  // kind divides by the ideal generated by a δ_e − a δ_f for idempotents
  // e ≤ f and a ∈ α_e(A). Throws InvalidAction.
  CrossedProduct crossed(GAlgebra const& a, CrossedKind kind);

  struct SemisimpleDecomposition {
    std::size_t radical_dim = 0;
    Quotient    quotient;
    std::size_t center_dim = 0;
  };

  // Radical as the null space of the trace form tr(L_{b_i b_j}).
  SemisimpleDecomposition semisimple_quotient(Algebra const& a);
  std::vector<SparseRow>  center_basis(Algebra const& a);
  // Dimension of the center of the semisimple quotient.
  std::size_t center_dim(Algebra const& a);

  using CVec = std::vector<std::complex<double>>;

  // Product of two complex coordinate vectors in a.
  CVec numeric_mul(Algebra const& a, CVec const& x, CVec const& y);

  enum class BlockMethod { exact, numeric };
  std::string_view to_string(BlockMethod method);

  // Block structure of the semisimple quotient Q ≅ ⊕ M_{n_c} over ℂ.
  struct Blocks {
    SemisimpleDecomposition ss;
    std::vector<std::size_t> sizes;  // n_c
    BlockMethod              method = BlockMethod::exact;
    std::string              witness;  // polynomial that blocked exact splitting
    double                   residual = 0;
    // Central primitive idempotents of Q, exact or numeric by method.
    std::vector<SparseRow>                         idempotents;
    std::vector<CVec>       numeric_idempotents;

    std::size_t count() const noexcept {
      return sizes.size();
    }
  };

  // Exact splitting of the center over the rationals; falls back to the
  // numeric method when allowed, otherwise throws CenterDoesNotSplit.
  Blocks blocks(Algebra const& a, bool allow_numeric = true, unsigned seed = 0);

  // Eigenvalue clustering of a random central element. Throws
  // NonIntegralMultiplicity if a cluster size is not a square, NotSemisimple
  // if an eigenvector residual exceeds 1e-9.
  Blocks numeric_blocks(Algebra const& a, unsigned seed = 0);

}  // namespace iskk
