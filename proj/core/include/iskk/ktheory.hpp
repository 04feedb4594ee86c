#pragma once

// K_0 of finite-dimensional *-algebras through their block decomposition,
// induced maps as multiplicity matrices, and rank-level checks of the
// Green-Julg and imprimitivity identities.

#include "iskk/crossed.hpp"
#include "iskk/induction.hpp"

namespace iskk {

  struct K0Group {
    std::size_t              rank = 0;
    std::vector<std::size_t> block_dims;  // n_c with block M_{n_c}
    BlockMethod              method = BlockMethod::exact;
    std::size_t              radical_dim  = 0;
    std::size_t              quotient_dim = 0;
    std::string              witness;
    Blocks                   blocks;

    Json to_json() const;
  };

  K0Group k0(Algebra const& a, bool allow_numeric = true, unsigned seed = 0);

  // matrix[j][i]: multiplicity of source block i inside target block j.
  struct K0Map {
    std::vector<std::vector<long>> matrix;
    K0Group                        source;
    K0Group                        target;

    std::size_t rows() const noexcept {
      return matrix.size();
    }
    std::size_t cols() const noexcept {
      return source.rank;
    }
    Json to_json() const;
  };

  K0Map compose(K0Map const& after, K0Map const& before);
  std::vector<std::vector<long>> identity_matrix(std::size_t n);

  // f: A → B given as a dim B × dim A matrix. Multiplicities are
  // tr(L_{E'_j f(E_i)}) / (n_i n_j) on central block idempotents. Throws
  // NonIntegralMultiplicity, or NotSemisimple if f does not map the radical
  // of A into the radical of B.
  K0Map k0_map(Algebra const& a, Algebra const& b, SparseMatrix const& f,
               bool allow_numeric = true, unsigned seed = 0);

  // ℂ^{units of H} with h moving the indicator of its source unit to that of
  // its range unit.
  GAlgebra unit_space_algebra(ActingPtr h);

  // Throws HypothesesNotMet if G has no unit or a projection other than 1
  // is connected with 1.
  Report verify_remark_counterexamples(SpectrumPtr x);

  Report verify_green_julg_diagram(SpectrumPtr x, ElementSet const& hprime,
                                   std::vector<GAlgebra> const& parts);

  Report verify_imprimitivity(SpectrumPtr x, ElementSet const& hprime, GAlgebra const& f);

}  // namespace iskk
