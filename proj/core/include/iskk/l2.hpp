#pragma once

// The Hilbert C0(X)-module spanned by the vectors φ_g, g in G.

#include "iskk/report.hpp"
#include "iskk/spectrum.hpp"

#include <map>

namespace iskk {

  // Finite combination of φ_g, keyed by element index.
  using L2Vector = std::map<std::size_t, Rational>;

  // Elements of G indexing the φ-basis (all but a declared zero).
  std::vector<std::size_t> phi_basis(FiniteInvSgp const& s);

  // Support of ⟨φ_g, φ_h⟩: the join of proj(e) over e with e g = e h and
  // e <= g g* h h*.
  ProjectionSet phi_inner_set(Spectrum const& x, std::size_t g, std::size_t h);
  AlgStar       phi_inner(Spectrum const& x, std::size_t g, std::size_t h);

  class GramMatrix {
   public:
    GramMatrix(std::vector<std::size_t>                basis,
               std::vector<std::vector<ProjectionSet>> entries,
               std::size_t                             characters)
        : _basis(std::move(basis)),
          _entries(std::move(entries)),
          _characters(characters) {}

    std::vector<std::size_t> const& basis() const noexcept {
      return _basis;
    }
    std::size_t characters() const noexcept {
      return _characters;
    }
    ProjectionSet const& entry(std::size_t i, std::size_t j) const {
      return _entries[i][j];
    }
    // The rational matrix obtained by evaluating every entry at χ.
    Matrix at(std::size_t chi) const;

   private:
    std::vector<std::size_t>                _basis;
    std::vector<std::vector<ProjectionSet>> _entries;
    std::size_t                             _characters;
  };

  GramMatrix gram(Spectrum const& x);

  // φ_h ↦ φ_{gh}, dropping terms that land on the zero.
  L2Vector l2_act(FiniteInvSgp const& s, std::size_t g, L2Vector const& v);

  Report check_psd(GramMatrix const& gm);
  Report check_independence(Spectrum const& x);
  // Symmetry, compatibility with the right action φ_h·f = φ_{fh} of E, and
  // equivariance, all exhaustively.
  Report check_module_axioms(Spectrum const& x);

}  // namespace iskk
