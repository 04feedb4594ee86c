#pragma once

// Associated groupoids, the space G_H of an inducing pair, induced algebras
// and the isomorphisms relating restriction and induction.

#include "iskk/galgebra.hpp"

namespace iskk {

  // Groupoid {h p : h in H', p a minimal projection of the Boolean algebra
  // generated by E(H'), h*h >= p}. Throws NotSubsemigroup.
  ActingPtr assoc_groupoid(SpectrumPtr x, ElementSet const& hprime);

  // A finite subgroupoid of the extended semigroup given by its elements.
  ActingPtr make_groupoid(SpectrumPtr x, std::vector<ExtendedElement> elements);

  // K_H = {k p : k in K, p a unit of H, k*k >= p} with its H-orbits
  // x ≡ y iff x t = y for some t in H.
  struct GHSpace {
    ActingPtr                              K;
    ActingPtr                              H;
    std::vector<ExtendedElement>           points;  // sorted
    std::map<ExtendedElement, std::size_t> index;
    std::vector<std::size_t>               class_of;
    std::vector<std::vector<std::size_t>>  classes;   // sorted point lists
    std::vector<std::size_t>               reps;      // least point of each class
    std::vector<std::size_t>               source;    // H unit below each point
    std::vector<std::size_t>               from_rep;  // t in H with rep · t = point

    std::optional<std::size_t> index_of(ExtendedElement const& a) const;
    std::size_t                size() const noexcept {
      return points.size();
    }
    std::string name(std::size_t point) const;
  };

  using GHPtr = std::shared_ptr<GHSpace const>;

  // K must be an embedded subsemigroup of G, H a groupoid.
  GHPtr compute_GH(ActingPtr K, ActingPtr H);

  // Ind_H^K(D): functions f on K_H with f(x t) = t*(f(x)), stored by their
  // values at class representatives.
  class InducedAlgebra {
   public:
    using Function = std::vector<SparseRow>;  // value in D at every point

    // Throws InvalidCoefficientAlgebra unless D is a valid H-algebra whose
    // units act as orthogonal projections summing to the identity.
    InducedAlgebra(GHPtr space, GAlgebra coeff);

    GAlgebra const& algebra() const noexcept {
      return _algebra;
    }
    GHSpace const& space() const noexcept {
      return *_space;
    }
    GHPtr const& space_ptr() const noexcept {
      return _space;
    }
    GAlgebra const& coefficient() const noexcept {
      return _coeff;
    }
    FiberSum const& fibers() const noexcept {
      return _fibers;
    }

    Function  function(SparseRow const& element) const;
    SparseRow element(Function const& f) const;
    // f(x t) = t*(f(x)) at every point, values inside their fibers.
    bool is_induced(Function const& f) const;

   private:
    GHPtr    _space;
    GAlgebra _coeff;
    FiberSum _fibers;
    GAlgebra _algebra;
  };

  // Pointwise application of an equivariant H-homomorphism A → B (matrix
  // dim B × dim A). Throws NotEquivariant.
  SparseMatrix induce_hom(InducedAlgebra const& a, InducedAlgebra const& b,
                          SparseMatrix const& f);

  struct ThetaResult {
    Report       report;
    SparseMatrix map;
    std::size_t  source_dim = 0;
    std::size_t  target_dim = 0;
  };

  // Θ: Ind_H^G Res(B) → C0(G_H/H, B), f ↦ Σ_reps r ⊗ r(f(r)).
  ThetaResult theta_res_ind(ActingPtr G, ActingPtr H, GAlgebra const& b);

  struct TensorDecomposition {
    GAlgebra     tensor;      // Ind_H^G(A) ⊗ B with the diagonal action
    SparseMatrix p;           // x ⊗ a ⊗ b ↦ x ⊗ a ⊗ xx*(b)
    std::size_t  corner_dim = 0;
    std::size_t  complement_dim = 0;
    Report       report;
  };

  // Builds p on Ind_H^G(A) ⊗ B and checks that it is a central, invariant
  // projection.
  TensorDecomposition central_decomp_tensor(ActingPtr G, ActingPtr H, GAlgebra const& a,
                                            GAlgebra const& b);

  // Θ: Ind_H^G(A ⊗^X Res B) → p(Ind_H^G(A) ⊗ B), x ⊗ a ⊗ b ↦ x ⊗ a ⊗ x(b).
  ThetaResult theta_res_ind_tensor(ActingPtr G, ActingPtr H, GAlgebra const& a,
                                   GAlgebra const& b);

  struct SplitResult {
    std::vector<ExtendedElement> M;
    ElementSet                   Lprime;
    std::size_t                  source_dim = 0;
    std::size_t                  target_dim = 0;
    std::vector<std::size_t>     carrier;  // classes of Ind_U^G Res(D)
    SparseMatrix                 theta;    // into the full Ind_U^G Res(D)
    Algebra                      source;
    std::vector<SparseMatrix>    l_action;  // on the source, by nonzero member of L
    Report                       report;
  };

  // For g in G_U: M = (gg* L gg* ∩ g U g*) \ {0}, L' = <L ∪ g0 E(U') g0*>,
  // θ(f)(l g u) = u* g*(f(l g g*)) from Ind_M^{L'} Res(D) onto the functions
  // in Ind_U^G Res(D) carried by L g U.
  SplitResult technical_split(SpectrumPtr x, ElementSet const& uprime, ElementSet const& L,
                              ExtendedElement const& g, GAlgebra const& d);

  struct ResIndSplit {
    std::vector<ExtendedElement> J;
    std::vector<std::size_t>     summand_dims;
    std::size_t                  total_dim = 0;
    Report                       report;
  };

  // Res_G^L Ind_H^G Res_G^H(D) ≅ ⊕_{g in J} Res Ind_{M_g}^{L'_g} Res(D).
  ResIndSplit res_ind_split(SpectrumPtr x, ElementSet const& hprime, ElementSet const& L,
                            GAlgebra const& d);

  struct CI0Term {
    ActingPtr H;
    GAlgebra  A;
  };

  struct CI0Result {
    std::vector<CI0Term>     terms;
    std::size_t              total_dim = 0;
    std::vector<std::size_t> ideal_dims;         // from the terms
    std::vector<std::size_t> oracle_ideal_dims;  // from the iterated algebra
    Report                   report;
  };

  // The starting coefficient of an induction chain: Res_G^H of the trivial
  // G-algebra, or the trivial H-algebra ℂ when G has a zero and H a single unit.
  GAlgebra trivial_coefficient(ActingPtr G, ActingPtr H);

  // Ind_{H_n} Res … Ind_{H_1} Res(ℂ) as ⊕ Ind_{H_n}(A) with A commutative
  // finite-dimensional H_n-algebras. Throws ChainTooLong for n > 3.
  CI0Result ci0_enumerate(SpectrumPtr x, std::vector<ElementSet> const& chain);

  // Sizes of the indecomposable G-invariant ideals of a commutative G-algebra.
  std::vector<std::size_t> invariant_ideal_dims(GAlgebra const& a);

  struct BPrimeResult {
    ElementSet               Lprime;
    GAlgebra                 bprime;        // over L'
    std::vector<std::size_t> block_counts;  // n_i per atom of E(L)
    std::vector<std::size_t> block_dims;    // dim B_i
    Report                   report;
  };

  // B' = ⊕_i B_i^{n_i} with the action of L' lifted from the L-action on B
  // through the refinement of E(L) by P inside A. A is an L'-algebra, B an
  // L-algebra. n_i counts the nonzero images in A of the atoms of E(L')
  // below the i-th atom of E(L), so it vanishes where A does.
  BPrimeResult build_bprime(SpectrumPtr x, ElementSet const& L, ElementSet const& P,
                            GAlgebra const& a, GAlgebra const& b);

}  // namespace iskk
