#pragma once

// Algebras with an action of an acting set by *-endomorphism matrices.

#include "iskk/acting.hpp"
#include "iskk/algebra.hpp"

#include <memory>
#include <mutex>

namespace iskk {

  class GAlgebra {
   public:
    GAlgebra(Algebra algebra, ActingPtr acting, std::vector<SparseMatrix> action,
             std::string label = "");

    Algebra const& algebra() const noexcept {
      return _algebra;
    }
    std::size_t dim() const noexcept {
      return _algebra.dim();
    }
    ActingSet const& acting() const noexcept {
      return *_acting;
    }
    ActingPtr const& acting_ptr() const noexcept {
      return _acting;
    }
    SparseMatrix const& action(std::size_t k) const {
      return _action[k];
    }
    std::vector<SparseMatrix> const& actions() const noexcept {
      return _action;
    }
    std::string const& label() const noexcept {
      return _label;
    }

    // Action of an element of G for acting sets embedded from G; the zero
    // acts as 0.
    SparseMatrix plain_action(std::size_t g) const;

    // Action of the projection P: the sum of the atom projections below P.
    // Throws InvalidAction if P is not a union of atoms.
    SparseMatrix projection(ProjectionSet const& P) const;
    // Action of an arbitrary element (g, P) of the extended semigroup that
    // lies below some acting element.
    SparseMatrix extended_action(ExtendedElement const& x) const;

   private:
    SparseMatrix const& atom_projection(std::size_t atom) const;

    struct Cache {
      std::once_flag            once;
      std::vector<SparseMatrix> atoms;
    };

    Algebra                   _algebra;
    ActingPtr                 _acting;
    std::vector<SparseMatrix> _action;
    std::string               _label;
    std::shared_ptr<Cache>    _cache;
  };

  // Structure check: algebra axioms, homomorphism law α_a α_b = α_{ab}, unit,
  // central idempotent actions, each α_k a *-endomorphism. In contracted
  // mode the homomorphism law is only required where ab is nonzero, which is
  // all a crossed product sees.
  Report validate_g_algebra(GAlgebra const& a, bool contracted = false);

  // ℂ with every acting element acting as the identity.
  GAlgebra trivial_algebra(ActingPtr acting);
  // ℂ^S with each acting element acting through a partial bijection of S,
  // given as maps[k][s] = image of s or none.
  GAlgebra commutative_algebra(ActingPtr                                            acting,
                               std::vector<std::string>                             points,
                               std::vector<std::vector<std::optional<std::size_t>>> maps,
                               std::string label = "");
  // C0(X) with (g, P) moving 1_χ to 1_{gχ} for χ in P.
  GAlgebra c0x(ActingPtr acting);
  // ℂ as the fiber of C0(X) at a point fixed by every element defined there.
  // Throws InvalidAction if some element moves the point.
  GAlgebra point_algebra(ActingPtr acting, std::size_t chi);
  // Any algebra with every acting element acting as the identity.
  GAlgebra trivial_action(Algebra a, ActingPtr acting, std::string label = "");

  GAlgebra direct_sum(GAlgebra const& a, GAlgebra const& b);
  // Diagonal action on A ⊗ B.
  GAlgebra tensor(GAlgebra const& a, GAlgebra const& b);
  // Spanning set of the kernel of A ⊗ B → A ⊗^X B.
  std::vector<SparseRow> balanced_relations(GAlgebra const& a, GAlgebra const& b);
  // A ⊗ B divided by e(a) ⊗ b − a ⊗ e(b) over idempotents e.
  GAlgebra balanced_tensor(GAlgebra const& a, GAlgebra const& b);

  // Restriction of the action to the invariant subalgebra spanned by `span`.
  GAlgebra restrict_to_subspace(GAlgebra const& a, Subalgebra const& sub,
                                std::string label = "");

  // (pA, (1−p)A) for an acting idempotent p commuting with every acting element.
  std::pair<GAlgebra, GAlgebra> cutdown(GAlgebra const& a, std::size_t p);

  // The corner 1_H(A) as a subalgebra of A.
  Subalgebra corner(GAlgebra const& a, ActingSet const& h);
  // The corner 1_H(A) with the action of the acting set H, whose elements
  // must lie below acting elements of A.
  GAlgebra restrict(GAlgebra const& a, ActingPtr h);

  // Checks for a linear map between algebras (matrix dim B × dim A).
  Report check_star_hom(Algebra const& a, Algebra const& b, SparseMatrix const& f,
                        std::string const& title = "star homomorphism");
  // Adds equivariance (same acting set on both sides) to check_star_hom.
  Report check_equivariant_hom(GAlgebra const& a, GAlgebra const& b, SparseMatrix const& f,
                               std::string const& title = "equivariant homomorphism");
  // Square of full rank.
  bool is_bijective(SparseMatrix const& f);

}  // namespace iskk
