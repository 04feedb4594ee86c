#pragma once

// Finite-dimensional *-algebras over the rationals given by structure
// constants on a basis. The involution is stored as a linear map on the
// basis; complex scalars never appear because every algebra here has a
// self-conjugate rational form.

#include "iskk/linalg.hpp"
#include "iskk/report.hpp"
#include "iskk/semigroup.hpp"

#include <string>
#include <vector>

namespace iskk {

  class Algebra {
   public:
    Algebra() = default;
    // products[i][j] is the product of basis elements i and j.
    Algebra(std::vector<std::string>            names,
            std::vector<std::vector<SparseRow>> products,
            SparseMatrix                        star);

    static Algebra zero();
    static Algebra scalars();
    // ℂ^n with pointwise operations.
    static Algebra diagonal(std::size_t n, std::vector<std::string> names = {});
    // M_n with matrix units e_ij.
    static Algebra matrices(std::size_t n);
    // Contracted semigroup algebra: basis G minus a declared zero, g* = g^{-1}.
    static Algebra semigroup_algebra(FiniteInvSgp const& s);

    std::size_t dim() const noexcept {
      return _names.size();
    }
    std::string const& name(std::size_t i) const {
      return _names[i];
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    SparseRow const& product(std::size_t i, std::size_t j) const {
      return _products[i][j];
    }
    SparseMatrix const& star_matrix() const noexcept {
      return _star;
    }

    SparseRow basis(std::size_t i) const {
      return {{i, Rational(1)}};
    }
    SparseRow mul(SparseRow const& a, SparseRow const& b) const;
    Vec       mul(Vec const& a, Vec const& b) const;
    SparseRow star(SparseRow const& a) const {
      return _star.apply(a);
    }
    Vec star(Vec const& a) const {
      return _star.apply(a);
    }

    // Unit element, if the algebra is unital.
    std::optional<SparseRow> const& unit() const noexcept {
      return _unit;
    }
    bool is_commutative() const;

    // Matrices of x ↦ a x and x ↦ x a.
    SparseMatrix left_mult(SparseRow const& a) const;
    SparseMatrix right_mult(SparseRow const& a) const;

    // a is central iff it commutes with every basis element.
    bool is_central(SparseRow const& a) const;

   private:
    void compute_unit();

    std::vector<std::string>            _names;
    std::vector<std::vector<SparseRow>> _products;
    SparseMatrix                        _star;
    std::optional<SparseRow>            _unit;
  };

  Algebra direct_sum(Algebra const& a, Algebra const& b);
  Algebra tensor(Algebra const& a, Algebra const& b);

  // Associativity, star involutive and anti-multiplicative, on basis triples.
  Report validate_algebra(Algebra const& a);

  // A subspace closed under product and star, with its own basis.
  struct Subalgebra {
    Algebra      algebra;
    SparseMatrix embedding;  // dim A × dim sub
    Echelon      span;       // RREF of the subspace inside A

    // Coordinates of an element of A that lies in the subspace.
    SparseRow coordinates(SparseRow const& a) const;
    bool      contains(SparseRow const& a) const {
      return span.reduce(a).empty();
    }
  };

  // Throws MalformedInput if the span is not closed under product and star.
  Subalgebra subalgebra(Algebra const& a, std::vector<SparseRow> const& spanning,
                        std::string const& prefix = "b");

  struct Quotient {
    Algebra      algebra;
    SparseMatrix map;  // dim quotient × dim A
    Echelon      ideal;
  };

  // Direct sum of subalgebras of one ambient algebra. Elements are handled
  // either in block coordinates or as one ambient value per block.
  struct FiberSum {
    Algebra                  algebra;
    std::vector<Subalgebra>  fibers;
    std::vector<std::size_t> offset;

    std::size_t fiber_of(std::size_t basis_index) const;
    // Ambient value of every block.
    std::vector<SparseRow> values(SparseRow const& element) const;
    // Inverse of values; throws MalformedInput if a value leaves its fiber.
    SparseRow element(std::vector<SparseRow> const& values) const;
    // The basis element (fiber c, index i) as a block-coordinate vector.
    SparseRow basis(std::size_t c, std::size_t i) const {
      return {{offset[c] + i, Rational(1)}};
    }
  };

  // Each fiber is the span of the given ambient vectors.
  FiberSum fiber_sum(Algebra const& ambient, std::vector<std::vector<SparseRow>> const& spans,
                     std::vector<std::string> const& labels = {});

  // Linear map on a fiber sum given, for every target block c', either
  // nothing (zero) or a source block c and an ambient map M; block c' of the
  // image of x is M applied to block c of x.
  struct BlockMove {
    std::size_t  source;
    SparseMatrix map;
  };
  SparseMatrix fiber_map(FiberSum const& from, FiberSum const& to,
                         std::vector<std::optional<BlockMove>> const& moves);

  std::vector<SparseRow> nonzero_columns(SparseMatrix const& m);

  // Polynomials are coefficient vectors, constant term first.
  using Polynomial = std::vector<Rational>;

  // Monic minimal polynomial of x inside the unital subalgebra with unit e.
  Polynomial  minimal_polynomial(Algebra const& a, SparseRow const& x, SparseRow const& e);
  std::string to_string(Polynomial const& p);
  // Distinct rational roots together with the part of p they leave over.
  std::pair<std::vector<Rational>, Polynomial> rational_roots(Polynomial p);

  // Minimal idempotents of the commutative subalgebra spanned by `span`
  // with unit e. Throws CenterDoesNotSplit if some minimal polynomial has an
  // irreducible factor of degree > 1 over the rationals, NotSemisimple on a
  // repeated root.
  std::vector<SparseRow> minimal_idempotents(Algebra const& a, std::vector<SparseRow> const& span,
                                             SparseRow const& e);

  // Two-sided *-ideal generated by the given elements.
  Echelon generated_ideal(Algebra const& a, std::vector<SparseRow> const& gens);
  Quotient quotient(Algebra const& a, std::vector<SparseRow> const& gens);

}  // namespace iskk
