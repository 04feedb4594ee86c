#pragma once

// The character space X of the idempotent semilattice, projections of the
// Boolean algebra it generates, and the extended semigroup of pairs (g, P).

#include "iskk/linalg.hpp"
#include "iskk/semigroup.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace iskk {

  // Subset of X, indexed by character number.
  using ProjectionSet = boost::dynamic_bitset<>;

  // Rational-valued function on X.
  using AlgStar = Vec;

  // A character is determined by the least idempotent it sends to 1.
  struct Character {
    std::size_t generator;
  };

  // g·P with P below g*g. Two pairs name the same element of the extended
  // semigroup iff they agree after Spectrum::canonical.
  struct ExtendedElement {
    std::size_t   g;
    ProjectionSet P;

    bool operator==(ExtendedElement const& o) const {
      return g == o.g && P == o.P;
    }
    bool operator<(ExtendedElement const& o) const {
      return g != o.g ? g < o.g : P < o.P;
    }
  };

  class Spectrum {
   public:
    explicit Spectrum(SgpPtr s);

    FiniteInvSgp const& semigroup() const noexcept {
      return *_s;
    }
    SgpPtr const& semigroup_ptr() const noexcept {
      return _s;
    }

    // |X|
    std::size_t size() const noexcept {
      return _gen.size();
    }
    std::size_t generator(std::size_t chi) const {
      return _gen[chi];
    }
    // Character generated by the idempotent f, if f is not the zero.
    std::optional<std::size_t> character_of(std::size_t f) const {
      return _char_of[f];
    }
    std::vector<Character> characters() const;

    // χ(e) for an idempotent e.
    bool eval(std::size_t chi, std::size_t e) const;

    ProjectionSet proj(std::size_t e) const;
    ProjectionSet full() const {
      return ProjectionSet(size()).set();
    }
    ProjectionSet empty() const {
      return ProjectionSet(size());
    }

    // Image of P ∩ proj(g*g) under χ_f ↦ χ_{g f g*}.
    ProjectionSet act_proj(std::size_t g, ProjectionSet const& P) const;

    AlgStar indicator(ProjectionSet const& P) const;

    ExtendedElement canonical(std::size_t g, ProjectionSet P) const;
    ExtendedElement embed(std::size_t g) const;
    ExtendedElement zero() const {
      return {0, empty()};
    }
    ExtendedElement tilde_mul(ExtendedElement const& a, ExtendedElement const& b) const;
    ExtendedElement tilde_star(ExtendedElement const& a) const;
    // The projection part of a* a, as an element (1, P).
    ExtendedElement source(ExtendedElement const& a) const;
    ExtendedElement range(ExtendedElement const& a) const;

    std::string name(ProjectionSet const& P) const;
    std::string name(ExtendedElement const& a) const;

   private:
    SgpPtr                                  _s;
    std::vector<std::size_t>                _gen;
    std::vector<std::optional<std::size_t>> _char_of;
    std::vector<ProjectionSet>              _proj;  // by element, idempotents only
  };

  using SpectrumPtr = std::shared_ptr<Spectrum const>;

  std::vector<Character> characters(FiniteInvSgp const& s);
  ProjectionSet          proj(Spectrum const& x, std::size_t e);
  ProjectionSet act_proj(Spectrum const& x, std::size_t g, ProjectionSet const& P);

  // The join of 1_e over idempotents e <= g, together with the maximal such
  // e (excluding a declared zero, whose projection is empty).
  std::pair<AlgStar, ElementSet> e_cont_sup(Spectrum const& x, std::size_t g);

}  // namespace iskk
