#pragma once

// A finite set of nonzero elements of the extended semigroup, closed under
// product and star, that algebras can be acted on by. Covers unital
// subsemigroups of G (embedded) and associated groupoids alike.

#include "iskk/spectrum.hpp"

#include <map>
#include <memory>

namespace iskk {

  class ActingSet {
   public:
    // Builds the product table by multiplying in the extended semigroup.
    // Throws NotSubsemigroup if a nonzero product or star leaves the set.
    ActingSet(SpectrumPtr                               x,
              std::vector<ExtendedElement>              elements,
              std::vector<std::string>                  names,
              std::vector<std::optional<std::size_t>>   plain,
              bool                                      groupoid);

    // The unital subsemigroup `sub` of G (all of G if omitted), zero dropped.
    static std::shared_ptr<ActingSet const> plain(SpectrumPtr x);
    static std::shared_ptr<ActingSet const> plain(SpectrumPtr x, ElementSet const& sub);

    Spectrum const& spectrum() const noexcept {
      return *_x;
    }
    SpectrumPtr const& spectrum_ptr() const noexcept {
      return _x;
    }
    FiniteInvSgp const& semigroup() const noexcept {
      return _x->semigroup();
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }
    ExtendedElement const& element(std::size_t k) const {
      return _elements[k];
    }
    std::vector<ExtendedElement> const& elements() const noexcept {
      return _elements;
    }
    std::string const& name(std::size_t k) const {
      return _names[k];
    }
    // The element of G this acting element came from, for embedded subsemigroups.
    std::optional<std::size_t> plain_element(std::size_t k) const {
      return _plain[k];
    }
    std::optional<std::size_t> index_of_plain(std::size_t g) const;
    std::optional<std::size_t> index_of(ExtendedElement const& a) const;

    // None when the product is the zero of the extended semigroup.
    std::optional<std::size_t> mul(std::size_t a, std::size_t b) const {
      return _mul[a][b];
    }
    std::size_t star(std::size_t a) const {
      return _star[a];
    }
    std::optional<std::size_t> unit() const noexcept {
      return _unit;
    }
    std::vector<std::size_t> const& idempotents() const noexcept {
      return _idempotents;
    }
    bool is_groupoid() const noexcept {
      return _groupoid;
    }

    // Partition of X into atoms of the Boolean algebra generated by the
    // projection parts of the idempotents. The signature of an atom lists,
    // per idempotent, whether the atom lies below it.
    struct Atom {
      ProjectionSet     points;
      std::vector<bool> below;
    };
    std::vector<Atom> const& atoms() const noexcept {
      return _atoms;
    }

    // Membership of the underlying projection sets, e.g. H^(0) in a groupoid.
    ProjectionSet const& support() const noexcept {
      return _support;
    }

   private:
    SpectrumPtr                                          _x;
    std::vector<ExtendedElement>                         _elements;
    std::vector<std::string>                             _names;
    std::vector<std::optional<std::size_t>>              _plain;
    std::map<ExtendedElement, std::size_t>               _index;
    std::vector<std::vector<std::optional<std::size_t>>> _mul;
    std::vector<std::size_t>                             _star;
    std::optional<std::size_t>                           _unit;
    std::vector<std::size_t>                             _idempotents;
    std::vector<Atom>                                    _atoms;
    ProjectionSet                                        _support;
    bool                                                 _groupoid;
  };

  using ActingPtr = std::shared_ptr<ActingSet const>;

}  // namespace iskk
