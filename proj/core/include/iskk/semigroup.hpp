#pragma once

// Finite unital inverse semigroups given by a multiplication table.

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace iskk {

  // Subset of element indices 0..n-1.
  using ElementSet = boost::dynamic_bitset<>;

  std::vector<std::size_t> members(ElementSet const& s);

  using Table = std::vector<std::vector<std::size_t>>;

  class FiniteInvSgp {
   public:
    // Checks associativity, existence and uniqueness of inverses, commuting
    // idempotents, the unit and (if given) the zero. Throws Error naming the
    // witnessing elements.
    static FiniteInvSgp validate(Table                      table,
                                 std::size_t                unit,
                                 std::optional<std::size_t> zero  = std::nullopt,
                                 std::vector<std::string>   names = {});

    std::size_t size() const noexcept {
      return _table.size();
    }
    std::size_t mul(std::size_t a, std::size_t b) const {
      return _table[a][b];
    }
    std::size_t star(std::size_t a) const {
      return _star[a];
    }
    std::size_t unit() const noexcept {
      return _unit;
    }
    std::optional<std::size_t> zero() const noexcept {
      return _zero;
    }
    bool is_zero(std::size_t a) const noexcept {
      return _zero && *_zero == a;
    }

    Table const& table() const noexcept {
      return _table;
    }
    std::vector<std::size_t> const& stars() const noexcept {
      return _star;
    }
    std::string const& name(std::size_t a) const {
      return _names[a];
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<std::size_t> index_of(std::string const& name) const;

    bool is_idempotent(std::size_t a) const {
      return _table[a][a] == a;
    }
    ElementSet const& idempotent_set() const noexcept {
      return _idempotents;
    }
    std::vector<std::size_t> const& idempotent_list() const noexcept {
      return _idem_list;
    }

    // Natural partial order g <= h iff g = e h for some idempotent e.
    bool leq(std::size_t g, std::size_t h) const {
      return _leq[g * size() + h];
    }

    ElementSet empty_set() const {
      return ElementSet(size());
    }
    ElementSet full_set() const {
      return ElementSet(size()).set();
    }

   private:
    FiniteInvSgp() = default;

    Table                      _table;
    std::vector<std::size_t>   _star;
    std::size_t                _unit = 0;
    std::optional<std::size_t> _zero;
    std::vector<std::string>   _names;
    ElementSet                 _idempotents;
    std::vector<std::size_t>   _idem_list;
    std::vector<bool>          _leq;
  };

  using SgpPtr = std::shared_ptr<FiniteInvSgp const>;

  FiniteInvSgp validate(Table                      table,
                        std::size_t                unit,
                        std::optional<std::size_t> zero = std::nullopt);

  ElementSet idempotents(FiniteInvSgp const& s);
  bool       leq(FiniteInvSgp const& s, std::size_t g, std::size_t h);
  bool       is_e_unitary(FiniteInvSgp const& s);
  // The same condition inside the subsemigroup `sub`.
  bool       is_e_unitary(FiniteInvSgp const& s, ElementSet const& sub);

  // Smallest subset containing gens and the unit, closed under product and star.
  ElementSet generate(FiniteInvSgp const& s, ElementSet const& gens);

  bool is_subsemigroup(FiniteInvSgp const& s, ElementSet const& h);

  // Standard families; see builders.cpp for the kind strings.
  //   chain:n  diamond  boolean:k  cyclic:n  symmetric_group:n  group_with_zero:n
  //   brandt_unital:n  symmetric_inverse:n  product:A,B  adjoin_zero:A  trivial
  FiniteInvSgp build(std::string const& kind, std::string const& params);
  // "kind" or "kind:params".
  FiniteInvSgp build_spec(std::string const& spec);

  // Semilattice from a meet table (must be a commutative idempotent
  // semigroup with a top element).
  FiniteInvSgp semilattice_from_meet(Table meet, std::vector<std::string> names = {});
  FiniteInvSgp direct_product(FiniteInvSgp const& a, FiniteInvSgp const& b);
  FiniteInvSgp adjoin_zero(FiniteInvSgp const& a);

}  // namespace iskk
