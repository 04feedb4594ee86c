#include "iskk/semigroup.hpp"

#include "iskk/error.hpp"

#include <sstream>

namespace iskk {

  std::vector<std::size_t> members(ElementSet const& s) {
    std::vector<std::size_t> out;
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
      out.push_back(i);
    }
    return out;
  }

  namespace {
    std::string nm(std::vector<std::string> const& names, std::size_t i) {
      return names[i];
    }
  }  // namespace

  FiniteInvSgp FiniteInvSgp::validate(Table                      table,
                                      std::size_t                unit,
                                      std::optional<std::size_t> zero,
                                      std::vector<std::string>   names) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw Error(ErrorCode::MalformedInput, "empty multiplication table");
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw Error(ErrorCode::MalformedInput,
                    "row " + std::to_string(a) + " has "
                        + std::to_string(table[a].size()) + " entries, expected "
                        + std::to_string(n));
      }
      for (auto v : table[a]) {
        if (v >= n) {
          throw Error(ErrorCode::MalformedInput,
                      "entry " + std::to_string(v) + " out of range in row "
                          + std::to_string(a));
        }
      }
    }
    if (unit >= n) {
      throw Error(ErrorCode::BadUnit, "unit index out of range");
    }
    if (zero && *zero >= n) {
      throw Error(ErrorCode::BadZero, "zero index out of range");
    }
    if (names.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
      }
    } else if (names.size() != n) {
      throw Error(ErrorCode::MalformedInput, "name count differs from table size");
    }

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto ab = table[a][b];
        for (std::size_t c = 0; c < n; ++c) {
          if (table[ab][c] != table[a][table[b][c]]) {
            throw Error(ErrorCode::NotAssociative,
                        "(" + nm(names, a) + "·" + nm(names, b) + ")·" + nm(names, c)
                            + " != " + nm(names, a) + "·(" + nm(names, b) + "·"
                            + nm(names, c) + ")");
          }
        }
      }
    }

    std::vector<std::size_t> star(n);
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<std::size_t> cand;
      for (std::size_t h = 0; h < n; ++h) {
        if (table[table[g][h]][g] == g && table[table[h][g]][h] == h) {
          cand.push_back(h);
        }
      }
      if (cand.size() != 1) {
        std::ostringstream os;
        os << nm(names, g) << " has " << cand.size() << " inverses";
        if (cand.size() > 1) {
          os << " (" << nm(names, cand[0]) << ", " << nm(names, cand[1]) << ")";
        }
        throw Error(ErrorCode::NoUniqueInverse, os.str());
      }
      star[g] = cand[0];
    }

    std::vector<std::size_t> idem;
    for (std::size_t e = 0; e < n; ++e) {
      if (table[e][e] == e) {
        idem.push_back(e);
      }
    }
    for (auto e : idem) {
      for (auto f : idem) {
        if (table[e][f] != table[f][e]) {
          throw Error(ErrorCode::IdempotentsDontCommute,
                      nm(names, e) + "·" + nm(names, f) + " != " + nm(names, f) + "·"
                          + nm(names, e));
        }
      }
    }

    for (std::size_t g = 0; g < n; ++g) {
      if (table[unit][g] != g || table[g][unit] != g) {
        throw Error(ErrorCode::BadUnit,
                    nm(names, unit) + " is not a unit: fails at " + nm(names, g));
      }
    }
    if (zero) {
      for (std::size_t g = 0; g < n; ++g) {
        if (table[*zero][g] != *zero || table[g][*zero] != *zero) {
          throw Error(ErrorCode::BadZero,
                      nm(names, *zero) + " is not a zero: fails at " + nm(names, g));
        }
      }
    }

    FiniteInvSgp s;
    s._table       = std::move(table);
    s._star        = std::move(star);
    s._unit        = unit;
    s._zero        = zero;
    s._names       = std::move(names);
    s._idempotents = ElementSet(n);
    for (auto e : idem) {
      s._idempotents.set(e);
    }
    s._idem_list = std::move(idem);
    s._leq.assign(n * n, false);
    // g <= h iff g = (g g*) h.
    for (std::size_t g = 0; g < n; ++g) {
      auto gg = s._table[g][s._star[g]];
      for (std::size_t h = 0; h < n; ++h) {
        s._leq[g * n + h] = s._table[gg][h] == g;
      }
    }
    return s;
  }

  std::optional<std::size_t> FiniteInvSgp::index_of(std::string const& name) const {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (_names[i] == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  FiniteInvSgp validate(Table table, std::size_t unit, std::optional<std::size_t> zero) {
    return FiniteInvSgp::validate(std::move(table), unit, zero);
  }

  ElementSet idempotents(FiniteInvSgp const& s) {
    return s.idempotent_set();
  }

  bool leq(FiniteInvSgp const& s, std::size_t g, std::size_t h) {
    return s.leq(g, h);
  }

  bool is_e_unitary(FiniteInvSgp const& s) {
    return is_e_unitary(s, s.full_set());
  }

  bool is_e_unitary(FiniteInvSgp const& s, ElementSet const& sub) {
    for (auto e : s.idempotent_list()) {
      if (s.is_zero(e) || !sub.test(e)) {
        continue;
      }
      for (auto g : members(sub)) {
        if (s.leq(e, g) && !s.is_idempotent(g)) {
          return false;
        }
      }
    }
    return true;
  }

  ElementSet generate(FiniteInvSgp const& s, ElementSet const& gens) {
    ElementSet out = gens;
    out.resize(s.size());
    out.set(s.unit());
    for (auto g : members(out)) {
      out.set(s.star(g));
    }
    std::vector<std::size_t> frontier = members(out);
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      auto const               current = members(out);
      for (auto a : frontier) {
        for (auto b : current) {
          for (auto p : {s.mul(a, b), s.mul(b, a)}) {
            if (!out.test(p)) {
              out.set(p);
              next.push_back(p);
            }
            auto q = s.star(p);
            if (!out.test(q)) {
              out.set(q);
              next.push_back(q);
            }
          }
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

  bool is_subsemigroup(FiniteInvSgp const& s, ElementSet const& h) {
    if (h.size() != s.size() || !h.test(s.unit())) {
      return false;
    }
    auto const m = members(h);
    for (auto a : m) {
      if (!h.test(s.star(a))) {
        return false;
      }
      for (auto b : m) {
        if (!h.test(s.mul(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace iskk
