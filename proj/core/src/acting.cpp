#include "iskk/acting.hpp"

#include "iskk/error.hpp"

namespace iskk {

  ActingSet::ActingSet(SpectrumPtr                             x,
                       std::vector<ExtendedElement>            elements,
                       std::vector<std::string>                names,
                       std::vector<std::optional<std::size_t>> plain,
                       bool                                    groupoid)
      : _x(std::move(x)),
        _elements(std::move(elements)),
        _names(std::move(names)),
        _plain(std::move(plain)),
        _groupoid(groupoid) {
    std::size_t const n = _elements.size();
    if (_names.size() != n || _plain.size() != n) {
      throw Error(ErrorCode::MalformedInput, "acting set bookkeeping size mismatch");
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (_elements[k].P.none()) {
        throw Error(ErrorCode::MalformedInput, "acting set contains the zero");
      }
      _index.emplace(_elements[k], k);
    }
    _mul.assign(n, std::vector<std::optional<std::size_t>>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto p = _x->tilde_mul(_elements[a], _elements[b]);
        if (p.P.none()) {
          continue;
        }
        auto it = _index.find(p);
        if (it == _index.end()) {
          throw Error(ErrorCode::NotSubsemigroup,
                      _names[a] + "·" + _names[b] + " = " + _x->name(p)
                          + " leaves the acting set");
        }
        _mul[a][b] = it->second;
      }
    }
    _star.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      auto it = _index.find(_x->tilde_star(_elements[a]));
      if (it == _index.end()) {
        throw Error(ErrorCode::NotSubsemigroup, _names[a] + "* leaves the acting set");
      }
      _star[a] = it->second;
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (_mul[a][a] == a) {
        _idempotents.push_back(a);
      }
    }
    for (std::size_t u = 0; u < n && !_unit; ++u) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        ok = _mul[u][a] == a && _mul[a][u] == a;
      }
      if (ok) {
        _unit = u;
      }
    }

    _support = _x->empty();
    for (auto e : _idempotents) {
      _support |= _elements[e].P;
    }
    std::map<std::vector<bool>, std::size_t> by_signature;
    for (std::size_t c = 0; c < _x->size(); ++c) {
      std::vector<bool> sig;
      for (auto e : _idempotents) {
        sig.push_back(_elements[e].P.test(c));
      }
      auto [it, fresh] = by_signature.emplace(sig, _atoms.size());
      if (fresh) {
        _atoms.push_back({_x->empty(), sig});
      }
      _atoms[it->second].points.set(c);
    }
  }

  ActingPtr ActingSet::plain(SpectrumPtr x) {
    return plain(x, x->semigroup().full_set());
  }

  ActingPtr ActingSet::plain(SpectrumPtr x, ElementSet const& sub) {
    auto const& s = x->semigroup();
    if (!is_subsemigroup(s, sub)) {
      throw Error(ErrorCode::NotSubsemigroup, "element set is not a unital subsemigroup");
    }
    std::vector<ExtendedElement>            els;
    std::vector<std::string>                names;
    std::vector<std::optional<std::size_t>> plain;
    for (auto g : members(sub)) {
      if (s.is_zero(g)) {
        continue;
      }
      els.push_back(x->embed(g));
      names.push_back(s.name(g));
      plain.push_back(g);
    }
    return std::make_shared<ActingSet const>(
        std::move(x), std::move(els), std::move(names), std::move(plain), false);
  }

  std::optional<std::size_t> ActingSet::index_of_plain(std::size_t g) const {
    for (std::size_t k = 0; k < _plain.size(); ++k) {
      if (_plain[k] == g) {
        return k;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> ActingSet::index_of(ExtendedElement const& a) const {
    auto it = _index.find(a);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

}  // namespace iskk
