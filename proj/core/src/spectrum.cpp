#include "iskk/spectrum.hpp"

#include "iskk/error.hpp"

namespace iskk {

  Spectrum::Spectrum(SgpPtr s) : _s(std::move(s)), _char_of(_s->size()) {
    for (auto e : _s->idempotent_list()) {
      if (!_s->is_zero(e)) {
        _char_of[e] = _gen.size();
        _gen.push_back(e);
      }
    }
    _proj.assign(_s->size(), ProjectionSet(_gen.size()));
    for (auto e : _s->idempotent_list()) {
      for (std::size_t c = 0; c < _gen.size(); ++c) {
        if (_s->mul(_gen[c], e) == _gen[c]) {
          _proj[e].set(c);
        }
      }
    }
  }

  std::vector<Character> Spectrum::characters() const {
    std::vector<Character> out;
    for (auto f : _gen) {
      out.push_back({f});
    }
    return out;
  }

  bool Spectrum::eval(std::size_t chi, std::size_t e) const {
    return proj(e).test(chi);
  }

  ProjectionSet Spectrum::proj(std::size_t e) const {
    if (e >= _s->size() || !_s->is_idempotent(e)) {
      throw Error(ErrorCode::NotIdempotent,
                  (e < _s->size() ? _s->name(e) : std::to_string(e))
                      + " is not an idempotent");
    }
    return _proj[e];
  }

  ProjectionSet Spectrum::act_proj(std::size_t g, ProjectionSet const& P) const {
    ProjectionSet out(size());
    auto const    gs  = _s->star(g);
    auto const&   dom = _proj[_s->mul(gs, g)];
    for (auto c = P.find_first(); c != ProjectionSet::npos; c = P.find_next(c)) {
      if (dom.test(c)) {
        out.set(*_char_of[_s->mul(_s->mul(g, _gen[c]), gs)]);
      }
    }
    return out;
  }

  AlgStar Spectrum::indicator(ProjectionSet const& P) const {
    AlgStar v(size());
    for (std::size_t c = 0; c < size(); ++c) {
      v[c] = P.test(c) ? 1 : 0;
    }
    return v;
  }

  ExtendedElement Spectrum::canonical(std::size_t g, ProjectionSet P) const {
    P &= _proj[_s->mul(_s->star(g), g)];
    if (P.none()) {
      return zero();
    }
    std::vector<std::size_t> fs;
    for (auto c = P.find_first(); c != ProjectionSet::npos; c = P.find_next(c)) {
      fs.push_back(_gen[c]);
    }
    for (std::size_t h = 0; h < g; ++h) {
      bool same = true;
      for (auto f : fs) {
        if (_s->mul(h, f) != _s->mul(g, f)) {
          same = false;
          break;
        }
      }
      if (same) {
        return {h, std::move(P)};
      }
    }
    return {g, std::move(P)};
  }

  ExtendedElement Spectrum::embed(std::size_t g) const {
    return canonical(g, _proj[_s->mul(_s->star(g), g)]);
  }

  ExtendedElement Spectrum::tilde_mul(ExtendedElement const& a,
                                      ExtendedElement const& b) const {
    auto const gh = _s->mul(a.g, b.g);
    auto       P  = act_proj(_s->star(b.g), a.P);
    P &= b.P;
    return canonical(gh, std::move(P));
  }

  ExtendedElement Spectrum::tilde_star(ExtendedElement const& a) const {
    return canonical(_s->star(a.g), act_proj(a.g, a.P));
  }

  ExtendedElement Spectrum::source(ExtendedElement const& a) const {
    return canonical(_s->unit(), a.P);
  }

  ExtendedElement Spectrum::range(ExtendedElement const& a) const {
    return canonical(_s->unit(), act_proj(a.g, a.P));
  }

  std::string Spectrum::name(ProjectionSet const& P) const {
    std::string out = "{";
    bool        first = true;
    for (auto c = P.find_first(); c != ProjectionSet::npos; c = P.find_next(c)) {
      out += (first ? "" : ",") + _s->name(_gen[c]);
      first = false;
    }
    return out + "}";
  }

  std::string Spectrum::name(ExtendedElement const& a) const {
    if (a.P.none()) {
      return "0~";
    }
    if (a.P == _proj[_s->mul(_s->star(a.g), a.g)]) {
      return _s->name(a.g);
    }
    return _s->name(a.g) + "·" + name(a.P);
  }

  std::vector<Character> characters(FiniteInvSgp const& s) {
    std::vector<Character> out;
    for (auto e : s.idempotent_list()) {
      if (!s.is_zero(e)) {
        out.push_back({e});
      }
    }
    return out;
  }

  ProjectionSet proj(Spectrum const& x, std::size_t e) {
    return x.proj(e);
  }

  ProjectionSet act_proj(Spectrum const& x, std::size_t g, ProjectionSet const& P) {
    return x.act_proj(g, P);
  }

  std::pair<AlgStar, ElementSet> e_cont_sup(Spectrum const& x, std::size_t g) {
    auto const&              s = x.semigroup();
    std::vector<std::size_t> below;
    for (auto e : s.idempotent_list()) {
      if (!s.is_zero(e) && s.leq(e, g)) {
        below.push_back(e);
      }
    }
    ElementSet    witness(s.size());
    ProjectionSet join = x.empty();
    for (auto e : below) {
      bool maximal = true;
      for (auto f : below) {
        if (f != e && s.leq(e, f)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        witness.set(e);
      }
      join |= x.proj(e);
    }
    return {x.indicator(join), witness};
  }

}  // namespace iskk
