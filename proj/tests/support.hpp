#pragma once

#include "iskk/galgebra.hpp"

#include <initializer_list>
#include <string>

namespace iskk::test {

  inline SpectrumPtr spectrum_of(std::string const& spec) {
    return std::make_shared<Spectrum const>(std::make_shared<FiniteInvSgp const>(build_spec(spec)));
  }

  inline ElementSet subset(FiniteInvSgp const& s, std::initializer_list<char const*> names) {
    ElementSet out = s.empty_set();
    for (auto const* n : names) {
      out.set(s.index_of(n).value());
    }
    return out;
  }


}  // namespace iskk::test
