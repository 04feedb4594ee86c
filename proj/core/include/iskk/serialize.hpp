#pragma once

// JSON formats and the small spec languages used on the command line.

#include "iskk/crossed.hpp"
#include "iskk/l2.hpp"
#include "iskk/report.hpp"

#include <string>

namespace iskk {

  // {"elements": [names], "table": [[indices]], "unit": name, "zero": name | null}
  FiniteInvSgp semigroup_from_json(Json const& j);
  Json         to_json(FiniteInvSgp const& s);

  // "p/q", or "p" for integers.
  Json     to_json(Rational const& r);
  Rational rational_from_json(Json const& j);

  Json to_json(FiniteInvSgp const& s, ElementSet const& set);
  // Sorted generating idempotent names of the characters in P.
  Json to_json(Spectrum const& x, ProjectionSet const& P);
  // {"character": value} over the support.
  Json to_json(Spectrum const& x, AlgStar const& f);
  Json to_json(Spectrum const& x, ExtendedElement const& a);
  Json to_json(GramMatrix const& gm, Spectrum const& x);

  // {"basis": names, "products": [[i, j, k, c]], "star": [[i, j, c]]}
  Json    to_json(Algebra const& a);
  Algebra algebra_from_json(Json const& j);
  // Algebra JSON plus "actions": {element name: [[i, j, c]]}.
  Json to_json(GAlgebra const& a);

  Json to_json(Blocks const& b);

  // idempotents | units | unit | all | generated:a,b,... | a,b,...
  ElementSet parse_element_set(FiniteInvSgp const& s, std::string const& spec);

  // trivial | c0x | point:<idempotent> over the acting set.
  GAlgebra parse_coefficient(ActingPtr acting, std::string const& spec);

}  // namespace iskk
