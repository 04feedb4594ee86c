#pragma once

#include <gmpxx.h>

#include <string>

namespace iskk {

  using Rational = mpq_class;

  // "p/q" (or "p" for integers), always in lowest terms.
  std::string to_string(Rational const& x);

  // Accepts "p/q", "p", or a decimal integer with sign. Throws Error{MalformedInput}.
  Rational parse_rational(std::string const& text);

}  // namespace iskk
