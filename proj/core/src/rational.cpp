#include "iskk/rational.hpp"

#include "iskk/error.hpp"

#include <cctype>

namespace iskk {

  std::string_view to_string(ErrorCode code) {
    switch (code) {
      case ErrorCode::NotAssociative: return "NotAssociative";
      case ErrorCode::NoUniqueInverse: return "NoUniqueInverse";
      case ErrorCode::IdempotentsDontCommute: return "IdempotentsDontCommute";
      case ErrorCode::BadUnit: return "BadUnit";
      case ErrorCode::BadZero: return "BadZero";
      case ErrorCode::UnsupportedSize: return "UnsupportedSize";
      case ErrorCode::UnknownBuilder: return "UnknownBuilder";
      case ErrorCode::NotIdempotent: return "NotIdempotent";
      case ErrorCode::NotSubsemigroup: return "NotSubsemigroup";
      case ErrorCode::InvalidCoefficientAlgebra: return "InvalidCoefficientAlgebra";
      case ErrorCode::NotEquivariant: return "NotEquivariant";
      case ErrorCode::NotCentral: return "NotCentral";
      case ErrorCode::InvalidAction: return "InvalidAction";
      case ErrorCode::CenterDoesNotSplit: return "CenterDoesNotSplit";
      case ErrorCode::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
      case ErrorCode::NotSemisimple: return "NotSemisimple";
      case ErrorCode::HypothesesNotMet: return "HypothesesNotMet";
      case ErrorCode::ChainTooLong: return "ChainTooLong";
      case ErrorCode::NotEUnitary: return "NotEUnitary";
      case ErrorCode::MalformedInput: return "MalformedInput";
      case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    }
    return "Unknown";
  }

  std::string to_string(Rational const& x) {
    return x.get_str();
  }

  Rational parse_rational(std::string const& text) {
    auto bad = [&]() {
      return Error(ErrorCode::MalformedInput, "not a rational: '" + text + "'");
    };
    if (text.empty()) {
      throw bad();
    }
    auto slash = text.find('/');
    auto check_int = [&](std::string const& s) {
      std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (i == s.size()) {
        throw bad();
      }
      for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
          throw bad();
        }
      }
    };
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    check_int(num);
    check_int(den);
    if (num[0] == '+') {
      num = num.substr(1);
    }
    Rational r;
    r.get_num() = mpz_class(num);
    r.get_den() = mpz_class(den);
    if (r.get_den() == 0) {
      throw bad();
    }
    r.canonicalize();
    return r;
  }

}  // namespace iskk
