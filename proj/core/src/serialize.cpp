#include "iskk/serialize.hpp"

#include "iskk/error.hpp"

#include <algorithm>
#include <sstream>

namespace iskk {

  namespace {

    [[noreturn]] void malformed(std::string const& field, std::string const& what) {
      throw Error(ErrorCode::MalformedInput, "field '" + field + "': " + what);
    }

    Json const& require(Json const& j, std::string const& field) {
      if (!j.is_object() || !j.contains(field)) {
        malformed(field, "missing");
      }
      return j.at(field);
    }

    std::size_t index_in(std::vector<std::string> const& names, Json const& j,
                         std::string const& field) {
      if (!j.is_string()) {
        malformed(field, "expected an element name");
      }
      auto it = std::find(names.begin(), names.end(), j.get<std::string>());
      if (it == names.end()) {
        malformed(field, "unknown element " + j.get<std::string>());
      }
      return static_cast<std::size_t>(it - names.begin());
    }

    std::vector<std::string> split(std::string const& text, char sep) {
      std::vector<std::string> out;
      std::stringstream        in(text);
      std::string              part;
      while (std::getline(in, part, sep)) {
        if (!part.empty()) {
          out.push_back(part);
        }
      }
      return out;
    }

    std::size_t element(FiniteInvSgp const& s, std::string const& name) {
      auto i = s.index_of(name);
      if (!i) {
        throw Error(ErrorCode::MalformedInput, "unknown element " + name);
      }
      return *i;
    }

  }  // namespace

  FiniteInvSgp semigroup_from_json(Json const& j) {
    auto const& el = require(j, "elements");
    if (!el.is_array() || el.empty()) {
      malformed("elements", "expected a nonempty array of names");
    }
    std::vector<std::string> names;
    for (auto const& e : el) {
      if (!e.is_string()) {
        malformed("elements", "expected names");
      }
      names.push_back(e.get<std::string>());
    }
    std::size_t const n = names.size();
    auto const&       t = require(j, "table");
    if (!t.is_array() || t.size() != n) {
      malformed("table", "expected " + std::to_string(n) + " rows");
    }
    Table table;
    for (auto const& row : t) {
      if (!row.is_array() || row.size() != n) {
        malformed("table", "expected rows of length " + std::to_string(n));
      }
      std::vector<std::size_t> r;
      for (auto const& v : row) {
        if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<std::size_t>() >= n) {
          malformed("table", "entries must be element indices below " + std::to_string(n));
        }
        r.push_back(v.get<std::size_t>());
      }
      table.push_back(std::move(r));
    }
    auto                       unit = index_in(names, require(j, "unit"), "unit");
    std::optional<std::size_t> zero;
    if (j.contains("zero") && !j.at("zero").is_null()) {
      zero = index_in(names, j.at("zero"), "zero");
    }
    return FiniteInvSgp::validate(std::move(table), unit, zero, std::move(names));
  }

  Json to_json(FiniteInvSgp const& s) {
    return {{"elements", s.names()},
            {"table", s.table()},
            {"unit", s.name(s.unit())},
            {"zero", s.zero() ? Json(s.name(*s.zero())) : Json(nullptr)}};
  }

  Json to_json(Rational const& r) {
    return r.get_str();
  }

  Rational rational_from_json(Json const& j) {
    if (j.is_number_integer()) {
      return Rational(j.get<long>());
    }
    if (!j.is_string()) {
      throw Error(ErrorCode::MalformedInput, "expected a rational \"p/q\"");
    }
    auto const text  = j.get<std::string>();
    auto const slash = text.find('/');
    // gmpxx canonicalizes on construction, which traps on a zero denominator.
    if (slash != std::string::npos &&
        text.find_first_not_of('0', slash + 1) == std::string::npos) {
      throw Error(ErrorCode::MalformedInput, "bad rational " + text);
    }
    try {
      return Rational(text);
    } catch (std::invalid_argument const&) {
      throw Error(ErrorCode::MalformedInput, "bad rational " + j.get<std::string>());
    }
  }

  Json to_json(FiniteInvSgp const& s, ElementSet const& set) {
    Json out = Json::array();
    for (auto g : members(set)) {
      out.push_back(s.name(g));
    }
    return out;
  }

  Json to_json(Spectrum const& x, ProjectionSet const& P) {
    std::vector<std::string> names;
    for (auto c = P.find_first(); c != ProjectionSet::npos; c = P.find_next(c)) {
      names.push_back(x.semigroup().name(x.generator(c)));
    }
    std::sort(names.begin(), names.end());
    return names;
  }

  Json to_json(Spectrum const& x, AlgStar const& f) {
    Json out = Json::object();
    for (std::size_t c = 0; c < f.size(); ++c) {
      if (f[c] != 0) {
        out[x.semigroup().name(x.generator(c))] = to_json(f[c]);
      }
    }
    return out;
  }

  Json to_json(Spectrum const& x, ExtendedElement const& a) {
    return {{"g", x.semigroup().name(a.g)}, {"P", to_json(x, a.P)}, {"name", x.name(a)}};
  }

  Json to_json(GramMatrix const& gm, Spectrum const& x) {
    auto const& s    = x.semigroup();
    Json        rows = Json::array();
    for (std::size_t i = 0; i < gm.basis().size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < gm.basis().size(); ++j) {
        AlgStar f(x.size());
        auto const& P = gm.entry(i, j);
        for (auto c = P.find_first(); c != ProjectionSet::npos; c = P.find_next(c)) {
          f[c] = 1;
        }
        row.push_back(to_json(x, f));
      }
      rows.push_back(std::move(row));
    }
    Json basis = Json::array();
    for (auto g : gm.basis()) {
      basis.push_back(s.name(g));
    }
    return {{"basis", basis}, {"entries", rows}};
  }

  Json to_json(Algebra const& a) {
    Json products = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        for (auto const& [k, c] : a.product(i, j)) {
          products.push_back({i, j, k, to_json(c)});
        }
      }
    }
    Json star = Json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (auto const& [i, c] : a.star_matrix().column(j)) {
        star.push_back({i, j, to_json(c)});
      }
    }
    return {{"basis", a.names()}, {"products", products}, {"star", star}};
  }

  Algebra algebra_from_json(Json const& j) {
    auto const& b = require(j, "basis");
    if (!b.is_array()) {
      malformed("basis", "expected an array of names");
    }
    std::vector<std::string> names;
    for (auto const& n : b) {
      if (!n.is_string()) {
        malformed("basis", "expected names");
      }
      names.push_back(n.get<std::string>());
    }
    std::size_t const n = names.size();
    auto              index = [&](Json const& v, std::string const& field) {
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<std::size_t>() >= n) {
        malformed(field, "basis index out of range");
      }
      return v.get<std::size_t>();
    };
    std::vector<std::vector<SparseRow>> products(n, std::vector<SparseRow>(n));
    for (auto const& t : require(j, "products")) {
      if (!t.is_array() || t.size() != 4) {
        malformed("products", "expected [i, j, k, c] triplets");
      }
      auto& row = products[index(t[0], "products")][index(t[1], "products")];
      row = add_scaled(row, rational_from_json(t[3]), {{index(t[2], "products"), Rational(1)}});
    }
    std::vector<SparseRow> star(n);
    for (auto const& t : require(j, "star")) {
      if (!t.is_array() || t.size() != 3) {
        malformed("star", "expected [i, j, c] entries");
      }
      auto& col = star[index(t[1], "star")];
      col = add_scaled(col, rational_from_json(t[2]), {{index(t[0], "star"), Rational(1)}});
    }
    return Algebra(std::move(names), std::move(products),
                   SparseMatrix::from_columns(n, std::move(star)));
  }

  Json to_json(GAlgebra const& a) {
    Json out     = to_json(a.algebra());
    Json actions = Json::object();
    for (std::size_t k = 0; k < a.acting().size(); ++k) {
      Json m = Json::array();
      for (std::size_t j = 0; j < a.dim(); ++j) {
        for (auto const& [i, c] : a.action(k).column(j)) {
          m.push_back({i, j, to_json(c)});
        }
      }
      actions[a.acting().name(k)] = std::move(m);
    }
    out["actions"] = std::move(actions);
    out["label"]   = a.label();
    return out;
  }

  Json to_json(Blocks const& b) {
    Json out{{"radical_dim", b.ss.radical_dim},
             {"quotient_dim", b.ss.quotient.algebra.dim()},
             {"center_dim", b.ss.center_dim},
             {"blocks", b.count()},
             {"block_dims", b.sizes},
             {"method", to_string(b.method)}};
    if (!b.witness.empty()) {
      out["witness"] = b.witness;
    }
    if (b.method == BlockMethod::numeric) {
      out["residual"] = b.residual;
    }
    return out;
  }

  ElementSet parse_element_set(FiniteInvSgp const& s, std::string const& spec) {
    if (spec == "idempotents") {
      return s.idempotent_set();
    }
    if (spec == "all") {
      return s.full_set();
    }
    ElementSet out = s.empty_set();
    if (spec == "unit") {
      out.set(s.unit());
      return out;
    }
    if (spec == "units") {
      for (std::size_t g = 0; g < s.size(); ++g) {
        if (s.mul(g, s.star(g)) == s.unit() && s.mul(s.star(g), g) == s.unit()) {
          out.set(g);
        }
      }
      return out;
    }
    if (spec.rfind("generated:", 0) == 0) {
      for (auto const& n : split(spec.substr(10), ',')) {
        out.set(element(s, n));
      }
      return generate(s, out);
    }
    auto names = split(spec, ',');
    if (names.empty()) {
      throw Error(ErrorCode::MalformedInput, "empty element set");
    }
    for (auto const& n : names) {
      out.set(element(s, n));
    }
    return out;
  }

  GAlgebra parse_coefficient(ActingPtr acting, std::string const& spec) {
    if (spec == "trivial") {
      return trivial_algebra(std::move(acting));
    }
    if (spec == "c0x") {
      return c0x(std::move(acting));
    }
    if (spec.rfind("point:", 0) == 0) {
      auto const& x = acting->spectrum();
      auto        e = element(x.semigroup(), spec.substr(6));
      auto        c = x.character_of(e);
      if (!x.semigroup().is_idempotent(e) || !c) {
        throw Error(ErrorCode::MalformedInput, spec.substr(6) + " is not a nonzero idempotent");
      }
      return point_algebra(std::move(acting), *c);
    }
    throw Error(ErrorCode::MalformedInput, "unknown coefficient " + spec);
  }

}  // namespace iskk
