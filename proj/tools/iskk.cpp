// iskk: command-line front end for the inverse-semigroup library.
//
// Exit status: 0 when every check passes, 1 when a verification fails,
// 2 on malformed input.

#include "iskk/corpus.hpp"
#include "iskk/error.hpp"
#include "iskk/induction.hpp"
#include "iskk/ktheory.hpp"
#include "iskk/serialize.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace iskk;

namespace {

  constexpr int exit_failed    = 1;
  constexpr int exit_malformed = 2;

  struct Options {
    bool                     json = false;
    bool                     timing = false;
    std::string              out;
    std::string              builder;
    std::string              semigroup;
    std::string              subsemigroup = "idempotents";
    std::vector<std::string> coeff{"c0x"};
    std::string              inner;
    std::string              crossed = "universal";
    std::string              l = "all";
    std::string              p;
    std::string              chain;
    std::size_t              point = 0;
    unsigned                 seed = 0;
  };

  // Reruns f, prefixing the field name to a malformed-input message.
  template <class F>
  auto field(std::string const& name, F&& f) {
    try {
      return f();
    } catch (Error const& e) {
      if (e.code() != ErrorCode::MalformedInput) {
        throw;
      }
      std::string what = e.what();
      throw Error(ErrorCode::MalformedInput,
                  "field '" + name + "': " + what.substr(what.find(": ") + 2));
    }
  }

  bool is_input_error(ErrorCode c) {
    switch (c) {
      case ErrorCode::MalformedInput:
      case ErrorCode::UnknownBuilder:
      case ErrorCode::UnsupportedSize:
      case ErrorCode::NotAssociative:
      case ErrorCode::NoUniqueInverse:
      case ErrorCode::IdempotentsDontCommute:
      case ErrorCode::BadUnit:
      case ErrorCode::BadZero:
      case ErrorCode::NotSubsemigroup:
      case ErrorCode::ChainTooLong:
        return true;
      default:
        return false;
    }
  }

  class Session {
   public:
    explicit Session(Options const& o) : _o(o) {}

    SpectrumPtr spectrum() {
      if (!_x) {
        _x = std::make_shared<Spectrum const>(std::make_shared<FiniteInvSgp const>(load()));
      }
      return _x;
    }
    FiniteInvSgp const& semigroup() {
      return spectrum()->semigroup();
    }
    ActingPtr G() {
      return ActingSet::plain(spectrum());
    }

    ElementSet set(std::string const& name, std::string const& spec) {
      if (spec.empty()) {
        return semigroup().empty_set();
      }
      return field(name, [&] { return parse_element_set(semigroup(), spec); });
    }
    ElementSet sub() {
      return set("subsemigroup", _o.subsemigroup);
    }
    ActingPtr H() {
      return assoc_groupoid(spectrum(), sub());
    }

    GAlgebra coeff(ActingPtr acting, std::size_t i = 0) {
      return field("coeff", [&] { return parse_coefficient(std::move(acting), _o.coeff.at(i)); });
    }

    // An H-algebra: units | trivial | res:<coefficient>.
    GAlgebra inner(ActingPtr h, std::string const& fallback) {
      auto const spec = _o.inner.empty() ? fallback : _o.inner;
      return field("inner", [&] {
        if (spec == "units") {
          return unit_space_algebra(h);
        }
        if (spec == "trivial") {
          return trivial_coefficient(G(), h);
        }
        if (spec.rfind("res:", 0) == 0) {
          return restrict(parse_coefficient(G(), spec.substr(4)), h);
        }
        throw Error(ErrorCode::MalformedInput, "unknown H-algebra " + spec);
      });
    }

    CrossedKind kind() {
      return field("crossed", [&] { return parse_crossed_kind(_o.crossed); });
    }

    Options const& options() const {
      return _o;
    }

   private:
    FiniteInvSgp load() {
      if (_o.builder.empty() == _o.semigroup.empty()) {
        throw Error(ErrorCode::MalformedInput,
                    "field 'builder': give exactly one of --builder or --semigroup");
      }
      if (!_o.builder.empty()) {
        return build_spec(_o.builder);
      }
      std::ifstream in(_o.semigroup);
      if (!in) {
        throw Error(ErrorCode::MalformedInput, "field 'semigroup': cannot read " + _o.semigroup);
      }
      Json j;
      try {
        in >> j;
      } catch (Json::exception const& e) {
        throw Error(ErrorCode::MalformedInput, std::string("field 'semigroup': ") + e.what());
      }
      return semigroup_from_json(j);
    }

    Options     _o;
    SpectrumPtr _x;
  };

  std::string label(Session& s) {
    auto const& o = s.options();
    return o.builder.empty() ? o.semigroup : o.builder;
  }

  Json names(FiniteInvSgp const& s, std::vector<std::size_t> const& v) {
    Json out = Json::array();
    for (auto g : v) {
      out.push_back(s.name(g));
    }
    return out;
  }

  Report cmd_validate(Session& s, bool with_sub) {
    Report      r("semigroup " + label(s));
    auto const& g = s.semigroup();
    r.add("inverse semigroup axioms", true);
    r.set("size", g.size());
    r.set("unit", g.name(g.unit()));
    r.set("zero", g.zero() ? Json(g.name(*g.zero())) : Json());
    r.set("idempotents", members(idempotents(g)).size());
    r.set("e_unitary", is_e_unitary(g));
    r.set("characters", s.spectrum()->size());
    if (with_sub) {
      auto h = s.sub();
      bool ok = is_subsemigroup(g, h);
      r.add("subsemigroup", ok, to_json(g, h));
      if (ok) {
        r.set("subsemigroup_e_unitary", is_e_unitary(g, h));
      }
    }
    return r;
  }

  Report cmd_idempotents(Session& s) {
    Report r("idempotents of " + label(s));
    r.set("idempotents", to_json(s.semigroup(), idempotents(s.semigroup())));
    return r;
  }

  Report cmd_order(Session& s) {
    Report      r("natural partial order of " + label(s));
    auto const& g = s.semigroup();
    Json        pairs = Json::array();
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (a != b && leq(g, a, b)) {
          pairs.push_back({g.name(a), g.name(b)});
        }
      }
    }
    r.set("below", pairs);
    return r;
  }

  Report cmd_characters(Session& s) {
    Report      r("characters of " + label(s));
    auto const& x = *s.spectrum();
    auto const& g = x.semigroup();
    Json        out = Json::array();
    for (std::size_t c = 0; c < x.size(); ++c) {
      std::vector<std::size_t> support;
      for (auto e : members(idempotents(g))) {
        if (x.eval(c, e)) {
          support.push_back(e);
        }
      }
      out.push_back({{"generator", g.name(x.generator(c))}, {"support", names(g, support)}});
    }
    r.set("characters", out);
    return r;
  }

  Report cmd_econt(Session& s) {
    Report      r("E-continuous suprema of " + label(s));
    auto const& x = *s.spectrum();
    auto const& g = x.semigroup();
    Json        out = Json::object();
    for (std::size_t k = 0; k < g.size(); ++k) {
      auto [f, below] = e_cont_sup(x, k);
      out[g.name(k)]  = {{"sup", to_json(x, f)}, {"maximal", to_json(g, below)}};
    }
    r.set("econt", out);
    return r;
  }

  Report cmd_gram(Session& s) {
    Report r("Gram matrix of " + label(s));
    r.set("gram", to_json(gram(*s.spectrum()), *s.spectrum()));
    return r;
  }

  Report cmd_psd(Session& s) {
    Report r("positivity of " + label(s));
    r.merge(check_psd(gram(*s.spectrum())), "psd: ");
    r.merge(check_independence(*s.spectrum()), "independence: ");
    return r;
  }

  Report cmd_induce(Session& s) {
    auto G = s.G();
    auto H = s.H();
    auto d = s.inner(H, "res:" + s.options().coeff.front());
    InducedAlgebra ind(compute_GH(G, H), d);
    Report r("Ind of " + d.label() + " over " + label(s));
    r.merge(validate_g_algebra(ind.algebra()));
    auto const& sp = ind.space();
    Json        points = Json::array();
    for (std::size_t i = 0; i < sp.size(); ++i) {
      points.push_back(sp.name(i));
    }
    r.set("dim", ind.algebra().dim());
    r.set("points", points);
    r.set("classes", sp.classes.size());
    if (s.options().json) {
      r.set("algebra", to_json(ind.algebra()));
    }
    return r;
  }

  Report cmd_crossed(Session& s) {
    auto kind = s.kind();
    auto cp   = crossed(s.coeff(s.G()), kind);
    Report r("crossed product over " + label(s));
    r.merge(validate_algebra(cp.algebra));
    r.set("kind", std::string(to_string(kind)));
    r.set("dim", cp.algebra.dim());
    r.set("universal_dim", cp.universal_dim);
    r.set("blocks", to_json(blocks(cp.algebra, true, s.options().seed)));
    if (s.options().json) {
      r.set("algebra", to_json(cp.algebra));
    }
    return r;
  }

  Report cmd_k0(Session& s) {
    auto   kind = s.kind();
    auto   cp   = crossed(s.coeff(s.G()), kind);
    auto   k    = k0(cp.algebra, true, s.options().seed);
    Report r("K0 of the " + std::string(to_string(kind)) + " crossed product over " + label(s));
    r.add("K0 computed", true);
    auto const j = k.to_json();
    for (auto const& [key, v] : j.items()) {
      r.set(key, v);
    }
    return r;
  }

  Report theta_report(ThetaResult const& t) {
    Report r = t.report;
    r.set("source_dim", t.source_dim);
    r.set("target_dim", t.target_dim);
    return r;
  }

  Report cmd_verify(Session& s, std::string const& id) {
    auto x = s.spectrum();
    if (id == "theta-res-ind") {
      return theta_report(theta_res_ind(s.G(), s.H(), s.coeff(s.G())));
    }
    if (id == "theta-tensor") {
      auto G   = s.G();
      auto H   = s.H();
      auto a   = s.inner(H, "res:c0x");
      auto b   = s.coeff(G);
      auto r   = theta_report(theta_res_ind_tensor(G, H, a, b));
      auto dec = central_decomp_tensor(G, H, a, b);
      r.merge(dec.report, "p: ");
      r.add("corner and complement fill the tensor",
            dec.corner_dim + dec.complement_dim == dec.tensor.dim(),
            {{"corner", dec.corner_dim}, {"complement", dec.complement_dim}});
      return r;
    }
    if (id == "technical-split") {
      auto up = s.sub();
      auto sp = compute_GH(s.G(), assoc_groupoid(x, up));
      if (s.options().point >= sp->size()) {
        throw Error(ErrorCode::MalformedInput, "field 'point': only " +
                                                   std::to_string(sp->size()) + " points");
      }
      auto const& g   = sp->points[s.options().point];
      auto        res = technical_split(x, up, s.set("l", s.options().l), g, s.coeff(s.G()));
      Report      r   = res.report;
      r.set("g", x->name(g));
      Json m = Json::array();
      for (auto const& e : res.M) {
        m.push_back(x->name(e));
      }
      r.set("M", m);
      r.set("Lprime", to_json(x->semigroup(), res.Lprime));
      r.set("source_dim", res.source_dim);
      r.set("target_dim", res.target_dim);
      return r;
    }
    if (id == "res-ind-split") {
      auto   res = res_ind_split(x, s.sub(), s.set("l", s.options().l), s.coeff(s.G()));
      Report r   = res.report;
      Json   j   = Json::array();
      for (auto const& g : res.J) {
        j.push_back(x->name(g));
      }
      r.set("J", j);
      r.set("summand_dims", res.summand_dims);
      r.set("total_dim", res.total_dim);
      return r;
    }
    if (id == "ci0") {
      std::vector<ElementSet> chain;
      auto const&             spec = s.options().chain;
      if (spec.empty()) {
        chain.push_back(s.sub());
      } else {
        std::istringstream in(spec);
        for (std::string part; std::getline(in, part, ';');) {
          chain.push_back(s.set("chain", part));
        }
      }
      auto   res = ci0_enumerate(x, chain);
      Report r   = res.report;
      Json   terms = Json::array();
      for (auto const& t : res.terms) {
        terms.push_back({{"units", t.H->idempotents().size()}, {"dim", t.A.dim()}});
      }
      r.set("terms", terms);
      r.set("total_dim", res.total_dim);
      r.set("ideal_dims", res.ideal_dims);
      r.set("oracle_ideal_dims", res.oracle_ideal_dims);
      return r;
    }
    if (id == "bprime") {
      auto const& g  = x->semigroup();
      auto        L  = generate(g, s.set("l", s.options().l));
      auto        P  = s.set("p", s.options().p);
      auto        lp = generate(g, L | P);
      auto        a  = s.coeff(ActingSet::plain(x, lp));
      auto        b  = s.coeff(ActingSet::plain(x, L), s.options().coeff.size() > 1 ? 1 : 0);
      auto        res = build_bprime(x, L, P, a, b);
      Report      r   = res.report;
      r.set("Lprime", to_json(g, res.Lprime));
      r.set("block_counts", res.block_counts);
      r.set("block_dims", res.block_dims);
      r.set("dim", res.bprime.dim());
      return r;
    }
    if (id == "imprimitivity") {
      return verify_imprimitivity(x, s.sub(), s.inner(s.H(), "units"));
    }
    if (id == "green-julg") {
      std::vector<GAlgebra> parts;
      for (std::size_t i = 0; i < s.options().coeff.size(); ++i) {
        parts.push_back(s.coeff(s.G(), i));
      }
      return verify_green_julg_diagram(x, s.sub(), parts);
    }
    if (id == "remark") {
      return verify_remark_counterexamples(x);
    }
    throw Error(ErrorCode::MalformedInput, "field 'id': unknown verification " + id);
  }

  void strip_timing(Json& j) {
    if (j.is_object()) {
      j.erase("seconds");
      for (auto& [k, v] : j.items()) {
        strip_timing(v);
      }
    } else if (j.is_array()) {
      for (auto& v : j) {
        strip_timing(v);
      }
    }
  }

  int cmd_corpus(Options const& o, std::ostream& os) {
    auto   results = run_corpus(o.seed);
    bool   ok      = true;
    Json   out     = Json::array();
    for (auto const& c : results) {
      ok = ok && c.passed();
      if (o.json) {
        Json j = {{"id", c.id}, {"title", c.title}, {"passed", c.passed()},
                  {"report", c.report.to_json()}};
        if (o.timing) {
          j["seconds"] = c.seconds;
        } else {
          strip_timing(j);
        }
        out.push_back(std::move(j));
      } else {
        char line[128];
        std::snprintf(line, sizeof line, "criterion %d %-44s %s  (%.2f s)\n", c.id,
                      c.title.c_str(), c.passed() ? "PASS" : "FAIL", c.seconds);
        os << line;
        if (!c.passed()) {
          os << c.report.to_text();
        }
      }
    }
    if (o.json) {
      os << Json{{"passed", ok}, {"criteria", out}}.dump(2) << '\n';
    }
    return ok ? 0 : exit_failed;
  }

  void emit(Options const& o, std::ostream& os, Report const& r) {
    if (o.json) {
      os << r.to_json().dump(2) << '\n';
    } else {
      os << r.to_text();
    }
  }

}  // namespace

int main(int argc, char** argv) {
  Options  o;
  CLI::App app{"Finite inverse semigroups, their crossed products and K0"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "JSON on stdout");
  app.add_option("--out", o.out, "write output to FILE");
  app.add_option("--builder", o.builder, "built-in semigroup, kind:params");
  app.add_option("--semigroup", o.semigroup, "semigroup table as a JSON file");
  auto* sub = app.add_option("--subsemigroup", o.subsemigroup,
                             "idempotents | unit | all | generated:a,b | a,b");
  app.add_option("--coeff", o.coeff, "trivial | c0x | point:e (repeatable)");
  app.add_option("--inner", o.inner, "H-algebra: units | trivial | res:<coeff>");
  app.add_option("--crossed", o.crossed, "universal | sieben | groupoid");
  app.add_option("--l", o.l, "the subsemigroup L");
  app.add_option("--p", o.p, "the idempotents P refining E(L)");
  app.add_option("--chain", o.chain, "subsemigroups separated by ';'");
  app.add_option("--point", o.point, "index of g in G_U");
  app.add_option("--seed", o.seed, "seed for the numeric fallback");
  app.add_flag("--timing", o.timing, "keep wall times in corpus JSON");

  std::string verify_id;
  for (auto const* verb : {"validate", "idempotents", "order", "characters", "econt", "gram", "psd",
                           "induce", "crossed", "k0", "corpus"}) {
    app.add_subcommand(verb);
  }
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("id", verify_id)
      ->required()
      ->check(CLI::IsMember({"theta-res-ind", "theta-tensor", "technical-split", "res-ind-split",
                             "ci0", "bprime", "imprimitivity", "green-julg", "remark"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_malformed;
  }

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      std::cerr << "iskk: field 'out': cannot write " << o.out << '\n';
      return exit_malformed;
    }
  }
  std::ostream& os = o.out.empty() ? std::cout : file;

  auto const verb = app.get_subcommands().front()->get_name();
  try {
    if (verb == "corpus") {
      return cmd_corpus(o, os);
    }
    Session s(o);
    Report  r("");
    if (verb == "validate") {
      r = cmd_validate(s, sub->count() > 0);
    } else if (verb == "idempotents") {
      r = cmd_idempotents(s);
    } else if (verb == "order") {
      r = cmd_order(s);
    } else if (verb == "characters") {
      r = cmd_characters(s);
    } else if (verb == "econt") {
      r = cmd_econt(s);
    } else if (verb == "gram") {
      r = cmd_gram(s);
    } else if (verb == "psd") {
      r = cmd_psd(s);
    } else if (verb == "induce") {
      r = cmd_induce(s);
    } else if (verb == "crossed") {
      r = cmd_crossed(s);
    } else if (verb == "k0") {
      r = cmd_k0(s);
    } else {
      r = cmd_verify(s, verify_id);
    }
    emit(o, os, r);
    return r.passed() ? 0 : exit_failed;
  } catch (Error const& e) {
    if (is_input_error(e.code())) {
      std::cerr << "iskk: " << e.what() << '\n';
      return exit_malformed;
    }
    Report r(verb);
    r.add("completed", false, {{"error", e.what()}});
    emit(o, os, r);
    return exit_failed;
  }
}
