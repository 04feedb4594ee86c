#include "iskk/l2.hpp"

namespace iskk {

  std::vector<std::size_t> phi_basis(FiniteInvSgp const& s) {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < s.size(); ++g) {
      if (!s.is_zero(g)) {
        out.push_back(g);
      }
    }
    return out;
  }

  ProjectionSet phi_inner_set(Spectrum const& x, std::size_t g, std::size_t h) {
    auto const& s     = x.semigroup();
    auto const  bound = s.mul(s.mul(g, s.star(g)), s.mul(h, s.star(h)));
    auto        out   = x.empty();
    for (auto e : s.idempotent_list()) {
      if (s.leq(e, bound) && s.mul(e, g) == s.mul(e, h)) {
        out |= x.proj(e);
      }
    }
    return out;
  }

  AlgStar phi_inner(Spectrum const& x, std::size_t g, std::size_t h) {
    return x.indicator(phi_inner_set(x, g, h));
  }

  Matrix GramMatrix::at(std::size_t chi) const {
    std::size_t const n = _basis.size();
    Matrix            m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (_entries[i][j].test(chi)) {
          m(i, j) = 1;
        }
      }
    }
    return m;
  }

  GramMatrix gram(Spectrum const& x) {
    auto basis = phi_basis(x.semigroup());
    std::vector<std::vector<ProjectionSet>> entries(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        entries[i].push_back(phi_inner_set(x, basis[i], basis[j]));
      }
    }
    return GramMatrix(std::move(basis), std::move(entries), x.size());
  }

  L2Vector l2_act(FiniteInvSgp const& s, std::size_t g, L2Vector const& v) {
    L2Vector out;
    for (auto const& [h, c] : v) {
      auto const gh = s.mul(g, h);
      if (s.is_zero(gh)) {
        continue;
      }
      out[gh] += c;
      if (out[gh] == 0) {
        out.erase(gh);
      }
    }
    return out;
  }

  Report check_psd(GramMatrix const& gm) {
    Report r("psd");
    for (std::size_t chi = 0; chi < gm.characters(); ++chi) {
      auto cert = ldlt_psd(gm.at(chi));
      Json detail{{"character", chi}, {"rank", cert.rank}};
      if (!cert.psd) {
        detail["reason"] = cert.reason;
        if (cert.failing_pivot) {
          detail["pivot"] = *cert.failing_pivot;
        }
      }
      r.add("psd at character " + std::to_string(chi), cert.psd, detail);
    }
    return r;
  }

  Report check_independence(Spectrum const& x) {
    Report            r("independence");
    auto const        gm = gram(x);
    std::size_t const n  = gm.basis().size();
    Echelon           ech(n);
    for (std::size_t chi = 0; chi < x.size(); ++chi) {
      auto m = gm.at(chi);
      for (std::size_t i = 0; i < n; ++i) {
        Vec row(n);
        for (std::size_t j = 0; j < n; ++j) {
          row[j] = m(i, j);
        }
        ech.insert(row);
      }
    }
    r.set("rank", ech.rank());
    r.set("basis_size", n);
    r.add("stacked Gram matrices have full column rank", ech.rank() == n,
          {{"rank", ech.rank()}, {"expected", n}});
    if (x.semigroup().zero()) {
      r.set("zero_excluded", true);
    }
    return r;
  }

  Report check_module_axioms(Spectrum const& x) {
    Report      r("module axioms");
    auto const& s = x.semigroup();
    auto const  n = s.size();
    std::vector<std::vector<ProjectionSet>> ip(n);
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        ip[g].push_back(phi_inner_set(x, g, h));
      }
    }

    Json sym_fail;
    for (std::size_t g = 0; g < n && sym_fail.is_null(); ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        if (ip[g][h] != ip[h][g]) {
          sym_fail = {{"g", s.name(g)}, {"h", s.name(h)}};
          break;
        }
      }
    }
    r.add("symmetry", sym_fail.is_null(), sym_fail);

    Json lin_fail;
    for (std::size_t g = 0; g < n && lin_fail.is_null(); ++g) {
      for (std::size_t h = 0; h < n && lin_fail.is_null(); ++h) {
        for (auto f : s.idempotent_list()) {
          if (ip[g][s.mul(f, h)] != (ip[g][h] & x.proj(f))) {
            lin_fail = {{"g", s.name(g)}, {"h", s.name(h)}, {"f", s.name(f)}};
            break;
          }
        }
      }
    }
    r.add("right C0(X)-linearity", lin_fail.is_null(), lin_fail);

    Json eq_fail;
    for (std::size_t j = 0; j < n && eq_fail.is_null(); ++j) {
      for (std::size_t g = 0; g < n && eq_fail.is_null(); ++g) {
        for (std::size_t h = 0; h < n; ++h) {
          if (x.act_proj(j, ip[g][h]) != ip[s.mul(j, g)][s.mul(j, h)]) {
            eq_fail = {{"j", s.name(j)}, {"g", s.name(g)}, {"h", s.name(h)}};
            break;
          }
        }
      }
    }
    r.add("equivariance", eq_fail.is_null(), eq_fail);
    r.set("triples", n * n * n);
    return r;
  }

}  // namespace iskk
