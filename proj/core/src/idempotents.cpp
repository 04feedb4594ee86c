#include "iskk/algebra.hpp"
#include "iskk/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace iskk {

  namespace {
    Rational eval(Polynomial const& p, Rational const& x) {
      Rational acc = 0;
      for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x + *it;
      }
      return acc;
    }

    // p / (x - r), assuming r is a root.
    Polynomial deflate(Polynomial const& p, Rational const& r) {
      Polynomial q(p.size() - 1);
      Rational   carry = 0;
      for (std::size_t k = p.size() - 1; k-- > 0;) {
        carry = p[k + 1] + carry * r;
        q[k]  = carry;
      }
      return q;
    }

    // Best rational approximation with denominator at most `bound`.
    Rational approximate(long double x, long bound) {
      long        h0 = 0, h1 = 1, k0 = 1, k1 = 0;
      long double y  = x;
      for (int it = 0; it < 64; ++it) {
        long double fl = std::floor(y);
        if (std::fabs(fl) > 1e15L) {
          break;
        }
        long a  = static_cast<long>(fl);
        long h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > bound) {
          break;
        }
        h0 = h1, h1 = h2, k0 = k1, k1 = k2;
        if (std::fabs(y - fl) < 1e-12L) {
          break;
        }
        y = 1 / (y - fl);
      }
      Rational r(h1, k1);
      r.canonicalize();
      return r;
    }
  }  // namespace

  Polynomial minimal_polynomial(Algebra const& a, SparseRow const& x, SparseRow const& e) {
    std::vector<SparseRow> powers{e};
    Echelon                span(a.dim());
    span.insert(e);
    while (true) {
      auto next = a.mul(x, powers.back());
      if (span.insert(next)) {
        powers.push_back(std::move(next));
        continue;
      }
      Matrix m(a.dim(), powers.size() + 1);
      for (std::size_t k = 0; k < powers.size(); ++k) {
        for (auto const& [i, v] : powers[k]) {
          m(i, k) = v;
        }
      }
      for (auto const& [i, v] : next) {
        m(i, powers.size()) = v;
      }
      auto ns = nullspace(m);
      if (ns.size() != 1) {
        throw Error(ErrorCode::MalformedInput, "minimal polynomial is not unique");
      }
      Polynomial p    = ns.front();
      Rational   lead = p.back();
      for (auto& c : p) {
        c /= lead;
      }
      return p;
    }
  }

  std::string to_string(Polynomial const& p) {
    std::ostringstream out;
    bool               first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
      if (p[k] == 0) {
        continue;
      }
      Rational c = p[k];
      if (!first) {
        out << (c < 0 ? "-" : "+");
        c = abs(c);
      } else if (c < 0 && k > 0) {
        out << "-";
        c = abs(c);
      }
      if (c != 1 || k == 0) {
        out << to_string(c);
      }
      if (k > 0) {
        out << "x";
      }
      if (k > 1) {
        out << "^" << k;
      }
      first = false;
    }
    return first ? "0" : out.str();
  }

  std::pair<std::vector<Rational>, Polynomial> rational_roots(Polynomial p) {
    std::vector<Rational> roots;
    while (p.size() > 1 && p.front() == 0) {
      if (roots.empty() || roots.back() != 0) {
        roots.push_back(0);
      }
      p.erase(p.begin());
    }
    bool progress = true;
    while (p.size() > 1 && progress) {
      progress             = false;
      std::size_t const  d = p.size() - 1;
      Eigen::MatrixXd    comp = Eigen::MatrixXd::Zero(d, d);
      for (std::size_t i = 0; i < d; ++i) {
        if (i + 1 < d) {
          comp(i + 1, i) = 1;
        }
        comp(i, d - 1) = -Rational(p[i] / p[d]).get_d();
      }
      Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
      for (auto const& z : es.eigenvalues()) {
        if (std::abs(z.imag()) > 1e-6) {
          continue;
        }
        auto r = approximate(z.real(), 1000000);
        if (eval(p, r) == 0) {
          p = deflate(p, r);
          roots.push_back(r);
          progress = true;
          break;
        }
      }
    }
    std::sort(roots.begin(), roots.end());
    return {roots, p};
  }

  std::vector<SparseRow> minimal_idempotents(Algebra const& a, std::vector<SparseRow> const& span,
                                             SparseRow const& e) {
    std::vector<SparseRow> idem{e};
    for (auto const& b : span) {
      std::vector<SparseRow> next;
      for (auto const& f : idem) {
        auto const x = a.mul(b, f);
        auto const p = minimal_polynomial(a, x, f);
        if (p.size() == 2) {
          next.push_back(f);
          continue;
        }
        auto [roots, rest] = rational_roots(p);
        if (rest.size() > 1) {
          throw Error(ErrorCode::CenterDoesNotSplit, to_string(rest));
        }
        if (roots.size() + 1 != p.size()) {
          throw Error(ErrorCode::NotSemisimple, "repeated root in " + to_string(p));
        }
        for (auto const& r : roots) {
          SparseRow g = f;
          for (auto const& s : roots) {
            if (s == r) {
              continue;
            }
            auto shifted = add_scaled(x, Rational(-s), f);
            g            = scaled(a.mul(g, shifted), Rational(1) / (r - s));
          }
          next.push_back(std::move(g));
        }
      }
      idem = std::move(next);
    }
    return idem;
  }

}  // namespace iskk
