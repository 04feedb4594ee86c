#include "iskk/error.hpp"
#include "iskk/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace iskk {

  namespace {

    std::size_t parse_size(std::string const& kind, std::string const& params) {
      if (params.empty()
          || !std::all_of(params.begin(), params.end(), [](char c) {
               return c >= '0' && c <= '9';
             })
          || params.size() > 6) {
        throw Error(ErrorCode::MalformedInput,
                    "builder '" + kind + "' expects a size, got '" + params + "'");
      }
      return std::stoul(params);
    }

    void require_range(std::string const& kind, std::size_t n, std::size_t lo, std::size_t hi) {
      if (n < lo || n > hi) {
        throw Error(ErrorCode::UnsupportedSize,
                    kind + " supports sizes " + std::to_string(lo) + ".."
                        + std::to_string(hi) + ", got " + std::to_string(n));
      }
    }

    // Chain 1 > e1 > ... > e_{n-1}; the meet is the larger index.
    FiniteInvSgp chain(std::size_t n) {
      Table                    t(n, std::vector<std::size_t>(n));
      std::vector<std::string> names{"1"};
      for (std::size_t i = 1; i < n; ++i) {
        names.push_back("e" + std::to_string(i));
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[a][b] = std::max(a, b);
        }
      }
      return FiniteInvSgp::validate(std::move(t), 0, std::nullopt, std::move(names));
    }

    // Subsets of a k-set under intersection; the full set is the unit.
    FiniteInvSgp boolean(std::size_t k) {
      std::size_t const        n    = std::size_t(1) << k;
      std::size_t const        full = n - 1;
      Table                    t(n, std::vector<std::size_t>(n));
      std::vector<std::string> names;
      // Index i holds the subset full ^ i so that index 0 is the unit.
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t const m = full ^ i;
        std::string       s = "{";
        for (std::size_t j = 0; j < k; ++j) {
          if (m >> j & 1) {
            s += std::to_string(j + 1);
          }
        }
        names.push_back(s + "}");
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[a][b] = full ^ ((full ^ a) & (full ^ b));
        }
      }
      return FiniteInvSgp::validate(std::move(t), 0, std::nullopt, std::move(names));
    }

    FiniteInvSgp cyclic(std::size_t n) {
      Table                    t(n, std::vector<std::size_t>(n));
      std::vector<std::string> names{"1"};
      for (std::size_t i = 1; i < n; ++i) {
        names.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[a][b] = (a + b) % n;
        }
      }
      return FiniteInvSgp::validate(std::move(t), 0, std::nullopt, std::move(names));
    }

    std::string image_name(std::vector<int> const& f) {
      std::string s;
      for (auto v : f) {
        s += v < 0 ? '-' : char('1' + v);
      }
      return s;
    }

    // Functions on {0..n-1} stored as image vectors, -1 meaning undefined.
    // Products compose right to left: (f g)(x) = f(g(x)).
    FiniteInvSgp from_maps(std::vector<std::vector<int>> maps,
                           std::optional<std::size_t>    zero) {
      std::size_t const n = maps.size();
      Table             t(n, std::vector<std::size_t>(n));
      std::vector<std::string> names;
      for (auto const& f : maps) {
        names.push_back(image_name(f));
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          std::vector<int> c(maps[b].size());
          for (std::size_t x = 0; x < c.size(); ++x) {
            c[x] = maps[b][x] < 0 ? -1 : maps[a][maps[b][x]];
          }
          auto it = std::find(maps.begin(), maps.end(), c);
          t[a][b] = std::size_t(it - maps.begin());
        }
      }
      return FiniteInvSgp::validate(std::move(t), 0, zero, std::move(names));
    }

    FiniteInvSgp symmetric_group(std::size_t n) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::vector<std::vector<int>> maps;
      do {
        maps.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return from_maps(std::move(maps), std::nullopt);
    }

    FiniteInvSgp symmetric_inverse(std::size_t n) {
      std::vector<std::vector<int>> maps;
      std::vector<int>              f(n, -1);
      // Enumerate all partial injections by filling positions in order.
      auto rec = [&](auto&& self, std::size_t x, std::vector<bool>& used) -> void {
        if (x == n) {
          maps.push_back(f);
          return;
        }
        f[x] = -1;
        self(self, x + 1, used);
        for (std::size_t y = 0; y < n; ++y) {
          if (!used[y]) {
            used[y] = true;
            f[x]    = int(y);
            self(self, x + 1, used);
            used[y] = false;
          }
        }
        f[x] = -1;
      };
      std::vector<bool> used(n, false);
      rec(rec, 0, used);
      std::vector<int> id(n);
      std::iota(id.begin(), id.end(), 0);
      std::vector<int> empty(n, -1);
      // Identity first, empty map last, the rest by rank descending then lexicographic.
      auto rank = [](std::vector<int> const& m) {
        return std::count_if(m.begin(), m.end(), [](int v) { return v >= 0; });
      };
      std::stable_sort(maps.begin(), maps.end(), [&](auto const& a, auto const& b) {
        if ((a == id) != (b == id)) {
          return a == id;
        }
        if (rank(a) != rank(b)) {
          return rank(a) > rank(b);
        }
        return a < b;
      });
      std::size_t const z = maps.size() - 1;
      return from_maps(std::move(maps), z);
    }

    // Brandt semigroup B_n with an adjoined unit: 1, (i,j) row-major, 0.
    FiniteInvSgp brandt_unital(std::size_t n) {
      std::size_t const        size = n * n + 2;
      std::size_t const        zero = size - 1;
      std::vector<std::string> names{"1"};
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
      names.push_back("0");
      Table t(size, std::vector<std::size_t>(size, zero));
      for (std::size_t a = 0; a < size; ++a) {
        t[0][a] = a;
        t[a][0] = a;
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t l = 0; l < n; ++l) {
              if (j == k) {
                t[1 + i * n + j][1 + k * n + l] = 1 + i * n + l;
              }
            }
          }
        }
      }
      t[zero][0] = zero;
      t[0][zero] = zero;
      return FiniteInvSgp::validate(std::move(t), 0, zero, std::move(names));
    }

    FiniteInvSgp group_with_zero(std::size_t n) {
      return adjoin_zero(cyclic(n));
    }

    FiniteInvSgp diamond() {
      // 1 > a, b > m with a, b incomparable.
      Table t{{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
      return FiniteInvSgp::validate(std::move(t), 0, std::nullopt, {"1", "a", "b", "m"});
    }

    // Splits "A,B" at the first comma outside parentheses and strips one
    // layer of enclosing parentheses from each side.
    std::pair<std::string, std::string> split_pair(std::string const& s) {
      int depth = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') {
          ++depth;
        } else if (s[i] == ')') {
          --depth;
        } else if (s[i] == ',' && depth == 0) {
          auto strip = [](std::string x) {
            if (x.size() >= 2 && x.front() == '(' && x.back() == ')') {
              x = x.substr(1, x.size() - 2);
            }
            return x;
          };
          return {strip(s.substr(0, i)), strip(s.substr(i + 1))};
        }
      }
      throw Error(ErrorCode::MalformedInput, "product expects 'A,B', got '" + s + "'");
    }

  }  // namespace

  FiniteInvSgp semilattice_from_meet(Table meet, std::vector<std::string> names) {
    std::size_t const n = meet.size();
    std::optional<std::size_t> top;
    for (std::size_t a = 0; a < n && !top; ++a) {
      bool ok = meet[a].size() == n;
      for (std::size_t b = 0; ok && b < n; ++b) {
        ok = meet[a][b] == b;
      }
      if (ok) {
        top = a;
      }
    }
    if (!top) {
      throw Error(ErrorCode::BadUnit, "meet table has no top element");
    }
    auto s = FiniteInvSgp::validate(std::move(meet), *top, std::nullopt, std::move(names));
    if (s.idempotent_list().size() != s.size()) {
      throw Error(ErrorCode::MalformedInput, "meet table is not idempotent");
    }
    return s;
  }

  FiniteInvSgp direct_product(FiniteInvSgp const& a, FiniteInvSgp const& b) {
    std::size_t const        na = a.size(), nb = b.size(), n = na * nb;
    Table                    t(n, std::vector<std::size_t>(n));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < nb; ++j) {
        names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
      }
    }
    std::optional<std::size_t> zero;
    if (a.zero() && b.zero()) {
      zero = *a.zero() * nb + *b.zero();
    }
    return FiniteInvSgp::validate(
        std::move(t), a.unit() * nb + b.unit(), zero, std::move(names));
  }

  FiniteInvSgp adjoin_zero(FiniteInvSgp const& a) {
    std::size_t const n = a.size();
    Table             t(n + 1, std::vector<std::size_t>(n + 1, n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = a.mul(x, y);
      }
    }
    auto        names = a.names();
    std::string z     = "0";
    while (a.index_of(z)) {
      z += "'";
    }
    names.push_back(z);
    return FiniteInvSgp::validate(std::move(t), a.unit(), n, std::move(names));
  }

  FiniteInvSgp build(std::string const& kind, std::string const& params) {
    if (kind == "trivial") {
      return chain(1);
    }
    if (kind == "chain" || kind == "semilattice_chain") {
      auto n = parse_size(kind, params);
      require_range(kind, n, 1, 64);
      return chain(n);
    }
    if (kind == "diamond") {
      return diamond();
    }
    if (kind == "boolean") {
      auto k = parse_size(kind, params);
      require_range(kind, k, 0, 5);
      return boolean(k);
    }
    if (kind == "cyclic" || kind == "group") {
      auto n = parse_size(kind, params);
      require_range(kind, n, 1, 64);
      return cyclic(n);
    }
    if (kind == "symmetric_group") {
      auto n = parse_size(kind, params);
      require_range(kind, n, 1, 5);
      return symmetric_group(n);
    }
    if (kind == "group_with_zero") {
      auto n = parse_size(kind, params);
      require_range(kind, n, 1, 64);
      return group_with_zero(n);
    }
    if (kind == "brandt_unital") {
      auto n = parse_size(kind, params);
      require_range(kind, n, 1, 8);
      return brandt_unital(n);
    }
    if (kind == "symmetric_inverse") {
      auto n = parse_size(kind, params);
      require_range(kind, n, 1, 3);
      return symmetric_inverse(n);
    }
    if (kind == "product") {
      auto [l, r] = split_pair(params);
      return direct_product(build_spec(l), build_spec(r));
    }
    if (kind == "adjoin_zero") {
      return adjoin_zero(build_spec(params));
    }
    throw Error(ErrorCode::UnknownBuilder, "unknown builder '" + kind + "'");
  }

  FiniteInvSgp build_spec(std::string const& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
      return build(spec, "");
    }
    return build(spec.substr(0, colon), spec.substr(colon + 1));
  }

}  // namespace iskk
