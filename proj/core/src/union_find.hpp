#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace iskk::detail {

  // Roots are always the least member of their set.
  struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
      std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t a) {
      while (parent[a] != a) {
        a = parent[a] = parent[parent[a]];
      }
      return a;
    }
    void unite(std::size_t a, std::size_t b) {
      a = find(a), b = find(b);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
  };

}  // namespace iskk::detail
