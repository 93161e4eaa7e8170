#include "hodge_oracles.hpp"

namespace oracle {

cpp_int fermat_middle_hodge(int n, int d, int p) {
  const int vars = n + 2;
  const int target = (n - p + 1) * d - n - 2;
  cpp_int prim = 0;
  if (target >= 0 && d >= 2) {
    // ways[t] = monomials of degree t with every exponent in [0, d-2]
    std::vector<cpp_int> ways(target + 1, 0);
    ways[0] = 1;
    for (int v = 0; v < vars; ++v) {
      std::vector<cpp_int> next(target + 1, 0);
      for (int t = 0; t <= target; ++t)
        for (int a = 0; a <= d - 2 && a <= t; ++a) next[t] += ways[t - a];
      ways = std::move(next);
    }
    prim = ways[target];
  }
  return 2 * p == n ? prim + 1 : prim;
}

cpp_int curve_genus(int m, const std::vector<int>& degrees) {
  cpp_int prod = 1;
  int sum = 0;
  for (int d : degrees) {
    prod *= d;
    sum += d;
  }
  return prod * (sum - m - 1) / 2 + 1;
}

}  // namespace oracle
