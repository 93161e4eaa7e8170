#include "jacobian_oracle.hpp"

#include <algorithm>
#include <random>
#include <vector>

// The affine cone {F = 0} minus the origin is split into torus strata T_I
// (x_i != 0 exactly for i in I). On T_I:
//  * if some degree-d monomial uses only I, the restriction F_I moves in a
//    base-point-free system and Bertini makes it smooth there;
//  * otherwise F and all d/dx_i (i in I) vanish identically, and the cone is
//    singular on T_I iff the general polynomials g_e (the x_e-linear parts,
//    e outside I) have a common zero on T_I.
// For the last point sample the incidence {(g, x) : g(x) = 0}: it projects
// dominantly onto the coefficient space iff the Jacobian of (g_e) at a
// generic incidence point has rank k = #{e : g_e != 0}.

namespace oracle {

namespace {

constexpr std::uint64_t kP = 2147483647ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return a * b % kP; }

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (b %= kP; e; e >>= 1, b = mulmod(b, b))
    if (e & 1) r = mulmod(r, b);
  return r;
}

std::uint64_t inv(std::uint64_t a) { return powmod(a, kP - 2); }

using Monomial = std::vector<int>;  // exponents indexed like I

void monomials_of_degree(const std::vector<int>& w, int deg, std::size_t i, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (i == w.size()) {
    if (deg == 0) out.push_back(cur);
    return;
  }
  for (int a = 0; a * w[i] <= deg; ++a) {
    cur[i] = a;
    monomials_of_degree(w, deg - a * w[i], i + 1, cur, out);
  }
  cur[i] = 0;
}

std::vector<Monomial> monomials_of_degree(const std::vector<int>& w, int deg) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  Monomial cur(w.size(), 0);
  monomials_of_degree(w, deg, 0, cur, out);
  return out;
}

bool has_monomial(const std::vector<int>& w, int deg) {
  std::vector<bool> reach(deg + 1, false);
  reach[0] = true;
  for (int v = 1; v <= deg; ++v)
    for (int wi : w)
      if (wi <= v && reach[v - wi]) reach[v] = true;
  return reach[deg];
}

std::uint64_t eval(const Monomial& m, const std::vector<std::uint64_t>& x) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < m.size(); ++i) v = mulmod(v, powmod(x[i], m[i]));
  return v;
}

int rank_mod_p(std::vector<std::vector<std::uint64_t>> a) {
  int rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t iv = inv(a[rank][c]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      const std::uint64_t f = mulmod(a[r][c], iv);
      for (std::size_t k = c; k < cols; ++k) a[r][k] = (a[r][k] + kP - mulmod(f, a[rank][k])) % kP;
    }
    ++rank;
  }
  return rank;
}

// Generic rank of the Jacobian of the x_e-linear parts on T_I at incidence points.
bool stratum_singular(const std::vector<std::vector<Monomial>>& systems, std::size_t dim_i,
                      int samples, std::mt19937_64& rng) {
  const int k = static_cast<int>(systems.size());
  if (k == 0) return true;
  if (k > static_cast<int>(dim_i)) return false;
  std::uniform_int_distribution<std::uint64_t> unit(1, kP - 1), any(0, kP - 1);
  int best = 0;
  for (int s = 0; s < samples && best < k; ++s) {
    std::vector<std::uint64_t> x(dim_i);
    for (auto& xi : x) xi = unit(rng);
    std::vector<std::vector<std::uint64_t>> jac;
    for (const auto& sys : systems) {
      std::vector<std::uint64_t> c(sys.size());
      std::uint64_t rest = 0;
      for (std::size_t j = 1; j < sys.size(); ++j) {
        c[j] = any(rng);
        rest = (rest + mulmod(c[j], eval(sys[j], x))) % kP;
      }
      c[0] = mulmod(kP - rest, inv(eval(sys[0], x))) % kP;  // forces g_e(x) = 0
      std::vector<std::uint64_t> row(dim_i, 0);
      for (std::size_t j = 0; j < sys.size(); ++j)
        for (std::size_t i = 0; i < dim_i; ++i) {
          if (sys[j][i] == 0) continue;
          Monomial m = sys[j];
          --m[i];
          row[i] = (row[i] + mulmod(mulmod(c[j], sys[j][i]), eval(m, x))) % kP;
        }
      jac.push_back(std::move(row));
    }
    best = std::max(best, rank_mod_p(std::move(jac)));
  }
  return best == k;
}

}  // namespace

bool jacobian_quasi_smooth(std::span<const int> weights, int d, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = weights.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> wi;
    std::vector<int> outside;
    for (std::size_t i = 0; i < n; ++i) (mask >> i & 1u ? wi : outside).push_back(weights[i]);
    if (has_monomial(wi, d)) continue;
    std::vector<std::vector<Monomial>> systems;
    for (int we : outside)
      if (auto sys = monomials_of_degree(wi, d - we); !sys.empty()) systems.push_back(std::move(sys));
    if (stratum_singular(systems, wi.size(), samples, rng)) return false;
  }
  return true;
}

}  // namespace oracle
