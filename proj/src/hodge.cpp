#include "fanohost/hodge.hpp"

#include <string>

#include "fanohost/error.hpp"

namespace fano {

namespace {

/// Bivariate power series in z, y truncated at z^zmax, y^ymax.
class Series2 {
 public:
  Series2(int zmax, int ymax)
      : zmax_(zmax), ymax_(ymax), c_(static_cast<std::size_t>((zmax + 1) * (ymax + 1))) {}

  static Series2 one(int zmax, int ymax) {
    Series2 s(zmax, ymax);
    s(0, 0) = 1;
    return s;
  }

  BigInt& operator()(int i, int j) { return c_[static_cast<std::size_t>(i * (ymax_ + 1) + j)]; }
  const BigInt& operator()(int i, int j) const {
    return c_[static_cast<std::size_t>(i * (ymax_ + 1) + j)];
  }

  Series2 operator*(const Series2& o) const {
    Series2 r(zmax_, ymax_);
    for (int a = 0; a <= zmax_; ++a)
      for (int b = 0; b <= ymax_; ++b) {
        if ((*this)(a, b) == 0) continue;
        for (int i = 0; a + i <= zmax_; ++i)
          for (int j = 0; b + j <= ymax_; ++j)
            if (o(i, j) != 0) r(a + i, b + j) += (*this)(a, b) * o(i, j);
      }
    return r;
  }

  Series2 operator+(const Series2& o) const {
    Series2 r = *this;
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
    return r;
  }

  Series2 operator-(const Series2& o) const {
    Series2 r = *this;
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] -= o.c_[k];
    return r;
  }

  /// Multiplicative inverse; the constant term must be 1.
  Series2 inverse() const {
    if ((*this)(0, 0) != 1) throw InternalInconsistency("series inverse needs constant term 1");
    Series2 b(zmax_, ymax_);
    for (int i = 0; i <= zmax_; ++i)
      for (int j = 0; j <= ymax_; ++j) {
        if (i == 0 && j == 0) {
          b(0, 0) = 1;
          continue;
        }
        BigInt acc = 0;
        for (int a = 0; a <= i; ++a)
          for (int k = 0; k <= j; ++k)
            if ((a || k) && (*this)(a, k) != 0) acc += (*this)(a, k) * b(i - a, j - k);
        b(i, j) = -acc;
      }
    return b;
  }

 private:
  int zmax_, ymax_;
  std::vector<BigInt> c_;
};

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// (1 + z y)^d
Series2 one_plus_zy_pow(int d, int zmax, int ymax) {
  Series2 s(zmax, ymax);
  for (int k = 0; k <= d && k <= zmax && k <= ymax; ++k) s(k, k) = binomial(d, k);
  return s;
}

// (1 - z)^d, optionally shifted by one power of y.
Series2 one_minus_z_pow(int d, int zmax, int ymax, int yshift = 0) {
  Series2 s(zmax, ymax);
  if (yshift > ymax) return s;
  for (int k = 0; k <= d && k <= zmax; ++k) s(k, yshift) = (k % 2 ? -1 : 1) * binomial(d, k);
  return s;
}

void require_projective(const CIModel& ci) {
  if (!ci.ambient().is_projective())
    throw InvalidInput("Hodge numbers are only computed over projective space, got " +
                       ci.ambient().label());
}

}  // namespace

HodgeDiamond::HodgeDiamond(int n) : n_(n), h_(static_cast<std::size_t>((n + 1) * (n + 1))) {
  if (n < 0) throw InvalidInput("diamond dimension must be non-negative");
}

HodgeDiamond HodgeDiamond::from_table(const std::vector<std::vector<BigInt>>& rows) {
  if (rows.empty()) throw InvalidInput("empty Hodge table");
  const int n = static_cast<int>(rows.size()) - 1;
  HodgeDiamond d(n);
  for (int p = 0; p <= n; ++p) {
    if (static_cast<int>(rows[p].size()) != n + 1)
      throw InvalidInput("Hodge table row " + std::to_string(p) + " has wrong length");
    for (int q = 0; q <= n; ++q) d(p, q) = rows[p][q];
  }
  d.validate();
  return d;
}

bool HodgeDiamond::hodge_symmetric() const {
  for (int p = 0; p <= n_; ++p)
    for (int q = 0; q < p; ++q)
      if ((*this)(p, q) != (*this)(q, p)) return false;
  return true;
}

bool HodgeDiamond::serre_dual() const {
  for (int p = 0; p <= n_; ++p)
    for (int q = 0; q <= n_; ++q)
      if ((*this)(p, q) != (*this)(n_ - p, n_ - q)) return false;
  return true;
}

void HodgeDiamond::validate() const {
  for (const auto& v : h_)
    if (v < 0) throw InvalidInput("negative Hodge number");
  if ((*this)(0, 0) != 1) throw InvalidInput("h^{0,0} must be 1");
  if (!hodge_symmetric()) throw InvalidInput("Hodge symmetry h^{p,q} = h^{q,p} fails");
  if (!serre_dual()) throw InvalidInput("Serre duality h^{p,q} = h^{n-p,n-q} fails");
}

std::vector<BigInt> chi_y_coefficients(const CIModel& ci) {
  require_projective(ci);
  const int N = ci.ambient().dim();
  const int n = dimension(ci);
  std::vector<BigInt> chi(static_cast<std::size_t>(n + 1));
  if (ci.codim() == 0) {
    for (int p = 0; p <= n; ++p) chi[p] = (p % 2 ? -1 : 1);
    return chi;
  }

  const int zmax = N, ymax = n;
  // 1 / ((1 + zy)(1 - z))
  Series2 f = (one_plus_zy_pow(1, zmax, ymax) * one_minus_z_pow(1, zmax, ymax)).inverse();
  for (int d : ci.degrees()) {
    const Series2 a = one_plus_zy_pow(d, zmax, ymax);
    const Series2 num = a - one_minus_z_pow(d, zmax, ymax);
    const Series2 den = a + one_minus_z_pow(d, zmax, ymax, 1);
    f = f * num * den.inverse();
  }
  for (int p = 0; p <= n; ++p) chi[p] = f(N, p);
  return chi;
}

HodgeDiamond hodge_diamond(const CIModel& ci) {
  const auto chi = chi_y_coefficients(ci);
  const int n = dimension(ci);
  HodgeDiamond d(n);
  for (int p = 0; p <= n; ++p) {
    const int q = n - p;
    if (2 * p == n) {
      d(p, p) = (p % 2 ? -1 : 1) * chi[p];
    } else {
      d(p, p) = 1;
      // chi^p = (-1)^q h^{p,q} + (-1)^p h^{p,p}
      d(p, q) = (q % 2 ? -1 : 1) * (chi[p] - (p % 2 ? -1 : 1));
    }
  }
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      if (d(p, q) < 0)
        throw InternalInconsistency("negative h^{" + std::to_string(p) + "," + std::to_string(q) +
                                    "} for " + ci.label());
  if (d(0, 0) != 1 || !d.hodge_symmetric() || !d.serre_dual())
    throw InternalInconsistency("Hodge diamond of " + ci.label() + " violates its symmetries");
  return d;
}

BigInt euler_characteristic_oracle(const CIModel& ci) {
  require_projective(ci);
  const int N = ci.ambient().dim();
  const int n = dimension(ci);
  // Truncated univariate series in t up to t^n.
  std::vector<BigInt> s(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) s[k] = binomial(N + 1, k);
  BigInt deg = 1;
  for (int d : ci.degrees()) {
    deg *= d;
    // divide by (1 + d t): s_k <- s_k - d s_{k-1}, in increasing k.
    for (int k = 1; k <= n; ++k) s[k] -= d * s[k - 1];
  }
  return deg * s[n];
}

BigInt antidiagonal_sum(const HodgeDiamond& d, int i) {
  BigInt sum = 0;
  const int n = d.dim();
  if (i > n || i < -n) return sum;
  for (int p = 0; p <= n; ++p) {
    const int q = p - i;
    if (q >= 0 && q <= n) sum += d(p, q);
  }
  return sum;
}

BigInt euler_number(const HodgeDiamond& d) {
  BigInt e = 0;
  for (int p = 0; p <= d.dim(); ++p)
    for (int q = 0; q <= d.dim(); ++q) e += ((p + q) % 2 ? -1 : 1) * d(p, q);
  return e;
}

HodgeDiamond projective_space_diamond(int n) {
  HodgeDiamond d(n);
  for (int p = 0; p <= n; ++p) d(p, p) = 1;
  return d;
}

}  // namespace fano
