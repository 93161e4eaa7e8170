#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "fanohost/models.hpp"

namespace fano {

using BigInt = boost::multiprecision::cpp_int;

/// Table of Hodge numbers h^{p,q}, 0 <= p,q <= n.
class HodgeDiamond {
 public:
  explicit HodgeDiamond(int n);

  /// Builds a diamond from a row-major (n+1)x(n+1) table and validates it.
  static HodgeDiamond from_table(const std::vector<std::vector<BigInt>>& rows);

  int dim() const { return n_; }
  const BigInt& operator()(int p, int q) const { return h_[idx(p, q)]; }
  BigInt& operator()(int p, int q) { return h_[idx(p, q)]; }

  bool hodge_symmetric() const;
  bool serre_dual() const;

  /// Throws InvalidInput unless entries are non-negative, h^{0,0} = 1 and
  /// both symmetries hold.
  void validate() const;

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

 private:
  std::size_t idx(int p, int q) const { return static_cast<std::size_t>(p * (n_ + 1) + q); }
  int n_;
  std::vector<BigInt> h_;
};

/// chi^p = sum_q (-1)^q h^{p,q}(Y), p = 0..n, read off Hirzebruch's
/// generating function. Requires a projective-space ambient.
std::vector<BigInt> chi_y_coefficients(const CIModel& ci);

/// Full diamond of a smooth complete intersection in projective space.
/// Off the middle row it is the diamond of P^n (Lefschetz); the middle row
/// is recovered from the chi_y coefficients.
HodgeDiamond hodge_diamond(const CIModel& ci);

/// Euler number from the Chern classes:
///   e(Y) = prod(d_j) * [t^n] (1+t)^{n+c+1} / prod(1 + d_j t).
BigInt euler_characteristic_oracle(const CIModel& ci);

/// sum_{p-q=i} h^{p,q}; zero outside |i| <= n.
BigInt antidiagonal_sum(const HodgeDiamond& d, int i);

/// sum_{p,q} (-1)^{p+q} h^{p,q}.
BigInt euler_number(const HodgeDiamond& d);

HodgeDiamond projective_space_diamond(int n);

}  // namespace fano
