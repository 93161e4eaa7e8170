#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace oracle {

using boost::multiprecision::cpp_int;

/// h^{p,n-p} of a smooth degree-d hypersurface in P^{n+1}, from the Jacobian
/// ring of the Fermat polynomial: the primitive part is the number of
/// monomials in n+2 variables, exponents <= d-2, of degree (n-p+1)d - n - 2.
cpp_int fermat_middle_hodge(int n, int d, int p);

/// Genus of a smooth complete-intersection curve in P^m by adjunction:
/// 2g - 2 = prod(d) * (sum(d) - m - 1).
cpp_int curve_genus(int m, const std::vector<int>& degrees);

}  // namespace oracle
