#pragma once

// Second-kind Chebyshev polynomials and the tridiagonal determinant recurrence.

#include <cstddef>
#include <vector>

namespace stripepow {

struct ChebValue {
  std::size_t degree = 0;
  double argument = 0.0;
  double value = 0.0;
};

/// U_k(x) by the three-term recurrence; defined for every finite x.
double cheb_u_eval(std::size_t k, double x);
ChebValue cheb_u(std::size_t k, double x);

/// cos(j pi / (k+1)) for j = 1..k, strictly decreasing.
std::vector<double> cheb_u_roots(std::size_t k);

/// Delta_p(alpha): determinant of the p x p tridiagonal matrix with alpha on
/// the diagonal and ones beside it.
double delta_rec(std::size_t p, double alpha);

/// det(lambda I - H) for the stride-3 matrix of order n, as (U_{n/3}(lambda/2))^3.
double charpoly_value(std::size_t n, double lambda);

}  // namespace stripepow
