#include "stripepow/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace stripepow {

double cheb_u_eval(std::size_t k, double x) {
  double prev = 1.0;
  if (k == 0) return prev;
  const double two_x = 2.0 * x;
  double cur = two_x;
  for (std::size_t d = 2; d <= k; ++d) {
    const double next = two_x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ChebValue cheb_u(std::size_t k, double x) { return {k, x, cheb_u_eval(k, x)}; }

std::vector<double> cheb_u_roots(std::size_t k) {
  if (k < 1) throw std::invalid_argument("cheb_u_roots: degree must be >= 1");
  std::vector<double> roots(k);
  const double denom = 2.0 * static_cast<double>(k + 1);
  for (std::size_t j = 1; j <= k; ++j) {
    // cos(j pi/(k+1)) == sin((k+1-2j) pi / (2(k+1))): exact zero at the centre
    // and exact antisymmetry between j and k+1-j.
    const double num = static_cast<double>(static_cast<long long>(k + 1) - 2 * static_cast<long long>(j));
    roots[j - 1] = std::sin(num * std::numbers::pi / denom);
  }
  return roots;
}

double delta_rec(std::size_t p, double alpha) {
  double prev = 1.0;
  if (p == 0) return prev;
  double cur = alpha;
  for (std::size_t q = 2; q <= p; ++q) {
    const double next = alpha * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double charpoly_value(std::size_t n, double lambda) {
  if (n < 3 || n % 3 != 0)
    throw std::invalid_argument("charpoly_value: order " + std::to_string(n) +
                                " is not a positive multiple of 3");
  const double u = cheb_u_eval(n / 3, lambda / 2.0);
  return u * u * u;
}

}  // namespace stripepow
