#include "stripepow/spectral.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "stripepow/chebyshev.hpp"
#include "stripepow/kernels.hpp"

namespace stripepow {
namespace {

double alternating(std::size_t k) { return k % 2 == 1 ? 1.0 : -1.0; }  // (-1)^(k+1)

// Reversed-degree constants for an even block order: 3 (-1)^k (lambda_k^2 - 4) / (2n + 6).
std::vector<double> h_even_branch(std::size_t n, const std::vector<double>& lambdas) {
  const double denom = 2.0 * static_cast<double>(n) + 6.0;
  std::vector<double> h(lambdas.size());
  for (std::size_t k = 1; k <= lambdas.size(); ++k) {
    const double lk = lambdas[k - 1];
    h[k - 1] = 3.0 * -alternating(k) * (lk * lk - 4.0) / denom;
  }
  return h;
}

// Odd block order: three pieces, each written with the partner eigenvalue whose
// square equals 4 - lambda_k^2.
std::vector<double> h_odd_branch(std::size_t n, const std::vector<double>& lambdas) {
  const double denom = 2.0 * static_cast<double>(n) + 6.0;
  const std::size_t p = lambdas.size();
  auto lambda = [&](std::size_t idx) { return lambdas.at(idx - 1); };
  std::vector<double> h(p);
  for (std::size_t k = 1; k <= p; ++k) {
    const double sign = alternating(k);
    if (6 * k <= n - 3) {
      const double partner = lambda((n + 6 * k + 3) / 6);
      h[k - 1] = 3.0 * sign * partner * partner / denom;
    } else if (6 * k == n + 3) {
      h[k - 1] = 6.0 * sign / (static_cast<double>(n) + 3.0);
    } else {
      const double partner = lambda((n + 3 - 2 * k) / 2);
      h[k - 1] = 3.0 * sign * partner * partner / denom;
    }
  }
  return h;
}

}  // namespace

std::size_t block_order_of(std::size_t n) {
  if (n < 3 || n % 3 != 0)
    throw std::invalid_argument("order " + std::to_string(n) + " is not a positive multiple of 3");
  return n / 3;
}

NormConstants norm_constants(std::size_t n) {
  const std::size_t p = block_order_of(n);
  std::vector<double> lambdas = cheb_u_roots(p);
  for (double& l : lambdas) l *= 2.0;
  NormConstants out;
  const double denom = 2.0 * static_cast<double>(n) + 6.0;
  out.canonical.reserve(p);
  for (double l : lambdas) out.canonical.push_back(3.0 * (4.0 - l * l) / denom);
  out.paper = p % 2 == 0 ? h_even_branch(n, lambdas) : h_odd_branch(n, lambdas);
  return out;
}

Spectrum eigenvalues(std::size_t n) {
  const std::size_t p = block_order_of(n);
  Spectrum s;
  s.order = n;
  s.block_order = p;
  // 2 cos(3k pi / (n + 3)) are twice the roots of U_p.
  s.lambdas = cheb_u_roots(p);
  for (double& l : s.lambdas) l *= 2.0;
  NormConstants h = norm_constants(n);
  s.h_canonical = std::move(h.canonical);
  s.h_paper = std::move(h.paper);
  return s;
}

DenseRealMatrix build_P(std::size_t n) {
  const Spectrum s = eigenvalues(n);
  const std::size_t p = s.block_order;
  DenseRealMatrix out(n);
  // Column j belongs to eigenvalue k = ceil(j/3) and residue class c. Odd k
  // columns run U_0..U_{p-1} down the class; even k columns run U_{p-1}..U_0.
  // The two block-order parities differ only in the direction of the last
  // column triple, which this rule already covers.
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t k = (j - 1) / 3 + 1;
    const std::size_t c = (j - 1) % 3 + 1;
    const double x = s.lambdas[k - 1] / 2.0;
    const bool ascending = k % 2 == 1;
    for (std::size_t r = 0; r < p; ++r) {
      const std::size_t degree = ascending ? r : p - 1 - r;
      out(3 * r + c, j) = cheb_u_eval(degree, x);
    }
  }
  return out;
}

DenseRealMatrix build_Pinv(std::size_t n) {
  const Spectrum s = eigenvalues(n);
  const std::size_t p = s.block_order;
  DenseRealMatrix out(n);
  // Row i carries h_k U_s(lambda_k/2) across the columns of its residue class.
  // The alternating sign in h_paper cancels the reversed columns of P.
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t k = (i - 1) / 3 + 1;
    const std::size_t c = (i - 1) % 3 + 1;
    const double x = s.lambdas[k - 1] / 2.0;
    const double hk = s.h_paper[k - 1];
    for (std::size_t col = 0; col < p; ++col) out(i, 3 * col + c) = hk * cheb_u_eval(col, x);
  }
  return out;
}

TransformPair transform_pair(std::size_t n) { return {build_P(n), build_Pinv(n)}; }

DenseRealMatrix jordan_diag(std::size_t n) {
  const Spectrum s = eigenvalues(n);
  DenseRealMatrix out(n);
  for (std::size_t i = 1; i <= n; ++i) out(i, i) = s.lambdas[(i - 1) / 3];
  return out;
}

DenseRealMatrix reconstruct(std::size_t n) {
  const TransformPair t = transform_pair(n);
  const DenseRealMatrix j = jordan_diag(n);
  return kernels::multiply(kernels::multiply(t.P, j), t.Pinv);
}

}  // namespace stripepow
