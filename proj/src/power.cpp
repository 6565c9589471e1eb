#include "stripepow/power.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "stripepow/chebyshev.hpp"

namespace stripepow {
namespace {

void check_exponent(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("negative matrix powers are not supported");
}

void check_indices(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside [1, " + std::to_string(n) + "]");
}

// lambda^m h, shared by the entry and full-matrix routes so they agree bitwise.
double spectral_weight(double lambda, double h, std::int64_t m) {
  return std::pow(lambda, static_cast<double>(m)) * h;
}

std::string describe_failure(std::size_t i, std::size_t j, double value, double residual) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "rounding failure at (%zu,%zu): value %.17g, residual %.3g", i,
                j, value, residual);
  return buf;
}

}  // namespace

int delta_selector(std::size_t i, std::size_t j) {
  switch ((i + j) % 3) {
    case 2: return 1;
    case 1: return 2;
    default: return 3;
  }
}

std::size_t sigma_selector(std::size_t i, std::size_t j) {
  switch ((i + j) % 3) {
    case 2: return i + 2;
    case 1: return i + 1;
    default: return i;
  }
}

SelectorValue selectors(std::size_t i, std::size_t j) {
  return {delta_selector(i, j), sigma_selector(i, j)};
}

double entry_power_paper(const Spectrum& s, std::int64_t m, std::size_t i, std::size_t j) {
  check_exponent(m);
  check_indices(s.order, i, j);
  if (i % 3 != j % 3) return 0.0;
  const std::size_t n = s.order;
  const std::size_t p = s.block_order;
  const auto delta = static_cast<std::size_t>(delta_selector(i, j));
  const std::size_t sigma = sigma_selector(i, j);
  const std::size_t row_deg = (i - delta) / 3;
  const std::size_t col_deg = (j - delta) / 3;
  const std::size_t rev_deg = (n - sigma) / 3;
  auto term = [&](std::size_t k, std::size_t left_deg) {
    const double l = s.lambdas[k - 1];
    return std::pow(l, static_cast<double>(m)) * s.h_paper[k - 1] * cheb_u_eval(left_deg, l / 2.0) *
           cheb_u_eval(col_deg, l / 2.0);
  };
  double acc = 0.0;
  for (std::size_t k = 1; k <= p / 2; ++k) acc += term(2 * k - 1, row_deg) + term(2 * k, rev_deg);
  if (p % 2 == 1) acc += term(p, row_deg);
  return acc;
}

double entry_power_paper(const PowerQuery& q) {
  return entry_power_paper(eigenvalues(q.n), q.m, q.i, q.j);
}

double entry_power_canonical(const Spectrum& s, std::int64_t m, std::size_t i, std::size_t j) {
  check_exponent(m);
  check_indices(s.order, i, j);
  if (i % 3 != j % 3) return 0.0;
  const auto delta = static_cast<std::size_t>(delta_selector(i, j));
  std::size_t r = (i - delta) / 3;
  std::size_t c = (j - delta) / 3;
  if (r > c) std::swap(r, c);
  double acc = 0.0;
  for (std::size_t k = 0; k < s.block_order; ++k) {
    const double x = s.lambdas[k] / 2.0;
    const double w = spectral_weight(s.lambdas[k], s.h_canonical[k], m);
    acc = acc + (w * cheb_u_eval(r, x)) * cheb_u_eval(c, x);
  }
  return acc;
}

double entry_power_canonical(const PowerQuery& q) {
  return entry_power_canonical(eigenvalues(q.n), q.m, q.i, q.j);
}

DenseRealMatrix matrix_power_closed(std::size_t n, std::int64_t m, const kernels::KernelSet& ks) {
  check_exponent(m);
  const Spectrum s = eigenvalues(n);
  const std::size_t p = s.block_order;

  std::vector<double> args(p);
  for (std::size_t k = 0; k < p; ++k) args[k] = s.lambdas[k] / 2.0;
  std::vector<double> table(p * p);  // table[r * p + k] = U_r(lambda_k / 2)
  ks.cheb_table(args, p, table);

  std::vector<double> scaled(p * p);      // lambda_k^m h_k U_r
  std::vector<double> transposed(p * p);  // U_s at row k
  for (std::size_t k = 0; k < p; ++k) {
    const double w = spectral_weight(s.lambdas[k], s.h_canonical[k], m);
    for (std::size_t r = 0; r < p; ++r) {
      scaled[r * p + k] = w * table[r * p + k];
      transposed[k * p + r] = table[r * p + k];
    }
  }
  std::vector<double> block(p * p);
  ks.gemm(scaled, transposed, block, p, p, p);

  DenseRealMatrix out(n);
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = r; c < p; ++c) {
      const double v = block[r * p + c];
      if (!std::isfinite(v))
        throw std::range_error("closed-form power overflowed at m = " + std::to_string(m));
      for (std::size_t cls = 1; cls <= 3; ++cls) {
        out(3 * r + cls, 3 * c + cls) = v;
        out(3 * c + cls, 3 * r + cls) = v;
      }
    }
  }
  return out;
}

DenseIntMatrix matrix_power_blocked(const StripeMatrix& s, std::int64_t m) {
  check_exponent(m);
  const BlockDecomposition b = residue_decompose(s);
  // Residue classes of equal size have identical blocks.
  std::map<std::size_t, DenseIntMatrix> by_order;
  std::vector<DenseIntMatrix> powered;
  powered.reserve(b.stride);
  for (std::size_t r = 1; r <= b.stride; ++r) {
    const std::size_t p = b.block_orders[r - 1];
    auto it = by_order.find(p);
    if (it == by_order.end()) it = by_order.emplace(p, dense_pow_binary(b.block(r), m)).first;
    powered.push_back(it->second);
  }
  return recompose(b, powered);
}

RoundingFailure::RoundingFailure(std::size_t i, std::size_t j, double value, double residual)
    : std::runtime_error(describe_failure(i, j, value, residual)),
      i_(i),
      j_(j),
      value_(value),
      residual_(residual) {}

double max_rounding_residual(const DenseRealMatrix& m) {
  double worst = 0.0;
  for (double v : m.row_major()) {
    const double r = std::isfinite(v) ? std::abs(v - std::nearbyint(v)) : INFINITY;
    if (r > worst) worst = r;
  }
  return worst;
}

DenseIntMatrix round_to_int(const DenseRealMatrix& m, double tol) {
  if (!(tol > 0.0 && tol < 0.5)) throw std::invalid_argument("rounding tolerance must lie in (0, 0.5)");
  const std::size_t n = m.order();
  DenseIntMatrix out(n);
  double worst = -1.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const double v = m(i, j);
      const double nearest = std::nearbyint(v);
      const double r = std::isfinite(v) ? std::abs(v - nearest) : INFINITY;
      if (r > worst) {
        worst = r;
        wi = i;
        wj = j;
      }
      if (std::isfinite(v)) out(i, j) = BigInt(nearest);
    }
  }
  if (worst > tol) throw RoundingFailure(wi, wj, m(wi, wj), worst);
  return out;
}

}  // namespace stripepow
