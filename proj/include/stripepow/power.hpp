#pragma once

// Positive integer powers of the stride-3 matrix: closed-form Chebyshev
// entries, the exact residue-blocked path, and integer rounding.

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "stripepow/kernels.hpp"
#include "stripepow/spectral.hpp"
#include "stripepow/stripe.hpp"

namespace stripepow {

struct PowerQuery {
  std::size_t n = 0;
  std::int64_t m = 0;
  std::size_t i = 0;
  std::size_t j = 0;
};

struct SelectorValue {
  int delta = 0;
  std::size_t sigma = 0;
};

/// 1, 2 or 3 for i + j congruent to 2, 1, 0 (mod 3).
int delta_selector(std::size_t i, std::size_t j);
/// i + 2, i + 1 or i under the same congruences.
std::size_t sigma_selector(std::size_t i, std::size_t j);
SelectorValue selectors(std::size_t i, std::size_t j);

/// The alternating-sign closed form, term by term: odd-indexed eigenvalues use
/// ascending Chebyshev degrees, even-indexed ones the reversed degree
/// (n - sigma)/3, both weighted by Spectrum::h_paper.
double entry_power_paper(const PowerQuery& q);
double entry_power_paper(const Spectrum& s, std::int64_t m, std::size_t i, std::size_t j);

/// sum_k lambda_k^m h_k U_r(lambda_k/2) U_s(lambda_k/2) with r = (i-delta)/3,
/// s = (j-delta)/3 and the positive weights. Exact zero when i != j (mod 3).
/// The k-sum is accumulated in ascending k, and (i, j) and (j, i) evaluate the
/// identical expression.
double entry_power_canonical(const PowerQuery& q);
double entry_power_canonical(const Spectrum& s, std::int64_t m, std::size_t i, std::size_t j);

/// Full H^m from the canonical entries; bit-identical to entry_power_canonical.
/// Throws std::range_error if an entry is not finite.
DenseRealMatrix matrix_power_closed(std::size_t n, std::int64_t m,
                                    const kernels::KernelSet& k = kernels::active());

/// Exact H^m for any order and stride via the residue-class blocks.
DenseIntMatrix matrix_power_blocked(const StripeMatrix& s, std::int64_t m);

class RoundingFailure : public std::runtime_error {
 public:
  RoundingFailure(std::size_t i, std::size_t j, double value, double residual);
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }
  double value() const noexcept { return value_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t i_;
  std::size_t j_;
  double value_;
  double residual_;
};

/// Nearest-integer matrix; throws RoundingFailure naming the worst entry if any
/// |x - round(x)| exceeds tol (or an entry is not finite).
DenseIntMatrix round_to_int(const DenseRealMatrix& m, double tol);

/// Largest |x - round(x)| over the matrix.
double max_rounding_residual(const DenseRealMatrix& m);

}  // namespace stripepow
