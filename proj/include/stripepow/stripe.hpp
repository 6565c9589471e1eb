#pragma once

// Matrix representations for symmetric (0,1) stride-banded matrices and the
// exact big-integer multiplication oracle.
//
// All index arguments on the public surface are 1-based.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace stripepow {

using BigInt = mpz_class;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square row-major matrix addressed with 1-based (i, j).
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t order) : order_(order), data_(order * order) {}

  static DenseMatrix identity(std::size_t order) {
    DenseMatrix out(order);
    for (std::size_t i = 1; i <= order; ++i) out(i, i) = T(1);
    return out;
  }

  std::size_t order() const noexcept { return order_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[(i - 1) * order_ + (j - 1)]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[(i - 1) * order_ + (j - 1)];
  }

  std::span<T> row_major() noexcept { return data_; }
  std::span<const T> row_major() const noexcept { return data_; }

  DenseMatrix transposed() const {
    DenseMatrix out(order_);
    for (std::size_t i = 1; i <= order_; ++i)
      for (std::size_t j = 1; j <= order_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<T> data_;
};

using DenseIntMatrix = DenseMatrix<BigInt>;
using DenseRealMatrix = DenseMatrix<double>;

/// Implicit n x n matrix with ones exactly where |i - j| = d.
class StripeMatrix {
 public:
  StripeMatrix(std::size_t order, std::size_t stride);

  std::size_t order() const noexcept { return order_; }
  std::size_t stride() const noexcept { return stride_; }

  int entry(std::size_t i, std::size_t j) const;
  std::size_t nonzero_count() const noexcept;

  bool operator==(const StripeMatrix&) const = default;

 private:
  std::size_t order_;
  std::size_t stride_;
};

StripeMatrix make_stripe(std::size_t n, std::size_t d);
DenseIntMatrix to_dense(const StripeMatrix& s);

/// Residue-class split of a stride-d matrix. Class r (1..d) holds the
/// original indices r, r+d, r+2d, ...; within a class the restriction of the
/// stripe matrix is the path-graph adjacency (tridiagonal, zero diagonal).
struct BlockDecomposition {
  std::size_t order = 0;
  std::size_t stride = 0;
  /// permutation[q-1] is the original index placed at position q.
  std::vector<std::size_t> permutation;
  /// block_orders[r-1] is the size of residue class r.
  std::vector<std::size_t> block_orders;

  /// Original index of the s-th member (1-based) of residue class r.
  std::size_t original_index(std::size_t r, std::size_t s) const noexcept {
    return r + (s - 1) * stride;
  }
  /// The p_r x p_r tridiagonal (0,1) block for residue class r.
  DenseIntMatrix block(std::size_t r) const;
};

BlockDecomposition residue_decompose(const StripeMatrix& s);
DenseIntMatrix recompose(const BlockDecomposition& b, std::span<const DenseIntMatrix> powered_blocks);

/// p x p matrix with ones on the first sub- and super-diagonal.
DenseIntMatrix path_adjacency(std::size_t p);

DenseIntMatrix dense_mul(const DenseIntMatrix& a, const DenseIntMatrix& b);
DenseIntMatrix dense_pow_binary(const DenseIntMatrix& a, std::int64_t m);

/// det(lambda I - H) by partial-pivot elimination in double precision.
double dense_det_shifted(const StripeMatrix& s, double lambda);

}  // namespace stripepow
