#include "stripepow/stripe.hpp"

#include <cmath>
#include <utility>

namespace stripepow {

StripeMatrix::StripeMatrix(std::size_t order, std::size_t stride) : order_(order), stride_(stride) {
  if (order < 1) throw std::invalid_argument("stripe matrix order must be >= 1");
  if (stride < 1) throw std::invalid_argument("stripe matrix stride must be >= 1");
}

int StripeMatrix::entry(std::size_t i, std::size_t j) const {
  if (i < 1 || i > order_ || j < 1 || j > order_)
    throw std::out_of_range("stripe matrix index out of range");
  const std::size_t gap = i > j ? i - j : j - i;
  return gap == stride_ ? 1 : 0;
}

std::size_t StripeMatrix::nonzero_count() const noexcept {
  return order_ > stride_ ? 2 * (order_ - stride_) : 0;
}

StripeMatrix make_stripe(std::size_t n, std::size_t d) { return StripeMatrix(n, d); }

DenseIntMatrix to_dense(const StripeMatrix& s) {
  const std::size_t n = s.order();
  const std::size_t d = s.stride();
  DenseIntMatrix out(n);
  for (std::size_t i = 1; i + d <= n; ++i) {
    out(i, i + d) = 1;
    out(i + d, i) = 1;
  }
  return out;
}

DenseIntMatrix path_adjacency(std::size_t p) {
  DenseIntMatrix out(p);
  for (std::size_t r = 1; r < p; ++r) {
    out(r, r + 1) = 1;
    out(r + 1, r) = 1;
  }
  return out;
}

DenseIntMatrix BlockDecomposition::block(std::size_t r) const {
  if (r < 1 || r > stride) throw std::out_of_range("residue class out of range");
  return path_adjacency(block_orders[r - 1]);
}

BlockDecomposition residue_decompose(const StripeMatrix& s) {
  BlockDecomposition b;
  b.order = s.order();
  b.stride = s.stride();
  b.block_orders.reserve(b.stride);
  b.permutation.reserve(b.order);
  for (std::size_t r = 1; r <= b.stride; ++r) {
    // ceil((n - r + 1) / d), zero for classes with no members
    const std::size_t members = r <= b.order ? (b.order - r) / b.stride + 1 : 0;
    b.block_orders.push_back(members);
    for (std::size_t q = 1; q <= members; ++q) b.permutation.push_back(b.original_index(r, q));
  }
  return b;
}

DenseIntMatrix recompose(const BlockDecomposition& b, std::span<const DenseIntMatrix> powered_blocks) {
  if (powered_blocks.size() != b.stride)
    throw DimensionMismatch("recompose: expected " + std::to_string(b.stride) + " blocks, got " +
                            std::to_string(powered_blocks.size()));
  for (std::size_t r = 0; r < b.stride; ++r) {
    if (powered_blocks[r].order() != b.block_orders[r])
      throw DimensionMismatch("recompose: block " + std::to_string(r + 1) + " has order " +
                              std::to_string(powered_blocks[r].order()) + ", expected " +
                              std::to_string(b.block_orders[r]));
  }
  DenseIntMatrix out(b.order);
  for (std::size_t r = 1; r <= b.stride; ++r) {
    const auto& blk = powered_blocks[r - 1];
    const std::size_t p = blk.order();
    for (std::size_t u = 1; u <= p; ++u)
      for (std::size_t v = 1; v <= p; ++v)
        out(b.original_index(r, u), b.original_index(r, v)) = blk(u, v);
  }
  return out;
}

DenseIntMatrix dense_mul(const DenseIntMatrix& a, const DenseIntMatrix& b) {
  if (a.order() != b.order())
    throw DimensionMismatch("dense_mul: orders " + std::to_string(a.order()) + " and " +
                            std::to_string(b.order()) + " differ");
  const std::size_t n = a.order();
  DenseIntMatrix c(n);
  auto cd = c.row_major();
  auto ad = a.row_major();
  auto bd = b.row_major();
  // i-k-j order; zero entries of a are skipped, which leaves the exact sum unchanged.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const mpz_srcptr aik = ad[i * n + k].get_mpz_t();
      if (mpz_sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const mpz_srcptr bkj = bd[k * n + j].get_mpz_t();
        if (mpz_sgn(bkj) == 0) continue;
        mpz_addmul(cd[i * n + j].get_mpz_t(), aik, bkj);
      }
    }
  }
  return c;
}

DenseIntMatrix dense_pow_binary(const DenseIntMatrix& a, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("negative matrix powers are not supported");
  DenseIntMatrix result = DenseIntMatrix::identity(a.order());
  if (m == 0) return result;
  DenseIntMatrix base = a;
  bool have_result = false;
  auto e = static_cast<std::uint64_t>(m);
  while (true) {
    if (e & 1U) {
      result = have_result ? dense_mul(result, base) : base;
      have_result = true;
    }
    e >>= 1U;
    if (e == 0) break;
    base = dense_mul(base, base);
  }
  return result;
}

double dense_det_shifted(const StripeMatrix& s, double lambda) {
  const std::size_t n = s.order();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    a[i * n + i] = lambda;
    for (std::size_t j = 0; j < n; ++j)
      if (s.entry(i + 1, j + 1) != 0) a[i * n + j] = -1.0;
  }
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    if (a[pivot * n + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[col * n + j], a[pivot * n + j]);
      det = -det;
    }
    const double piv = a[col * n + col];
    det *= piv;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / piv;
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a[r * n + j] -= f * a[col * n + j];
    }
  }
  return det;
}

}  // namespace stripepow
