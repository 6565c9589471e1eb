#include "variants.hpp"

namespace stripepow::kernels::detail {

void cheb_table_scalar(std::span<const double> args, std::size_t degrees, std::span<double> out) {
  const std::size_t w = args.size();
  if (degrees == 0) return;
  for (std::size_t k = 0; k < w; ++k) out[k] = 1.0;
  if (degrees == 1) return;
  for (std::size_t k = 0; k < w; ++k) out[w + k] = 2.0 * args[k];
  for (std::size_t r = 2; r < degrees; ++r) {
    const double* u1 = out.data() + (r - 1) * w;
    const double* u0 = out.data() + (r - 2) * w;
    double* dst = out.data() + r * w;
    for (std::size_t k = 0; k < w; ++k) dst[k] = (2.0 * args[k]) * u1[k] - u0[k];
  }
}

void gemm_scalar(std::span<const double> a, std::span<const double> b, std::span<double> c,
                 std::size_t rows, std::size_t inner, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    double* ci = c.data() + i * cols;
    for (std::size_t j = 0; j < cols; ++j) ci[j] = 0.0;
    for (std::size_t k = 0; k < inner; ++k) {
      const double aik = a[i * inner + k];
      const double* bk = b.data() + k * cols;
      for (std::size_t j = 0; j < cols; ++j) ci[j] = ci[j] + aik * bk[j];
    }
  }
}

}  // namespace stripepow::kernels::detail
