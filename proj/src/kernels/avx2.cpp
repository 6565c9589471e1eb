// Compiled with -mavx2 only; FMA is never emitted, so results match the scalar path.

#include <immintrin.h>

#include "variants.hpp"

namespace stripepow::kernels::detail {

void cheb_table_avx2(std::span<const double> args, std::size_t degrees, std::span<double> out) {
  const std::size_t w = args.size();
  const std::size_t wv = w & ~std::size_t{3};
  if (degrees == 0) return;
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t k = 0;
  for (; k < wv; k += 4) _mm256_storeu_pd(out.data() + k, one);
  for (; k < w; ++k) out[k] = 1.0;
  if (degrees == 1) return;
  for (k = 0; k < wv; k += 4)
    _mm256_storeu_pd(out.data() + w + k, _mm256_mul_pd(two, _mm256_loadu_pd(args.data() + k)));
  for (; k < w; ++k) out[w + k] = 2.0 * args[k];
  for (std::size_t r = 2; r < degrees; ++r) {
    const double* u1 = out.data() + (r - 1) * w;
    const double* u0 = out.data() + (r - 2) * w;
    double* dst = out.data() + r * w;
    for (k = 0; k < wv; k += 4) {
      const __m256d tx = _mm256_mul_pd(two, _mm256_loadu_pd(args.data() + k));
      const __m256d t = _mm256_mul_pd(tx, _mm256_loadu_pd(u1 + k));
      _mm256_storeu_pd(dst + k, _mm256_sub_pd(t, _mm256_loadu_pd(u0 + k)));
    }
    for (; k < w; ++k) dst[k] = (2.0 * args[k]) * u1[k] - u0[k];
  }
}

void gemm_avx2(std::span<const double> a, std::span<const double> b, std::span<double> c,
               std::size_t rows, std::size_t inner, std::size_t cols) {
  const std::size_t cv = cols & ~std::size_t{3};
  for (std::size_t i = 0; i < rows; ++i) {
    double* ci = c.data() + i * cols;
    for (std::size_t j = 0; j < cols; ++j) ci[j] = 0.0;
    for (std::size_t k = 0; k < inner; ++k) {
      const double aik = a[i * inner + k];
      const __m256d av = _mm256_set1_pd(aik);
      const double* bk = b.data() + k * cols;
      std::size_t j = 0;
      for (; j < cv; j += 4) {
        const __m256d prod = _mm256_mul_pd(av, _mm256_loadu_pd(bk + j));
        _mm256_storeu_pd(ci + j, _mm256_add_pd(_mm256_loadu_pd(ci + j), prod));
      }
      for (; j < cols; ++j) ci[j] = ci[j] + aik * bk[j];
    }
  }
}

}  // namespace stripepow::kernels::detail
