// AArch64 variant. vfmaq is avoided so results match the scalar path.

#include <arm_neon.h>

#include "variants.hpp"

namespace stripepow::kernels::detail {

void cheb_table_neon(std::span<const double> args, std::size_t degrees, std::span<double> out) {
  const std::size_t w = args.size();
  const std::size_t wv = w & ~std::size_t{1};
  if (degrees == 0) return;
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t two = vdupq_n_f64(2.0);
  std::size_t k = 0;
  for (; k < wv; k += 2) vst1q_f64(out.data() + k, one);
  for (; k < w; ++k) out[k] = 1.0;
  if (degrees == 1) return;
  for (k = 0; k < wv; k += 2) vst1q_f64(out.data() + w + k, vmulq_f64(two, vld1q_f64(args.data() + k)));
  for (; k < w; ++k) out[w + k] = 2.0 * args[k];
  for (std::size_t r = 2; r < degrees; ++r) {
    const double* u1 = out.data() + (r - 1) * w;
    const double* u0 = out.data() + (r - 2) * w;
    double* dst = out.data() + r * w;
    for (k = 0; k < wv; k += 2) {
      const float64x2_t tx = vmulq_f64(two, vld1q_f64(args.data() + k));
      vst1q_f64(dst + k, vsubq_f64(vmulq_f64(tx, vld1q_f64(u1 + k)), vld1q_f64(u0 + k)));
    }
    for (; k < w; ++k) dst[k] = (2.0 * args[k]) * u1[k] - u0[k];
  }
}

void gemm_neon(std::span<const double> a, std::span<const double> b, std::span<double> c,
               std::size_t rows, std::size_t inner, std::size_t cols) {
  const std::size_t cv = cols & ~std::size_t{1};
  for (std::size_t i = 0; i < rows; ++i) {
    double* ci = c.data() + i * cols;
    for (std::size_t j = 0; j < cols; ++j) ci[j] = 0.0;
    for (std::size_t k = 0; k < inner; ++k) {
      const double aik = a[i * inner + k];
      const float64x2_t av = vdupq_n_f64(aik);
      const double* bk = b.data() + k * cols;
      std::size_t j = 0;
      for (; j < cv; j += 2)
        vst1q_f64(ci + j, vaddq_f64(vld1q_f64(ci + j), vmulq_f64(av, vld1q_f64(bk + j))));
      for (; j < cols; ++j) ci[j] = ci[j] + aik * bk[j];
    }
  }
}

}  // namespace stripepow::kernels::detail
