#include <cstdlib>
#include <string_view>

#include "variants.hpp"

namespace stripepow::kernels {
namespace {

const KernelSet kScalar{Isa::scalar, "scalar", detail::cheb_table_scalar, detail::gemm_scalar};

#if defined(STRIPEPOW_HAVE_AVX2)
const KernelSet kAvx2{Isa::avx2, "avx2", detail::cheb_table_avx2, detail::gemm_avx2};
#endif

#if defined(STRIPEPOW_HAVE_NEON)
const KernelSet kNeon{Isa::neon, "neon", detail::cheb_table_neon, detail::gemm_neon};
#endif

const KernelSet& select_active() {
  const KernelSet* best = &scalar();
  if (const KernelSet* k = neon()) best = k;
  if (const KernelSet* k = avx2()) best = k;
  if (const char* env = std::getenv("STRIPEPOW_ISA")) {
    for (const KernelSet* k : available())
      if (std::string_view(env) == k->name) return *k;
  }
  return *best;
}

}  // namespace

const KernelSet& scalar() { return kScalar; }

const KernelSet* avx2() {
#if defined(STRIPEPOW_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet* neon() {
#if defined(STRIPEPOW_HAVE_NEON)
  return &kNeon;  // Advanced SIMD is mandatory on AArch64.
#else
  return nullptr;
#endif
}

const KernelSet& active() {
  static const KernelSet& chosen = select_active();
  return chosen;
}

std::vector<const KernelSet*> available() {
  std::vector<const KernelSet*> out{&scalar()};
  if (const KernelSet* k = avx2()) out.push_back(k);
  if (const KernelSet* k = neon()) out.push_back(k);
  return out;
}

DenseRealMatrix multiply(const DenseRealMatrix& a, const DenseRealMatrix& b, const KernelSet& k) {
  if (a.order() != b.order()) throw DimensionMismatch("multiply: orders differ");
  const std::size_t n = a.order();
  DenseRealMatrix c(n);
  k.gemm(a.row_major(), b.row_major(), c.row_major(), n, n, n);
  return c;
}

}  // namespace stripepow::kernels
