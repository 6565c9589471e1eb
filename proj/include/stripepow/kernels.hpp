#pragma once

// Data-parallel inner loops with a scalar reference and SIMD variants chosen
// at runtime. Every variant performs the same IEEE operations in the same
// order as the scalar reference, so results are bit-identical.

#include <cstddef>
#include <span>
#include <vector>

#include "stripepow/stripe.hpp"

namespace stripepow::kernels {

enum class Isa { scalar, avx2, neon };

struct KernelSet {
  Isa isa;
  const char* name;
  /// out[r * args.size() + k] = U_r(args[k]) for r = 0..degrees-1.
  void (*cheb_table)(std::span<const double> args, std::size_t degrees, std::span<double> out);
  /// c (rows x cols) = a (rows x inner) * b (inner x cols), all row-major;
  /// each output is accumulated from zero in ascending inner index.
  void (*gemm)(std::span<const double> a, std::span<const double> b, std::span<double> c,
               std::size_t rows, std::size_t inner, std::size_t cols);
};

const KernelSet& scalar();
/// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelSet* avx2();
const KernelSet* neon();

/// Best available variant. STRIPEPOW_ISA=scalar|avx2|neon overrides the choice
/// when that variant is available.
const KernelSet& active();

/// Every variant usable on this machine, scalar first.
std::vector<const KernelSet*> available();

DenseRealMatrix multiply(const DenseRealMatrix& a, const DenseRealMatrix& b,
                         const KernelSet& k = active());

}  // namespace stripepow::kernels
