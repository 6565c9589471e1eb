#pragma once

#include "stripepow/kernels.hpp"

namespace stripepow::kernels::detail {

void cheb_table_scalar(std::span<const double> args, std::size_t degrees, std::span<double> out);
void gemm_scalar(std::span<const double> a, std::span<const double> b, std::span<double> c,
                 std::size_t rows, std::size_t inner, std::size_t cols);

#if defined(STRIPEPOW_HAVE_AVX2)
void cheb_table_avx2(std::span<const double> args, std::size_t degrees, std::span<double> out);
void gemm_avx2(std::span<const double> a, std::span<const double> b, std::span<double> c,
               std::size_t rows, std::size_t inner, std::size_t cols);
#endif

#if defined(STRIPEPOW_HAVE_NEON)
void cheb_table_neon(std::span<const double> args, std::size_t degrees, std::span<double> out);
void gemm_neon(std::span<const double> a, std::span<const double> b, std::span<double> c,
               std::size_t rows, std::size_t inner, std::size_t cols);
#endif

}  // namespace stripepow::kernels::detail
