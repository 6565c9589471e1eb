#pragma once

// Closed-form eigensystem of the stride-3 matrix H of order n = 3p.

#include <cstddef>
#include <vector>

#include "stripepow/stripe.hpp"

namespace stripepow {

struct Spectrum {
  std::size_t order = 0;
  std::size_t block_order = 0;
  /// lambda_k = 2 cos(k pi / (p+1)), k = 1..p, strictly decreasing.
  std::vector<double> lambdas;
  std::size_t multiplicity = 3;
  /// 3 (4 - lambda_k^2) / (2n + 6); the orthonormalising weights.
  std::vector<double> h_canonical;
  /// The alternating-sign constants that pair with the reversed-degree columns
  /// of P; equal to (-1)^(k+1) h_canonical_k.
  std::vector<double> h_paper;
};

struct NormConstants {
  std::vector<double> canonical;
  std::vector<double> paper;
};

struct TransformPair {
  DenseRealMatrix P;
  DenseRealMatrix Pinv;
};

/// Throws std::invalid_argument unless n is a positive multiple of 3.
std::size_t block_order_of(std::size_t n);

Spectrum eigenvalues(std::size_t n);
NormConstants norm_constants(std::size_t n);

DenseRealMatrix build_P(std::size_t n);
DenseRealMatrix build_Pinv(std::size_t n);
TransformPair transform_pair(std::size_t n);

/// diag(lambda_1, lambda_1, lambda_1, ..., lambda_p, lambda_p, lambda_p).
DenseRealMatrix jordan_diag(std::size_t n);

/// P J Pinv, which reproduces H.
DenseRealMatrix reconstruct(std::size_t n);

}  // namespace stripepow
