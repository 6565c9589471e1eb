#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "stripepow/chebyshev.hpp"
#include "stripepow/kernels.hpp"
#include "stripepow/spectral.hpp"

using namespace stripepow;

namespace {

DenseRealMatrix stripe_real(std::size_t n) {
  DenseRealMatrix h(n);
  for (std::size_t i = 1; i + 3 <= n; ++i) h(i, i + 3) = h(i + 3, i) = 1.0;
  return h;
}

double max_abs_diff(const DenseRealMatrix& a, const DenseRealMatrix& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.row_major().size(); ++k)
    worst = std::max(worst, std::abs(a.row_major()[k] - b.row_major()[k]));
  return worst;
}

// Identity tolerances tighten with the block order.
double ladder(std::size_t p) { return p <= 10 ? 1e-12 : p <= 20 ? 1e-10 : 1e-8; }

}  // namespace

TEST_CASE("eigenvalues examples") {
  const Spectrum s6 = eigenvalues(6);
  REQUIRE(s6.lambdas.size() == 2);
  CHECK(s6.lambdas[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s6.lambdas[1] == doctest::Approx(-1.0).epsilon(1e-15));
  const Spectrum s9 = eigenvalues(9);
  CHECK(s9.lambdas[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(s9.lambdas[1] == 0.0);
  CHECK(s9.lambdas[2] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
  const Spectrum s3 = eigenvalues(3);
  CHECK(s3.lambdas == std::vector<double>{0.0});
  CHECK(s3.multiplicity == 3);
  for (std::size_t bad : {0, 1, 4, 7, 10}) CHECK_THROWS_AS(eigenvalues(bad), std::invalid_argument);
}

TEST_CASE("eigenvalues follow 2cos(3k pi/(n+3)) and are antisymmetric") {
  for (std::size_t n = 3; n <= 60; n += 3) {
    const Spectrum s = eigenvalues(n);
    REQUIRE(s.block_order == n / 3);
    CHECK(s.multiplicity * s.block_order == n);
    for (std::size_t k = 1; k <= s.block_order; ++k) {
      const double l = s.lambdas[k - 1];
      CHECK(std::abs(l - oracle::eigenvalue(n, k)) < 1e-14);
      CHECK(std::abs(l) < 2.0);
      if (k > 1) CHECK(l < s.lambdas[k - 2]);
      CHECK(l == -s.lambdas[s.block_order - k]);
      CHECK(std::abs(charpoly_value(n, l)) < 1e-9);
    }
  }
}

TEST_CASE("norm_constants examples") {
  const NormConstants h6 = norm_constants(6);
  CHECK(h6.paper[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(h6.paper[1] == doctest::Approx(-0.5).epsilon(1e-14));

  const NormConstants h9 = norm_constants(9);
  CHECK(h9.paper[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(h9.paper[1] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(h9.paper[2] == doctest::Approx(0.25).epsilon(1e-14));

  // Brute force: h_k = 1 / sum_r U_r(lambda_k/2)^2 using the trigonometric form.
  for (std::size_t k = 1; k <= 3; ++k) {
    double sum = 0.0;
    for (std::size_t r = 0; r < 3; ++r) sum += std::pow(oracle::cheb_trig(r, oracle::eigenvalue(9, k) / 2), 2);
    CHECK(h9.canonical[k - 1] == doctest::Approx(1.0 / sum).epsilon(1e-13));
  }
  CHECK(h9.canonical[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(h9.canonical[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(h9.canonical[2] == doctest::Approx(0.25).epsilon(1e-14));

  CHECK(norm_constants(3).canonical[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(norm_constants(8), std::invalid_argument);
}

TEST_CASE("alternating constants reconcile with the canonical ones") {
  for (std::size_t n = 3; n <= 60; n += 3) {
    const NormConstants h = norm_constants(n);
    const Spectrum s = eigenvalues(n);
    for (std::size_t k = 1; k <= n / 3; ++k) {
      const double l = s.lambdas[k - 1];
      const double canonical = 3.0 * (4.0 - l * l) / (2.0 * static_cast<double>(n) + 6.0);
      CHECK(h.canonical[k - 1] > 0.0);
      CHECK(std::abs(h.canonical[k - 1] - canonical) < 1e-15);
      CHECK(std::abs(h.paper[k - 1] - (k % 2 == 1 ? 1.0 : -1.0) * canonical) < 1e-12);
    }
  }
}

TEST_CASE("odd block order: partner eigenvalues square to 4 - lambda_k^2") {
  for (std::size_t n = 3; n <= 63; n += 6) {
    const std::size_t p = n / 3;
    REQUIRE(p % 2 == 1);
    for (std::size_t k = 1; k <= p; ++k) {
      const double target = 4.0 - std::pow(oracle::eigenvalue(n, k), 2);
      if (6 * k <= n - 3) {
        CHECK(std::abs(std::pow(oracle::eigenvalue(n, (n + 6 * k + 3) / 6), 2) - target) < 1e-12);
      } else if (6 * k == n + 3) {
        CHECK(std::abs(target - 4.0) < 1e-12);
      } else {
        CHECK(std::abs(std::pow(oracle::eigenvalue(n, (n + 3 - 2 * k) / 2), 2) - target) < 1e-12);
      }
    }
  }
}

TEST_CASE("row orthonormality of the canonical weights") {
  for (std::size_t n = 3; n <= 60; n += 3) {
    const Spectrum s = eigenvalues(n);
    const std::size_t p = s.block_order;
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t c = 0; c < p; ++c) {
        double sum = 0.0;
        for (std::size_t k = 0; k < p; ++k)
          sum += s.h_canonical[k] * cheb_u_eval(r, s.lambdas[k] / 2) * cheb_u_eval(c, s.lambdas[k] / 2);
        CHECK(std::abs(sum - (r == c ? 1.0 : 0.0)) < 1e-10);
      }
  }
}

TEST_CASE("reflection identity U_{p-1-r} = (-1)^(k+1) U_r at the eigenvalues") {
  for (std::size_t n = 3; n <= 60; n += 3) {
    const Spectrum s = eigenvalues(n);
    const std::size_t p = s.block_order;
    for (std::size_t k = 1; k <= p; ++k)
      for (std::size_t r = 0; r < p; ++r) {
        const double x = s.lambdas[k - 1] / 2;
        const double sign = k % 2 == 1 ? 1.0 : -1.0;
        CHECK(std::abs(cheb_u_eval(p - 1 - r, x) - sign * cheb_u_eval(r, x)) < 1e-10);
      }
  }
}

TEST_CASE("build_P examples") {
  const DenseRealMatrix p6 = build_P(6);
  const std::vector<double> col1{1, 0, 0, 1, 0, 0};
  const std::vector<double> col4{-1, 0, 0, 1, 0, 0};
  for (std::size_t r = 1; r <= 6; ++r) {
    CHECK(p6(r, 1) == doctest::Approx(col1[r - 1]).epsilon(1e-15));
    CHECK(p6(r, 4) == doctest::Approx(col4[r - 1]).epsilon(1e-15));
  }
  CHECK(build_P(3) == DenseRealMatrix::identity(3));
  CHECK_THROWS_AS(build_P(5), std::invalid_argument);
}

TEST_CASE("build_P columns follow the ascending/descending Chebyshev families") {
  for (std::size_t n : {9, 12, 15, 18}) {
    const DenseRealMatrix P = build_P(n);
    const std::size_t p = n / 3;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t k = (j + 2) / 3;
      const double x = oracle::eigenvalue(n, k) / 2;
      for (std::size_t row = 1; row <= n; ++row) {
        if (row % 3 != j % 3) {
          CHECK(P(row, j) == 0.0);
          continue;
        }
        const std::size_t r = (row - 1) / 3;
        const std::size_t degree = k % 2 == 1 ? r : p - 1 - r;
        CHECK(std::abs(P(row, j) - oracle::cheb_trig(degree, x)) < 1e-10);
      }
    }
  }
}

TEST_CASE("build_Pinv examples") {
  CHECK(max_abs_diff(build_Pinv(3), DenseRealMatrix::identity(3)) < 1e-15);
  const TransformPair t = transform_pair(6);
  CHECK(max_abs_diff(kernels::multiply(t.P, t.Pinv), DenseRealMatrix::identity(6)) < 1e-12);
  CHECK_THROWS_AS(build_Pinv(4), std::invalid_argument);

  const TransformPair t9 = transform_pair(9);
  const DenseRealMatrix d = kernels::multiply(kernels::multiply(t9.Pinv, stripe_real(9)), t9.P);
  CHECK(max_abs_diff(d, jordan_diag(9)) < 1e-10);
}

TEST_CASE("transform pair invariants up to n = 60") {
  for (std::size_t n = 3; n <= 60; n += 3) {
    const std::size_t p = n / 3;
    const TransformPair t = transform_pair(n);
    const double tol = ladder(p);
    CHECK(max_abs_diff(kernels::multiply(t.P, t.Pinv), DenseRealMatrix::identity(n)) < tol);
    CHECK(max_abs_diff(kernels::multiply(t.Pinv, t.P), DenseRealMatrix::identity(n)) < tol);
    const DenseRealMatrix d = kernels::multiply(kernels::multiply(t.Pinv, stripe_real(n)), t.P);
    CHECK(max_abs_diff(d, jordan_diag(n)) < 1e-8);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (i % 3 != j % 3) {
          CHECK(t.P(i, j) == 0.0);
          CHECK(t.Pinv(i, j) == 0.0);
        }
  }
}

TEST_CASE("jordan_diag examples") {
  CHECK(jordan_diag(3) == DenseRealMatrix(3));
  const DenseRealMatrix j6 = jordan_diag(6);
  const std::vector<double> diag{1, 1, 1, -1, -1, -1};
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = 1; j <= 6; ++j)
      CHECK(j6(i, j) == doctest::Approx(i == j ? diag[i - 1] : 0.0).epsilon(1e-15));
  for (std::size_t n = 3; n <= 60; n += 3) {
    const DenseRealMatrix j = jordan_diag(n);
    double trace = 0.0;
    for (std::size_t i = 1; i <= n; ++i) trace += j(i, i);
    CHECK(std::abs(trace) < 1e-12);
  }
  CHECK_THROWS_AS(jordan_diag(10), std::invalid_argument);
}

TEST_CASE("reconstruct reproduces H") {
  CHECK(max_abs_diff(reconstruct(3), DenseRealMatrix(3)) < 1e-15);
  const DenseRealMatrix r6 = reconstruct(6);
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = i; j <= 6; ++j)
      CHECK(std::abs(r6(i, j) - (j == i + 3 ? 1.0 : 0.0)) < 1e-12);
  CHECK(max_abs_diff(reconstruct(30), stripe_real(30)) < 1e-8);
  for (std::size_t n = 3; n <= 60; n += 3) CHECK(max_abs_diff(reconstruct(n), stripe_real(n)) < 1e-8);
}
