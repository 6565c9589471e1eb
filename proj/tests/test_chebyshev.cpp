#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "stripepow/chebyshev.hpp"
#include "stripepow/stripe.hpp"

using namespace stripepow;

TEST_CASE("cheb_u_eval low-degree examples") {
  for (double x : {-7.5, -1.0, 0.0, 0.3, 2.0}) CHECK(cheb_u_eval(0, x) == 1.0);
  CHECK(cheb_u_eval(1, 0.5) == 1.0);
  CHECK(cheb_u_eval(2, 1.0) == 3.0);
  const ChebValue v = cheb_u(2, 1.0);
  CHECK(v.degree == 2);
  CHECK(v.argument == 1.0);
  CHECK(v.value == 3.0);
}

TEST_CASE("cheb_u_eval matches the trigonometric quotient inside (-1, 1)") {
  for (std::size_t k = 0; k <= 40; ++k)
    for (double x = -0.95; x < 0.96; x += 0.05) {
      const double want = oracle::cheb_trig(k, x);
      CHECK(std::abs(cheb_u_eval(k, x) - want) <= 1e-10 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("cheb_u_eval matches the explicit series outside [-1, 1]") {
  // U_k(1) = k + 1 and U_k(-1) = (-1)^k (k + 1).
  for (std::size_t k = 0; k <= 30; ++k) {
    CHECK(cheb_u_eval(k, 1.0) == static_cast<double>(k + 1));
    CHECK(cheb_u_eval(k, -1.0) == (k % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(k + 1));
  }
  for (std::size_t k = 0; k <= 20; ++k)
    for (double x : {-1.5, 1.25, 2.0}) {
      const double want = oracle::cheb_series(k, x);
      CHECK(std::isfinite(cheb_u_eval(k, x)));
      CHECK(std::abs(cheb_u_eval(k, x) - want) <= 1e-10 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("cheb_u_roots examples") {
  CHECK(cheb_u_roots(1).size() == 1);
  CHECK(std::abs(cheb_u_roots(1)[0]) < 1e-15);
  const auto r2 = cheb_u_roots(2);
  CHECK(r2[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r2[1] == doctest::Approx(-0.5).epsilon(1e-15));
  const auto r3 = cheb_u_roots(3);
  CHECK(r3[0] == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK(std::abs(r3[1]) < 1e-15);
  CHECK(r3[2] == doctest::Approx(-std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK_THROWS_AS(cheb_u_roots(0), std::invalid_argument);
}

TEST_CASE("roots lie in (-1, 1), decrease strictly, equal the cosine formula and annihilate U_k") {
  for (std::size_t k = 1; k <= 40; ++k) {
    const auto roots = cheb_u_roots(k);
    REQUIRE(roots.size() == k);
    for (std::size_t j = 0; j < k; ++j) {
      CHECK(roots[j] > -1.0);
      CHECK(roots[j] < 1.0);
      if (j > 0) CHECK(roots[j] < roots[j - 1]);
      const double cosine = std::cos(static_cast<double>(j + 1) * std::numbers::pi / static_cast<double>(k + 1));
      CHECK(std::abs(roots[j] - cosine) < 1e-15);
      CHECK(std::abs(cheb_u_eval(k, roots[j])) < 1e-10);
    }
  }
}

TEST_CASE("roots of U_k strictly interlace roots of U_{k+1}") {
  for (std::size_t k = 1; k <= 39; ++k) {
    const auto inner = cheb_u_roots(k);
    const auto outer = cheb_u_roots(k + 1);
    for (std::size_t j = 0; j < k; ++j) {
      CHECK(outer[j] > inner[j]);
      CHECK(inner[j] > outer[j + 1]);
    }
  }
}

TEST_CASE("delta_rec examples") {
  for (double a : {-3.0, 0.0, 1.7}) CHECK(delta_rec(0, a) == 1.0);
  CHECK(delta_rec(1, 1.7) == 1.7);
  CHECK(delta_rec(2, 3.0) == 8.0);
  CHECK(delta_rec(3, 2.0) == 4.0);
}

TEST_CASE("delta_rec equals the exact tridiagonal determinant at integer alpha") {
  for (std::size_t p = 0; p <= 15; ++p)
    for (long alpha = -4; alpha <= 4; ++alpha) {
      // det(alpha I + T) = det(alpha I - (-T)); the sign of the off-diagonals does not matter.
      const double want = oracle::shifted_det(p == 0 ? 0 : p, 1, alpha).convert_to<double>();
      if (p == 0) {
        CHECK(delta_rec(0, static_cast<double>(alpha)) == 1.0);
        continue;
      }
      CHECK(delta_rec(p, static_cast<double>(alpha)) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("delta_rec(p, alpha) = U_p(alpha / 2)") {
  for (std::size_t p = 0; p <= 40; ++p)
    for (int step = -40; step <= 40; ++step) {
      const double alpha = 0.1 * step;
      const double u = cheb_u_eval(p, alpha / 2.0);
      const double d = delta_rec(p, alpha);
      CHECK(std::abs(d - u) <= 1e-12 * std::max(1.0, std::abs(u)));
    }
}

TEST_CASE("charpoly_value examples and errors") {
  CHECK(charpoly_value(6, 3.0) == doctest::Approx(512.0).epsilon(1e-15));
  CHECK(std::abs(charpoly_value(6, 1.0)) < 1e-12);
  CHECK(charpoly_value(3, 0.0) == 0.0);
  CHECK_THROWS_AS(charpoly_value(7, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(charpoly_value(0, 1.0), std::invalid_argument);
}

TEST_CASE("charpoly_value equals the exact determinant at integer shifts") {
  for (std::size_t n = 3; n <= 30; n += 3)
    for (long lambda = -3; lambda <= 3; ++lambda) {
      const double want = oracle::shifted_det(n, 3, lambda).convert_to<double>();
      CHECK(std::abs(charpoly_value(n, static_cast<double>(lambda)) - want) <= 1e-9 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("charpoly_value agrees with partial-pivot elimination") {
  for (std::size_t n = 3; n <= 30; n += 3)
    for (int step = 0; step <= 60; ++step) {
      const double lambda = -3.0 + 0.1 * step;
      const double cheb = charpoly_value(n, lambda);
      const double det = dense_det_shifted(make_stripe(n, 3), lambda);
      CHECK(std::abs(cheb - det) <= 1e-8 * std::max(1.0, std::abs(cheb)));
    }
}
