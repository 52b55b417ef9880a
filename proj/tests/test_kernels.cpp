#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gorenstein/kernels.hpp"
#include "test_support.hpp"

using namespace gorenstein;
using gorenstein::testing::gf;
using gorenstein::testing::qq;
using gorenstein::testing::random_alternating;
using gorenstein::testing::random_alternating_linear;
using gorenstein::testing::random_form;
using gorenstein::testing::random_matrix;

TEST_CASE("serial and parallel products agree") {
  std::mt19937_64 rng(51);
  for (const Field& field : {qq(), gf()}) {
    for (int t = 0; t < 10; ++t) {
      const std::size_t r = 1 + rng() % 8, k = 1 + rng() % 8, c = 1 + rng() % 8;
      const FieldMatrix a = random_matrix(field, r, k, rng);
      const FieldMatrix b = random_matrix(field, k, c, rng);
      CHECK(kernels::serial::multiply(a, b) == kernels::parallel::multiply(a, b));
    }
    const PolyMatrix a = random_alternating_linear(field, 7, rng);
    const PolyMatrix b = random_alternating_linear(field, 7, rng);
    CHECK(kernels::serial::multiply(a, b) == kernels::parallel::multiply(a, b));
  }
  CHECK_THROWS_AS(kernels::serial::multiply(FieldMatrix(2, 3, Scalar::zero(qq())),
                                            FieldMatrix(2, 3, Scalar::zero(qq()))),
                  std::invalid_argument);
}

TEST_CASE("serial and parallel Pfaffian rows agree") {
  std::mt19937_64 rng(52);
  for (const Field& field : {qq(), gf()}) {
    for (std::size_t n = 1; n <= 11; n += 2) {
      const FieldMatrix m = random_alternating(field, n, rng);
      CHECK(kernels::serial::signed_maximal_pfaffians(m) ==
            kernels::parallel::signed_maximal_pfaffians(m));
    }
    const PolyMatrix pm = random_alternating_linear(field, 9, rng);
    CHECK(kernels::serial::signed_maximal_pfaffians(pm) ==
          kernels::parallel::signed_maximal_pfaffians(pm));
  }
}

TEST_CASE("catalecticant entries") {
  std::mt19937_64 rng(53);
  const Field field = gf();
  const auto phi = random_form<DualElement>(field, 5, rng);
  const auto rows = sym_basis(2);
  const auto cols = sym_basis(2);
  const Polynomial x = variable(field, 0);
  const FieldMatrix serial = kernels::serial::catalecticant(phi, rows, cols, x);
  CHECK(serial == kernels::parallel::catalecticant(phi, rows, cols, x));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Polynomial arg =
          x * Polynomial::monomial(field, rows[i]) * Polynomial::monomial(field, cols[j]);
      CHECK(serial(i, j) == evaluate(phi, arg));
    }
  }
  CHECK_THROWS_AS(kernels::serial::catalecticant(phi, rows, sym_basis(1), x),
                  std::invalid_argument);
}

TEST_CASE("thread count") { CHECK(kernels::max_threads() >= 1); }
