#include <doctest.h>

#include <random>

#include "salemkit/error.hpp"
#include "salemkit/matrix.hpp"
#include "test_util.hpp"

using namespace salemkit;
using salemkit::testing::desc;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int b) {
  std::uniform_int_distribution<int> d(-b, b);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Cofactor expansion, fine for n <= 5.
Integer det_by_expansion(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    const Integer term = m(0, c) * det_by_expansion(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

}  // namespace

TEST_CASE("construction and products") {
  const IntMatrix a{{1, 2}, {3, 4}};
  const IntMatrix b{{0, 1}, {1, 0}};
  CHECK(a * b == IntMatrix{{2, 1}, {4, 3}});
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK(a + b == IntMatrix{{1, 3}, {4, 4}});
  CHECK(IntMatrix::identity(3) * IntMatrix::identity(3) == IntMatrix::identity(3));
  CHECK(block_diagonal(a, IntMatrix{{5}}) == IntMatrix{{1, 2, 0}, {3, 4, 0}, {0, 0, 5}});
  CHECK_THROWS_AS(a * IntMatrix(3, 3), Error);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix m = random_matrix(rng, n, n, 4);
    REQUIRE(determinant(m) == det_by_expansion(m));
  }
}

TEST_CASE("characteristic polynomial") {
  CHECK(characteristic_polynomial(IntMatrix{{2, 0}, {0, 3}}) == desc({1, -5, 6}));
  CHECK(characteristic_polynomial(IntMatrix{{0, -1}, {1, 3}}) == desc({1, -3, 1}));

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IntMatrix m = random_matrix(rng, n, n, 5);
    const IntPoly cp = characteristic_polynomial(m);
    REQUIRE(cp.degree() == static_cast<int>(n));
    // det(xI - M) at integer points.
    for (long x = -3; x <= 3; ++x) {
      IntMatrix xm = Integer(x) * IntMatrix::identity(n) - m;
      REQUIRE(eval(cp, Integer(x)) == determinant(xm));
    }
    // Cayley-Hamilton.
    REQUIRE(evaluate_at(cp, m) == IntMatrix(n, n));
  }
}

TEST_CASE("unimodular inverse") {
  const IntMatrix m{{2, 1}, {1, 1}};
  CHECK(unimodular_inverse(m) == IntMatrix{{1, -1}, {-1, 2}});
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), Error);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    // Products of elementary matrices are unimodular.
    IntMatrix u = IntMatrix::identity(4);
    for (int s = 0; s < 6; ++s) {
      IntMatrix e = IntMatrix::identity(4);
      const std::size_t i = rng() % 4, j = (i + 1 + rng() % 3) % 4;
      e(i, j) = static_cast<long>(rng() % 5) - 2;
      u = u * e;
    }
    REQUIRE(u * unimodular_inverse(u) == IntMatrix::identity(4));
  }
}

TEST_CASE("rank") {
  CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(IntMatrix::identity(5)) == 5);
  CHECK(rank(IntMatrix(3, 4)) == 0);
  CHECK(rank(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
}

TEST_CASE("hermite normal form") {
  const IntMatrix h = hermite_normal_form(IntMatrix{{2, 4}, {1, 3}});
  CHECK(h == IntMatrix{{1, 1}, {0, 2}});
  CHECK(hermite_normal_form(IntMatrix{{0, 0}, {0, -3}}) == IntMatrix{{0, 3}});
}

TEST_CASE("integer kernel") {
  SUBCASE("saturated basis") {
    // 2x + 4y = 0 has kernel spanned by (2, -1), not (4, -2).
    const IntMatrix k = integer_kernel(IntMatrix{{2, 4}});
    REQUIRE(k.rows() == 1);
    CHECK(((k(0, 0) == 2 && k(0, 1) == -1) || (k(0, 0) == -2 && k(0, 1) == 1)));
  }
  SUBCASE("full rank gives empty kernel") { CHECK(integer_kernel(IntMatrix::identity(3)).rows() == 0); }
  SUBCASE("zero map gives everything") { CHECK(integer_kernel(IntMatrix(2, 3)) == IntMatrix::identity(3)); }
  SUBCASE("random") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t r = 1 + trial % 4, c = 2 + trial % 5;
      const IntMatrix m = random_matrix(rng, r, c, 3);
      const IntMatrix k = integer_kernel(m);
      REQUIRE(k.rows() == c - rank(m));
      if (k.rows() > 0) {
        REQUIRE(m * k.transpose() == IntMatrix(r, k.rows()));
        REQUIRE(rank(k) == k.rows());
      }
    }
  }
}
