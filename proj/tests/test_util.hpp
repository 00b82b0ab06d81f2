#pragma once

#include <random>
#include <vector>

#include "salemkit/polycore.hpp"

namespace salemkit::testing {

// Polynomial from coefficients written the way they are printed: highest degree first.
inline IntPoly desc(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly::from_descending(v);
}

inline Rational rat(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Rational pow10_neg(unsigned e) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, e);
  return Rational(Integer(1), den);
}

// Random monic reciprocal polynomial of even degree with free coefficients in [-b, b].
inline IntPoly random_reciprocal(std::mt19937_64& rng, int degree, int b) {
  std::uniform_int_distribution<int> coef(-b, b);
  std::vector<Integer> c(static_cast<std::size_t>(degree + 1), 0);
  c.front() = c.back() = 1;
  for (int i = 1; i <= degree / 2; ++i) {
    const int v = coef(rng);
    c[static_cast<std::size_t>(i)] = v;
    c[static_cast<std::size_t>(degree - i)] = v;
  }
  return IntPoly(std::move(c));
}

const IntPoly kGolden = desc({1, -3, 1});
const IntPoly kLehmer = desc({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
const IntPoly kQuartic = desc({1, -1, -1, -1, 1});
const IntPoly kSextic = desc({1, -1, -1, 1, -1, -1, 1});

}  // namespace salemkit::testing
