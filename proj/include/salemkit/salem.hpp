#pragma once

// Salem polynomial classification, the Salem number lambda, entropy, and
// coefficient-space enumeration of reciprocal polynomials.

#include <optional>
#include <string>
#include <vector>

#include "salemkit/polycore.hpp"

namespace salemkit::salem {

enum class Reason {
  kSalem,
  kZeroPolynomial,
  kConstant,
  kNotMonic,
  kNotReciprocal,
  kCyclotomicOnly,     // lambda = 1, entropy zero
  kCyclotomicFactor,   // reducible: a Salem-or-other core times cyclotomics
  kComplexOffCircle,   // non-real roots off the unit circle
  kNegativeRealRoot,   // a real root below -1
  kTooManyOffCircle,   // more than one real pair off the circle
};

std::string to_string(Reason r);

struct SalemClassification {
  IntPoly input;
  bool monic = false;
  bool reciprocal = false;
  std::vector<CyclotomicFactor> cyclotomic_factors;
  IntPoly core;
  RootLocationReport locations;
  bool is_salem = false;
  int degree = -1;
  std::optional<RatInterval> lambda;  // present iff is_salem
  Reason reason = Reason::kZeroPolynomial;
};

SalemClassification classify_salem(const IntPoly& s, const Rational& tol = default_tolerance());

// lambda = (r + sqrt(r^2 - 4)) / 2 with r the trace-polynomial root in
// (2, inf), rounded outward; width <= tol.
RatInterval salem_lambda(const IntPoly& s, const Rational& tol = default_tolerance());

struct Entropy {
  double value = 0;        // log(lambda), natural logarithm
  double error_bound = 0;  // |value - log(lambda)| <= error_bound
  RatInterval lambda;
};
// Throws for non-Salem input. Cyclotomic-only input (lambda = 1) is handled
// by entropy_or_zero.
Entropy entropy(const IntPoly& s, const Rational& tol = default_tolerance());
// Zero entropy for lambda = 1 (monic reciprocal, all roots cyclotomic).
Entropy entropy_or_zero(const IntPoly& s, const Rational& tol = default_tolerance());

// Eigenvalues of a reciprocal sextic with one real pair off the circle:
// lambda, 1/lambda and the real traces alpha + conj(alpha) of the
// unit-circle pairs (+-2 for the eigenvalues +-1, listed once per pair).
struct H2Spectrum {
  RatInterval lambda;
  RatInterval lambda_inv;
  std::vector<RatInterval> unit_eigenvalue_traces;
};
H2Spectrum h2_spectrum(const IntPoly& q, const Rational& tol = default_tolerance());

// All Salem polynomials of degree d whose d/2 free coefficients lie in
// [-bound, bound], sorted by lambda midpoint, ties lexicographic.
// `workers` = 0 picks the hardware concurrency; the result does not depend on it.
std::vector<SalemClassification> enumerate_salem(int degree, int bound, unsigned workers = 0);

}  // namespace salemkit::salem
