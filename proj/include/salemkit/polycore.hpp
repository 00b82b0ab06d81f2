#pragma once

// Exact integer polynomials, reciprocal structure and real root counting.
//
// Coefficients are stored in ascending order: coeffs()[i] multiplies t^i.
// Everything here is exact (GMP integers and rationals); the only inexact
// outputs are root brackets, and those have exact rational endpoints.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace salemkit {

using Integer = mpz_class;
using Rational = mpq_class;

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly from_descending(const std::vector<Integer>& descending);
  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t exponent);
  // t - root
  static IntPoly linear_root(const Integer& root);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  std::vector<Integer> descending() const;
  // Zero past the degree.
  Integer operator[](std::size_t i) const;
  const Integer& leading() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
  // Lexicographic on ascending coefficients, then degree.
  friend bool lex_less(const IntPoly& a, const IntPoly& b);

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

IntPoly pow(const IntPoly& p, unsigned e);
IntPoly derivative(const IntPoly& p);
// Coefficients reversed: t^deg * p(1/t).
IntPoly reversal(const IntPoly& p);

Integer content(const IntPoly& p);
// Divides by the content, with the sign chosen so the leading coefficient is positive.
IntPoly primitive_part(const IntPoly& p);

// Euclidean division over Z; only valid when every step divides exactly,
// which is always the case for a monic divisor.
struct DivResult {
  IntPoly quotient;
  IntPoly remainder;
};
DivResult divmod_monic(const IntPoly& a, const IntPoly& b);
// Exact quotient a / b over Z, or nullopt when b does not divide a in Z[t].
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);
// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Yun's algorithm: p = c * prod f_i^i with f_i primitive, squarefree and
// pairwise coprime. Only nonconstant factors are returned.
struct SquarefreeFactor {
  IntPoly factor;
  unsigned multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p);
IntPoly squarefree_part(const IntPoly& p);

Rational eval(const IntPoly& p, const Rational& x);
Integer eval(const IntPoly& p, const Integer& x);
// Multiplicity of x as a root of p (p nonzero).
unsigned root_multiplicity(const IntPoly& p, const Integer& x);

bool is_monic_reciprocal(const IntPoly& p);

IntPoly cyclotomic(unsigned n);
unsigned long euler_phi(unsigned long n);
// All n with phi(n) <= degree, ascending.
std::vector<unsigned> cyclotomic_indices_up_to_degree(unsigned degree);

struct CyclotomicFactor {
  unsigned n;
  unsigned multiplicity;
  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};
struct CyclotomicSplit {
  IntPoly core;
  std::vector<CyclotomicFactor> factors;  // ascending n
};
CyclotomicSplit strip_cyclotomic_factors(const IntPoly& p);

// R with t^(d/2) R(t + 1/t) = S(t).
IntPoly trace_poly(const IntPoly& s);
// Inverse transform: t^deg(R) R(t + 1/t) as a polynomial in t.
IntPoly trace_expand(const IntPoly& r);

struct RatInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Interval endpoint that may be infinite.
struct Endpoint {
  enum class Kind { kNegInf, kFinite, kPosInf };
  Kind kind = Kind::kFinite;
  Rational value;

  static Endpoint neg_inf() { return {Kind::kNegInf, 0}; }
  static Endpoint pos_inf() { return {Kind::kPosInf, 0}; }
  static Endpoint at(const Rational& v) { return {Kind::kFinite, v}; }
};

// Canonical Sturm chain of squarefree_part(p).
std::vector<IntPoly> sturm_chain(const IntPoly& p);
// Distinct real roots of p in the open interval (lo, hi).
unsigned sturm_count(const IntPoly& p, const Endpoint& lo, const Endpoint& hi);
// Real roots of p in (lo, hi) counted with multiplicity.
unsigned count_roots_with_multiplicity(const IntPoly& p, const Endpoint& lo, const Endpoint& hi);

struct RootLocationReport {
  unsigned n_real_gt1 = 0;          // (1, inf)
  unsigned n_real_0_1 = 0;          // (0, 1); reciprocal partners of the above
  unsigned n_real_lt_minus1 = 0;    // (-inf, -1)
  unsigned n_real_minus1_0 = 0;     // (-1, 0)
  unsigned n_on_circle = 0;         // non-real roots with |t| = 1
  unsigned n_complex_off_circle = 0;
  unsigned at_one = 0;
  unsigned at_minus_one = 0;

  unsigned total() const {
    return n_real_gt1 + n_real_0_1 + n_real_lt_minus1 + n_real_minus1_0 + n_on_circle +
           n_complex_off_circle + at_one + at_minus_one;
  }
  friend bool operator==(const RootLocationReport&, const RootLocationReport&) = default;
};

// All counts with multiplicity. Requires a monic reciprocal input.
RootLocationReport root_locations(const IntPoly& s);

// Bisection to width <= tol. The bracket must show a sign change (or hit a
// root at an endpoint); the result always keeps the root.
RatInterval refine_root(const IntPoly& p, const RatInterval& bracket, const Rational& tol);

// Isolating brackets (width <= tol) for every distinct real root of p in
// (lo, hi), ascending. Endpoints must be finite.
std::vector<RatInterval> isolate_real_roots(const IntPoly& p, const Rational& lo, const Rational& hi,
                                            const Rational& tol);

// Rational bounds with lo <= sqrt(q) <= hi and hi - lo <= 2^-bits.
RatInterval sqrt_bracket(const Rational& q, unsigned bits);

// Cauchy bound: every complex root has |x| < root_bound(p).
Rational root_bound(const IntPoly& p);

Rational default_tolerance();  // 10^-12

// Human form in descending order, e.g. "t^2 - 3t + 1".
std::string to_string(const IntPoly& p, char var = 't');

}  // namespace salemkit
