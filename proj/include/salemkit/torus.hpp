#pragma once

// Realizability of Salem numbers as entropies of automorphisms of
// two-dimensional complex tori, with explicit integer witnesses.
//
// A torus automorphism acts on H^1 (rank 4) by an integer matrix F1 whose
// characteristic polynomial is P(t) = t^4 + j t^3 - a t^2 + k t + 1, and on
// H^2 = wedge^2 H^1 (rank 6) by F2 = wedge_square(F1), whose characteristic
// polynomial is Q(t) = t^6 + a t^5 + b t^4 + c t^3 + b t^2 + a t + 1.

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "salemkit/matrix.hpp"
#include "salemkit/polycore.hpp"

namespace salemkit::torus {

// Q = t^6 + a t^5 + b t^4 + c t^3 + b t^2 + a t + 1.
struct SexticView {
  Integer a, b, c;
  static SexticView of(const IntPoly& q);
  IntPoly polynomial() const;
};

// P = t^4 + j t^3 - a t^2 + k t + 1.
struct QuarticView {
  Integer j, k;
  IntPoly polynomial(const Integer& a) const;
};

enum class Case { kDeg6, kDeg4a, kDeg4b, kDeg4c, kDeg2 };
std::string to_string(Case c);
std::optional<Case> case_from_string(const std::string& s);

struct SquareProperty {
  bool holds = false;
  Integer q_at_one;       // Q(1)
  Integer q_at_minus_one; // Q(-1)
  Integer m, n;           // nonnegative roots when holds
};
SquareProperty square_property(const IntPoly& q);

struct DerivedQuartic {
  IntPoly p;
  Integer j, k;
};
// j = (m+n)/2, k = (n-m)/2. Throws an internal error on a parity mismatch
// or when jk = b+1, j^2+k^2 = -c-2a fail.
DerivedQuartic derive_p(const SexticView& q, const Integer& m, const Integer& n);
DerivedQuartic derive_p_from_q(const IntPoly& q);

// Companion matrix: ones on the subdiagonal, last column -p_0..-p_3.
IntMatrix companion(const IntPoly& p);

// Basis order of the exterior square.
inline constexpr std::array<std::array<int, 2>, 6> kWedgeBasis{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
inline constexpr const char* kWedgeBasisName = "e1^e2,e1^e3,e1^e4,e2^e3,e2^e4,e3^e4";

// Action on wedge^2 Z^4; entries are 2x2 minors.
IntMatrix wedge_square(const IntMatrix& m);
// <u, v> with u ^ v = <u, v> e1^e2^e3^e4.
IntMatrix wedge_gram();

struct TorusWitness {
  Case kind = Case::kDeg6;
  IntPoly s;
  IntPoly cofactor;  // 1 for degree six
  IntPoly q;
  Integer m, n, j, k;
  IntPoly p;
  IntMatrix f1;  // action on H^1
  IntMatrix f2;  // action on H^2
  RatInterval lambda;
};

// The five quadratic cofactors of the degree-four construction, in the
// order (t-1)^2, t^2-t+1, t^2+1, t^2+t+1, (t+1)^2.
const std::array<IntPoly, 5>& quartic_cofactors();

struct QuarticCases {
  bool a = false;  // S(1) = -m^2
  bool b = false;  // S(-1) = n^2
  bool c = false;  // S(1) = -m^2/2 and S(-1) = n^2/2
  bool any() const { return a || b || c; }
};
QuarticCases quartic_cases(const IntPoly& s);

struct TorusDecision {
  bool realizable = false;
  int degree = 0;
  std::string reason;
  SquareProperty square;                // of S (degree 6) or of the chosen S*C
  QuarticCases cases;                   // degree 4 only
  std::array<bool, 5> cofactor_hits{};  // degree 4 only: S*C_i has the square property
  std::optional<TorusWitness> witness;
};

// Requires a Salem polynomial.
TorusDecision decide_torus(const IntPoly& s, const Rational& tol = default_tolerance());

// Builds the witness for a chosen cofactor (S*C must have the square property).
TorusWitness build_witness(Case kind, const IntPoly& s, const IntPoly& cofactor, const RatInterval& lambda);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};
struct VerifyReport {
  std::vector<Check> checks;
  bool all_passed() const;
};
VerifyReport verify_witness(const TorusWitness& w);

struct PeriodModel {
  std::complex<double> gamma1, gamma2;
  // 2x4, row-major: rows are eigen-coordinates for gamma1 and gamma2.
  std::array<std::array<std::complex<double>, 4>, 2> pi{};
  double residual = 0;          // max |diag(g1,g2) Pi - Pi F1^T|
  double modulus_product = 0;   // |gamma1| |gamma2|
  double lattice_volume = 0;    // |det| of the real 4x4 [Re Pi; Im Pi]
};
PeriodModel period_matrix(const IntPoly& p, double tol = 1e-9);

// h2 characteristic polynomial of the automorphism of E x E given by a 2x2 A.
IntPoly exe_h2_charpoly(const IntMatrix& a);

struct ExeResult {
  bool realizable = false;  // false means "unknown": the criterion is only sufficient
  std::optional<IntMatrix> witness;
};
ExeResult exe_realizable_deg2(const IntPoly& s);

struct ProjectiveFlags {
  enum class Status { kImpossible, kUndetermined };
  Status status = Status::kUndetermined;
  std::string note;
  std::optional<ExeResult> exe;  // degree 2 only
};
ProjectiveFlags projective_flags(const IntPoly& s);

}  // namespace salemkit::torus
