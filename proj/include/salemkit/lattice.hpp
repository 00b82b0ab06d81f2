#pragma once

// Integral quadratic lattices: Gram matrices, exact signatures, isometries,
// direct sums, E8(-1), invariant sublattices and the numeric signatures of
// the real eigenspaces E_tau = ker(M + M^-1 - tau I).

#include <string>
#include <vector>

#include "salemkit/matrix.hpp"
#include "salemkit/polycore.hpp"

namespace salemkit::lattice {

// Symmetric integer matrix of size n >= 1.
class Gram {
 public:
  explicit Gram(IntMatrix entries);
  const IntMatrix& matrix() const { return m_; }
  std::size_t rank() const { return m_.rows(); }
  friend bool operator==(const Gram&, const Gram&) = default;

 private:
  IntMatrix m_;
};

struct SignatureTriple {
  unsigned pos = 0, neg = 0, zero = 0;
  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

// Exact: Sturm counts on det(tI - G).
SignatureTriple signature(const Gram& g);

// The printed E8(-1): diagonal -2, bonds 1-2, 2-3, 3-4, 3-5, 5-6, 6-7, 7-8.
Gram e8_minus();

bool is_isometry(const IntMatrix& m, const Gram& g);
Gram direct_sum(const Gram& a, const Gram& b);
// M (+) I on G1 (+) G2. Throws if M is not an isometry of G1.
IntMatrix extend_by_identity(const IntMatrix& m, const Gram& g1, const Gram& g2);

bool is_even(const Gram& g);
bool is_unimodular(const Gram& g);

// Saturated basis (rows, Hermite normal form) of {v : p(M) v = 0}.
IntMatrix kernel_sublattice(const IntMatrix& m, const IntPoly& p);

struct EigenspaceEntry {
  double tau = 0;
  RatInterval tau_bracket;
  unsigned multiplicity = 0;  // as a root of the trace polynomial
  unsigned dimension = 0;     // numeric kernel dimension
  unsigned pos = 0, neg = 0;
  bool determinate = true;    // false when some eigenvalue of G|E_tau is within tol of zero
  double margin = 0;          // smallest |eigenvalue| of G restricted to the orthonormal basis
  double residual = 0;        // max |(M + M^-1 - tau I) v|
  std::vector<std::vector<double>> basis;  // orthonormal, one vector per row
};

struct EigenspaceReport {
  std::vector<EigenspaceEntry> entries;
  double tol = 0;
  // Rank of the +-1 part and of the real roots off the unit circle.
  unsigned excluded_rank = 0;
  unsigned count_signature(unsigned pos, unsigned neg) const;
};

// Every tau in (-2, 2) that is a trace root of char(M) with the +-1 factors
// removed. Throws when distinct tau values lie within 10 tol.
EigenspaceReport eigenspace_signatures(const IntMatrix& m, const Gram& g, double tol = 1e-9);

}  // namespace salemkit::lattice
