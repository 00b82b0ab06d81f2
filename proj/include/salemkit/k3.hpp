#pragma once

// K3-surface realizability checks for Salem polynomials, and a verifier
// for the lattice mechanics behind the degree-fourteen construction.

#include <optional>
#include <string>
#include <vector>

#include "salemkit/lattice.hpp"
#include "salemkit/polycore.hpp"
#include "salemkit/torus.hpp"

namespace salemkit::k3 {

struct NecessarySquares {
  bool abs_s_minus_one = false;  // |S(-1)|
  bool abs_s_one = false;        // |S(1)|
  bool minus_product = false;    // -S(-1) S(1)
  bool all() const { return abs_s_minus_one && abs_s_one && minus_product; }
};
NecessarySquares necessary_squares(const IntPoly& s);

// p + q = deg S, deg S = 2 mod 4, p = q mod 8, S(-1) S(1) = -1.
bool gm_sufficient(const IntPoly& s, int p, int q);

enum class Verdict { kRealizableThm12, kRealizableDeg22, kRealizableKummer, kConditionsFail, kUnknown };
std::string to_string(Verdict v);

struct GmCandidate {
  int p = 0, q = 0;
  bool holds = false;
};

struct K3Report {
  int degree = 0;
  Integer s_at_one, s_at_minus_one;
  NecessarySquares necessary;
  bool product_is_minus_one = false;
  std::vector<GmCandidate> gm;  // signatures (3, d-3) and (1, d-1) where positive
  bool gm_applicable() const;
  Verdict verdict = Verdict::kUnknown;
  std::vector<std::string> notes;
  std::optional<torus::TorusWitness> kummer_witness;
};

// Requires a Salem polynomial.
K3Report k3_classify(const IntPoly& s, const Rational& tol = default_tolerance());

struct MechanicsReport {
  IntPoly salem_factor;
  RatInterval lambda;
  lattice::SignatureTriple ambient_signature;
  bool extension_is_isometry = false;
  bool charpoly_extends = false;   // char(g) = char(f) (t-1)^8
  unsigned tau_signature_20 = 0;   // number of tau with E_tau of signature (2,0)
  bool unique_tau_20 = false;
  bool e8_in_fixed_lattice = false;
  lattice::EigenspaceReport eigenspaces;
  bool all_passed() const { return extension_is_isometry && charpoly_extends && unique_tau_20 && e8_in_fixed_lattice; }
};

// Precondition: f is an isometry of G and char(f) has a Salem factor.
MechanicsReport verify_thm12_mechanics(const IntMatrix& f, const lattice::Gram& g, double tol = 1e-9);

}  // namespace salemkit::k3
