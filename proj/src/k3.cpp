#include "salemkit/k3.hpp"

#include <algorithm>

#include "salemkit/error.hpp"
#include "salemkit/salem.hpp"

namespace salemkit::k3 {

namespace {

bool is_square(const Integer& v) { return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()); }

Integer abs_of(const Integer& v) { return v < 0 ? Integer(-v) : v; }

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kRealizableThm12: return "realizable_thm12";
    case Verdict::kRealizableDeg22: return "realizable_deg22";
    case Verdict::kRealizableKummer: return "realizable_kummer";
    case Verdict::kConditionsFail: return "conditions_fail";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

NecessarySquares necessary_squares(const IntPoly& s) {
  if (s.is_zero() || s.leading() != 1) throw_input("necessary_squares needs a monic polynomial");
  const Integer s1 = eval(s, Integer(1));
  const Integer sm1 = eval(s, Integer(-1));
  return {is_square(abs_of(sm1)), is_square(abs_of(s1)), is_square(Integer(-sm1 * s1))};
}

bool gm_sufficient(const IntPoly& s, int p, int q) {
  const int d = s.degree();
  if (p <= 0 || q <= 0) throw_input("signature entries must be positive");
  if (p + q != d) throw_input("p + q must equal the degree");
  if (!salem::classify_salem(s).is_salem) throw_precondition("gm_sufficient needs a Salem polynomial");
  return d % 4 == 2 && ((p - q) % 8 + 8) % 8 == 0 && eval(s, Integer(-1)) * eval(s, Integer(1)) == -1;
}

bool K3Report::gm_applicable() const {
  return std::any_of(gm.begin(), gm.end(), [](const GmCandidate& c) { return c.holds; });
}

K3Report k3_classify(const IntPoly& s, const Rational& tol) {
  const auto cls = salem::classify_salem(s, tol);
  if (!cls.is_salem) throw_precondition("not a Salem polynomial: " + salem::to_string(cls.reason));
  K3Report rep;
  rep.degree = s.degree();
  rep.s_at_one = eval(s, Integer(1));
  rep.s_at_minus_one = eval(s, Integer(-1));
  rep.necessary = necessary_squares(s);
  rep.product_is_minus_one = rep.s_at_one * rep.s_at_minus_one == -1;
  for (int p : {3, 1}) {
    const int q = rep.degree - p;
    if (q > 0) rep.gm.push_back({p, q, gm_sufficient(s, p, q)});
  }
  const int d = rep.degree;
  if (d > 20) rep.notes.push_back("degree exceeds 20: not the entropy of a projective K3 automorphism");

  if (d > 22) {
    rep.verdict = Verdict::kConditionsFail;
    rep.notes.push_back("degree exceeds 22, the rank of H^2 of a K3 surface");
    return rep;
  }
  if (d <= 6) {
    const auto dec = torus::decide_torus(s, tol);
    if (dec.realizable) {
      if (!torus::verify_witness(*dec.witness).all_passed()) throw_internal("torus witness fails verification");
      rep.verdict = Verdict::kRealizableKummer;
      rep.kummer_witness = dec.witness;
      rep.notes.push_back("torus automorphism (case " + torus::to_string(dec.witness->kind) +
                          ") descends to the Kummer surface with the same entropy");
      return rep;
    }
    rep.notes.push_back("not realizable on a torus: " + dec.reason);
  }
  if (d == 14 && rep.product_is_minus_one) {
    rep.verdict = Verdict::kRealizableThm12;
    rep.notes.push_back("degree 14 with S(-1)S(1) = -1");
    return rep;
  }
  if (d == 22 && rep.product_is_minus_one) {
    rep.verdict = Verdict::kRealizableDeg22;
    rep.notes.push_back("degree 22 with S(-1)S(1) = -1");
    return rep;
  }
  if (d == 22 && !rep.necessary.all()) {
    // S is then the full characteristic polynomial on the unimodular H^2.
    rep.verdict = Verdict::kConditionsFail;
    rep.notes.push_back("degree 22 requires |S(-1)|, |S(1)| and -S(-1)S(1) to be squares");
    return rep;
  }
  rep.verdict = Verdict::kUnknown;
  if (d == 10) {
    rep.notes.push_back(
        "degree 10: no trace root gives an E_tau of signature (2,0), so the eigenspace method does not apply; "
        "the smallest degree-ten Salem number is realized by a special construction");
  }
  if (d == 6 || d == 8 || d == 10 || d == 18) {
    rep.notes.push_back("unknown (special twisting and gluing constructions exist in this degree)");
  }
  return rep;
}

MechanicsReport verify_thm12_mechanics(const IntMatrix& f, const lattice::Gram& g, double tol) {
  if (!lattice::is_isometry(f, g)) throw_precondition("f is not an isometry of G");
  const IntPoly cf = characteristic_polynomial(f);
  const auto split = strip_cyclotomic_factors(cf);
  const auto cls = salem::classify_salem(split.core);
  if (!cls.is_salem) throw_precondition("char(f) has no Salem factor");

  MechanicsReport rep;
  rep.salem_factor = split.core;
  rep.lambda = *cls.lambda;
  const lattice::Gram e8 = lattice::e8_minus();
  const lattice::Gram ambient = lattice::direct_sum(g, e8);
  rep.ambient_signature = lattice::signature(ambient);
  const IntMatrix ext = lattice::extend_by_identity(f, g, e8);
  rep.extension_is_isometry = lattice::is_isometry(ext, ambient);
  rep.charpoly_extends = characteristic_polynomial(ext) == cf * pow(IntPoly{-1, 1}, 8);
  rep.eigenspaces = lattice::eigenspace_signatures(ext, ambient, tol);
  rep.tau_signature_20 = rep.eigenspaces.count_signature(2, 0);
  rep.unique_tau_20 = rep.tau_signature_20 == 1;

  const IntMatrix fixed = lattice::kernel_sublattice(ext, IntPoly{-1, 1});
  const std::size_t n = g.rank();
  const std::size_t base_rank = rank(fixed);
  bool contains = fixed.rows() > 0;
  for (std::size_t i = 0; contains && i < 8; ++i) {
    IntMatrix aug(fixed.rows() + 1, fixed.cols());
    for (std::size_t r = 0; r < fixed.rows(); ++r)
      for (std::size_t c = 0; c < fixed.cols(); ++c) aug(r, c) = fixed(r, c);
    aug(fixed.rows(), n + i) = 1;
    // The kernel is saturated, so rational containment gives integral containment.
    contains = rank(aug) == base_rank;
  }
  rep.e8_in_fixed_lattice = contains;
  return rep;
}

}  // namespace salemkit::k3
