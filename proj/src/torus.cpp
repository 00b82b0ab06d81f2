#include "salemkit/torus.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "salemkit/error.hpp"
#include "salemkit/salem.hpp"

namespace salemkit::torus {

namespace {

void require_sextic(const IntPoly& q) {
  if (q.degree() != 6 || !is_monic_reciprocal(q)) throw_input("expected a monic reciprocal polynomial of degree 6");
}

std::optional<Integer> exact_sqrt(const Integer& v) {
  if (v < 0 || !mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

bool is_salem(const IntPoly& s) { return salem::classify_salem(s).is_salem; }

std::string str(const Integer& v) { return v.get_str(); }

}  // namespace

SexticView SexticView::of(const IntPoly& q) {
  require_sextic(q);
  return {q[5], q[4], q[3]};
}

IntPoly SexticView::polynomial() const { return IntPoly(std::vector<Integer>{1, a, b, c, b, a, 1}); }

IntPoly QuarticView::polynomial(const Integer& a) const {
  return IntPoly(std::vector<Integer>{1, k, Integer(-a), j, 1});
}

std::string to_string(Case c) {
  switch (c) {
    case Case::kDeg6: return "deg6";
    case Case::kDeg4a: return "deg4a";
    case Case::kDeg4b: return "deg4b";
    case Case::kDeg4c: return "deg4c";
    case Case::kDeg2: return "deg2";
  }
  return "unknown";
}

std::optional<Case> case_from_string(const std::string& s) {
  for (Case c : {Case::kDeg6, Case::kDeg4a, Case::kDeg4b, Case::kDeg4c, Case::kDeg2})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

SquareProperty square_property(const IntPoly& q) {
  require_sextic(q);
  SquareProperty sp;
  sp.q_at_one = eval(q, Integer(1));
  sp.q_at_minus_one = eval(q, Integer(-1));
  const auto m = exact_sqrt(-sp.q_at_one);
  const auto n = exact_sqrt(sp.q_at_minus_one);
  if (m && n) {
    sp.holds = true;
    sp.m = *m;
    sp.n = *n;
  }
  return sp;
}

DerivedQuartic derive_p(const SexticView& q, const Integer& m, const Integer& n) {
  if (m < 0 || n < 0) throw_input("m and n must be nonnegative");
  const Integer sum = m + n;
  if (mpz_odd_p(sum.get_mpz_t())) {
    throw_internal("parity mismatch: m = " + str(m) + " and n = " + str(n) + " differ mod 2");
  }
  DerivedQuartic out;
  out.j = sum / 2;
  out.k = (n - m) / 2;
  if (out.j * out.k != q.b + 1) throw_internal("jk = b + 1 fails for the derived quartic");
  if (out.j * out.j + out.k * out.k != -q.c - 2 * q.a) throw_internal("j^2 + k^2 = -c - 2a fails for the derived quartic");
  out.p = QuarticView{out.j, out.k}.polynomial(q.a);
  return out;
}

DerivedQuartic derive_p_from_q(const IntPoly& q) {
  const auto sp = square_property(q);
  if (!sp.holds) throw_precondition("Q does not have the square property");
  return derive_p(SexticView::of(q), sp.m, sp.n);
}

IntMatrix companion(const IntPoly& p) {
  if (p.degree() != 4 || p.leading() != 1 || p[0] != 1) {
    throw_input("companion matrix needs a monic quartic with constant term 1");
  }
  IntMatrix c(4, 4);
  for (std::size_t i = 1; i < 4; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < 4; ++i) c(i, 3) = -p[i];
  return c;
}

IntMatrix wedge_square(const IntMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw_input("wedge square needs a 4x4 matrix");
  IntMatrix w(6, 6);
  for (std::size_t r = 0; r < 6; ++r) {
    const auto [k, l] = kWedgeBasis[r];
    for (std::size_t c = 0; c < 6; ++c) {
      const auto [i, j] = kWedgeBasis[c];
      w(r, c) = m(k, i) * m(l, j) - m(l, i) * m(k, j);
    }
  }
  return w;
}

IntMatrix wedge_gram() {
  IntMatrix j(6, 6);
  // (12,34) = +1, (13,24) = -1, (14,23) = +1.
  const int pairs[3][3] = {{0, 5, 1}, {1, 4, -1}, {2, 3, 1}};
  for (const auto& p : pairs) {
    j(p[0], p[1]) = p[2];
    j(p[1], p[0]) = p[2];
  }
  return j;
}

const std::array<IntPoly, 5>& quartic_cofactors() {
  static const std::array<IntPoly, 5> kCofactors{
      IntPoly{1, -2, 1}, IntPoly{1, -1, 1}, IntPoly{1, 0, 1}, IntPoly{1, 1, 1}, IntPoly{1, 2, 1}};
  return kCofactors;
}

QuarticCases quartic_cases(const IntPoly& s) {
  if (s.degree() != 4 || !is_monic_reciprocal(s)) throw_input("expected a monic reciprocal quartic");
  const Integer s1 = eval(s, Integer(1));
  const Integer sm1 = eval(s, Integer(-1));
  QuarticCases qc;
  qc.a = exact_sqrt(-s1).has_value();
  qc.b = exact_sqrt(sm1).has_value();
  // S(1) = -m^2/2 and S(-1) = n^2/2.
  qc.c = exact_sqrt(-2 * s1).has_value() && exact_sqrt(2 * sm1).has_value();
  return qc;
}

TorusWitness build_witness(Case kind, const IntPoly& s, const IntPoly& cofactor, const RatInterval& lambda) {
  TorusWitness w;
  w.kind = kind;
  w.s = s;
  w.cofactor = cofactor;
  w.q = s * cofactor;
  const auto sp = square_property(w.q);
  if (!sp.holds) throw_precondition("S*C does not have the square property");
  w.m = sp.m;
  w.n = sp.n;
  const auto d = derive_p(SexticView::of(w.q), sp.m, sp.n);
  w.j = d.j;
  w.k = d.k;
  w.p = d.p;
  w.f1 = companion(w.p);
  w.f2 = wedge_square(w.f1);
  w.lambda = lambda;
  return w;
}

TorusDecision decide_torus(const IntPoly& s, const Rational& tol) {
  const auto cls = salem::classify_salem(s, tol);
  if (!cls.is_salem) throw_precondition("not a Salem polynomial: " + salem::to_string(cls.reason));
  const RatInterval lambda = *cls.lambda;
  TorusDecision out;
  out.degree = s.degree();

  std::optional<std::pair<Case, IntPoly>> choice;
  if (out.degree >= 8) {
    out.reason = "degree exceeds six";
  } else if (out.degree == 6) {
    out.square = square_property(s);
    if (out.square.holds) {
      choice = {Case::kDeg6, IntPoly{1}};
      out.reason = "S has the square property";
    } else {
      out.reason = "S(1) = " + str(out.square.q_at_one) + ", S(-1) = " + str(out.square.q_at_minus_one) +
                   ": not -m^2 and n^2";
    }
  } else if (out.degree == 4) {
    out.cases = quartic_cases(s);
    const auto& cof = quartic_cofactors();
    bool brute = false;
    for (std::size_t i = 0; i < cof.size(); ++i) {
      out.cofactor_hits[i] = square_property(s * cof[i]).holds;
      brute = brute || out.cofactor_hits[i];
    }
    if (brute != out.cases.any()) throw_internal("cofactor search disagrees with the case analysis");
    if (out.cases.a) {
      choice = {Case::kDeg4a, cof[4]};
      out.reason = "S(1) = -m^2";
    } else if (out.cases.b) {
      choice = {Case::kDeg4b, cof[0]};
      out.reason = "S(-1) = n^2";
    } else if (out.cases.c) {
      choice = {Case::kDeg4c, cof[2]};
      out.reason = "S(1) = -m^2/2 and S(-1) = n^2/2";
    } else {
      out.reason = "none of S(1) = -m^2, S(-1) = n^2, or (S(1), S(-1)) = (-m^2/2, n^2/2) holds";
    }
  } else {
    choice = {Case::kDeg2, IntPoly{1, 0, -2, 0, 1}};
    out.reason = "degree two: cofactor (t-1)^2 (t+1)^2";
  }

  if (choice) {
    out.witness = build_witness(choice->first, s, choice->second, lambda);
    out.square = square_property(out.witness->q);
    const auto report = verify_witness(*out.witness);
    if (!report.all_passed()) throw_internal("constructed witness fails verification");
    out.realizable = true;
  }
  return out;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerifyReport verify_witness(const TorusWitness& w) {
  VerifyReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      add(name, false, e.what());
    }
  };

  add("Q = S*C", w.q == w.s * w.cofactor);
  guarded("square property", [&] {
    const Integer q1 = eval(w.q, Integer(1));
    const Integer qm1 = eval(w.q, Integer(-1));
    const bool ok = w.m >= 0 && w.n >= 0 && -q1 == w.m * w.m && qm1 == w.n * w.n;
    add("square property", ok, "Q(1) = " + str(q1) + ", Q(-1) = " + str(qm1));
  });
  guarded("P from m, n", [&] {
    const bool ok = 2 * w.j == w.m + w.n && 2 * w.k == w.n - w.m && w.q.degree() == 6 &&
                    w.p == QuarticView{w.j, w.k}.polynomial(w.q[5]);
    add("P from m, n", ok);
  });
  const bool shape1 = w.f1.rows() == 4 && w.f1.cols() == 4;
  const bool shape2 = w.f2.rows() == 6 && w.f2.cols() == 6;
  add("char(F1) = P", shape1 && characteristic_polynomial(w.f1) == w.p);
  add("det F1 = 1", shape1 && determinant(w.f1) == 1);
  add("F2 = wedge^2 F1", shape1 && shape2 && wedge_square(w.f1) == w.f2);
  IntPoly char2;
  if (shape2) char2 = characteristic_polynomial(w.f2);
  add("char(F2) = Q", shape2 && char2 == w.q);
  if (shape2) {
    const IntMatrix j = wedge_gram();
    add("F2 preserves J", w.f2.transpose() * j * w.f2 == j);
  } else {
    add("F2 preserves J", false, "F2 is not 6x6");
  }
  guarded("spectral radius in lambda bracket", [&] {
    bool ok = shape2 && w.lambda.lo > 1 && w.lambda.lo <= w.lambda.hi;
    if (ok) {
      const auto loc = root_locations(char2);
      const Endpoint lo = Endpoint::at(w.lambda.lo), hi = Endpoint::at(w.lambda.hi);
      const bool inside = w.lambda.lo == w.lambda.hi ? eval(char2, w.lambda.lo) == 0
                                                     : sturm_count(char2, lo, hi) == 1 || eval(char2, w.lambda.hi) == 0;
      ok = loc.n_complex_off_circle == 0 && loc.n_real_lt_minus1 == 0 && loc.n_real_gt1 == 1 && inside &&
           sturm_count(char2, hi, Endpoint::pos_inf()) == 0;
    }
    add("spectral radius in lambda bracket", ok);
  });
  return rep;
}

PeriodModel period_matrix(const IntPoly& p, double tol) {
  if (p.degree() != 4 || p.leading() != 1 || p[0] != 1) throw_input("period matrix needs a monic quartic with constant term 1");
  if (!(tol > 0)) throw_input("tolerance must be positive");
  using cplx = std::complex<double>;
  using lcplx = std::complex<long double>;
  const IntMatrix f1 = companion(p);
  Eigen::Matrix4d c;
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) c(r, k) = f1(r, k).get_d();
  Eigen::EigenSolver<Eigen::Matrix4d> es(c, false);
  std::array<cplx, 4> roots;
  for (int i = 0; i < 4; ++i) {
    // Newton polish in extended precision.
    lcplx z(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
    for (int it = 0; it < 8; ++it) {
      lcplx v = 0, dv = 0;
      for (int e = 4; e >= 0; --e) {
        dv = dv * z + v;
        v = v * z + static_cast<long double>(p[static_cast<std::size_t>(e)].get_d());
      }
      if (std::abs(dv) == 0) break;
      z -= v / dv;
    }
    roots[static_cast<std::size_t>(i)] = cplx(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  constexpr double kCluster = 1e-6;
  for (std::size_t i = 0; i < 4; ++i) {
    const double scale = std::max(1.0, std::abs(roots[i]));
    if (std::fabs(roots[i].imag()) <= kCluster * scale) throw_precondition("P has a real root: conjugate pairing impossible");
    for (std::size_t k = i + 1; k < 4; ++k)
      if (std::abs(roots[i] - roots[k]) <= kCluster * scale) throw_precondition("P has clustered roots");
  }
  // gamma1: largest modulus, upper half plane. gamma2: upper-half-plane root of the other pair.
  std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return a.imag() > b.imag();
  });
  std::size_t i1 = roots[0].imag() > 0 ? 0 : 1;
  // roots[0], roots[1] must be conjugate, as must roots[2], roots[3].
  if (std::abs(roots[0] - std::conj(roots[1])) > kCluster * std::abs(roots[0]) ||
      std::abs(roots[2] - std::conj(roots[3])) > kCluster * std::max(1.0, std::abs(roots[2]))) {
    throw_precondition("conjugate pairing ambiguous");
  }
  std::size_t i2 = roots[2].imag() > 0 ? 2 : 3;

  PeriodModel out;
  out.gamma1 = roots[i1];
  out.gamma2 = roots[i2];
  std::array<cplx, 2> gammas{out.gamma1, out.gamma2};
  for (std::size_t r = 0; r < 2; ++r) {
    const cplx g = gammas[r];
    std::array<cplx, 4> x;
    x[3] = 1;
    x[2] = g + p[3].get_d();
    x[1] = g * x[2] + p[2].get_d();
    x[0] = g * x[1] + p[1].get_d();
    double norm = 0;
    for (const auto& v : x) norm += std::norm(v);
    norm = std::sqrt(norm);
    for (std::size_t k = 0; k < 4; ++k) out.pi[r][k] = x[k] / norm;
  }
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t k = 0; k < 4; ++k) {
      // (Pi F1^T)[r][k] = sum_l Pi[r][l] F1[k][l].
      cplx acc = 0;
      for (std::size_t l = 0; l < 4; ++l) acc += out.pi[r][l] * c(static_cast<int>(k), static_cast<int>(l));
      out.residual = std::max(out.residual, std::abs(gammas[r] * out.pi[r][k] - acc));
    }
  }
  out.modulus_product = std::abs(out.gamma1) * std::abs(out.gamma2);
  Eigen::Matrix4d real;
  for (int k = 0; k < 4; ++k) {
    real(0, k) = out.pi[0][static_cast<std::size_t>(k)].real();
    real(1, k) = out.pi[0][static_cast<std::size_t>(k)].imag();
    real(2, k) = out.pi[1][static_cast<std::size_t>(k)].real();
    real(3, k) = out.pi[1][static_cast<std::size_t>(k)].imag();
  }
  out.lattice_volume = std::fabs(real.determinant());
  if (out.residual > tol) throw_internal("period matrix residual exceeds tolerance");
  return out;
}

IntPoly exe_h2_charpoly(const IntMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw_input("expected a 2x2 matrix");
  const Integer det = determinant(a);
  if (det != 1 && det != -1) throw_input("E x E automorphism needs det = +-1");
  const Integer tr = a(0, 0) + a(1, 1);
  const IntPoly quad(std::vector<Integer>{1, Integer(-(tr * tr - 2 * det)), 1});
  const IntPoly formula = quad * pow(IntPoly{-det.get_si(), 1}, 4);
  // A acts on H^1(E x E) = Z^2 (x) H^1(E) as A (x) I.
  IntMatrix h1(4, 4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t e = 0; e < 2; ++e) h1(2 * r + e, 2 * c + e) = a(r, c);
  if (characteristic_polynomial(wedge_square(h1)) != formula) throw_internal("E x E characteristic polynomial mismatch");
  return formula;
}

ExeResult exe_realizable_deg2(const IntPoly& s) {
  if (s.degree() != 2 || !is_monic_reciprocal(s)) throw_input("expected t^2 - a t + 1");
  const Integer a = -s[1];
  if (a < 3) throw_precondition("t^2 - a t + 1 is Salem only for a >= 3");
  ExeResult out;
  if (auto m = exact_sqrt(a - 2); m && *m > 0) {
    out.realizable = true;
    out.witness = IntMatrix::from_rows({{0, 1}, {1, *m}});
  } else if (auto m2 = exact_sqrt(a + 2); m2 && *m2 > 2) {
    out.realizable = true;
    out.witness = IntMatrix::from_rows({{0, -1}, {1, *m2}});
  }
  return out;
}

ProjectiveFlags projective_flags(const IntPoly& s) {
  if (!is_salem(s)) throw_precondition("projective flags need a Salem polynomial");
  ProjectiveFlags f;
  switch (s.degree()) {
    case 2:
      f.note = "E x E gives a sufficient condition (a = m^2 + 2 or a = m^2 - 2)";
      f.exe = exe_realizable_deg2(s);
      break;
    case 4:
      f.note = "C/Z[zeta3] x C/Z[zeta3] admits a projective example of degree four";
      break;
    case 6:
      f.status = ProjectiveFlags::Status::kImpossible;
      f.note = "no Salem number of degree six is the entropy of a projective torus automorphism";
      break;
    default:
      f.status = ProjectiveFlags::Status::kImpossible;
      f.note = "degree exceeds six; no torus automorphism";
  }
  return f;
}

}  // namespace salemkit::torus
