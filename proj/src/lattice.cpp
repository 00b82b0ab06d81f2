#include "salemkit/lattice.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "salemkit/error.hpp"

namespace salemkit::lattice {

Gram::Gram(IntMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() == 0 || !m_.is_square()) throw_input("Gram matrix must be square and nonempty");
  if (m_.transpose() != m_) throw_input("Gram matrix must be symmetric");
}

SignatureTriple signature(const Gram& g) {
  const IntPoly cp = characteristic_polynomial(g.matrix());
  SignatureTriple s;
  s.zero = root_multiplicity(cp, Integer(0));
  s.pos = count_roots_with_multiplicity(cp, Endpoint::at(0), Endpoint::pos_inf());
  s.neg = count_roots_with_multiplicity(cp, Endpoint::neg_inf(), Endpoint::at(0));
  if (s.pos + s.neg + s.zero != g.rank()) throw_internal("symmetric matrix with non-real eigenvalues");
  return s;
}

Gram e8_minus() {
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = -2;
  const int bonds[7][2] = {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}, {6, 7}, {7, 8}};
  for (const auto& b : bonds) {
    m(b[0] - 1, b[1] - 1) = 1;
    m(b[1] - 1, b[0] - 1) = 1;
  }
  return Gram(std::move(m));
}

bool is_isometry(const IntMatrix& m, const Gram& g) {
  if (m.rows() != g.rank() || m.cols() != g.rank()) throw_input("isometry and Gram sizes differ");
  return m.transpose() * g.matrix() * m == g.matrix();
}

Gram direct_sum(const Gram& a, const Gram& b) { return Gram(block_diagonal(a.matrix(), b.matrix())); }

IntMatrix extend_by_identity(const IntMatrix& m, const Gram& g1, const Gram& g2) {
  if (!is_isometry(m, g1)) throw_precondition("matrix is not an isometry of the first summand");
  return block_diagonal(m, IntMatrix::identity(g2.rank()));
}

bool is_even(const Gram& g) {
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (mpz_odd_p(g.matrix()(i, i).get_mpz_t())) return false;
  return true;
}

bool is_unimodular(const Gram& g) {
  const Integer d = determinant(g.matrix());
  return d == 1 || d == -1;
}

IntMatrix kernel_sublattice(const IntMatrix& m, const IntPoly& p) {
  if (!m.is_square()) throw_input("kernel_sublattice needs a square matrix");
  return integer_kernel(evaluate_at(p, m));
}

unsigned EigenspaceReport::count_signature(unsigned pos, unsigned neg) const {
  return static_cast<unsigned>(std::count_if(entries.begin(), entries.end(), [&](const EigenspaceEntry& e) {
    return e.determinate && e.pos == pos && e.neg == neg;
  }));
}

EigenspaceReport eigenspace_signatures(const IntMatrix& m, const Gram& g, double tol) {
  if (!(tol > 0)) throw_input("tolerance must be positive");
  if (!is_isometry(m, g)) throw_precondition("matrix is not an isometry of the Gram form");
  const std::size_t n = g.rank();
  EigenspaceReport rep;
  rep.tol = tol;

  IntPoly core = characteristic_polynomial(m);
  for (long r : {1L, -1L}) {
    const unsigned mult = root_multiplicity(core, Integer(r));
    rep.excluded_rank += mult;
    for (unsigned i = 0; i < mult; ++i) core = divmod_monic(core, IntPoly::linear_root(r)).quotient;
  }
  if (core.degree() <= 0) return rep;
  if (core.degree() % 2 != 0 || !is_monic_reciprocal(core)) throw_internal("isometry with non-reciprocal characteristic polynomial");

  struct Tau {
    RatInterval bracket;
    unsigned multiplicity;
  };
  std::vector<Tau> taus;
  const IntPoly r = trace_poly(core);
  unsigned inside_rank = 0;
  const Rational fine(Integer(1), Integer(1) << 100);
  for (const auto& f : squarefree_decomposition(r)) {
    for (const auto& iv : isolate_real_roots(f.factor, Rational(-2), Rational(2), fine)) {
      taus.push_back({iv, f.multiplicity});
      inside_rank += 2 * f.multiplicity;
    }
  }
  rep.excluded_rank += static_cast<unsigned>(core.degree()) - inside_rank;
  std::sort(taus.begin(), taus.end(), [](const Tau& a, const Tau& b) { return a.bracket.lo < b.bracket.lo; });
  for (std::size_t i = 1; i < taus.size(); ++i) {
    if (taus[i].bracket.midpoint().get_d() - taus[i - 1].bracket.midpoint().get_d() <= 10 * tol) {
      throw_precondition("trace roots clustered within tolerance");
    }
  }

  const Eigen::Index dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd md(dim, dim), minv(dim, dim), gd(dim, dim);
  const IntMatrix inv = unimodular_inverse(m);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      md(i, j) = m(ui, uj).get_d();
      minv(i, j) = inv(ui, uj).get_d();
      gd(i, j) = g.matrix()(ui, uj).get_d();
    }
  }

  for (const auto& t : taus) {
    EigenspaceEntry e;
    e.tau_bracket = t.bracket;
    e.tau = t.bracket.midpoint().get_d();
    e.multiplicity = t.multiplicity;
    const Eigen::MatrixXd op = md + minv - e.tau * Eigen::MatrixXd::Identity(dim, dim);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(op, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double threshold = 1e-8 * std::max(1.0, sv(0));
    Eigen::Index k = 0;
    while (k < dim && sv(dim - 1 - k) <= threshold) ++k;
    const Eigen::MatrixXd basis = svd.matrixV().rightCols(k);
    e.dimension = static_cast<unsigned>(k);
    e.residual = k ? (op * basis).cwiseAbs().maxCoeff() : 0.0;
    for (Eigen::Index c = 0; c < k; ++c) {
      std::vector<double> v(n);
      for (Eigen::Index i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] = basis(i, c);
      e.basis.push_back(std::move(v));
    }
    if (k > 0) {
      const Eigen::MatrixXd h = basis.transpose() * gd * basis;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (h + h.transpose()));
      e.margin = es.eigenvalues().cwiseAbs().minCoeff();
      for (Eigen::Index i = 0; i < k; ++i) (es.eigenvalues()(i) > 0 ? e.pos : e.neg)++;
      e.determinate = e.margin > tol;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace salemkit::lattice
