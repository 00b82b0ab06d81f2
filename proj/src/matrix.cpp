#include "salemkit/matrix.hpp"

#include <utility>

#include "salemkit/error.hpp"

namespace salemkit {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw_input("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw_input("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw_input("matrix size mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw_input("matrix size mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw_input("matrix size mismatch in multiplication");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

IntMatrix operator*(const Integer& c, IntMatrix m) {
  for (auto& x : m.data_) x *= c;
  return m;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw_input("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntPoly characteristic_polynomial(const IntMatrix& m) {
  if (!m.is_square()) throw_input("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Integer> c(n + 1, 0);
  c[n] = 1;
  IntMatrix mk(n, n);  // M_0 = 0
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    const IntMatrix amk = m * mk;
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    Integer kk = static_cast<unsigned long>(k);
    if (!mpz_divisible_p(tr.get_mpz_t(), kk.get_mpz_t())) throw_internal("Faddeev-LeVerrier trace not divisible");
    mpz_divexact(tr.get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -tr;
  }
  return IntPoly(std::move(c));
}

IntMatrix evaluate_at(const IntPoly& p, const IntMatrix& m) {
  if (!m.is_square()) throw_input("polynomial evaluation needs a square matrix");
  const std::size_t n = m.rows();
  IntMatrix acc(n, n);
  const IntMatrix id = IntMatrix::identity(n);
  for (int i = p.degree(); i >= 0; --i) acc = m * acc + p.coeffs()[static_cast<std::size_t>(i)] * id;
  return acc;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw_input("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> a(n * 2 * n, 0);
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * 2 * n + c]; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) at(r, c) = m(r, c);
    at(r, n + r) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && at(piv, col) == 0) ++piv;
    if (piv == n) throw_precondition("matrix is singular");
    if (piv != col)
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(at(piv, c), at(col, c));
    const Rational inv = 1 / at(col, col);
    for (std::size_t c = 0; c < 2 * n; ++c) at(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || at(r, col) == 0) continue;
      const Rational f = at(r, col);
      for (std::size_t c = 0; c < 2 * n; ++c) at(r, c) -= f * at(col, c);
    }
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& v = at(r, n + c);
      if (v.get_den() != 1) throw_precondition("matrix is not unimodular");
      out(r, c) = v.get_num();
    }
  }
  return out;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(r, c));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      const Integer f = a(i, col);
      const Integer p = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = a(i, c) * p - a(r, c) * f;
      Integer g = 0;
      for (std::size_t c = 0; c < a.cols(); ++c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(i, c).get_mpz_t());
      if (g > 1)
        for (std::size_t c = 0; c < a.cols(); ++c) mpz_divexact(a(i, c).get_mpz_t(), a(i, c).get_mpz_t(), g.get_mpz_t());
    }
    ++r;
  }
  return r;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

namespace {

// Unimodular row operations bringing `a` to row echelon form; `companion`
// (same row count) receives the same operations. Returns the pivot columns.
std::vector<std::size_t> echelonize(IntMatrix& a, IntMatrix* companion) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  auto combine = [&](IntMatrix& m, std::size_t p, std::size_t i, const Integer& s, const Integer& t,
                     const Integer& u, const Integer& v) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer x = m(p, c);
      Integer y = m(i, c);
      m(p, c) = s * x + t * y;
      m(i, c) = u * x + v * y;
    }
  };
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
      if (companion)
        for (std::size_t c = 0; c < companion->cols(); ++c) std::swap((*companion)(piv, c), (*companion)(row, c));
    }
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(row, col).get_mpz_t(), a(i, col).get_mpz_t());
      Integer u = -a(i, col) / g;
      Integer v = a(row, col) / g;
      combine(a, row, i, s, t, u, v);
      if (companion) combine(*companion, row, i, s, t, u, v);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const auto pivots = echelonize(a, nullptr);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t pc = pivots[r];
    if (a(r, pc) < 0)
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = -a(r, c);
    for (std::size_t above = 0; above < r; ++above) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(above, pc).get_mpz_t(), a(r, pc).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = 0; c < a.cols(); ++c) a(above, c) -= q * a(r, c);
    }
  }
  IntMatrix out(pivots.size(), a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  IntMatrix a = m.transpose();  // n x rows
  IntMatrix u = IntMatrix::identity(n);
  const auto pivots = echelonize(a, &u);
  const std::size_t k = n - pivots.size();
  IntMatrix basis(k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c) basis(r, c) = u(pivots.size() + r, c);
  if (k == 0) return basis;
  return hermite_normal_form(basis);
}

}  // namespace salemkit
