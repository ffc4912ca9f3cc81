#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "galilei/eps_series.hpp"
#include "galilei/rational.hpp"
#include "galilei/vpoly.hpp"

namespace galilei {

/// Dense matrix over an exact scalar ring (GQ, EpsSeries or VPoly).
/// Every matrix in the problem is at most 22x22; no sparsity anywhere.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(size_t(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return d_[size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return d_[size_t(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : d_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (size_t k = 0; k < d_.size(); ++k) d_[k] += o.d_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (size_t k = 0; k < d_.size(); ++k) d_[k] -= o.d_[k];
    return *this;
  }

  template <typename U, typename F>
  Matrix<U> map(F&& f) const {
    Matrix<U> r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

  void swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  int rows_, cols_;
  std::vector<T> d_;
};

template <typename T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  return a += b;
}
template <typename T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  return a -= b;
}
template <typename T>
Matrix<T> operator-(const Matrix<T>& a) {
  return a.template map<T>([](const T& x) { return -x; });
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix<T> r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        r(i, j) += a(i, k) * b(k, j);
      }
    }
  return r;
}

template <typename T>
Matrix<T> operator*(const T& c, const Matrix<T>& m) {
  return m.template map<T>([&](const T& x) { return c * x; });
}

template <typename T>
bool operator==(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}
template <typename T>
bool operator!=(const Matrix<T>& a, const Matrix<T>& b) {
  return !(a == b);
}

/// AB - BA, dimension checked.
template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("commutator: need equal square matrices");
  return a * b - b * a;
}

template <typename T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

template <typename T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix<T> r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
  Matrix<T> r(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

using QMatrix = Matrix<GQ>;
using EpsMatrix = Matrix<EpsSeries>;
using VMatrix = Matrix<VPoly>;

// ---- field algorithms over GQ ------------------------------------------

struct RrefResult {
  QMatrix R;
  std::vector<int> pivot_cols;
  int rank = 0;
};

/// Reduced row echelon form with deterministic (first nonzero) pivoting.
RrefResult rref(QMatrix a);

int rank(const QMatrix& a);

/// Exact basis of {x : Ax = 0}; canonical form (free variable set to 1,
/// pivot entries solved). Empty when the kernel is trivial.
std::vector<QMatrix> nullspace(const QMatrix& a);

struct SingularError : std::runtime_error {
  SingularError() : std::runtime_error("matrix is singular") {}
};

/// Gauss-Jordan inverse over the Gaussian rationals; throws SingularError.
QMatrix exact_inverse(const QMatrix& m);

GQ determinant(const QMatrix& m);

/// Solve X * A = B exactly; nullopt when infeasible. When the solution is
/// underdetermined the canonical one (free parameters zero) is returned.
std::optional<QMatrix> solve_left(const QMatrix& a, const QMatrix& b);

/// Solve A * x = b for a single column; canonical particular solution.
std::optional<QMatrix> solve_columns(const QMatrix& a, const QMatrix& b);

// ---- Laurent-ring algorithms over EpsSeries ----------------------------

/// Cofactor-expansion determinant (matrices here are at most 5x5).
EpsSeries determinant(const EpsMatrix& m);

/// Adjugate-based inverse in the Laurent polynomial ring. Requires every
/// adjugate entry to be exactly divisible by the determinant; throws
/// SingularError otherwise.
EpsMatrix exact_inverse(const EpsMatrix& m);

/// Constant (eps^0) terms of every entry, provided no entry carries a
/// negative exponent; throws NegativePowerError otherwise.
QMatrix eps_limit(const EpsMatrix& m);

/// Exact evaluation of a VPoly matrix at a rational boost vector.
QMatrix eval(const VMatrix& m, const std::array<GQ, 3>& v);

VMatrix to_vmatrix(const QMatrix& m);
VMatrix substitute_negated(const VMatrix& m);

}  // namespace galilei
