#include "galilei/matrix.hpp"

namespace galilei {

RrefResult rref(QMatrix a) {
  RrefResult res;
  const int rows = a.rows(), cols = a.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.swap_rows(piv, r);
    GQ inv = inverse(a(r, c));
    for (int j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      GQ f = a(i, c);
      for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  res.R = std::move(a);
  return res;
}

int rank(const QMatrix& a) { return rref(a).rank; }

std::vector<QMatrix> nullspace(const QMatrix& a) {
  RrefResult f = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : f.pivot_cols) is_pivot[c] = true;
  std::vector<QMatrix> basis;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    QMatrix v(a.cols(), 1);
    v(c, 0) = GQ(1);
    for (int k = 0; k < int(f.pivot_cols.size()); ++k) v(f.pivot_cols[k], 0) = -f.R(k, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix exact_inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exact_inverse: not square");
  const int n = m.rows();
  RrefResult f = rref(hstack(m, QMatrix::identity(n)));
  if (f.rank < n) throw SingularError();
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = f.R(i, n + j);
  return inv;
}

GQ determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  QMatrix a = m;
  const int n = a.rows();
  GQ det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return GQ();
    if (piv != c) {
      a.swap_rows(piv, c);
      det = -det;
    }
    det *= a(c, c);
    GQ inv = inverse(a(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      GQ f = a(i, c) * inv;
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<QMatrix> solve_columns(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  RrefResult f = rref(hstack(a, b));
  // Any pivot in the appended block means an inconsistent row.
  for (int c : f.pivot_cols)
    if (c >= a.cols()) return std::nullopt;
  QMatrix x(a.cols(), b.cols());
  for (int k = 0; k < int(f.pivot_cols.size()); ++k)
    for (int j = 0; j < b.cols(); ++j) x(f.pivot_cols[k], j) = f.R(k, a.cols() + j);
  return x;
}

std::optional<QMatrix> solve_left(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("solve_left: shape mismatch");
  auto xt = solve_columns(a.transpose(), b.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

EpsSeries determinant(const EpsMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const int n = m.rows();
  if (n == 0) return EpsSeries(1);
  if (n == 1) return m(0, 0);
  EpsSeries det;
  std::vector<int> cols(n - 1);
  for (int j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    EpsMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(i - 1, cc++) = m(i, c);
      }
    }
    EpsSeries t = m(0, j) * determinant(minor);
    if (j % 2)
      det -= t;
    else
      det += t;
  }
  return det;
}

EpsMatrix exact_inverse(const EpsMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exact_inverse: not square");
  const int n = m.rows();
  EpsSeries det = determinant(m);
  if (det.is_zero()) throw SingularError();
  EpsMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      EpsMatrix minor(n - 1, n - 1);
      int rr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        int cc = 0;
        for (int c = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      EpsSeries cof = determinant(minor);
      if ((i + j) % 2) cof = -cof;
      auto q = divide_exact(cof, det);
      if (!q) throw SingularError();
      inv(i, j) = *q;
    }
  return inv;
}

QMatrix eps_limit(const EpsMatrix& m) {
  QMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const EpsSeries& s = m(i, j);
      if (!s.is_zero() && s.min_exp() < 0) throw NegativePowerError(i, j, s.min_exp());
      r(i, j) = s.coeff(0);
    }
  return r;
}

QMatrix eval(const VMatrix& m, const std::array<GQ, 3>& v) {
  QMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).eval(v);
  return r;
}

VMatrix to_vmatrix(const QMatrix& m) {
  return m.map<VPoly>([](const GQ& c) { return VPoly(c); });
}

VMatrix substitute_negated(const VMatrix& m) {
  return m.map<VPoly>([](const VPoly& p) { return p.negated_vars(); });
}

}  // namespace galilei
