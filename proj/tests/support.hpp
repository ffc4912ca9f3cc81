#pragma once

// Shared test helpers: deterministic rational generators and independent
// oracles kept deliberately separate from the library implementation.

#include <random>

#include "galilei/matrix.hpp"
#include "galilei/reps.hpp"

namespace testsupport {

using namespace galilei;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}

  Rat rat(long max_num = 6, long max_den = 4) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return ratq(num(gen), den(gen));
  }
  GQ gq() { return GQ(rat(), rat()); }
  GQ gq_real() { return GQ(rat()); }

  std::array<GQ, 3> vec3() { return {gq_real(), gq_real(), gq_real()}; }

  QMatrix qmatrix(int r, int c, bool real = false) {
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = real ? gq_real() : gq();
    return m;
  }
};

/// Naive triple-loop product, the oracle for matrix arithmetic.
inline QMatrix naive_mul(const QMatrix& a, const QMatrix& b) {
  QMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      GQ acc;
      for (int k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

/// Independent rank computation by plain forward elimination.
inline int oracle_rank(QMatrix a) {
  int rank = 0;
  const int rows = a.rows(), cols = a.cols();
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.swap_rows(piv, rank);
    for (int i = rank + 1; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      GQ f = a(i, c) / a(rank, c);
      for (int j = c; j < cols; ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

/// Direct transcription of the finite boost laws on a component layout:
///   A' = A,  B' = B + v.R,  C' = C + v.U + 1/2 v^2 A,
///   R' = R,  U' = U + v A,  W' = W + v x R,
///   K' = K + v x R + v A,
///   N' = N + v x W + v B + v (v.R) - 1/2 v^2 R.
/// This is the oracle the exponential-based finite_boost is checked against.
VMatrix expected_boost_law(const std::vector<reps::Comp>& layout);

}  // namespace testsupport
