#include "galilei/genbuild.hpp"

namespace galilei {

QMatrix spin_one(int a) {
  QMatrix s(3, 3);
  for (int b = 0; b < 3; ++b)
    for (int c = 0; c < 3; ++c)
      if (int e = eps3(a, b, c)) s(b, c) = GQ::i(-e);
  return s;
}

void gen_scalar_dot(std::array<QMatrix, 3>& g, int dst, int src, const GQ& c) {
  for (int a = 0; a < 3; ++a) g[a](dst, src + a) += c;
}

void gen_vec_from_scalar(std::array<QMatrix, 3>& g, int dst, int src, const GQ& c) {
  for (int a = 0; a < 3; ++a) g[a](dst + a, src) += c;
}

void gen_vec_cross(std::array<QMatrix, 3>& g, int dst, int src, const GQ& c) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int k = 0; k < 3; ++k)
        if (int e = eps3(b, a, k)) g[a](dst + b, src + k) += GQ(e) * c;
}

void rot_vector_block(std::array<QMatrix, 3>& r, int o) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (int e = eps3(b, a, c)) r[a](o + b, o + c) += GQ(e);
}

VMatrix exp_nilpotent(const VMatrix& m, int max_order) {
  const int n = m.rows();
  VMatrix sum = VMatrix::identity(n);
  VMatrix power = VMatrix::identity(n);
  Rat factorial(1);
  for (int k = 1; k <= max_order; ++k) {
    try {
      power = power * m;
    } catch (const std::logic_error&) {
      // degree cap exceeded: the argument cannot be nilpotent
      throw NonNilpotentError();
    }
    if (power.is_zero()) return sum;
    factorial *= k;
    GQ coef(Rat(1) / factorial);
    sum += power.map<VPoly>([&](const VPoly& p) { return coef * p; });
  }
  throw NonNilpotentError();
}

}  // namespace galilei
