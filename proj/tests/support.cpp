#include "support.hpp"

namespace testsupport {

using reps::Comp;

namespace {

int offset_of(const std::vector<Comp>& layout, int idx) {
  int o = 0;
  for (int i = 0; i < idx; ++i) o += reps::is_vector(layout[i]) ? 3 : 1;
  return o;
}

int find(const std::vector<Comp>& layout, Comp c) {
  for (int i = 0; i < int(layout.size()); ++i)
    if (layout[i] == c) return offset_of(layout, i);
  return -1;
}

VPoly v_dot_row(int b) {  // entry factor v_b
  return VPoly::v(b);
}

}  // namespace

VMatrix expected_boost_law(const std::vector<Comp>& layout) {
  int dim = 0;
  for (Comp c : layout) dim += reps::is_vector(c) ? 3 : 1;
  VMatrix lam(dim, dim);
  for (int i = 0; i < dim; ++i) lam(i, i) = VPoly(1);

  VPoly vsq;
  for (int a = 0; a < 3; ++a) vsq += VPoly::v(a) * VPoly::v(a);
  const GQ half(ratq(1, 2));

  for (int i = 0; i < int(layout.size()); ++i) {
    const int o = offset_of(layout, i);
    const int oA = find(layout, Comp::A), oB = find(layout, Comp::B), oR = find(layout, Comp::R),
              oU = find(layout, Comp::U), oW = find(layout, Comp::W);
    switch (layout[i]) {
      case Comp::A:
      case Comp::R:
        break;
      case Comp::B:  // B + v.R
        for (int b = 0; b < 3; ++b) lam(o, oR + b) += v_dot_row(b);
        break;
      case Comp::C:  // C + v.U + 1/2 v^2 A
        for (int b = 0; b < 3; ++b) lam(o, oU + b) += v_dot_row(b);
        lam(o, oA) += half * vsq;
        break;
      case Comp::U:  // U + v A
        for (int b = 0; b < 3; ++b) lam(o + b, oA) += VPoly::v(b);
        break;
      case Comp::W:  // W + v x R
        for (int b = 0; b < 3; ++b)
          for (int a = 0; a < 3; ++a)
            for (int c = 0; c < 3; ++c)
              if (int e = eps3(b, a, c)) lam(o + b, oR + c) += VPoly::v(a, GQ(e));
        break;
      case Comp::K:  // K + v x R + v A
        for (int b = 0; b < 3; ++b)
          for (int a = 0; a < 3; ++a)
            for (int c = 0; c < 3; ++c)
              if (int e = eps3(b, a, c)) lam(o + b, oR + c) += VPoly::v(a, GQ(e));
        for (int b = 0; b < 3; ++b) lam(o + b, oA) += VPoly::v(b);
        break;
      case Comp::N:  // N + v x W + v B + v (v.R) - 1/2 v^2 R
        for (int b = 0; b < 3; ++b)
          for (int a = 0; a < 3; ++a)
            for (int c = 0; c < 3; ++c)
              if (int e = eps3(b, a, c)) lam(o + b, oW + c) += VPoly::v(a, GQ(e));
        for (int b = 0; b < 3; ++b) lam(o + b, oB) += VPoly::v(b);
        for (int b = 0; b < 3; ++b)
          for (int c = 0; c < 3; ++c) {
            lam(o + b, oR + c) += VPoly::v(b) * VPoly::v(c);
            if (b == c) lam(o + b, oR + c) += GQ(ratq(-1, 2)) * vsq;
          }
        break;
    }
  }
  return lam;
}

}  // namespace testsupport
