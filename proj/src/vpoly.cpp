#include "galilei/vpoly.hpp"

#include <sstream>

namespace galilei {

VPoly operator*(const VPoly& a, const VPoly& b) {
  VPoly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      VMono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      r.set(m, r.coeff(m) + ca * cb);
    }
  return r;
}

GQ VPoly::eval(const std::array<GQ, 3>& v) const {
  GQ r;
  for (const auto& [m, c] : terms) {
    GQ t = c;
    for (int a = 0; a < 3; ++a)
      for (int k = 0; k < m[a]; ++k) t *= v[a];
    r += t;
  }
  return r;
}

std::string to_string(const VPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    std::string cs = to_string(c);
    if (cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos)
      cs = "(" + cs + ")";
    if (!first) out << " + ";
    first = false;
    out << cs;
    for (int a = 0; a < 3; ++a) {
      if (m[a] == 0) continue;
      out << "*v" << (a + 1);
      if (m[a] > 1) out << "^" << m[a];
    }
  }
  return out.str();
}

}  // namespace galilei
