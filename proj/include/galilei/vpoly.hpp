#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "galilei/rational.hpp"

namespace galilei {

/// Exponent triple for the boost parameters (v1, v2, v3).
using VMono = std::array<int, 3>;

inline int vmono_degree(const VMono& m) { return m[0] + m[1] + m[2]; }

/// Polynomial in the three boost parameters with Gaussian-rational
/// coefficients. Total degree is capped at 4: boosts are quadratic in v
/// and the covariance solver multiplies at most two of them.
struct VPoly {
  static constexpr int kDegreeCap = 4;
  std::map<VMono, GQ> terms;

  VPoly() = default;
  VPoly(long n) { set({0, 0, 0}, GQ(n)); }
  VPoly(const GQ& c) { set({0, 0, 0}, c); }

  /// c * v_axis (axis in 0..2)
  static VPoly v(int axis, const GQ& c = GQ(1)) {
    VPoly p;
    VMono m{0, 0, 0};
    m[axis] = 1;
    p.set(m, c);
    return p;
  }

  void set(const VMono& m, const GQ& c) {
    if (vmono_degree(m) > kDegreeCap) throw std::logic_error("VPoly: degree cap exceeded");
    if (c.is_zero())
      terms.erase(m);
    else
      terms[m] = c;
  }
  GQ coeff(const VMono& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? GQ() : it->second;
  }
  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first == VMono{0, 0, 0});
  }
  GQ constant_term() const { return coeff({0, 0, 0}); }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, vmono_degree(m));
    return d;
  }

  VPoly& operator+=(const VPoly& o) {
    for (const auto& [m, c] : o.terms) set(m, coeff(m) + c);
    return *this;
  }
  VPoly& operator-=(const VPoly& o) {
    for (const auto& [m, c] : o.terms) set(m, coeff(m) - c);
    return *this;
  }

  /// Exact value at a rational boost vector.
  GQ eval(const std::array<GQ, 3>& v) const;

  /// p(-v1, -v2, -v3): flips the sign of odd-degree monomials.
  VPoly negated_vars() const {
    VPoly r;
    for (const auto& [m, c] : terms)
      r.set(m, (vmono_degree(m) % 2 == 0) ? c : -c);
    return r;
  }
};

VPoly operator*(const VPoly& a, const VPoly& b);
inline VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
inline VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
inline VPoly operator-(const VPoly& a) { return VPoly() - a; }
inline VPoly operator*(const GQ& c, const VPoly& p) {
  VPoly r;
  for (const auto& [m, k] : p.terms) r.set(m, c * k);
  return r;
}
inline bool operator==(const VPoly& a, const VPoly& b) { return a.terms == b.terms; }
inline bool operator!=(const VPoly& a, const VPoly& b) { return !(a == b); }

std::string to_string(const VPoly& p);

}  // namespace galilei
