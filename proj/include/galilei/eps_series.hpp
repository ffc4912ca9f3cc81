#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "galilei/rational.hpp"

namespace galilei {

/// Laurent polynomial in the contraction parameter with Gaussian-rational
/// coefficients. Exponents may be negative; zero coefficients are never
/// stored.
struct EpsSeries {
  std::map<int, GQ> terms;

  EpsSeries() = default;
  EpsSeries(long n) { set(0, GQ(n)); }
  EpsSeries(const GQ& c) { set(0, c); }

  /// c * eps^k
  static EpsSeries eps(int k = 1, const GQ& c = GQ(1)) {
    EpsSeries s;
    s.set(k, c);
    return s;
  }

  void set(int exp, const GQ& c) {
    if (c.is_zero())
      terms.erase(exp);
    else
      terms[exp] = c;
  }
  GQ coeff(int exp) const {
    auto it = terms.find(exp);
    return it == terms.end() ? GQ() : it->second;
  }
  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first == 0);
  }
  /// Lowest exponent present; only meaningful when nonzero.
  int min_exp() const { return terms.begin()->first; }
  int max_exp() const { return terms.rbegin()->first; }

  EpsSeries& operator+=(const EpsSeries& o) {
    for (const auto& [e, c] : o.terms) set(e, coeff(e) + c);
    return *this;
  }
  EpsSeries& operator-=(const EpsSeries& o) {
    for (const auto& [e, c] : o.terms) set(e, coeff(e) - c);
    return *this;
  }

  /// Multiply by c * eps^k.
  EpsSeries shifted(int k, const GQ& c = GQ(1)) const {
    EpsSeries r;
    for (const auto& [e, v] : terms) r.set(e + k, v * c);
    return r;
  }
};

inline EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }
inline EpsSeries operator-(EpsSeries a, const EpsSeries& b) { return a -= b; }
inline EpsSeries operator-(const EpsSeries& a) { return a.shifted(0, GQ(-1)); }
inline EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
  EpsSeries r;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
  return r;
}
inline bool operator==(const EpsSeries& a, const EpsSeries& b) { return a.terms == b.terms; }
inline bool operator!=(const EpsSeries& a, const EpsSeries& b) { return !(a == b); }

/// Exact division; nullopt when b does not divide a in the Laurent ring.
std::optional<EpsSeries> divide_exact(const EpsSeries& a, const EpsSeries& b);

std::string to_string(const EpsSeries& s);
EpsSeries eps_from_string(const std::string& s);

/// Raised by contraction limits when a negative eps power survives.
struct NegativePowerError : std::runtime_error {
  int row, col, lowest;
  NegativePowerError(int r, int c, int low)
      : std::runtime_error("negative eps power " + std::to_string(low) + " at entry (" +
                           std::to_string(r) + "," + std::to_string(c) + ")"),
        row(r),
        col(c),
        lowest(low) {}
};

}  // namespace galilei
