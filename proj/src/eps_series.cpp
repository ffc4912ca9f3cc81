#include "galilei/eps_series.hpp"

#include <sstream>
#include <vector>

namespace galilei {

std::optional<EpsSeries> divide_exact(const EpsSeries& a, const EpsSeries& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return EpsSeries();
  // Long division from the top. An exact Laurent-polynomial quotient q of
  // a = q*b has exponents confined to [min(a)-min(b), max(a)-max(b)]
  // because leading and trailing terms of a product cannot cancel.
  const int lo = a.min_exp() - b.min_exp();
  EpsSeries rem = a;
  EpsSeries quot;
  const int blead = b.max_exp();
  const GQ bc = b.coeff(blead);
  while (!rem.is_zero()) {
    const int e = rem.max_exp() - blead;
    if (e < lo) return std::nullopt;
    const GQ c = rem.coeff(rem.max_exp()) / bc;
    quot.set(e, quot.coeff(e) + c);
    rem -= b.shifted(e, c);
  }
  return quot;
}

std::string to_string(const EpsSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : s.terms) {
    std::string cs = to_string(c);
    bool neg = false;
    if (!cs.empty() && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
        cs.find('-', 1) == std::string::npos) {
      neg = true;
      cs = cs.substr(1);
    }
    if (cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos)
      cs = "(" + (neg ? "-" + cs : cs) + ")", neg = false;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    if (e == 0)
      out << cs;
    else {
      if (cs != "1") out << cs << "*";
      out << "e";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

EpsSeries eps_from_string(const std::string& in) {
  // Accepts a single term: "rational", "rational*e^k", "e^k", "e", "-e^-1".
  std::string s;
  for (char c : in)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty eps term");
  auto epos = s.find('e');
  // disambiguate: an 'e' belonging to the symbol, not part of a number
  if (epos == std::string::npos) return EpsSeries(gq_from_string(s));
  std::string coefs = s.substr(0, epos);
  if (!coefs.empty() && coefs.back() == '*') coefs.pop_back();
  if (coefs.empty() || coefs == "+") coefs = "1";
  if (coefs == "-") coefs = "-1";
  std::string es = s.substr(epos + 1);
  int k = 1;
  if (!es.empty()) {
    if (es[0] != '^') throw std::invalid_argument("bad eps term: " + in);
    k = std::stoi(es.substr(1));
  }
  return EpsSeries::eps(k, gq_from_string(coefs));
}

}  // namespace galilei
