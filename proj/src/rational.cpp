#include "galilei/rational.hpp"

namespace galilei {

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const GQ& z) {
  if (z.im == 0) return rat_to_string(z.re);
  std::string im_part = rat_to_string(abs(z.im)) + "*i";
  if (z.re == 0) return (z.im < 0 ? "-" : "") + im_part;
  return rat_to_string(z.re) + (z.im < 0 ? "-" : "+") + im_part;
}

GQ gq_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty scalar");
  // Split at the sign that separates real and imaginary parts (not the
  // leading sign, not inside a fraction).
  auto parse_part = [](const std::string& p, bool imag) -> GQ {
    if (imag) {
      std::string body = p;
      auto star = body.rfind("*i");
      if (star != std::string::npos && star + 2 == body.size())
        body = body.substr(0, star);
      else if (!body.empty() && body.back() == 'i')
        body = body.substr(0, body.size() - 1);
      else
        throw std::invalid_argument("bad imaginary part: " + p);
      if (body.empty() || body == "+") body = "1";
      if (body == "-") body = "-1";
      return GQ(Rat(0), rat_from_string(body));
    }
    return GQ(rat_from_string(p));
  };
  for (size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '*' && s[k - 1] != 'e') {
      std::string head = s.substr(0, k), tail = s.substr(k);
      if (tail.find('i') == std::string::npos) continue;
      GQ a = parse_part(head, head.find('i') != std::string::npos);
      std::string body = tail.substr(1);
      GQ b = parse_part(body, true);
      if (tail[0] == '-') b = -b;
      return a + b;
    }
  }
  return parse_part(s, s.find('i') != std::string::npos);
}

}  // namespace galilei
