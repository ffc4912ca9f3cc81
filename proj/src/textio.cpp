#include "galilei/textio.hpp"

#include <sstream>

namespace galilei::textio {

using fieldsys::Equation;
using fieldsys::Layout;
using fieldsys::LinearFieldSystem;
using fieldsys::Mono4;

namespace {

std::string mono_suffix(const Mono4& m) {
  std::string s;
  for (int k = 0; k < m[0]; ++k) s += 't';
  for (int k = 0; k < m[1]; ++k) s += 'x';
  for (int k = 0; k < m[2]; ++k) s += 'y';
  for (int k = 0; k < m[3]; ++k) s += 'z';
  return s;
}

Mono4 mono_from_suffix(const std::string& s) {
  Mono4 m{0, 0, 0, 0};
  for (char c : s) {
    switch (c) {
      case 't': m[0]++; break;
      case 'x': m[1]++; break;
      case 'y': m[2]++; break;
      case 'z': m[3]++; break;
      default: throw std::invalid_argument("bad derivative symbol d" + s);
    }
  }
  return m;
}

std::string layout_header(const std::string& tag, const Layout& l) {
  std::string s = tag;
  for (const auto& c : l.comps) s += " " + c.name + ":" + (c.vec ? "vec" : "scalar");
  return s;
}

}  // namespace

std::string export_system(const LinearFieldSystem& sys) {
  std::ostringstream out;
  out << "system " << sys.name << "\n";
  out << layout_header("fields", sys.field.layout) << "\n";
  out << layout_header("currents", sys.current.layout) << "\n";
  const auto row_names = sys.row_names();
  int r0 = 0;
  for (const auto& eq : sys.eqs) {
    for (int r = 0; r < eq.rows; ++r) {
      out << row_names[r0 + r] << " :";
      bool first = true;
      // time derivatives first, then x, y, z
      for (auto it = eq.coef.rbegin(); it != eq.coef.rend(); ++it) {
        const auto& [mono, c] = *it;
        for (int f = 0; f < sys.field.layout.dim(); ++f) {
          if (c(r, f).is_zero()) continue;
          out << (first ? " " : " + ") << to_string(c(r, f)) << " * d" << mono_suffix(mono)
              << " " << sys.field.layout.slot_name(f);
          first = false;
        }
      }
      for (int j = 0; j < sys.current.layout.dim(); ++j) {
        GQ coef = -(sys.e * eq.src(r, j));
        if (coef.is_zero()) continue;
        out << (first ? " " : " + ") << to_string(coef) << " * src "
            << sys.current.layout.slot_name(j);
        first = false;
      }
      if (first) out << " 0";
      out << " = 0\n";
    }
    r0 += eq.rows;
  }
  return out.str();
}

LinearFieldSystem import_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  LinearFieldSystem sys;
  Layout fields, currents;
  bool have_layouts = false;

  auto parse_layout = [](const std::string& body) {
    Layout l;
    std::istringstream ls(body);
    std::string item;
    while (ls >> item) {
      auto colon = item.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("bad layout item " + item);
      l.comps.push_back({item.substr(0, colon), item.substr(colon + 1) == "vec"});
    }
    return l;
  };

  std::vector<std::tuple<std::string, std::map<Mono4, std::map<int, GQ>>, std::map<int, GQ>>>
      rows;

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("system ", 0) == 0) {
      sys.name = line.substr(7);
      continue;
    }
    if (line.rfind("fields", 0) == 0) {
      fields = parse_layout(line.substr(6));
      continue;
    }
    if (line.rfind("currents", 0) == 0) {
      currents = parse_layout(line.substr(8));
      have_layouts = true;
      continue;
    }
    if (!have_layouts) throw std::invalid_argument("equation before layout headers");
    auto colon = line.find(" :");
    if (colon == std::string::npos) throw std::invalid_argument("bad equation line: " + line);
    std::string row_name = line.substr(0, colon);
    std::string body = line.substr(colon + 2);
    auto eqpos = body.rfind("= 0");
    if (eqpos == std::string::npos) throw std::invalid_argument("missing '= 0': " + line);
    body = body.substr(0, eqpos);

    std::map<Mono4, std::map<int, GQ>> coef;
    std::map<int, GQ> src;
    // split on " + " at top level
    std::vector<std::string> terms;
    size_t pos = 0;
    while (true) {
      size_t nxt = body.find(" + ", pos);
      terms.push_back(body.substr(pos, nxt == std::string::npos ? nxt : nxt - pos));
      if (nxt == std::string::npos) break;
      pos = nxt + 3;
    }
    for (std::string term : terms) {
      std::istringstream ts(term);
      std::string coefs, star, op, slot;
      ts >> coefs;
      if (coefs == "0" || coefs.empty()) continue;
      ts >> star >> op >> slot;
      if (star != "*") throw std::invalid_argument("bad term: " + term);
      GQ c = gq_from_string(coefs);
      if (op == "src") {
        int s = currents.slot_of(slot);
        if (s < 0) throw std::invalid_argument("unknown current slot " + slot);
        src[s] += -c;  // stored source matrix carries the +src convention
      } else if (op.size() > 1 && op[0] == 'd') {
        int s = fields.slot_of(slot);
        if (s < 0) throw std::invalid_argument("unknown field slot " + slot);
        coef[mono_from_suffix(op.substr(1))][s] += c;
      } else {
        throw std::invalid_argument("bad operator: " + op);
      }
    }
    rows.emplace_back(row_name, std::move(coef), std::move(src));
  }

  // recover catalogue boost actions when available
  try {
    LinearFieldSystem cat = fieldsys::catalogue(sys.name);
    sys.field = cat.field;
    sys.current = cat.current;
  } catch (const fieldsys::UnknownSystemError&) {
    sys.field = fieldsys::Multiplet::trivial(fields);
    sys.current = fieldsys::Multiplet::trivial(currents);
  }

  // group scalar rows back into named equations (components x/y/z)
  auto base_name = [](const std::string& rn) {
    auto dot = rn.rfind('.');
    if (dot == std::string::npos) return rn;
    std::string suffix = rn.substr(dot + 1);
    if (suffix == "x" || suffix == "y" || suffix == "z") return rn.substr(0, dot);
    return rn;
  };
  for (size_t k = 0; k < rows.size();) {
    const std::string name = base_name(std::get<0>(rows[k]));
    int span = 1;
    while (k + span < rows.size() && base_name(std::get<0>(rows[k + span])) == name) ++span;
    Equation eq;
    eq.name = name;
    eq.rows = span;
    eq.src = QMatrix::zero(span, currents.dim());
    for (int r = 0; r < span; ++r) {
      for (const auto& [mono, entries] : std::get<1>(rows[k + r])) {
        auto it = eq.coef.find(mono);
        if (it == eq.coef.end())
          it = eq.coef.emplace(mono, QMatrix::zero(span, fields.dim())).first;
        for (const auto& [slot, c] : entries) it->second(r, slot) = c;
      }
      for (const auto& [slot, c] : std::get<2>(rows[k + r])) eq.src(r, slot) = c;
    }
    sys.eqs.push_back(std::move(eq));
    k += span;
  }
  return sys;
}

contraction::ContractionScheme parse_scheme(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  int n = 0;
  in >> n;
  if (n <= 0 || n > 32) throw std::invalid_argument("bad scheme dimension");
  EpsMatrix v(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string entry;
      if (!(in >> entry)) throw std::invalid_argument("scheme matrix is incomplete");
      v(i, j) = eps_from_string(entry);
    }
  return contraction::scheme_from_matrix(v, name);
}

}  // namespace galilei::textio
