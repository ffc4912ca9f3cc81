#include <stdexcept>

#include "galilei/fieldsys.hpp"

namespace galilei::fieldsys {

namespace {

constexpr Mono4 kDt{1, 0, 0, 0};

Mono4 dx(int i) {
  Mono4 m{0, 0, 0, 0};
  m[1 + i] = 1;
  return m;
}

/// Incremental equation builder addressing components by name.
class EqB {
 public:
  EqB(std::string name, int rows, const Layout& fields, const Layout& currents)
      : f_(fields), c_(currents) {
    eq_.name = std::move(name);
    eq_.rows = rows;
    eq_.src = QMatrix::zero(rows, currents.dim());
  }

  EqB& curl(const std::string& comp, long s = 1) {
    const int o = off(comp);
    for (int b = 0; b < 3; ++b)
      for (int j = 0; j < 3; ++j)
        for (int c = 0; c < 3; ++c)
          if (int e = eps3(b, j, c)) at(dx(j))(b, o + c) += GQ(e * s);
    return *this;
  }
  EqB& div(const std::string& comp, long s = 1) {
    const int o = off(comp);
    for (int j = 0; j < 3; ++j) at(dx(j))(0, o + j) += GQ(s);
    return *this;
  }
  EqB& grad(const std::string& scalar, long s = 1) {
    const int o = off(scalar);
    for (int b = 0; b < 3; ++b) at(dx(b))(b, o) += GQ(s);
    return *this;
  }
  EqB& dt(const std::string& comp, long s = 1) {
    const int o = off(comp);
    for (int b = 0; b < rows_of(comp); ++b) at(kDt)(b, o + b) += GQ(s);
    return *this;
  }
  EqB& dt2(const std::string& comp, long s = 1) {
    const int o = off(comp);
    Mono4 m{2, 0, 0, 0};
    for (int b = 0; b < rows_of(comp); ++b) at(m)(b, o + b) += GQ(s);
    return *this;
  }
  EqB& laplace(const std::string& comp, long s = 1) {
    const int o = off(comp);
    for (int j = 0; j < 3; ++j) {
      Mono4 m{0, 0, 0, 0};
      m[1 + j] = 2;
      for (int b = 0; b < rows_of(comp); ++b) at(m)(b, o + b) += GQ(s);
    }
    return *this;
  }
  /// Source coupling: the row reads ... - e * (coef) * component = 0.
  EqB& src(const std::string& cur, long coef = 1) {
    const int i = c_.index_of(cur);
    if (i < 0) throw std::logic_error("unknown current " + cur);
    const int o = c_.offset(i);
    const int n = c_.comps[i].vec ? 3 : 1;
    for (int b = 0; b < n; ++b) eq_.src(b, o + b) += GQ(coef);
    return *this;
  }

  Equation done() { return std::move(eq_); }

 private:
  int off(const std::string& comp) const {
    const int i = f_.index_of(comp);
    if (i < 0) throw std::logic_error("unknown field " + comp);
    return f_.offset(i);
  }
  int rows_of(const std::string& comp) const {
    return f_.comps[f_.index_of(comp)].vec ? 3 : 1;
  }
  QMatrix& at(const Mono4& m) {
    auto it = eq_.coef.find(m);
    if (it == eq_.coef.end())
      it = eq_.coef.emplace(m, QMatrix::zero(eq_.rows, f_.dim())).first;
    return it->second;
  }
  Equation eq_;
  const Layout& f_;
  const Layout& c_;
};

Multiplet make_multiplet(Layout l, BoostKind kind = BoostKind::Galilean) {
  Multiplet m = Multiplet::trivial(std::move(l));
  m.kind = kind;
  return m;
}

int moff(const Multiplet& m, const std::string& name) {
  return m.layout.offset(m.layout.index_of(name));
}

}  // namespace

std::vector<std::string> catalogue_names() {
  return {"magnetic",  "electric",      "maxwell",       "scalar_gradient",
          "extended",  "reduced_R0",    "electrostatic", "subsystem_8",
          "scalar_system", "magnetostatic", "reduced_W"};
}

LinearFieldSystem catalogue(const std::string& name) {
  LinearFieldSystem sys;
  sys.name = name;

  if (name == "magnetic") {
    // magnetic limit: H invariant, E' = E - v x H
    sys.field = make_multiplet({{{"H_m", true}, {"E_m", true}}});
    gen_vec_cross(sys.field.boost_gen, moff(sys.field, "E_m"), moff(sys.field, "H_m"), GQ(-1));
    sys.current = make_multiplet({{{"j0_m", false}, {"j_m", true}}});
    gen_scalar_dot(sys.current.boost_gen, moff(sys.current, "j0_m"), moff(sys.current, "j_m"),
                   GQ(1));
    const Layout &f = sys.field.layout, &c = sys.current.layout;
    sys.eqs.push_back(EqB("faraday", 3, f, c).curl("E_m").dt("H_m", -1).done());
    sys.eqs.push_back(EqB("divE", 1, f, c).div("E_m").src("j0_m").done());
    sys.eqs.push_back(EqB("ampere", 3, f, c).curl("H_m").src("j_m").done());
    sys.eqs.push_back(EqB("divH", 1, f, c).div("H_m").done());
    return sys;
  }

  if (name == "electric") {
    // electric limit: E invariant, H' = H + v x E
    sys.field = make_multiplet({{{"H_e", true}, {"E_e", true}}});
    gen_vec_cross(sys.field.boost_gen, moff(sys.field, "H_e"), moff(sys.field, "E_e"), GQ(1));
    sys.current = make_multiplet({{{"j4_e", false}, {"j_e", true}}});
    gen_vec_from_scalar(sys.current.boost_gen, moff(sys.current, "j_e"),
                        moff(sys.current, "j4_e"), GQ(1));
    const Layout &f = sys.field.layout, &c = sys.current.layout;
    sys.eqs.push_back(EqB("ampere", 3, f, c).curl("H_e").dt("E_e").src("j_e").done());
    sys.eqs.push_back(EqB("divE", 1, f, c).div("E_e").src("j4_e").done());
    sys.eqs.push_back(EqB("curlE", 3, f, c).curl("E_e").done());
    sys.eqs.push_back(EqB("divH", 1, f, c).div("H_e").done());
    return sys;
  }

  if (name == "maxwell") {
    // relativistic Maxwell in the form the potential strengths satisfy
    sys.field = make_multiplet({{{"E", true}, {"H", true}}}, BoostKind::Lorentz);
    gen_vec_cross(sys.field.boost_gen, moff(sys.field, "E"), moff(sys.field, "H"), GQ(-1));
    gen_vec_cross(sys.field.boost_gen, moff(sys.field, "H"), moff(sys.field, "E"), GQ(1));
    sys.current = make_multiplet({{{"j0", false}, {"j", true}}}, BoostKind::Lorentz);
    gen_scalar_dot(sys.current.boost_gen, moff(sys.current, "j0"), moff(sys.current, "j"), GQ(1));
    gen_vec_from_scalar(sys.current.boost_gen, moff(sys.current, "j"), moff(sys.current, "j0"),
                        GQ(1));
    const Layout &f = sys.field.layout, &c = sys.current.layout;
    sys.eqs.push_back(EqB("faraday", 3, f, c).curl("E").dt("H").done());
    sys.eqs.push_back(EqB("divH", 1, f, c).div("H").done());
    sys.eqs.push_back(EqB("ampere", 3, f, c).curl("H").dt("E", -1).src("j", -1).done());
    sys.eqs.push_back(EqB("divE", 1, f, c).div("E").src("j0", -1).done());
    return sys;
  }

  if (name == "scalar_gradient") {
    // first-order system for the four-gradient of the scalar potential
    sys.field = make_multiplet({{{"F0", false}, {"F", true}}}, BoostKind::Lorentz);
    gen_scalar_dot(sys.field.boost_gen, moff(sys.field, "F0"), moff(sys.field, "F"), GQ(-1));
    gen_vec_from_scalar(sys.field.boost_gen, moff(sys.field, "F"), moff(sys.field, "F0"),
                        GQ(-1));
    sys.current = make_multiplet({{{"j4", false}}}, BoostKind::Lorentz);
    const Layout &f = sys.field.layout, &c = sys.current.layout;
    sys.eqs.push_back(EqB("divF", 1, f, c).dt("F0").div("F", -1).src("j4", -1).done());
    sys.eqs.push_back(EqB("curlF", 3, f, c).curl("F").done());
    sys.eqs.push_back(EqB("gradF", 3, f, c).dt("F").grad("F0", -1).done());
    return sys;
  }

  if (name == "extended") {
    // the coupled ten-component system; fields carry D(3,1,1)
    sys.field = make_multiplet({{{"R", true}, {"W", true}, {"N", true}, {"B", false}}});
    auto& g = sys.field.boost_gen;
    gen_scalar_dot(g, moff(sys.field, "B"), moff(sys.field, "R"), GQ(1));
    gen_vec_cross(g, moff(sys.field, "W"), moff(sys.field, "R"), GQ(1));
    gen_vec_cross(g, moff(sys.field, "N"), moff(sys.field, "W"), GQ(1));
    gen_vec_from_scalar(g, moff(sys.field, "N"), moff(sys.field, "B"), GQ(1));
    sys.current = make_multiplet({{{"j0", false}, {"j", true}, {"j4", false}}});
    auto& gc = sys.current.boost_gen;
    gen_vec_from_scalar(gc, moff(sys.current, "j"), moff(sys.current, "j4"), GQ(1));
    gen_scalar_dot(gc, moff(sys.current, "j0"), moff(sys.current, "j"), GQ(-1));
    const Layout &f = sys.field.layout, &c = sys.current.layout;
    sys.eqs.push_back(EqB("J0", 1, f, c).div("N").dt("B", -1).src("j0").done());
    sys.eqs.push_back(EqB("J", 3, f, c).curl("W").grad("B").src("j").done());
    sys.eqs.push_back(EqB("J4", 1, f, c).div("R").src("j4").done());
    sys.eqs.push_back(EqB("calN", 3, f, c).dt("W").curl("N").done());
    sys.eqs.push_back(EqB("calW", 3, f, c).dt("R").grad("B", -1).done());
    sys.eqs.push_back(EqB("calR", 3, f, c).curl("R").done());
    sys.eqs.push_back(EqB("calB", 1, f, c).div("W").done());
    return sys;
  }

  if (name == "reduced_R0") {
    // the condition R = 0, j4 = 0 imposed on the coupled system
    sys.field = make_multiplet({{{"Htilde", true}, {"Etilde", true}, {"S", false}}});
    auto& g = sys.field.boost_gen;
    gen_vec_cross(g, moff(sys.field, "Etilde"), moff(sys.field, "Htilde"), GQ(1));
    gen_vec_from_scalar(g, moff(sys.field, "Etilde"), moff(sys.field, "S"), GQ(1));
    sys.current = make_multiplet({{{"j0", false}, {"j", true}}});
    gen_scalar_dot(sys.current.boost_gen, moff(sys.current, "j0"), moff(sys.current, "j"),
                   GQ(-1));
    const Layout &f = sys.field.layout, &c = sys.current.layout;
    sys.eqs.push_back(EqB("faraday", 3, f, c).dt("Htilde").curl("Etilde").done());
    sys.eqs.push_back(EqB("ampere", 3, f, c).curl("Htilde").src("j").done());
    sys.eqs.push_back(EqB("divH", 1, f, c).div("Htilde").done());
    sys.eqs.push_back(EqB("divE", 1, f, c).div("Etilde").dt("S", -1).src("j0").done());
    sys.eqs.push_back(EqB("gradS", 3, f, c).grad("S").done());
    return sys;
  }

  if (name == "electrostatic") {
    sys.field = make_multiplet({{{"Ehat", true}}});
    sys.current = make_multiplet({{{"rho", false}}});
    const Layout &f = sys.field.layout, &c = sys.current.layout;
    sys.eqs.push_back(EqB("curlE", 3, f, c).curl("Ehat").done());
    sys.eqs.push_back(EqB("divE", 1, f, c).div("Ehat").src("rho").done());
    return sys;
  }

  if (name == "subsystem_8") {
    // the coupled system without the calN and J0 equations; note the
    // time-derivative form of the J row, which keeps it B-free
    sys.field = make_multiplet({{{"R", true}, {"W", true}, {"B", false}}});
    auto& g = sys.field.boost_gen;
    gen_scalar_dot(g, moff(sys.field, "B"), moff(sys.field, "R"), GQ(1));
    gen_vec_cross(g, moff(sys.field, "W"), moff(sys.field, "R"), GQ(1));
    sys.current = make_multiplet({{{"j", true}, {"j4", false}}});
    gen_vec_from_scalar(sys.current.boost_gen, moff(sys.current, "j"), moff(sys.current, "j4"),
                        GQ(1));
    const Layout &f = sys.field.layout, &c = sys.current.layout;
    sys.eqs.push_back(EqB("J", 3, f, c).curl("W").dt("R").src("j").done());
    sys.eqs.push_back(EqB("J4", 1, f, c).div("R").src("j4").done());
    sys.eqs.push_back(EqB("calW", 3, f, c).dt("R").grad("B", -1).done());
    sys.eqs.push_back(EqB("calR", 3, f, c).curl("R").done());
    sys.eqs.push_back(EqB("calB", 1, f, c).div("W").done());
    return sys;
  }

  if (name == "scalar_system") {
    sys.field = make_multiplet({{{"R", true}, {"B", false}}});
    gen_scalar_dot(sys.field.boost_gen, moff(sys.field, "B"), moff(sys.field, "R"), GQ(1));
    sys.current = make_multiplet({{{"j4", false}}});
    const Layout &f = sys.field.layout, &c = sys.current.layout;
    sys.eqs.push_back(EqB("J4", 1, f, c).div("R").src("j4").done());
    sys.eqs.push_back(EqB("calW", 3, f, c).dt("R").grad("B", -1).done());
    sys.eqs.push_back(EqB("calR", 3, f, c).curl("R").done());
    return sys;
  }

  if (name == "magnetostatic") {
    sys.field = make_multiplet({{{"Hhat", true}}});
    sys.current = make_multiplet({{{"j", true}}});
    const Layout &f = sys.field.layout, &c = sys.current.layout;
    sys.eqs.push_back(EqB("ampere", 3, f, c).curl("Hhat").src("j").done());
    sys.eqs.push_back(EqB("divH", 1, f, c).div("Hhat").done());
    return sys;
  }

  if (name == "reduced_W") {
    sys.field = make_multiplet({{{"Hhat", true}, {"S", false}}});
    sys.current = make_multiplet({{{"j", true}}});
    const Layout &f = sys.field.layout, &c = sys.current.layout;
    sys.eqs.push_back(EqB("ampere", 3, f, c).curl("Hhat").src("j").done());
    sys.eqs.push_back(EqB("divH", 1, f, c).div("Hhat").done());
    sys.eqs.push_back(EqB("gradS", 3, f, c).grad("S").done());
    return sys;
  }

  throw UnknownSystemError(name);
}

LinearFieldSystem galilean_potential_system() {
  LinearFieldSystem sys;
  sys.name = "galilean_potentials";
  // The five-potential multiplet: A'0 is the C-type scalar, A'4 the
  // invariant one. Under the global chain-rule convention the boost runs
  // with the opposite parameter sign from the field multiplets.
  sys.field = make_multiplet({{{"A", true}, {"A0", false}, {"A4", false}}});
  auto& g = sys.field.boost_gen;
  gen_vec_from_scalar(g, moff(sys.field, "A"), moff(sys.field, "A4"), GQ(-1));
  gen_scalar_dot(g, moff(sys.field, "A0"), moff(sys.field, "A"), GQ(-1));
  sys.current = make_multiplet({{{"j", true}, {"j0", false}, {"j4", false}}});
  auto& gc = sys.current.boost_gen;
  gen_vec_from_scalar(gc, moff(sys.current, "j"), moff(sys.current, "j4"), GQ(-1));
  gen_scalar_dot(gc, moff(sys.current, "j0"), moff(sys.current, "j"), GQ(-1));
  const Layout &f = sys.field.layout, &c = sys.current.layout;
  sys.eqs.push_back(EqB("waveA", 3, f, c).laplace("A").src("j", -1).done());
  sys.eqs.push_back(EqB("waveA0", 1, f, c).laplace("A0").src("j0", -1).done());
  sys.eqs.push_back(EqB("waveA4", 1, f, c).laplace("A4").src("j4", -1).done());
  sys.eqs.push_back(EqB("gauge", 1, f, c).dt("A4").div("A").done());
  return sys;
}

LinearFieldSystem relativistic_potential_system() {
  LinearFieldSystem sys;
  sys.name = "relativistic_potentials";
  sys.field = make_multiplet({{{"A", true}, {"A0", false}, {"A4", false}}}, BoostKind::Lorentz);
  auto& g = sys.field.boost_gen;
  gen_scalar_dot(g, moff(sys.field, "A0"), moff(sys.field, "A"), GQ(1));
  gen_vec_from_scalar(g, moff(sys.field, "A"), moff(sys.field, "A0"), GQ(1));
  sys.current = make_multiplet({{{"j", true}, {"j0", false}, {"j4", false}}}, BoostKind::Lorentz);
  auto& gc = sys.current.boost_gen;
  gen_scalar_dot(gc, moff(sys.current, "j0"), moff(sys.current, "j"), GQ(1));
  gen_vec_from_scalar(gc, moff(sys.current, "j"), moff(sys.current, "j0"), GQ(1));
  const Layout &f = sys.field.layout, &c = sys.current.layout;
  // wave rows: -d_t^2 X + laplace X + e jX = 0 (uniform source signs)
  sys.eqs.push_back(EqB("waveA", 3, f, c).dt2("A", -1).laplace("A").src("j", -1).done());
  sys.eqs.push_back(EqB("waveA0", 1, f, c).dt2("A0", -1).laplace("A0").src("j0", -1).done());
  sys.eqs.push_back(EqB("waveA4", 1, f, c).dt2("A4", -1).laplace("A4").src("j4", -1).done());
  sys.eqs.push_back(EqB("gauge", 1, f, c).dt("A0").div("A").done());
  return sys;
}

std::vector<std::string> mutation_names() {
  return {"magnetic", "electric", "extended", "subsystem_8", "scalar_system"};
}

LinearFieldSystem sign_flip_mutation(const std::string& name) {
  LinearFieldSystem sys = catalogue(name);
  auto flip = [&](const std::string& eq_name, const std::string& comp, bool time_part) {
    Equation& eq = sys.eqs[sys.eq_index(eq_name)];
    const int i = sys.field.layout.index_of(comp);
    const int o = sys.field.layout.offset(i);
    const int n = sys.field.layout.comps[i].vec ? 3 : 1;
    for (auto& [mono, c] : eq.coef) {
      if ((mono[0] > 0) != time_part) continue;
      for (int r = 0; r < eq.rows; ++r)
        for (int k = 0; k < n; ++k) c(r, o + k) = -c(r, o + k);
    }
  };
  if (name == "magnetic")
    flip("faraday", "H_m", true);
  else if (name == "electric")
    flip("ampere", "E_e", true);
  else if (name == "extended")
    flip("J", "B", false);
  else if (name == "subsystem_8")
    flip("J", "R", true);
  else if (name == "scalar_system")
    flip("calW", "B", false);
  else
    throw UnknownSystemError(name + " (no designated mutation)");
  sys.name = name + "_flipped";
  return sys;
}

}  // namespace galilei::fieldsys
