#include <algorithm>
#include <set>
#include <sstream>

#include "galilei/fieldsys.hpp"

namespace galilei::fieldsys {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

/// Slots covered by a set of component indices.
std::vector<int> slots_of(const Layout& l, const std::vector<int>& comps) {
  std::vector<int> slots;
  for (int i : comps) {
    const int o = l.offset(i), n = l.comps[i].vec ? 3 : 1;
    for (int k = 0; k < n; ++k) slots.push_back(o + k);
  }
  return slots;
}

/// The named components' vanishing is preserved exactly when their
/// generator rows are supported on their own columns.
bool zero_set_invariant(const Multiplet& m, const std::vector<int>& zeroed) {
  std::vector<bool> is_zeroed(m.layout.dim(), false);
  for (int s : slots_of(m.layout, zeroed)) is_zeroed[s] = true;
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < m.layout.dim(); ++i) {
      if (!is_zeroed[i]) continue;
      for (int j = 0; j < m.layout.dim(); ++j)
        if (!is_zeroed[j] && !m.boost_gen[a](i, j).is_zero()) return false;
    }
  return true;
}

Multiplet restrict_multiplet(const Multiplet& m, const std::vector<int>& kept_comps) {
  Multiplet out;
  out.kind = m.kind;
  for (int i : kept_comps) out.layout.comps.push_back(m.layout.comps[i]);
  std::vector<int> kept_slots = slots_of(m.layout, kept_comps);
  const int d = int(kept_slots.size());
  for (int a = 0; a < 3; ++a) {
    out.boost_gen[a] = QMatrix(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out.boost_gen[a](i, j) = m.boost_gen[a](kept_slots[i], kept_slots[j]);
  }
  return out;
}

/// Checks that the kept components' boost laws never reference the pruned
/// ones, so dropping the latter leaves a well-defined multiplet.
bool prunable(const Multiplet& m, const std::vector<int>& pruned) {
  std::vector<bool> is_pruned(m.layout.dim(), false);
  for (int s : slots_of(m.layout, pruned)) is_pruned[s] = true;
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < m.layout.dim(); ++i) {
      if (is_pruned[i]) continue;
      for (int j = 0; j < m.layout.dim(); ++j)
        if (is_pruned[j] && !m.boost_gen[a](i, j).is_zero()) return false;
    }
  return true;
}

struct SlotSelection {
  std::vector<int> kept_comps, kept_slots;
};

SlotSelection select(const Layout& l, const std::vector<std::string>& removed) {
  for (const auto& name : removed)
    if (l.index_of(name) < 0) throw UnknownSystemError("component " + name);
  SlotSelection sel;
  for (int i = 0; i < int(l.comps.size()); ++i)
    if (std::find(removed.begin(), removed.end(), l.comps[i].name) == removed.end())
      sel.kept_comps.push_back(i);
  sel.kept_slots = slots_of(l, sel.kept_comps);
  return sel;
}

QMatrix take_cols(const QMatrix& m, const std::vector<int>& cols) {
  QMatrix out(m.rows(), int(cols.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < int(cols.size()); ++j) out(i, j) = m(i, cols[j]);
  return out;
}

void apply_alias(Multiplet& m, std::vector<Equation>& eqs, bool fields,
                 const std::vector<ComponentAlias>& aliases) {
  for (const auto& al : aliases) {
    const int idx = m.layout.index_of(al.from);
    if (idx < 0) continue;
    m.layout.comps[idx].name = al.to;
    if (al.scale == GQ(1)) continue;
    if (al.scale.is_zero()) throw std::invalid_argument("alias scale must be nonzero");
    // new component = scale * old one: coefficient columns divide by the
    // scale, generators conjugate by the diagonal rescaling
    const int o = m.layout.offset(idx), n = m.layout.comps[idx].vec ? 3 : 1;
    QMatrix dia = QMatrix::identity(m.layout.dim());
    for (int k = 0; k < n; ++k) dia(o + k, o + k) = al.scale;
    QMatrix dia_inv = QMatrix::identity(m.layout.dim());
    for (int k = 0; k < n; ++k) dia_inv(o + k, o + k) = inverse(al.scale);
    for (int a = 0; a < 3; ++a) m.boost_gen[a] = dia * m.boost_gen[a] * dia_inv;
    GQ inv = inverse(al.scale);
    for (auto& eq : eqs) {
      if (fields) {
        for (auto& [mono, c] : eq.coef)
          for (int r = 0; r < eq.rows; ++r)
            for (int k = 0; k < n; ++k) c(r, o + k) *= inv;
      } else {
        for (int r = 0; r < eq.rows; ++r)
          for (int k = 0; k < n; ++k) eq.src(r, o + k) *= inv;
      }
    }
  }
}

/// Rebuilds the system after column selection: drops 0 = 0 equations and
/// prunes components that no equation references (when legal).
LinearFieldSystem finalize(LinearFieldSystem sys,
                           const std::vector<ComponentAlias>& field_alias,
                           const std::vector<ComponentAlias>& current_alias) {
  // drop identically-zero equations
  std::vector<Equation> kept;
  for (auto& eq : sys.eqs) {
    bool zero = eq.src.is_zero();
    for (const auto& [mono, c] : eq.coef) zero = zero && c.is_zero();
    if (!zero) kept.push_back(std::move(eq));
  }
  sys.eqs = std::move(kept);

  // prune unused components
  auto prune_pass = [&](Multiplet& m, bool fields) {
    std::vector<int> unused;
    for (int i = 0; i < int(m.layout.comps.size()); ++i) {
      const int o = m.layout.offset(i), n = m.layout.comps[i].vec ? 3 : 1;
      bool used = false;
      for (const auto& eq : sys.eqs) {
        if (fields) {
          for (const auto& [mono, c] : eq.coef)
            for (int r = 0; r < eq.rows && !used; ++r)
              for (int k = 0; k < n; ++k)
                if (!c(r, o + k).is_zero()) used = true;
        } else {
          for (int r = 0; r < eq.rows && !used; ++r)
            for (int k = 0; k < n; ++k)
              if (!eq.src(r, o + k).is_zero()) used = true;
        }
        if (used) break;
      }
      if (!used) unused.push_back(i);
    }
    if (unused.empty() || !prunable(m, unused)) return;
    std::vector<std::string> names;
    for (int i : unused) names.push_back(m.layout.comps[i].name);
    SlotSelection sel = select(m.layout, names);
    for (auto& eq : sys.eqs) {
      if (fields)
        for (auto& [mono, c] : eq.coef) c = take_cols(c, sel.kept_slots);
      else
        eq.src = take_cols(eq.src, sel.kept_slots);
    }
    m = restrict_multiplet(m, sel.kept_comps);
  };
  prune_pass(sys.field, true);
  prune_pass(sys.current, false);

  apply_alias(sys.field, sys.eqs, true, field_alias);
  apply_alias(sys.current, sys.eqs, false, current_alias);
  return sys;
}

}  // namespace

LinearFieldSystem apply_constraint(const LinearFieldSystem& sys,
                                   const std::vector<std::string>& zero_fields,
                                   const std::vector<std::string>& zero_currents,
                                   const std::vector<ComponentAlias>& field_alias,
                                   const std::vector<ComponentAlias>& current_alias) {
  std::vector<int> zf, zc;
  for (const auto& n : zero_fields) {
    int i = sys.field.layout.index_of(n);
    if (i < 0) throw UnknownSystemError("field component " + n);
    zf.push_back(i);
  }
  for (const auto& n : zero_currents) {
    int i = sys.current.layout.index_of(n);
    if (i < 0) throw UnknownSystemError("current component " + n);
    zc.push_back(i);
  }
  if (!zero_set_invariant(sys.field, zf))
    throw NotInvariantError("NotInvariant: field set {" + join(zero_fields) +
                            "} is not preserved by boosts");
  if (!zero_set_invariant(sys.current, zc))
    throw NotInvariantError("NotInvariant: current set {" + join(zero_currents) +
                            "} is not preserved by boosts");

  SlotSelection fsel = select(sys.field.layout, zero_fields);
  SlotSelection csel = select(sys.current.layout, zero_currents);

  LinearFieldSystem out;
  out.name = sys.name + "|" + join(zero_fields) + (zero_currents.empty() ? "" : "," + join(zero_currents)) + "=0";
  out.e = sys.e;
  out.field = restrict_multiplet(sys.field, fsel.kept_comps);
  out.current = restrict_multiplet(sys.current, csel.kept_comps);
  for (const auto& eq : sys.eqs) {
    Equation ne;
    ne.name = eq.name;
    ne.rows = eq.rows;
    for (const auto& [mono, c] : eq.coef) {
      QMatrix sub = take_cols(c, fsel.kept_slots);
      if (!sub.is_zero()) ne.coef[mono] = std::move(sub);
    }
    ne.src = take_cols(eq.src, csel.kept_slots);
    out.eqs.push_back(std::move(ne));
  }
  return finalize(std::move(out), field_alias, current_alias);
}

LinearFieldSystem drop_equations(const LinearFieldSystem& sys,
                                 const std::vector<std::string>& eq_names,
                                 const std::vector<ComponentAlias>& field_alias,
                                 const std::vector<ComponentAlias>& current_alias) {
  for (const auto& n : eq_names)
    if (sys.eq_index(n) < 0) throw UnknownSystemError("equation " + n);

  // the retained rows must be closed under the parent's M(v)
  if (sys.field.kind != BoostKind::Galilean)
    throw NotClosedError("NotClosed: equation dropping is defined for the Galilean systems");
  CovarianceReport cov = boost_covariance(sys);
  if (!cov.covariant)
    throw NotClosedError("NotClosed: parent system is not boost covariant");
  std::vector<bool> dropped_row(sys.total_rows(), false);
  {
    int r0 = 0;
    for (const auto& eq : sys.eqs) {
      bool dropped =
          std::find(eq_names.begin(), eq_names.end(), eq.name) != eq_names.end();
      for (int r = 0; r < eq.rows; ++r) dropped_row[r0 + r] = dropped;
      r0 += eq.rows;
    }
  }
  for (int i = 0; i < sys.total_rows(); ++i) {
    if (dropped_row[i]) continue;
    for (int j = 0; j < sys.total_rows(); ++j)
      if (dropped_row[j] && !cov.M(i, j).is_zero())
        throw NotClosedError("NotClosed: retained equations mix with {" + join(eq_names) +
                             "} under M(v)");
  }

  LinearFieldSystem out;
  out.name = sys.name + "-" + join(eq_names);
  out.e = sys.e;
  out.field = sys.field;
  out.current = sys.current;
  for (const auto& eq : sys.eqs)
    if (std::find(eq_names.begin(), eq_names.end(), eq.name) == eq_names.end())
      out.eqs.push_back(eq);
  return finalize(std::move(out), field_alias, current_alias);
}

// ---- matching ---------------------------------------------------------------

namespace {

/// Canonical long-row form of the equations: one row per scalar equation,
/// columns running over (monomial x field slot) then current slots.
QMatrix long_rows(const LinearFieldSystem& sys, const std::set<Mono4>& monos) {
  const int rows = sys.total_rows();
  const int nf = sys.field.layout.dim(), nj = sys.current.layout.dim();
  const auto C = sys.stacked();
  QMatrix out(rows, int(monos.size()) * nf + nj);
  int base = 0;
  for (const Mono4& m : monos) {
    auto it = C.find(m);
    if (it != C.end())
      for (int r = 0; r < rows; ++r)
        for (int f = 0; f < nf; ++f) out(r, base + f) = it->second(r, f);
    base += nf;
  }
  QMatrix src = sys.stacked_src();
  for (int r = 0; r < rows; ++r)
    for (int j = 0; j < nj; ++j) out(r, base + j) = sys.e * src(r, j);
  return out;
}

/// Reorders a system's components (by name) to the target layout order,
/// permuting generator matrices and equation columns accordingly.
bool reorder_to(const Multiplet& target, Multiplet& m, std::vector<Equation>& eqs, bool fields,
                std::string* why) {
  if (m.kind != target.kind) {
    *why = "multiplet kinds differ";
    return false;
  }
  if (m.layout.comps.size() != target.layout.comps.size()) {
    *why = "component counts differ";
    return false;
  }
  std::vector<int> order;
  for (const auto& want : target.layout.comps) {
    int idx = m.layout.index_of(want.name);
    if (idx < 0 || m.layout.comps[idx].vec != want.vec) {
      *why = "component " + want.name + " missing or of different kind";
      return false;
    }
    order.push_back(idx);
  }
  std::vector<int> slot_order = slots_of(m.layout, order);
  Multiplet nm = restrict_multiplet(m, order);
  for (auto& eq : eqs) {
    if (fields)
      for (auto& [mono, c] : eq.coef) c = take_cols(c, slot_order);
    else
      eq.src = take_cols(eq.src, slot_order);
  }
  m = std::move(nm);
  return true;
}

}  // namespace

MatchReport match_catalogued(const LinearFieldSystem& reduced, const std::string& target) {
  MatchReport rpt;
  LinearFieldSystem tgt = catalogue(target);
  LinearFieldSystem red = reduced;
  std::string why;
  if (!reorder_to(tgt.field, red.field, red.eqs, true, &why)) {
    rpt.detail = "field multiplet: " + why;
    return rpt;
  }
  if (!reorder_to(tgt.current, red.current, red.eqs, false, &why)) {
    rpt.detail = "current multiplet: " + why;
    return rpt;
  }
  for (int k = 0; k < 3; ++k) {
    if (red.field.boost_gen[k] != tgt.field.boost_gen[k]) {
      rpt.detail = "field boost generators differ";
      return rpt;
    }
    if (red.current.boost_gen[k] != tgt.current.boost_gen[k]) {
      rpt.detail = "current boost generators differ";
      return rpt;
    }
  }

  std::set<Mono4> monos;
  for (const auto& [m, c] : red.stacked()) monos.insert(m);
  for (const auto& [m, c] : tgt.stacked()) monos.insert(m);
  QMatrix a = long_rows(red, monos), b = long_rows(tgt, monos);

  // row spaces must agree exactly (canonical reduced form)
  RrefResult fa = rref(a), fb = rref(b);
  if (fa.rank != fb.rank || !(fa.R == fb.R) || fa.pivot_cols != fb.pivot_cols) {
    rpt.detail = "equation row spaces differ";
    return rpt;
  }
  rpt.matched = true;

  // coefficient-exact: rows pair off one-to-one up to a nonzero scale,
  // i.e. the same individual equations, not merely the same span
  auto scaled_equal = [&](int ra, int rb) {
    GQ scale;
    for (int c = 0; c < a.cols(); ++c) {
      bool za = a(ra, c).is_zero(), zb = b(rb, c).is_zero();
      if (za != zb) return false;
      if (za) continue;
      GQ s = a(ra, c) / b(rb, c);
      if (scale.is_zero())
        scale = s;
      else if (s != scale)
        return false;
    }
    return !scale.is_zero();
  };
  if (a.rows() == b.rows()) {
    std::vector<bool> used(b.rows(), false);
    bool all = true;
    for (int ra = 0; ra < a.rows() && all; ++ra) {
      bool found = false;
      for (int rb = 0; rb < b.rows(); ++rb) {
        if (used[rb]) continue;
        if (scaled_equal(ra, rb)) {
          used[rb] = true;
          found = true;
          break;
        }
      }
      all = found;
    }
    rpt.coefficient_exact = all;
  }
  rpt.detail = rpt.coefficient_exact ? "rows match individually"
                                     : "row spaces equal (rows recombined)";
  return rpt;
}

std::vector<LatticeEdge> reduction_lattice() {
  std::vector<LatticeEdge> edges;
  auto zero = [&](std::string parent, std::string child, std::vector<std::string> zf,
                  std::vector<std::string> zc, std::vector<ComponentAlias> fa,
                  std::vector<ComponentAlias> ca) {
    LatticeEdge e;
    e.parent = std::move(parent);
    e.child = std::move(child);
    e.by_constraint = true;
    e.zero_fields = std::move(zf);
    e.zero_currents = std::move(zc);
    e.field_alias = std::move(fa);
    e.current_alias = std::move(ca);
    edges.push_back(std::move(e));
  };
  auto drop = [&](std::string parent, std::string child, std::vector<std::string> eqs,
                  std::vector<ComponentAlias> fa, std::vector<ComponentAlias> ca) {
    LatticeEdge e;
    e.parent = std::move(parent);
    e.child = std::move(child);
    e.by_constraint = false;
    e.drop_eqs = std::move(eqs);
    e.field_alias = std::move(fa);
    e.current_alias = std::move(ca);
    edges.push_back(std::move(e));
  };

  zero("extended", "reduced_R0", {"R"}, {"j4"},
       {{"W", "Htilde"}, {"N", "Etilde"}, {"B", "S"}}, {});
  zero("reduced_R0", "magnetic", {"S"}, {},
       {{"Htilde", "H_m", GQ(-1)}, {"Etilde", "E_m"}},
       {{"j0", "j0_m"}, {"j", "j_m", GQ(-1)}});
  zero("magnetic", "electrostatic", {"H_m"}, {"j_m"}, {{"E_m", "Ehat"}}, {{"j0_m", "rho"}});
  drop("extended", "subsystem_8", {"calN", "J0"}, {}, {});
  drop("subsystem_8", "scalar_system", {"J", "calB"}, {}, {});
  drop("subsystem_8", "electric", {"calW"}, {{"W", "H_e"}, {"R", "E_e"}},
       {{"j", "j_e"}, {"j4", "j4_e"}});
  zero("subsystem_8", "reduced_W", {"R"}, {"j4"}, {{"W", "Hhat"}, {"B", "S"}}, {});
  zero("electric", "magnetostatic", {"E_e"}, {"j4_e"}, {{"H_e", "Hhat"}}, {{"j_e", "j"}});
  return edges;
}

MatchReport check_edge(const LatticeEdge& edge) {
  LinearFieldSystem parent = catalogue(edge.parent);
  LinearFieldSystem reduced =
      edge.by_constraint
          ? apply_constraint(parent, edge.zero_fields, edge.zero_currents, edge.field_alias,
                             edge.current_alias)
          : drop_equations(parent, edge.drop_eqs, edge.field_alias, edge.current_alias);
  return match_catalogued(reduced, edge.child);
}

}  // namespace galilei::fieldsys
