#include "galilei/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "galilei/contraction.hpp"
#include "galilei/fieldsys.hpp"
#include "galilei/limits.hpp"
#include "galilei/potentials.hpp"
#include "galilei/reps.hpp"
#include "galilei/textio.hpp"

namespace galilei::report {

namespace {

Json base(const std::string& command) {
  Json j;
  j["command"] = command;
  j["convention"] = reps::convention_string();
  return j;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

Json poly_entries(const VMatrix& m, const std::vector<std::string>& row_names,
                  const std::vector<std::string>& col_names) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      Json e;
      e["row"] = row_names.empty() ? std::to_string(i) : row_names[i];
      e["col"] = col_names.empty() ? std::to_string(j) : col_names[j];
      e["poly"] = to_string(m(i, j));
      out.push_back(std::move(e));
    }
  return out;
}

Json matrix_entries(const QMatrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      Json e;
      e["row"] = i;
      e["col"] = j;
      e["value"] = to_string(m(i, j));
      out.push_back(std::move(e));
    }
  return out;
}

std::vector<std::string> rep_slot_names(const reps::GalileiRep& rep) {
  static const char axis[3] = {'x', 'y', 'z'};
  std::vector<std::string> names;
  for (reps::Comp c : rep.layout) {
    if (reps::is_vector(c))
      for (int k = 0; k < 3; ++k) names.push_back(reps::comp_name(c) + "." + axis[k]);
    else
      names.push_back(reps::comp_name(c));
  }
  return names;
}

Json one_rep_check(const reps::RepLabel& label) {
  reps::GalileiRep rep = reps::build_rep(label);
  auto rpt = reps::check_structure(rep);
  Json j;
  j["label"] = label.str();
  std::string layout;
  for (reps::Comp c : rep.layout) layout += (layout.empty() ? "" : ",") + reps::comp_name(c);
  j["layout"] = layout;
  j["dim"] = rep.dim;
  Json rels = Json::array();
  for (const auto& item : rpt.items) {
    Json r;
    r["relation"] = item.relation;
    r["pass"] = item.pass;
    rels.push_back(std::move(r));
  }
  j["relations"] = std::move(rels);
  j["pass"] = rpt.all_pass;
  return j;
}

}  // namespace

Json reps_list() {
  Json j = base("reps list");
  Json items = Json::array();
  for (const auto& l : reps::enumerate_labels()) {
    Json it;
    it["label"] = l.str();
    std::string layout;
    for (reps::Comp c : reps::layout_of(l))
      layout += (layout.empty() ? "" : ",") + reps::comp_name(c);
    it["layout"] = layout;
    it["dim"] = 3 * l.m + l.n;
    items.push_back(std::move(it));
  }
  j["representations"] = std::move(items);
  j["pass"] = true;
  return j;
}

Json reps_check(const std::string& label_or_all) {
  Json j = base("reps check " + label_or_all);
  Json items = Json::array();
  bool all = true;
  if (label_or_all == "all") {
    for (const auto& l : reps::enumerate_labels()) {
      Json r = one_rep_check(l);
      all = all && r["pass"].get<bool>();
      items.push_back(std::move(r));
    }
  } else {
    Json r = one_rep_check(reps::label_from_string(label_or_all));
    all = r["pass"].get<bool>();
    items.push_back(std::move(r));
  }
  j["checks"] = std::move(items);
  j["pass"] = all;
  return j;
}

Json reps_indecomposable(const std::string& label) {
  Json j = base("reps indecomposable " + label);
  reps::RepLabel l = reps::label_from_string(label);
  auto rpt = reps::is_indecomposable(reps::build_rep(l));
  j["label"] = l.str();
  j["indecomposable"] = rpt.indecomposable;
  j["commutant_dim"] = rpt.commutant_dim;
  j["commutant_semisimple_dim"] = rpt.local_quotient_dim;
  if (rpt.witness) j["witness"] = matrix_entries(*rpt.witness);
  j["pass"] = rpt.indecomposable;
  return j;
}

Json contract_report(const std::string& scheme_name, const std::string& rep_name,
                     const std::optional<std::string>& scheme_file_text) {
  Json j = base("contract --scheme " + scheme_name + " --rep " + rep_name);
  contraction::LorentzRep rep;
  if (rep_name == "four-vector")
    rep = contraction::four_vector_rep();
  else if (rep_name == "four-vector+scalar")
    rep = contraction::direct_sum({contraction::four_vector_rep(), contraction::scalar_rep()});
  else
    throw std::invalid_argument("unknown representation " + rep_name);
  contraction::ContractionScheme scheme =
      scheme_file_text ? textio::parse_scheme(*scheme_file_text, scheme_name)
                       : contraction::scheme_by_name(scheme_name);
  j["scheme"] = scheme.name;
  j["rep"] = rep.name;
  try {
    auto res = contraction::contract(rep, scheme);
    j["trivial_boosts"] = res.trivial_boosts;
    Json gens = Json::array();
    for (int a = 0; a < 3; ++a) {
      Json g;
      g["eta"] = a + 1;
      g["entries"] = matrix_entries(res.eta[a]);
      gens.push_back(std::move(g));
    }
    j["boost_generators"] = std::move(gens);
    auto id = contraction::identify(res.S, res.eta);
    j["identified"] = id.identified;
    if (id.identified) {
      j["label"] = id.label.str();
      j["basis_change"] = matrix_entries(id.basis);
    }
    j["pass"] = id.identified && !res.trivial_boosts;
  } catch (const NegativePowerError& e) {
    j["error"] = "NegativePower";
    j["detail"] = e.what();
    j["pass"] = false;
  }
  return j;
}

namespace {

Json one_covariance(const std::string& name) {
  fieldsys::LinearFieldSystem sys = fieldsys::catalogue(name);
  Json j;
  j["system"] = name;
  j["convention"] = reps::convention_string();
  auto cov = fieldsys::boost_covariance(sys);
  j["boost_kind"] =
      cov.kind == fieldsys::BoostKind::Galilean ? "galilean" : "lorentz-infinitesimal";
  j["covariant"] = cov.covariant;
  if (cov.covariant) {
    if (cov.kind == fieldsys::BoostKind::Galilean)
      j["M_poly"] = poly_entries(cov.M, sys.row_names(), sys.row_names());
    else {
      Json gens = Json::array();
      for (int a = 0; a < 3; ++a) gens.push_back(matrix_entries(cov.M_gen[a]));
      j["M_generators"] = std::move(gens);
    }
    j["M_unique"] = cov.unique;
    j["failing_identity"] = nullptr;
  } else {
    j["M_poly"] = nullptr;
    j["failing_identity"] = cov.failing_identity;
  }
  auto rot = fieldsys::rotation_covariance(sys);
  j["rotation_covariant"] = rot.covariant;
  Json diag = Json::array();
  for (const auto& line : fieldsys::current_constraint_diagnostic(sys)) diag.push_back(line);
  j["induced_current_constraints"] = std::move(diag);
  j["pass"] = cov.covariant && rot.covariant;
  return j;
}

}  // namespace

Json covariance_report(const std::string& system_or_all) {
  Json j = base("covariance " + system_or_all);
  Json items = Json::array();
  bool all = true;
  if (system_or_all == "all") {
    for (const auto& name : fieldsys::catalogue_names()) {
      Json r = one_covariance(name);
      all = all && r["pass"].get<bool>();
      items.push_back(std::move(r));
    }
  } else {
    Json r = one_covariance(system_or_all);
    all = r["pass"].get<bool>();
    items.push_back(std::move(r));
  }
  j["systems"] = std::move(items);
  j["pass"] = all;
  return j;
}

Json reduce_report(const std::string& system, const std::vector<std::string>& zero,
                   const std::vector<std::string>& drop) {
  std::string cmd = "reduce " + system;
  for (const auto& z : zero) cmd += " --zero " + z;
  for (const auto& d : drop) cmd += " --drop " + d;
  Json j = base(cmd);
  fieldsys::LinearFieldSystem sys = fieldsys::catalogue(system);
  try {
    fieldsys::LinearFieldSystem red;
    if (!zero.empty()) {
      std::vector<std::string> zf, zc;
      for (const auto& n : zero)
        (sys.field.layout.index_of(n) >= 0 ? zf : zc).push_back(n);
      red = fieldsys::apply_constraint(sys, zf, zc);
    } else {
      red = fieldsys::drop_equations(sys, drop);
    }
    auto cov = fieldsys::boost_covariance(red);
    j["reduced"] = textio::export_system(red);
    j["covariant"] = cov.covariant;
    if (system == "magnetic" &&
        std::find(zero.begin(), zero.end(), "H_m") != zero.end())
      j["commentary"] =
          "the check uses only H_m = 0 and j_m = 0; whether the residual gauge "
          "function must be harmonic is not needed here and is left unverified";
    // does the reduction land on a catalogued system?
    Json matches = Json::array();
    for (const auto& edge : fieldsys::reduction_lattice()) {
      if (edge.parent != system) continue;
      if (edge.by_constraint == zero.empty()) continue;
      fieldsys::LinearFieldSystem aliased =
          edge.by_constraint ? fieldsys::apply_constraint(sys, edge.zero_fields,
                                                          edge.zero_currents, edge.field_alias,
                                                          edge.current_alias)
                             : fieldsys::drop_equations(sys, edge.drop_eqs, edge.field_alias,
                                                        edge.current_alias);
      // only report the edge that corresponds to this reduction
      bool same_request =
          edge.by_constraint
              ? [&] {
                  std::vector<std::string> all_zero = edge.zero_fields;
                  all_zero.insert(all_zero.end(), edge.zero_currents.begin(),
                                  edge.zero_currents.end());
                  std::set<std::string> a(all_zero.begin(), all_zero.end()),
                      b(zero.begin(), zero.end());
                  return a == b;
                }()
              : [&] {
                  std::set<std::string> a(edge.drop_eqs.begin(), edge.drop_eqs.end()),
                      b(drop.begin(), drop.end());
                  return a == b;
                }();
      if (!same_request) continue;
      auto match = fieldsys::match_catalogued(aliased, edge.child);
      Json m;
      m["target"] = edge.child;
      m["matched"] = match.matched;
      m["detail"] = match.detail;
      matches.push_back(std::move(m));
    }
    j["catalogued_matches"] = std::move(matches);
    j["pass"] = cov.covariant;
  } catch (const fieldsys::NotInvariantError& e) {
    j["error"] = "NotInvariant";
    j["detail"] = e.what();
    j["pass"] = false;
  } catch (const fieldsys::NotClosedError& e) {
    j["error"] = "NotClosed";
    j["detail"] = e.what();
    j["pass"] = false;
  }
  return j;
}

Json potentials_report(const std::string& scheme) {
  Json j = base("potentials " + scheme);
  if (scheme == "potential_system") {
    auto rpt = fieldsys::potential_system_check();
    j["contraction_matches"] = rpt.contraction_matches;
    j["covariant"] = rpt.covariant;
    j["boost_law_matches_reversed"] = rpt.boost_law_matches;
    j["current_law_matches_reversed"] = rpt.current_law_matches;
    j["strengths_close"] = rpt.strengths_close;
    if (!rpt.detail.empty()) j["detail"] = rpt.detail;
    j["pass"] = rpt.contraction_matches && rpt.covariant && rpt.boost_law_matches &&
                rpt.current_law_matches && rpt.strengths_close;
    return j;
  }
  auto rpt = fieldsys::potential_identities(scheme);
  if (!rpt.note.empty()) j["note"] = rpt.note;
  Json ids = Json::array();
  for (const auto& id : rpt.identities) {
    Json e;
    e["system"] = id.system;
    e["row"] = id.row;
    e["zero"] = id.zero;
    if (!id.zero) e["residual"] = id.residual;
    ids.push_back(std::move(e));
  }
  j["homogeneous_identities"] = std::move(ids);
  Json gauge = Json::array();
  for (const auto& g : rpt.gauge) {
    Json e;
    e["slot"] = g.slot;
    e["delta"] = g.delta;
    gauge.push_back(std::move(e));
  }
  j["gauge_variation"] = std::move(gauge);
  j["boost_intertwines"] = rpt.intertwines;
  j["pass"] = rpt.all_zero && rpt.intertwines;
  return j;
}

Json limits_report(const std::string& scheme, const std::string& target,
                   const std::vector<double>& eps) {
  std::string cmd = "limits --scheme " + scheme + " --target " + target;
  Json j = base(cmd);
  limits::LimitProbe probe;
  probe.scheme = scheme;
  probe.target = target;
  if (!eps.empty()) probe.eps_values = eps;
  auto table = limits::run_probe(probe);
  j["equations"] = table.equations;
  Json rows = Json::array();
  for (size_t k = 0; k < table.eps.size(); ++k) {
    Json r;
    r["eps"] = fmt_double(table.eps[k]);
    Json res = Json::array();
    for (double v : table.residual[k]) res.push_back(fmt_double(v));
    r["residual"] = std::move(res);
    r["max_residual"] = fmt_double(table.max_residual[k]);
    rows.push_back(std::move(r));
  }
  j["table"] = std::move(rows);
  Json loglog = Json::array();
  loglog.push_back("log10(eps)  log10(max_residual)");
  for (size_t k = 0; k < table.eps.size(); ++k) {
    char line[80];
    std::snprintf(line, sizeof(line), "%10.4f  %.6f", std::log10(table.eps[k]),
                  table.max_residual[k] > 0 ? std::log10(table.max_residual[k]) : -999.0);
    loglog.push_back(std::string(line));
  }
  j["loglog_table"] = std::move(loglog);
  j["slope"] = fmt_double(table.slope);
  Json orders = Json::array();
  for (int o : table.symbolic_order) orders.push_back(o);
  j["symbolic_order_per_row"] = std::move(orders);
  j["symbolic_max_order"] = table.symbolic_max_order;
  j["float_vs_exact_rel_err"] = fmt_double(table.exact_check_rel_err);
  const bool slope_ok =
      table.all_zero || std::abs(table.slope - double(table.symbolic_max_order)) <= 0.1;
  j["pass"] = slope_ok && table.exact_check_rel_err <= 1e-12;
  return j;
}

Json catalog_export_report(const std::string& system) {
  Json j = base("catalog export " + system);
  j["system"] = system;
  j["text"] = textio::export_system(fieldsys::catalogue(system));
  j["pass"] = true;
  return j;
}

bool report_passes(const Json& j) { return j.contains("pass") && j["pass"].get<bool>(); }

namespace {

void render(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || v.is_array())
        render(v, prefix.empty() ? k : prefix + "." + k, out);
      else
        out << (prefix.empty() ? k : prefix + "." + k) << ": " << v.dump() << "\n";
    }
  } else if (j.is_array()) {
    int i = 0;
    for (const auto& v : j) {
      render(v, prefix + "[" + std::to_string(i++) + "]", out);
    }
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, "", out);
  return out.str();
}

}  // namespace galilei::report
