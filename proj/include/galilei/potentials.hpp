#pragma once

#include <map>
#include <string>
#include <vector>

#include "galilei/fieldsys.hpp"

namespace galilei::fieldsys {

/// Formal jet of the potentials: (potential slot, derivative monomial) ->
/// coefficient. Mixed partials are symmetric by construction.
using JetExpr = std::map<std::pair<int, Mono4>, GQ>;

JetExpr jet_derivative(const JetExpr& e, const Mono4& mono);

struct StrengthMap {
  std::string system;              // catalogue target
  std::vector<JetExpr> strengths;  // one per field slot of the target
};

struct PotentialScheme {
  std::string name;
  Multiplet potentials;
  std::vector<StrengthMap> maps;
  std::string note;  // orientation choices baked into the strength map
};

std::vector<std::string> potential_scheme_names();
PotentialScheme potential_scheme(const std::string& name);

struct PotentialReport {
  std::string scheme;
  std::string note;
  struct Identity {
    std::string system, row;
    bool zero = false;
    std::string residual;
  };
  std::vector<Identity> identities;  // homogeneous rows of every target
  bool all_zero = true;
  struct Gauge {
    std::string slot;
    std::string delta;  // exact change under A -> A + grad(phi)
  };
  std::vector<Gauge> gauge;
  bool intertwines = true;  // strength map commutes with the boost actions
};

/// Substitutes the strength definitions into the homogeneous equations of
/// the target systems (second-order jets, symmetric mixed partials) and
/// verifies they vanish identically; also reports the exact gauge
/// variation and checks the boost intertwining relation.
PotentialReport potential_identities(const std::string& scheme);

struct PotentialSystemReport {
  bool contraction_matches = false;   // symbol-for-symbol recovery
  bool covariant = false;             // exact M(v) for the contracted system
  bool boost_law_matches = false;     // five-potential law, reversed parameter
  bool current_law_matches = false;   // current law, reversed parameter
  bool strengths_close = false;       // sourced rows of the coupled system
                                      // follow from the potential equations
  std::string detail;
};

/// Stores the relativistic wave system, contracts it at the symbol level
/// (x0 = t/eps, conjugation, eps -> 0 term selection) and verifies the
/// result equals the catalogued contracted system, is exactly covariant,
/// and reproduces the coupled field equations through the strengths.
PotentialSystemReport potential_system_check();

/// The contraction matrix used for the five-potential multiplet: the
/// similarity of the five-dimensional contraction, slot-ordered and
/// sign-adjusted so that the recorded potential boost law comes out.
EpsMatrix potential_contraction_matrix();

}  // namespace galilei::fieldsys
