#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galilei/matrix.hpp"
#include "galilei/reps.hpp"

namespace galilei::contraction {

/// A finite-dimensional representation of so(1,3): rotation generators
/// S_a = 1/2 eps_abc S_bc and boost generators S_0a.
struct LorentzRep {
  std::string name;
  int dim = 0;
  std::array<QMatrix, 3> S_rot, S_boost;
};

/// The four-vector representation D(1/2,1/2): S_0a carries -k_a^dagger in
/// the upper-right block and k_a in the lower-left, k_a = i e_a^T.
LorentzRep four_vector_rep();

/// One-dimensional trivial representation D(0,0).
LorentzRep scalar_rep();

LorentzRep direct_sum(const std::vector<LorentzRep>& parts);

/// Checks the so(1,3) relations exactly.
bool check_lorentz_structure(const LorentzRep& rep, std::string* first_failure = nullptr);

struct ContractionScheme {
  std::string name;
  EpsMatrix V, V_inv;
};

ContractionScheme scheme_v1();
ContractionScheme scheme_v2();
ContractionScheme scheme_v3();
ContractionScheme scheme_by_name(const std::string& name);

/// Builds a scheme from a user matrix, computing and checking the exact
/// inverse in the Laurent ring.
ContractionScheme scheme_from_matrix(const EpsMatrix& v, const std::string& name = "custom");

struct ContractResult {
  std::array<QMatrix, 3> S, eta;
  bool trivial_boosts = false;  // limit exists but every eta_a vanishes
};

/// S'_a = lim V S_a V^-1, eta_a = lim eps V S_0a V^-1. Throws
/// NegativePowerError when a limit does not exist.
ContractResult contract(const LorentzRep& rep, const ContractionScheme& scheme);

struct IdentifyResult {
  bool identified = false;
  reps::RepLabel label;
  /// Basis change with basis * gens * basis^-1 equal to the catalogued
  /// generators entry for entry (slot permutation x component rescaling).
  QMatrix basis;
};

/// Matches generators against the catalogue, exactly or after a component
/// permutation composed with per-component rational rescalings. Returns
/// identified=false rather than guessing a general basis change.
IdentifyResult identify(const std::array<QMatrix, 3>& S, const std::array<QMatrix, 3>& eta);

}  // namespace galilei::contraction
