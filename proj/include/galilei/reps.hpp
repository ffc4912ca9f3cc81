#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galilei/genbuild.hpp"
#include "galilei/matrix.hpp"

namespace galilei::reps {

/// The eight kinds of quantities a carrier space can hold. A, B, C are
/// rotational scalars; R, U, W, K, N are 3-vectors.
enum class Comp { A, B, C, R, U, W, K, N };

bool is_vector(Comp c);
std::string comp_name(Comp c);

struct RepLabel {
  int m = 0, n = 0, lambda = 0;
  bool operator==(const RepLabel& o) const {
    return m == o.m && n == o.n && lambda == o.lambda;
  }
  std::string str() const;  // "D(m,n,lambda)"
};

RepLabel label_from_string(const std::string& s);

struct UnknownLabelError : std::runtime_error {
  explicit UnknownLabelError(const std::string& s)
      : std::runtime_error("unknown representation label: " + s) {}
};

/// A representation of hg(1,3) on a multiplet of named scalars/vectors.
/// S are the rotation generators, eta the boost generators; the finite
/// boost is exp(-i eta . v), equivalently exp(v . G) with G_a = -i eta_a.
struct GalileiRep {
  std::optional<RepLabel> label;  // catalogued reps only
  std::vector<Comp> layout;
  int dim = 0;
  std::array<QMatrix, 3> S, eta;

  int offset(int comp_index) const;
  std::array<QMatrix, 3> real_generators() const;  // G_a = -i eta_a
};

/// The ten indecomposable labels, in catalogue order.
std::vector<RepLabel> enumerate_labels();

/// Component content of a catalogued label, in the stored slot order.
std::vector<Comp> layout_of(const RepLabel& l);

GalileiRep build_rep(const RepLabel& l);

GalileiRep direct_sum(const GalileiRep& a, const GalileiRep& b);

struct StructureReport {
  struct Item {
    std::string relation;
    bool pass;
  };
  std::vector<Item> items;
  bool all_pass = true;
};

/// Checks [S_a,S_b] = i eps_abc S_c, [eta_a,S_b] = i eps_abc eta_c and
/// [eta_a,eta_b] = 0 as exact matrix identities.
StructureReport check_structure(const GalileiRep& rep);

/// exp(-i eta . v) as an exact polynomial matrix in v. Throws
/// NonNilpotentError when the exponential fails to terminate.
VMatrix finite_boost(const GalileiRep& rep);

/// Exact basis of matrices commuting with every S_a and eta_a.
/// Requires the block spin structure that build_rep/direct_sum produce.
std::vector<QMatrix> commutant(const GalileiRep& rep);

struct IndecomposabilityReport {
  bool indecomposable = false;
  int commutant_dim = 0;
  int local_quotient_dim = 0;        // dim of commutant modulo its radical
  std::optional<QMatrix> witness;    // nontrivial idempotent when decomposable
};

IndecomposabilityReport is_indecomposable(const GalileiRep& rep);

/// Subsets of named components whose vanishing is preserved by every
/// boost and rotation, i.e. the legal set-to-zero constraints. These are
/// exactly the complements of the invariant coordinate subspaces.
std::vector<std::vector<int>> invariant_component_subsets(const GalileiRep& rep);

/// Convention record embedded in reports: the single global sign choice
/// that makes the finite boosts reproduce the catalogued transformation
/// laws verbatim.
std::string convention_string();

}  // namespace galilei::reps
