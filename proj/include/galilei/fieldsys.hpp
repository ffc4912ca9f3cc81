#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galilei/genbuild.hpp"
#include "galilei/matrix.hpp"

namespace galilei::fieldsys {

/// Derivative monomial (t, x, y, z); first-order systems use |mono| = 1,
/// the potential wave system reaches |mono| = 2.
using Mono4 = std::array<int, 4>;

inline int mono_degree(const Mono4& m) { return m[0] + m[1] + m[2] + m[3]; }

struct Component {
  std::string name;
  bool vec = false;
};

struct Layout {
  std::vector<Component> comps;
  int dim() const;
  int offset(int idx) const;
  int index_of(const std::string& name) const;  // -1 when absent
  std::string slot_name(int slot) const;        // "W.x", "B", ...
  int slot_of(const std::string& slot_name) const;
};

enum class BoostKind { Galilean, Lorentz };

/// A multiplet of named scalars/vectors together with its boost action.
/// Galilean multiplets carry nilpotent generators whose exponential is the
/// finite boost; relativistic ones are only used at the Lie-algebra level.
struct Multiplet {
  Layout layout;
  BoostKind kind = BoostKind::Galilean;
  std::array<QMatrix, 3> boost_gen;  // real generators, finite boost = exp(v.G)

  static Multiplet trivial(Layout l);
  std::array<QMatrix, 3> rotation_gen() const;
  VMatrix finite_boost() const;  // Galilean kind only
};

/// One named equation block: scalar (1 row) or vector (3 rows), stored as
/// constant coefficient matrices per derivative monomial plus a source
/// coupling  sum_mono C[mono] d^mono F - e * src * j = 0.
struct Equation {
  std::string name;
  int rows = 1;
  std::map<Mono4, QMatrix> coef;
  QMatrix src;
};

struct LinearFieldSystem {
  std::string name;
  Multiplet field;
  Multiplet current;  // zero-dimensional layout when the system is source-free
  GQ e{1};            // coupling constant
  std::vector<Equation> eqs;

  int order() const;
  int total_rows() const;
  std::map<Mono4, QMatrix> stacked() const;
  QMatrix stacked_src() const;
  std::vector<std::string> row_names() const;
  int eq_index(const std::string& name) const;
};

struct UnknownSystemError : std::runtime_error {
  explicit UnknownSystemError(const std::string& n)
      : std::runtime_error("unknown system: " + n) {}
};

/// The catalogued first-order systems, in a fixed public order.
std::vector<std::string> catalogue_names();
LinearFieldSystem catalogue(const std::string& name);

/// The contracted five-potential system (Poisson equations plus the
/// contracted gauge condition); second order in space.
LinearFieldSystem galilean_potential_system();

/// The relativistic wave system for the five potentials in the Lorentz
/// gauge (uniform source signs; see the verification reports).
LinearFieldSystem relativistic_potential_system();

/// The designated sign-flip mutation of a major system, used as a negative
/// control: each one breaks exact boost covariance.
LinearFieldSystem sign_flip_mutation(const std::string& name);
std::vector<std::string> mutation_names();

// ---- covariance ----------------------------------------------------------

/// Expansion of a boosted derivative monomial: d_t -> d_t + v.grad applied
/// to d^mono, returned as (monomial, polynomial weight) pairs.
std::vector<std::pair<Mono4, VPoly>> boost_shift(const Mono4& mono);

struct CovarianceReport {
  bool covariant = false;
  BoostKind kind = BoostKind::Galilean;
  bool unique = true;
  VMatrix M;                       // finite equation-multiplet boost (Galilean)
  std::array<QMatrix, 3> M_gen;    // infinitesimal generators (Lorentz)
  std::string failing_identity;    // residual description when not covariant
};

/// Solves exactly for the equation-multiplet boost M(v) satisfying
///   [sum C[mono] (shifted d^mono)] Lambda_F(v) = M(v) [sum C[mono] d^mono]
///   M(v) Csrc = Csrc Lambda_j(v)
/// as identities in the commuting derivative symbols and v. For Lorentz
/// multiplets the infinitesimal analogue is solved instead.
CovarianceReport boost_covariance(const LinearFieldSystem& sys);

struct RotationReport {
  bool covariant = false;
  std::array<QMatrix, 3> M_gen;
  std::string failing_identity;
};

/// Infinitesimal rotation covariance: exact solve for the equation
/// multiplet rotation generators.
RotationReport rotation_covariance(const LinearFieldSystem& sys);

// ---- plane waves -----------------------------------------------------------

/// Symbol matrix with derivatives replaced by the covector (p_t, p).
QMatrix symbol_matrix(const LinearFieldSystem& sys, const GQ& pt, const std::array<GQ, 3>& p);

/// Exact amplitude basis of the homogeneous system's exponential waves.
std::vector<QMatrix> plane_wave(const LinearFieldSystem& sys, const GQ& pt,
                                const std::array<GQ, 3>& p);

// ---- reductions ------------------------------------------------------------

struct NotInvariantError : std::runtime_error {
  explicit NotInvariantError(const std::string& what) : std::runtime_error(what) {}
};
struct NotClosedError : std::runtime_error {
  explicit NotClosedError(const std::string& what) : std::runtime_error(what) {}
};

/// Renaming applied to surviving components after a reduction; scale -1
/// absorbs orientation flips (e.g. H_m = -Htilde).
struct ComponentAlias {
  std::string from, to;
  GQ scale{1};
};

/// Sets the named field/current components to zero. Requires the zeroed
/// set to be boost- and rotation-invariant (their transformation laws may
/// not feed on surviving components); throws NotInvariantError otherwise.
/// Equations that become 0 = 0 are dropped, unused components pruned.
LinearFieldSystem apply_constraint(const LinearFieldSystem& sys,
                                   const std::vector<std::string>& zero_fields,
                                   const std::vector<std::string>& zero_currents,
                                   const std::vector<ComponentAlias>& field_alias = {},
                                   const std::vector<ComponentAlias>& current_alias = {});

/// Removes the named equations. Requires the retained rows to be closed
/// under the parent's equation-multiplet boost M(v); NotClosedError
/// otherwise. Components no longer referenced are pruned when legal.
LinearFieldSystem drop_equations(const LinearFieldSystem& sys,
                                 const std::vector<std::string>& eq_names,
                                 const std::vector<ComponentAlias>& field_alias = {},
                                 const std::vector<ComponentAlias>& current_alias = {});

struct MatchReport {
  bool matched = false;
  bool coefficient_exact = false;  // row-for-row equality, not just row span
  std::string detail;
};

/// Compares a reduced system against a catalogued target: multiplet
/// layouts and boosts must agree, and the equation row spaces must be
/// exactly equal (canonical reduced form over the stacked coefficients).
MatchReport match_catalogued(const LinearFieldSystem& reduced, const std::string& target);

struct LatticeEdge {
  std::string parent, child;
  bool by_constraint = true;  // false: drop_equations
  std::vector<std::string> zero_fields, zero_currents, drop_eqs;
  std::vector<ComponentAlias> field_alias, current_alias;
};

/// The catalogued reduction lattice.
std::vector<LatticeEdge> reduction_lattice();

/// Runs one edge: performs the reduction and matches the catalogued child.
MatchReport check_edge(const LatticeEdge& edge);

// ---- diagnostics -----------------------------------------------------------

/// First-order differential combinations of the equations whose field parts
/// cancel identically, leaving pure current constraints (for Maxwell this
/// is charge conservation). Reported informationally.
std::vector<std::string> current_constraint_diagnostic(const LinearFieldSystem& sys);

}  // namespace galilei::fieldsys
