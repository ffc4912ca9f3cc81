#pragma once

#include <array>
#include <string>
#include <vector>

#include "galilei/fieldsys.hpp"

namespace galilei::limits {

/// Relativistic plane wave for the five-potential system: a null covector
/// with a Lorenz-gauge polarization. Everything rational so the symbolic
/// eps-expansion of the residuals is exact.
struct Wave {
  Rat p0;
  std::array<Rat, 3> p;
  std::array<GQ, 5> amp;  // (A.x, A.y, A.z, A0, A4)
};

/// Generic null wave: p = (3,4,0), p0 = 5, gauge-consistent polarization
/// with all sectors populated.
Wave default_wave();

struct DispersionViolatedError : std::runtime_error {
  explicit DispersionViolatedError(const std::string& w) : std::runtime_error(w) {}
};
struct TargetMismatchError : std::runtime_error {
  explicit TargetMismatchError(const std::string& w) : std::runtime_error(w) {}
};

/// Checks the null condition and the Lorenz gauge exactly.
void validate_wave(const Wave& w);

struct LimitProbe {
  std::string scheme;  // v1 | v2 | v3
  std::string target;  // magnetic | electric | extended
  std::vector<double> eps_values{1e-1, 1e-2, 1e-3};
  Wave wave = default_wave();
};

struct ResidualTable {
  std::string scheme, target;
  std::vector<std::string> equations;         // stacked row names of the target
  std::vector<double> eps;
  std::vector<std::vector<double>> residual;  // [eps index][row]
  std::vector<double> max_residual;           // per eps
  bool all_zero = false;
  double slope = 0.0;                    // log-log fit over the max residuals
  std::vector<double> row_slope;         // per-row fits (0 for exactly-zero rows)
  std::vector<int> symbolic_order;       // exact leading eps order per row; -1: identically 0
  int symbolic_max_order = -1;           // leading order governing the max residual
  double exact_check_rel_err = 0.0;      // float vs exact evaluation at eps = 1
};

/// Scales the wave with the contraction recipe, evaluates the target
/// system's residuals on the fixed sample lattice in double precision and
/// fits the decay rate; the exact symbolic eps-expansion of the same
/// residuals is computed alongside as the ground truth.
ResidualTable run_probe(const LimitProbe& probe);

}  // namespace galilei::limits
