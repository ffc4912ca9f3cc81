#include "galilei/limits.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "galilei/potentials.hpp"

namespace galilei::limits {

using fieldsys::JetExpr;
using fieldsys::LinearFieldSystem;
using fieldsys::Mono4;
using fieldsys::PotentialScheme;

Wave default_wave() {
  Wave w;
  w.p0 = 5;
  w.p = {Rat(3), Rat(4), Rat(0)};
  // gauge p0 a0 = p.a with a = (1, 1, 2), a4 free
  w.amp = {GQ(1), GQ(1), GQ(2), GQ(ratq(7, 5)), GQ(3)};
  return w;
}

void validate_wave(const Wave& w) {
  Rat null = w.p0 * w.p0 - (w.p[0] * w.p[0] + w.p[1] * w.p[1] + w.p[2] * w.p[2]);
  if (null != 0) throw DispersionViolatedError("wave covector is not null");
  GQ gauge = GQ(w.p0) * w.amp[3] - (GQ(w.p[0]) * w.amp[0] + GQ(w.p[1]) * w.amp[1] +
                                    GQ(w.p[2]) * w.amp[2]);
  if (!gauge.is_zero()) throw DispersionViolatedError("wave violates the Lorenz gauge");
}

namespace {

struct ProbeSetup {
  PotentialScheme scheme;                 // strengths of the target
  LinearFieldSystem target;
  // potential amplitudes as exact eps-series (the contraction scaling
  // applied to the wave polarization)
  std::vector<EpsSeries> pot_amp;
};

ProbeSetup setup(const LimitProbe& probe) {
  validate_wave(probe.wave);
  const auto& a = probe.wave.amp;
  ProbeSetup s;
  if (probe.scheme == "v1" && probe.target == "magnetic") {
    s.scheme = fieldsys::potential_scheme("magnetic_pot");
    // (A', A'0) = (eps A, A0)
    for (int k = 0; k < 3; ++k) s.pot_amp.push_back(EpsSeries::eps(1, a[k]));
    s.pot_amp.push_back(EpsSeries(a[3]));
  } else if (probe.scheme == "v2" && probe.target == "electric") {
    s.scheme = fieldsys::potential_scheme("electric_pot");
    // eps * (A, eps A0): the electric-limit potential pair
    for (int k = 0; k < 3; ++k) s.pot_amp.push_back(EpsSeries::eps(1, a[k]));
    s.pot_amp.push_back(EpsSeries::eps(2, a[3]));
  } else if (probe.scheme == "v3" && probe.target == "extended") {
    s.scheme = fieldsys::potential_scheme("extended_pot");
    // eps^2 * W3 * (A, A0, A4)
    for (int k = 0; k < 3; ++k) s.pot_amp.push_back(EpsSeries::eps(2, a[k]));
    s.pot_amp.push_back(EpsSeries::eps(1, a[3] + a[4]));
    s.pot_amp.push_back(EpsSeries::eps(3, (a[3] - a[4]) * GQ(ratq(1, 2))));
  } else {
    throw TargetMismatchError("unsupported scheme/target pairing " + probe.scheme + " -> " +
                              probe.target);
  }
  s.target = fieldsys::catalogue(probe.target);
  return s;
}

/// Exact residual amplitude of one stacked row: the wave carries the phase
/// p.x - (p0/eps) t, so d_t brings -i p0 / eps and d_k brings i p_k.
EpsSeries exact_row_residual(const ProbeSetup& s, int row, const Wave& w) {
  const auto C = s.target.stacked();
  const auto& strengths = s.scheme.maps.front().strengths;
  EpsSeries res;
  for (const auto& [mono, c] : C)
    for (int f = 0; f < int(strengths.size()); ++f) {
      if (c(row, f).is_zero()) continue;
      for (const auto& [key, coef] : fieldsys::jet_derivative(strengths[f], mono)) {
        GQ deriv(1);
        const Mono4& m = key.second;
        for (int k = 0; k < m[0]; ++k) deriv *= GQ(Rat(0), -w.p0);  // -i p0 per d_t
        for (int i = 0; i < 3; ++i)
          for (int k = 0; k < m[1 + i]; ++k) deriv *= GQ(Rat(0), w.p[i]);  // i p_k
        res += s.pot_amp[key.first].shifted(-m[0], c(row, f) * coef * deriv);
      }
    }
  return res;
}

double mag(const GQ& z) {
  double re = z.re.get_d(), im = z.im.get_d();
  return std::hypot(re, im);
}

std::complex<double> eval_at(const EpsSeries& s, double eps) {
  std::complex<double> r{0, 0};
  for (const auto& [e, c] : s.terms)
    r += std::complex<double>(c.re.get_d(), c.im.get_d()) * std::pow(eps, double(e));
  return r;
}

/// Double-precision residual amplitude of one stacked row, computed from
/// scratch (scaled potentials, complex symbol factors). This is the float
/// pipeline the exact expansion is checked against.
std::complex<double> float_row_residual(const ProbeSetup& s, int row, const Wave& w,
                                        double eps) {
  const auto C = s.target.stacked();
  const auto& strengths = s.scheme.maps.front().strengths;
  const double p0 = mpq_class(w.p0).get_d();
  const std::array<double, 3> pd{mpq_class(w.p[0]).get_d(), mpq_class(w.p[1]).get_d(),
                                 mpq_class(w.p[2]).get_d()};
  std::complex<double> res{0, 0};
  for (const auto& [mono, c] : C)
    for (int f = 0; f < int(strengths.size()); ++f) {
      if (c(row, f).is_zero()) continue;
      const std::complex<double> cf(c(row, f).re.get_d(), c(row, f).im.get_d());
      for (const auto& [key, coef] : fieldsys::jet_derivative(strengths[f], mono)) {
        std::complex<double> deriv{1, 0};
        const Mono4& m = key.second;
        for (int k = 0; k < m[0]; ++k) deriv *= std::complex<double>(0, -p0 / eps);
        for (int i = 0; i < 3; ++i)
          for (int k = 0; k < m[1 + i]; ++k) deriv *= std::complex<double>(0, pd[i]);
        const std::complex<double> cc(coef.re.get_d(), coef.im.get_d());
        res += cf * cc * deriv * eval_at(s.pot_amp[key.first], eps);
      }
    }
  return res;
}

}  // namespace

ResidualTable run_probe(const LimitProbe& probe) {
  if (probe.eps_values.empty()) throw std::invalid_argument("empty eps list");
  for (size_t k = 0; k < probe.eps_values.size(); ++k) {
    double e = probe.eps_values[k];
    if (!(e > 0.0 && e <= 1.0)) throw std::invalid_argument("eps values must lie in (0,1]");
    if (k && !(e < probe.eps_values[k - 1]))
      throw std::invalid_argument("eps values must be strictly decreasing");
  }
  ProbeSetup s = setup(probe);

  ResidualTable table;
  table.scheme = probe.scheme;
  table.target = probe.target;
  table.equations = s.target.row_names();
  const int rows = s.target.total_rows();

  // exact symbolic eps-expansion of every residual row: the ground truth
  std::vector<EpsSeries> exact(rows);
  for (int r = 0; r < rows; ++r) {
    exact[r] = exact_row_residual(s, r, probe.wave);
    table.symbolic_order.push_back(exact[r].is_zero() ? -1 : exact[r].min_exp());
  }
  for (int r = 0; r < rows; ++r)
    if (table.symbolic_order[r] >= 0)
      table.symbolic_max_order = table.symbolic_max_order < 0
                                     ? table.symbolic_order[r]
                                     : std::min(table.symbolic_max_order, table.symbolic_order[r]);

  // fixed deterministic sample lattice in [-1,1]^4
  std::mt19937 lattice_rng(20240613);
  std::vector<std::array<double, 4>> points(32);
  for (auto& pt : points)
    for (double& c : pt) c = -1.0 + 2.0 * (double(lattice_rng()) / 4294967295.0);

  const double p0 = mpq_class(probe.wave.p0).get_d();
  const std::array<double, 3> pd{mpq_class(probe.wave.p[0]).get_d(),
                                 mpq_class(probe.wave.p[1]).get_d(),
                                 mpq_class(probe.wave.p[2]).get_d()};

  for (double eps : probe.eps_values) {
    std::vector<double> row_res(rows, 0.0);
    for (int r = 0; r < rows; ++r) {
      std::complex<double> amp = float_row_residual(s, r, probe.wave, eps);
      double best = 0.0;
      for (const auto& pt : points) {
        double phase = pd[0] * pt[1] + pd[1] * pt[2] + pd[2] * pt[3] - (p0 / eps) * pt[0];
        std::complex<double> value = amp * std::exp(std::complex<double>(0.0, phase));
        best = std::max(best, std::abs(value));
      }
      row_res[r] = best;
    }
    table.residual.push_back(row_res);
    table.eps.push_back(eps);
    table.max_residual.push_back(*std::max_element(row_res.begin(), row_res.end()));
  }

  // residuals must not grow as eps shrinks
  for (size_t k = 1; k < table.max_residual.size(); ++k)
    if (table.max_residual[k] > table.max_residual[k - 1] * (1.0 + 1e-9))
      throw std::logic_error("residuals increased along the eps ladder");

  auto fit = [&](const std::vector<double>& vals) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t k = 0; k < vals.size(); ++k) {
      if (vals[k] <= 0.0) return 0.0;
      double x = std::log(table.eps[k]), y = std::log(vals[k]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++n;
    }
    if (n < 2) return 0.0;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };
  table.all_zero = true;
  for (double m : table.max_residual) table.all_zero = table.all_zero && m == 0.0;
  table.slope = table.all_zero ? 0.0 : fit(table.max_residual);
  for (int r = 0; r < rows; ++r) {
    std::vector<double> col;
    for (const auto& row : table.residual) col.push_back(row[r]);
    table.row_slope.push_back(fit(col));
  }
  if (!table.all_zero && table.slope < 0.9)
    throw std::logic_error("probe converges slower than the required rate");

  // float pipeline against the exact expansion at eps = 1
  double err = 0.0;
  for (int r = 0; r < rows; ++r) {
    GQ val;
    for (const auto& [e, c] : exact[r].terms) val += c;  // eps = 1
    double exact_mag = mag(val);
    double float_mag = std::abs(float_row_residual(s, r, probe.wave, 1.0));
    err = std::max(err, std::abs(exact_mag - float_mag) / std::max(exact_mag, 1.0));
  }
  table.exact_check_rel_err = err;
  return table;
}

}  // namespace galilei::limits
