#include "galilei/fieldsys.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace galilei::fieldsys {

int Layout::dim() const {
  int d = 0;
  for (const auto& c : comps) d += c.vec ? 3 : 1;
  return d;
}

int Layout::offset(int idx) const {
  int o = 0;
  for (int i = 0; i < idx; ++i) o += comps[i].vec ? 3 : 1;
  return o;
}

int Layout::index_of(const std::string& name) const {
  for (int i = 0; i < int(comps.size()); ++i)
    if (comps[i].name == name) return i;
  return -1;
}

std::string Layout::slot_name(int slot) const {
  static const char axis[3] = {'x', 'y', 'z'};
  for (int i = 0; i < int(comps.size()); ++i) {
    int o = offset(i);
    if (!comps[i].vec && slot == o) return comps[i].name;
    if (comps[i].vec && slot >= o && slot < o + 3)
      return comps[i].name + "." + axis[slot - o];
  }
  throw std::out_of_range("slot_name: bad slot");
}

int Layout::slot_of(const std::string& sn) const {
  for (int s = 0; s < dim(); ++s)
    if (slot_name(s) == sn) return s;
  return -1;
}

Multiplet Multiplet::trivial(Layout l) {
  Multiplet m;
  m.layout = std::move(l);
  const int d = m.layout.dim();
  for (int a = 0; a < 3; ++a) m.boost_gen[a] = QMatrix::zero(d, d);
  return m;
}

std::array<QMatrix, 3> Multiplet::rotation_gen() const {
  const int d = layout.dim();
  std::array<QMatrix, 3> r{QMatrix::zero(d, d), QMatrix::zero(d, d), QMatrix::zero(d, d)};
  for (int i = 0; i < int(layout.comps.size()); ++i)
    if (layout.comps[i].vec) rot_vector_block(r, layout.offset(i));
  return r;
}

VMatrix Multiplet::finite_boost() const {
  if (kind != BoostKind::Galilean)
    throw std::logic_error("finite_boost: relativistic multiplet");
  const int d = layout.dim();
  VMatrix m(d, d);
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!boost_gen[a](i, j).is_zero()) m(i, j) += VPoly::v(a, boost_gen[a](i, j));
  return exp_nilpotent(m);
}

int LinearFieldSystem::order() const {
  int o = 0;
  for (const auto& eq : eqs)
    for (const auto& [m, c] : eq.coef) o = std::max(o, mono_degree(m));
  return o;
}

int LinearFieldSystem::total_rows() const {
  int r = 0;
  for (const auto& eq : eqs) r += eq.rows;
  return r;
}

std::map<Mono4, QMatrix> LinearFieldSystem::stacked() const {
  std::map<Mono4, QMatrix> out;
  const int rows = total_rows(), nf = field.layout.dim();
  std::set<Mono4> monos;
  for (const auto& eq : eqs)
    for (const auto& [m, c] : eq.coef) monos.insert(m);
  for (const Mono4& m : monos) out[m] = QMatrix::zero(rows, nf);
  int r0 = 0;
  for (const auto& eq : eqs) {
    for (const auto& [m, c] : eq.coef)
      for (int r = 0; r < eq.rows; ++r)
        for (int f = 0; f < nf; ++f) out[m](r0 + r, f) = c(r, f);
    r0 += eq.rows;
  }
  return out;
}

QMatrix LinearFieldSystem::stacked_src() const {
  const int rows = total_rows(), nj = current.layout.dim();
  QMatrix out(rows, nj);
  int r0 = 0;
  for (const auto& eq : eqs) {
    for (int r = 0; r < eq.rows; ++r)
      for (int j = 0; j < nj; ++j) out(r0 + r, j) = eq.src(r, j);
    r0 += eq.rows;
  }
  return out;
}

std::vector<std::string> LinearFieldSystem::row_names() const {
  static const char axis[3] = {'x', 'y', 'z'};
  std::vector<std::string> names;
  for (const auto& eq : eqs) {
    if (eq.rows == 1)
      names.push_back(eq.name);
    else
      for (int r = 0; r < eq.rows; ++r) names.push_back(eq.name + "." + axis[r]);
  }
  return names;
}

int LinearFieldSystem::eq_index(const std::string& name) const {
  for (int i = 0; i < int(eqs.size()); ++i)
    if (eqs[i].name == name) return i;
  return -1;
}

// ---- boost covariance -------------------------------------------------------

std::vector<std::pair<Mono4, VPoly>> boost_shift(const Mono4& mono) {
  // (d_t + v.grad)^nt d_x^nx d_y^ny d_z^nz expanded multinomially
  std::vector<std::pair<Mono4, VPoly>> out;
  const int nt = mono[0];
  auto fact = [](int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (int kx = 0; kx <= nt; ++kx)
    for (int ky = 0; ky + kx <= nt; ++ky)
      for (int kz = 0; kz + ky + kx <= nt; ++kz) {
        const int kt = nt - kx - ky - kz;
        const long coef = fact(nt) / (fact(kt) * fact(kx) * fact(ky) * fact(kz));
        Mono4 m{kt, mono[1] + kx, mono[2] + ky, mono[3] + kz};
        VPoly w{GQ(coef)};
        for (int i = 0; i < kx; ++i) w = w * VPoly::v(0);
        for (int i = 0; i < ky; ++i) w = w * VPoly::v(1);
        for (int i = 0; i < kz; ++i) w = w * VPoly::v(2);
        out.emplace_back(m, std::move(w));
      }
  return out;
}

namespace {

std::string mono_str(const Mono4& m) {
  static const char* names[4] = {"t", "x", "y", "z"};
  std::string s;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < m[i]; ++k) s += std::string("d") + names[i];
  return s.empty() ? "1" : s;
}

/// v-monomial coefficient matrices of a VPoly matrix.
std::map<VMono, QMatrix> vcoeffs(const VMatrix& m) {
  std::map<VMono, QMatrix> out;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      for (const auto& [mono, c] : m(i, j).terms) {
        auto it = out.find(mono);
        if (it == out.end()) it = out.emplace(mono, QMatrix::zero(m.rows(), m.cols())).first;
        it->second(i, j) = c;
      }
  return out;
}

/// The part of the first infeasible boosted row orthogonal (standard inner
/// product, exact) to the equation span, rendered as a differential
/// polynomial: the certified covariance failure.
std::string residual_description(const LinearFieldSystem& sys, const QMatrix& K,
                                 const QMatrix& R, const VMono& al,
                                 const std::vector<Mono4>& mu_order) {
  const auto names = sys.row_names();
  for (int r = 0; r < R.rows(); ++r) {
    QMatrix row(1, R.cols());
    for (int c = 0; c < R.cols(); ++c) row(0, c) = R(r, c);
    if (solve_left(K, row)) continue;
    // exact Hermitian least squares: the component of the boosted row
    // orthogonal to the equation span
    QMatrix kh = K.transpose().map<GQ>([](const GQ& z) { return z.conj(); });
    QMatrix gram = K * kh;       // n x n, positive definite for full rank
    QMatrix proj = row * kh;     // 1 x n
    QMatrix resid = row;
    if (auto c = solve_left(gram, proj)) resid = row - (*c) * K;
    std::ostringstream out;
    out << "row " << names[r] << " boosted at v-order (" << al[0] << "," << al[1] << ","
        << al[2] << ") leaves the equation span; residual:";
    const int nf = sys.field.layout.dim();
    bool first = true;
    for (size_t b = 0; b < mu_order.size(); ++b)
      for (int f = 0; f < nf; ++f) {
        const GQ& c = resid(0, int(b) * nf + f);
        if (c.is_zero()) continue;
        out << (first ? " " : " + ") << "(" << to_string(c) << ")*" << mono_str(mu_order[b])
            << " " << sys.field.layout.slot_name(f);
        first = false;
      }
    for (int j = 0; j < sys.current.layout.dim(); ++j) {
      const GQ& c = resid(0, int(mu_order.size()) * nf + j);
      if (c.is_zero()) continue;
      out << (first ? " " : " + ") << "(" << to_string(c) << ") src "
          << sys.current.layout.slot_name(j);
      first = false;
    }
    return out.str();
  }
  return "infeasible at v-order (" + std::to_string(al[0]) + "," + std::to_string(al[1]) + "," +
         std::to_string(al[2]) + ")";
}

}  // namespace

CovarianceReport boost_covariance(const LinearFieldSystem& sys) {
  CovarianceReport rpt;
  rpt.kind = sys.field.kind;
  const int rows = sys.total_rows();
  const auto C = sys.stacked();
  const QMatrix src = sys.stacked_src();
  const int nj = sys.current.layout.dim();

  if (sys.field.kind == BoostKind::Lorentz) {
    // Infinitesimal Lorentz boost along axis a: the symbols mix as
    // delta d_t = -theta d_a, delta d_a = -theta d_t, fields shift by
    // their stored boost generators.
    for (int a = 0; a < 3; ++a) {
      QMatrix K(rows, 0), R(rows, 0);
      auto append = [&](const QMatrix& k, const QMatrix& r) {
        K = K.cols() ? hstack(K, k) : k;
        R = R.cols() ? hstack(R, r) : r;
      };
      for (const auto& [mu, c] : C) {
        QMatrix rhs = c * sys.field.boost_gen[a];
        if (mu[1 + a] > 0) {  // nu = mu + e_t - e_a: one d_t became d_a
          Mono4 nu = mu;
          nu[0] += 1;
          nu[1 + a] -= 1;
          auto it = C.find(nu);
          if (it != C.end()) rhs += GQ(-nu[0]) * it->second;
        }
        if (mu[0] > 0) {  // nu = mu + e_a - e_t: one d_a became d_t
          Mono4 nu = mu;
          nu[1 + a] += 1;
          nu[0] -= 1;
          auto it = C.find(nu);
          if (it != C.end()) rhs += GQ(-nu[1 + a]) * it->second;
        }
        append(c, rhs);
      }
      if (nj) append(src, src * sys.current.boost_gen[a]);
      auto m = solve_left(K, R);
      if (!m) {
        rpt.covariant = false;
        rpt.failing_identity = "no infinitesimal boost generator, axis " + std::to_string(a + 1);
        return rpt;
      }
      rpt.M_gen[a] = *m;
      rpt.unique = rpt.unique && (rank(K) == rows);
    }
    rpt.covariant = true;
    return rpt;
  }

  // Galilean finite boost: per-symbol left-hand sides
  //   T[mu](v) = sum_nu weight_{nu->mu}(v) * C[nu] * Lambda_F(v)
  const VMatrix lam = sys.field.finite_boost();
  std::map<Mono4, VMatrix> T;
  for (const auto& [nu, c] : C) {
    VMatrix base = to_vmatrix(c) * lam;
    for (const auto& [mu, w] : boost_shift(nu)) {
      auto it = T.find(mu);
      if (it == T.end()) it = T.emplace(mu, VMatrix(rows, sys.field.layout.dim())).first;
      it->second += base.map<VPoly>([&](const VPoly& p) { return w * p; });
    }
  }

  std::vector<Mono4> mu_order;
  for (const auto& [mu, tm] : T) mu_order.push_back(mu);

  // stacked right-multiplier K = [C[mu_1] | ... | C[mu_k] | src]
  QMatrix K(rows, 0);
  for (const Mono4& mu : mu_order) {
    auto it = C.find(mu);
    QMatrix block = (it != C.end()) ? it->second : QMatrix::zero(rows, sys.field.layout.dim());
    K = K.cols() ? hstack(K, block) : block;
  }
  VMatrix lam_j;
  if (nj) {
    lam_j = sys.current.finite_boost();
    K = K.cols() ? hstack(K, src) : src;
  }

  std::set<VMono> alphas{VMono{0, 0, 0}};
  std::map<Mono4, std::map<VMono, QMatrix>> Tc;
  for (const auto& [mu, tm] : T) {
    Tc[mu] = vcoeffs(tm);
    for (const auto& [al, q] : Tc[mu]) alphas.insert(al);
  }
  std::map<VMono, QMatrix> srcc;
  if (nj) {
    srcc = vcoeffs(to_vmatrix(src) * lam_j);
    for (const auto& [al, q] : srcc) alphas.insert(al);
  }

  VMatrix M(rows, rows);
  for (const VMono& al : alphas) {
    QMatrix R(rows, 0);
    for (const Mono4& mu : mu_order) {
      auto& tc = Tc[mu];
      auto it = tc.find(al);
      QMatrix block = (it != tc.end()) ? it->second : QMatrix::zero(rows, sys.field.layout.dim());
      R = R.cols() ? hstack(R, block) : block;
    }
    if (nj) {
      auto it = srcc.find(al);
      QMatrix block = (it != srcc.end()) ? it->second : QMatrix::zero(rows, nj);
      R = R.cols() ? hstack(R, block) : block;
    }
    auto ma = solve_left(K, R);
    if (!ma) {
      rpt.covariant = false;
      rpt.failing_identity = residual_description(sys, K, R, al, mu_order);
      return rpt;
    }
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < rows; ++j)
        if (!(*ma)(i, j).is_zero()) M(i, j).set(al, M(i, j).coeff(al) + (*ma)(i, j));
  }

  // normalize M(0) = I; solutions differ only inside the left kernel of K
  QMatrix m0 = eval(M, {GQ(), GQ(), GQ()});
  if (m0 != QMatrix::identity(rows)) {
    QMatrix fix = QMatrix::identity(rows) - m0;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < rows; ++j)
        if (!fix(i, j).is_zero()) M(i, j) += VPoly(fix(i, j));
  }

  // full symbolic re-check of both defining identities
  for (const Mono4& mu : mu_order) {
    auto it = C.find(mu);
    VMatrix rhs =
        M * to_vmatrix(it != C.end() ? it->second : QMatrix::zero(rows, sys.field.layout.dim()));
    if (!(T[mu] == rhs)) {
      rpt.covariant = false;
      rpt.failing_identity = "assembled M fails at symbol " + mono_str(mu);
      return rpt;
    }
  }
  if (nj && !(M * to_vmatrix(src) == to_vmatrix(src) * lam_j)) {
    rpt.covariant = false;
    rpt.failing_identity = "assembled M fails the source condition";
    return rpt;
  }

  rpt.covariant = true;
  rpt.unique = rank(K) == rows;
  rpt.M = std::move(M);
  return rpt;
}

RotationReport rotation_covariance(const LinearFieldSystem& sys) {
  RotationReport rpt;
  const int rows = sys.total_rows();
  const auto C = sys.stacked();
  const QMatrix src = sys.stacked_src();
  const int nj = sys.current.layout.dim();
  const auto field_rot = sys.field.rotation_gen();
  const auto cur_rot = sys.current.rotation_gen();

  for (int a = 0; a < 3; ++a) {
    QMatrix K(rows, 0), R(rows, 0);
    auto append = [&](const QMatrix& k, const QMatrix& r) {
      K = K.cols() ? hstack(K, k) : k;
      R = R.cols() ? hstack(R, r) : r;
    };
    for (const auto& [mu, c] : C) {
      QMatrix rhs = c * field_rot[a];
      // delta d_i = theta (e_a x d)_i; product rule over the monomial:
      // nu with one d_i traded for d_j lands on mu when nu = mu + e_i - e_j
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          int e = eps3(j, a, i);  // coefficient of d_i in delta d_j
          if (!e || mu[1 + i] == 0) continue;
          Mono4 nu = mu;
          nu[1 + j] += 1;
          nu[1 + i] -= 1;
          auto it = C.find(nu);
          if (it != C.end()) rhs += GQ(e * nu[1 + j]) * it->second;
        }
      append(c, rhs);
    }
    if (nj) append(src, src * cur_rot[a]);
    auto m = solve_left(K, R);
    if (!m) {
      rpt.covariant = false;
      rpt.failing_identity = "no rotation generator, axis " + std::to_string(a + 1);
      return rpt;
    }
    rpt.M_gen[a] = *m;
  }
  rpt.covariant = true;
  return rpt;
}

QMatrix symbol_matrix(const LinearFieldSystem& sys, const GQ& pt, const std::array<GQ, 3>& p) {
  const int rows = sys.total_rows(), nf = sys.field.layout.dim();
  QMatrix sym(rows, nf);
  for (const auto& [mono, c] : sys.stacked()) {
    GQ factor(1);
    for (int k = 0; k < mono[0]; ++k) factor *= pt;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < mono[1 + i]; ++k) factor *= p[i];
    sym += factor * c;
  }
  return sym;
}

std::vector<QMatrix> plane_wave(const LinearFieldSystem& sys, const GQ& pt,
                                const std::array<GQ, 3>& p) {
  return nullspace(symbol_matrix(sys, pt, p));
}

std::vector<std::string> current_constraint_diagnostic(const LinearFieldSystem& sys) {
  // Combinations sum_{r,nu} c_{r,nu} d^nu (row_r), |nu| <= 1, whose field
  // parts cancel identically; what survives constrains the currents.
  const int rows = sys.total_rows();
  const auto C = sys.stacked();
  const QMatrix src = sys.stacked_src();
  const int nf = sys.field.layout.dim();
  const int nj = sys.current.layout.dim();
  if (!nj) return {};

  const std::vector<Mono4> derivs{
      {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const int unknowns = rows * int(derivs.size());

  std::map<Mono4, int> jet_index;
  for (const auto& [mono, c] : C)
    for (const Mono4& d : derivs) {
      Mono4 m{mono[0] + d[0], mono[1] + d[1], mono[2] + d[2], mono[3] + d[3]};
      jet_index.emplace(m, 0);
    }
  int idx = 0;
  for (auto& [m, i] : jet_index) i = idx++;
  QMatrix sysmat(idx * nf, unknowns);
  for (int r = 0; r < rows; ++r)
    for (int dk = 0; dk < int(derivs.size()); ++dk) {
      const int col = r * int(derivs.size()) + dk;
      for (const auto& [mono, c] : C) {
        Mono4 m{mono[0] + derivs[dk][0], mono[1] + derivs[dk][1], mono[2] + derivs[dk][2],
                mono[3] + derivs[dk][3]};
        const int mi = jet_index[m];
        for (int f = 0; f < nf; ++f) sysmat(mi * nf + f, col) += c(r, f);
      }
    }

  std::vector<std::string> out;
  for (const QMatrix& comb : nullspace(sysmat)) {
    std::map<std::pair<Mono4, int>, GQ> cur;
    for (int r = 0; r < rows; ++r)
      for (int dk = 0; dk < int(derivs.size()); ++dk) {
        const GQ& c = comb(r * int(derivs.size()) + dk, 0);
        if (c.is_zero()) continue;
        for (int j = 0; j < nj; ++j)
          if (!src(r, j).is_zero()) cur[{derivs[dk], j}] += c * src(r, j) * sys.e;
      }
    std::ostringstream line;
    bool first = true, nonzero = false;
    for (const auto& [key, c] : cur) {
      if (c.is_zero()) continue;
      nonzero = true;
      if (!first) line << " + ";
      first = false;
      line << "(" << to_string(c) << ")";
      if (mono_degree(key.first)) line << "*" << mono_str(key.first);
      line << " " << sys.current.layout.slot_name(key.second);
    }
    if (nonzero) out.push_back(line.str() + " = 0");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace galilei::fieldsys
