#include "galilei/reps.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace galilei::reps {

bool is_vector(Comp c) {
  switch (c) {
    case Comp::A:
    case Comp::B:
    case Comp::C:
      return false;
    default:
      return true;
  }
}

std::string comp_name(Comp c) {
  switch (c) {
    case Comp::A: return "A";
    case Comp::B: return "B";
    case Comp::C: return "C";
    case Comp::R: return "R";
    case Comp::U: return "U";
    case Comp::W: return "W";
    case Comp::K: return "K";
    case Comp::N: return "N";
  }
  return "?";
}

std::string RepLabel::str() const {
  std::ostringstream o;
  o << "D(" << m << "," << n << "," << lambda << ")";
  return o.str();
}

RepLabel label_from_string(const std::string& s) {
  std::string t;
  for (char c : s)
    if (isdigit(static_cast<unsigned char>(c))) t += c;
  if (t.size() != 3) throw UnknownLabelError(s);
  RepLabel l{t[0] - '0', t[1] - '0', t[2] - '0'};
  for (const RepLabel& k : enumerate_labels())
    if (k == l) return l;
  throw UnknownLabelError(s);
}

std::vector<RepLabel> enumerate_labels() {
  return {{0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 2, 1},
          {2, 0, 0}, {2, 1, 0}, {2, 1, 1}, {2, 2, 1}, {3, 1, 1}};
}

std::vector<Comp> layout_of(const RepLabel& l) {
  using C = Comp;
  // Slot orders match the column conventions of the contracted bases:
  // column(R,B), column(U,A), column(U,A,C). The D(3,1,1) multiplet is
  // the carrier of the coupled field system, ordered (B,N,W,R); its
  // scalar transforms like B (a boost-invariant scalar would split off).
  if (l == RepLabel{0, 1, 0}) return {C::A};
  if (l == RepLabel{1, 0, 0}) return {C::R};
  if (l == RepLabel{1, 1, 0}) return {C::R, C::B};
  if (l == RepLabel{1, 1, 1}) return {C::U, C::A};
  if (l == RepLabel{1, 2, 1}) return {C::U, C::A, C::C};
  if (l == RepLabel{2, 0, 0}) return {C::W, C::R};
  if (l == RepLabel{2, 1, 0}) return {C::R, C::W, C::B};
  if (l == RepLabel{2, 1, 1}) return {C::A, C::K, C::R};
  if (l == RepLabel{2, 2, 1}) return {C::A, C::B, C::K, C::R};
  if (l == RepLabel{3, 1, 1}) return {C::B, C::N, C::W, C::R};
  throw UnknownLabelError(l.str());
}

int GalileiRep::offset(int comp_index) const {
  int o = 0;
  for (int i = 0; i < comp_index; ++i) o += is_vector(layout[i]) ? 3 : 1;
  return o;
}

std::array<QMatrix, 3> GalileiRep::real_generators() const {
  std::array<QMatrix, 3> g;
  for (int a = 0; a < 3; ++a) g[a] = GQ::i(-1) * eta[a];
  return g;
}

namespace {

int find_comp(const std::vector<Comp>& layout, Comp c) {
  for (int i = 0; i < int(layout.size()); ++i)
    if (layout[i] == c) return i;
  return -1;
}

int offset_of(const std::vector<Comp>& layout, int idx) {
  int o = 0;
  for (int i = 0; i < idx; ++i) o += is_vector(layout[i]) ? 3 : 1;
  return o;
}

int dim_of(const std::vector<Comp>& layout) {
  int d = 0;
  for (Comp c : layout) d += is_vector(c) ? 3 : 1;
  return d;
}

int require_offset(const std::vector<Comp>& layout, Comp c) {
  int idx = find_comp(layout, c);
  if (idx < 0)
    throw std::logic_error("layout lacks component " + comp_name(c));
  return offset_of(layout, idx);
}

}  // namespace

GalileiRep build_rep(const RepLabel& l) {
  GalileiRep rep;
  rep.label = l;
  rep.layout = layout_of(l);
  rep.dim = dim_of(rep.layout);

  std::array<QMatrix, 3> g;
  std::array<QMatrix, 3> rot;
  for (int a = 0; a < 3; ++a) {
    g[a] = QMatrix::zero(rep.dim, rep.dim);
    rot[a] = QMatrix::zero(rep.dim, rep.dim);
  }

  // Linear boost couplings of each quantity; the quadratic pieces of the
  // finite transformation laws come out of the exponential.
  for (int i = 0; i < int(rep.layout.size()); ++i) {
    const int o = offset_of(rep.layout, i);
    switch (rep.layout[i]) {
      case Comp::A:
      case Comp::R:
        break;
      case Comp::B:
        gen_scalar_dot(g, o, require_offset(rep.layout, Comp::R), GQ(1));
        break;
      case Comp::C:
        gen_scalar_dot(g, o, require_offset(rep.layout, Comp::U), GQ(1));
        break;
      case Comp::U:
        gen_vec_from_scalar(g, o, require_offset(rep.layout, Comp::A), GQ(1));
        break;
      case Comp::W:
        gen_vec_cross(g, o, require_offset(rep.layout, Comp::R), GQ(1));
        break;
      case Comp::K:
        gen_vec_cross(g, o, require_offset(rep.layout, Comp::R), GQ(1));
        gen_vec_from_scalar(g, o, require_offset(rep.layout, Comp::A), GQ(1));
        break;
      case Comp::N:
        gen_vec_cross(g, o, require_offset(rep.layout, Comp::W), GQ(1));
        gen_vec_from_scalar(g, o, require_offset(rep.layout, Comp::B), GQ(1));
        break;
    }
    if (is_vector(rep.layout[i])) rot_vector_block(rot, o);
  }

  for (int a = 0; a < 3; ++a) {
    rep.eta[a] = GQ::i(1) * g[a];
    // S_a: one spin-one block per vector, zero on scalars.
    rep.S[a] = QMatrix::zero(rep.dim, rep.dim);
    for (int i = 0; i < int(rep.layout.size()); ++i) {
      if (!is_vector(rep.layout[i])) continue;
      const int o = offset_of(rep.layout, i);
      QMatrix s = spin_one(a);
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) rep.S[a](o + b, o + c) = s(b, c);
    }
  }
  return rep;
}

GalileiRep direct_sum(const GalileiRep& a, const GalileiRep& b) {
  GalileiRep r;
  r.layout = a.layout;
  r.layout.insert(r.layout.end(), b.layout.begin(), b.layout.end());
  r.dim = a.dim + b.dim;
  for (int k = 0; k < 3; ++k) {
    r.S[k] = galilei::direct_sum(a.S[k], b.S[k]);
    r.eta[k] = galilei::direct_sum(a.eta[k], b.eta[k]);
  }
  return r;
}

StructureReport check_structure(const GalileiRep& rep) {
  StructureReport rpt;
  auto add = [&](const std::string& name, bool ok) {
    rpt.items.push_back({name, ok});
    rpt.all_pass = rpt.all_pass && ok;
  };
  auto eps_sum = [&](const std::array<QMatrix, 3>& basis, int a, int b) {
    QMatrix acc = QMatrix::zero(rep.dim, rep.dim);
    for (int c = 0; c < 3; ++c)
      if (int e = eps3(a, b, c)) acc += GQ::i(e) * basis[c];
    return acc;
  };
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      add("[S" + std::to_string(a + 1) + ",S" + std::to_string(b + 1) + "]",
          commutator(rep.S[a], rep.S[b]) == eps_sum(rep.S, a, b));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      add("[eta" + std::to_string(a + 1) + ",S" + std::to_string(b + 1) + "]",
          commutator(rep.eta[a], rep.S[b]) == eps_sum(rep.eta, a, b));
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      add("[eta" + std::to_string(a + 1) + ",eta" + std::to_string(b + 1) + "]",
          commutator(rep.eta[a], rep.eta[b]).is_zero());
  return rpt;
}

VMatrix finite_boost(const GalileiRep& rep) {
  auto g = rep.real_generators();
  VMatrix m(rep.dim, rep.dim);
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < rep.dim; ++i)
      for (int j = 0; j < rep.dim; ++j)
        if (!g[a](i, j).is_zero()) m(i, j) += VPoly::v(a, g[a](i, j));
  return exp_nilpotent(m);
}

// ---- commutant ----------------------------------------------------------

namespace {

/// Parameter basis of the rotation commutant: one matrix unit per ordered
/// pair of same-kind components (identity on vector blocks). Complete
/// because maps intertwining two spin-one blocks are scalar and there are
/// none between a vector and a scalar.
std::vector<QMatrix> rotation_commutant_basis(const GalileiRep& rep) {
  std::vector<QMatrix> basis;
  const int nc = int(rep.layout.size());
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j) {
      if (is_vector(rep.layout[i]) != is_vector(rep.layout[j])) continue;
      QMatrix x = QMatrix::zero(rep.dim, rep.dim);
      const int oi = rep.offset(i), oj = rep.offset(j);
      if (is_vector(rep.layout[i]))
        for (int k = 0; k < 3; ++k) x(oi + k, oj + k) = GQ(1);
      else
        x(oi, oj) = GQ(1);
      basis.push_back(std::move(x));
    }
  return basis;
}

QMatrix flatten(const QMatrix& m) {
  QMatrix v(m.rows() * m.cols(), 1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v(i * m.cols() + j, 0) = m(i, j);
  return v;
}

}  // namespace

std::vector<QMatrix> commutant(const GalileiRep& rep) {
  std::vector<QMatrix> rot_basis = rotation_commutant_basis(rep);
  const int p = int(rot_basis.size());
  const int d2 = rep.dim * rep.dim;
  // Columns: parameters; rows: entries of [X, eta_a] for a = 1..3.
  QMatrix con(3 * d2, p);
  for (int k = 0; k < p; ++k)
    for (int a = 0; a < 3; ++a) {
      QMatrix c = commutator(rot_basis[k], rep.eta[a]);
      for (int i = 0; i < rep.dim; ++i)
        for (int j = 0; j < rep.dim; ++j) con(a * d2 + i * rep.dim + j, k) = c(i, j);
    }
  std::vector<QMatrix> params = nullspace(con);
  std::vector<QMatrix> result;
  for (const QMatrix& t : params) {
    QMatrix x = QMatrix::zero(rep.dim, rep.dim);
    for (int k = 0; k < p; ++k)
      if (!t(k, 0).is_zero()) x += t(k, 0) * rot_basis[k];
    result.push_back(std::move(x));
  }
  return result;
}

// ---- idempotent search ---------------------------------------------------

namespace {

using Poly = std::vector<GQ>;  // coefficients, low degree first, normalized

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

// a = q*b + r
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  Poly q;
  if (b.empty()) throw std::domain_error("poly division by zero");
  while (a.size() >= b.size()) {
    GQ c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    if (q.size() < shift + 1) q.resize(shift + 1);
    q[shift] += c;
    Poly t(shift + b.size());
    for (size_t i = 0; i < b.size(); ++i) t[shift + i] = b[i] * c;
    a = poly_sub(std::move(a), t);
  }
  poly_trim(q);
  return {q, a};
}

GQ poly_eval(const Poly& p, const GQ& x) {
  GQ r;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// Extended Euclid: returns (g, u) with u*a = g mod b, g monic gcd-ish.
std::pair<Poly, Poly> poly_half_gcdext(Poly a, Poly b) {
  Poly u0{GQ(1)}, u1{};
  while (!b.empty()) {
    auto [q, r] = poly_divmod(a, b);
    Poly u2 = poly_sub(u0, poly_mul(q, u1));
    a = b;
    b = r;
    u0 = u1;
    u1 = u2;
  }
  if (!a.empty()) {
    GQ lead = a.back();
    for (auto& c : a) c = c / lead;
    for (auto& c : u0) c = c / lead;
  }
  return {a, u0};
}

QMatrix eval_poly_at_matrix(const Poly& p, const QMatrix& z) {
  const int n = z.rows();
  QMatrix r = QMatrix::zero(n, n);
  QMatrix power = QMatrix::identity(n);
  for (size_t k = 0; k < p.size(); ++k) {
    if (!p[k].is_zero()) r += p[k] * power;
    if (k + 1 < p.size()) power = power * z;
  }
  return r;
}

/// Minimal polynomial of a matrix via first linear dependence of powers.
Poly minimal_polynomial(const QMatrix& z) {
  const int n = z.rows();
  std::vector<QMatrix> powers;
  QMatrix p = QMatrix::identity(n);
  for (int deg = 0; deg <= n; ++deg) {
    powers.push_back(flatten(p));
    QMatrix stack(n * n, int(powers.size()));
    for (int c = 0; c < int(powers.size()); ++c)
      for (int r = 0; r < n * n; ++r) stack(r, c) = powers[c](r, 0);
    std::vector<QMatrix> ker = nullspace(stack);
    if (!ker.empty()) {
      // Dependence involving the highest power exists exactly when we
      // just crossed the minimal degree.
      const QMatrix& v = ker.front();
      if (!v(int(powers.size()) - 1, 0).is_zero()) {
        Poly m(powers.size());
        GQ lead = v(int(powers.size()) - 1, 0);
        for (int k = 0; k < int(powers.size()); ++k) m[k] = v(k, 0) / lead;
        poly_trim(m);
        return m;
      }
    }
    p = p * z;
  }
  throw std::logic_error("minimal polynomial not found");
}

/// Tries to split z's minimal polynomial at a rational-spectrum root and
/// build the corresponding exact spectral idempotent.
std::optional<QMatrix> idempotent_from(const QMatrix& z) {
  Poly m = minimal_polynomial(z);
  if (m.size() < 3) return std::nullopt;  // degree < 2: no split possible
  static const std::vector<GQ> candidates = [] {
    std::vector<GQ> c;
    const long nums[] = {0, 1, -1, 2, -2, 3, -3, 4, -4};
    const long dens[] = {1, 2, 3, 4};
    for (long d : dens)
      for (long n : nums) c.push_back(GQ(ratq(n, d)));
    for (long n : {1L, -1L, 2L, -2L}) c.push_back(GQ::i(n));
    return c;
  }();
  for (const GQ& c : candidates) {
    if (!poly_eval(m, c).is_zero()) continue;
    // factor out (t - c)^a
    Poly lin{-c, GQ(1)};
    Poly f1{GQ(1)}, rest = m;
    while (true) {
      auto [q, r] = poly_divmod(rest, lin);
      if (!r.empty()) break;
      f1 = poly_mul(f1, lin);
      rest = q;
    }
    if (rest.size() < 2) continue;  // z has a single eigenvalue: no split
    // CRT idempotent: e = rest * (rest^{-1} mod f1); e = 1 mod f1, 0 mod rest.
    auto [g, u] = poly_half_gcdext(rest, f1);
    if (g.size() != 1) continue;  // factors not coprime (cannot happen)
    Poly e = poly_mul(rest, u);
    e = poly_divmod(e, m).second;
    QMatrix em = eval_poly_at_matrix(e, z);
    if (em.is_zero() || em == QMatrix::identity(z.rows())) continue;
    return em;
  }
  return std::nullopt;
}

}  // namespace

IndecomposabilityReport is_indecomposable(const GalileiRep& rep) {
  IndecomposabilityReport rpt;
  std::vector<QMatrix> basis = commutant(rep);
  const int k = int(basis.size());
  rpt.commutant_dim = k;

  // Radical of the commutant via the trace form (char 0, faithful action).
  QMatrix tform(k, k);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) {
      QMatrix prod = basis[p] * basis[q];
      GQ tr;
      for (int i = 0; i < rep.dim; ++i) tr += prod(i, i);
      tform(p, q) = tr;
    }
  const int rad_dim = k - rank(tform);
  rpt.local_quotient_dim = k - rad_dim;
  if (rpt.local_quotient_dim == 1) {
    // Local endomorphism algebra: every element is scalar plus nilpotent,
    // so the only idempotents are 0 and 1.
    rpt.indecomposable = true;
    return rpt;
  }

  std::vector<QMatrix> candidates = basis;
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q) candidates.push_back(basis[p] + basis[q]);
  std::mt19937_64 rng(20240613);
  for (int trial = 0; trial < 24; ++trial) {
    QMatrix z = QMatrix::zero(rep.dim, rep.dim);
    for (int p = 0; p < k; ++p) z += GQ(long(rng() % 7) - 3) * basis[p];
    candidates.push_back(std::move(z));
  }
  for (const QMatrix& z : candidates) {
    auto e = idempotent_from(z);
    if (!e) continue;
    rpt.indecomposable = false;
    rpt.witness = *e;
    return rpt;
  }
  throw std::logic_error("indecomposability undecided for " +
                         (rep.label ? rep.label->str() : std::string("ad-hoc rep")));
}

std::vector<std::vector<int>> invariant_component_subsets(const GalileiRep& rep) {
  const int nc = int(rep.layout.size());
  auto g = rep.real_generators();
  std::vector<std::vector<int>> result;
  for (unsigned mask = 1; mask < (1u << nc); ++mask) {
    bool ok = true;
    // Vanishing of the masked components is preserved exactly when their
    // rows of every generator are supported on masked columns.
    for (int a = 0; a < 3 && ok; ++a) {
      for (int i = 0; i < nc && ok; ++i) {
        if (!(mask >> i & 1)) continue;
        const int oi = rep.offset(i), di = is_vector(rep.layout[i]) ? 3 : 1;
        for (int j = 0; j < nc && ok; ++j) {
          if (mask >> j & 1) continue;
          const int oj = rep.offset(j), dj = is_vector(rep.layout[j]) ? 3 : 1;
          for (int r = 0; r < di && ok; ++r)
            for (int c = 0; c < dj && ok; ++c)
              if (!g[a](oi + r, oj + c).is_zero() || !rep.S[a](oi + r, oj + c).is_zero())
                ok = false;
        }
      }
    }
    if (!ok) continue;
    std::vector<int> subset;
    for (int i = 0; i < nc; ++i)
      if (mask >> i & 1) subset.push_back(i);
    result.push_back(std::move(subset));
  }
  return result;
}

std::string convention_string() {
  return "boost: Psi' = exp(-i eta.v) Psi; spin (s_a)_{bc} = -i*eps_{abc}; "
         "k_a = i e_a^T, dagger = conjugate transpose; chain rule d_t -> d_t + v.grad";
}

}  // namespace galilei::reps
