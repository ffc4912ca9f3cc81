#include "galilei/contraction.hpp"

#include <algorithm>
#include <numeric>

namespace galilei::contraction {

LorentzRep four_vector_rep() {
  LorentzRep rep;
  rep.name = "four-vector";
  rep.dim = 4;
  for (int a = 0; a < 3; ++a) {
    rep.S_rot[a] = QMatrix::zero(4, 4);
    QMatrix s = spin_one(a);
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) rep.S_rot[a](b, c) = s(b, c);
    rep.S_boost[a] = QMatrix::zero(4, 4);
    rep.S_boost[a](a, 3) = GQ::i(1);  // -k_a^dagger
    rep.S_boost[a](3, a) = GQ::i(1);  // k_a
  }
  return rep;
}

LorentzRep scalar_rep() {
  LorentzRep rep;
  rep.name = "scalar";
  rep.dim = 1;
  for (int a = 0; a < 3; ++a) {
    rep.S_rot[a] = QMatrix::zero(1, 1);
    rep.S_boost[a] = QMatrix::zero(1, 1);
  }
  return rep;
}

LorentzRep direct_sum(const std::vector<LorentzRep>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: empty list");
  LorentzRep rep = parts.front();
  for (size_t k = 1; k < parts.size(); ++k) {
    rep.name += "+" + parts[k].name;
    rep.dim += parts[k].dim;
    for (int a = 0; a < 3; ++a) {
      rep.S_rot[a] = galilei::direct_sum(rep.S_rot[a], parts[k].S_rot[a]);
      rep.S_boost[a] = galilei::direct_sum(rep.S_boost[a], parts[k].S_boost[a]);
    }
  }
  return rep;
}

bool check_lorentz_structure(const LorentzRep& rep, std::string* first_failure) {
  auto eps_sum = [&](const std::array<QMatrix, 3>& basis, int a, int b, int sign) {
    QMatrix acc = QMatrix::zero(rep.dim, rep.dim);
    for (int c = 0; c < 3; ++c)
      if (int e = eps3(a, b, c)) acc += GQ::i(sign * e) * basis[c];
    return acc;
  };
  auto fail = [&](const std::string& what) {
    if (first_failure) *first_failure = what;
    return false;
  };
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a < b && commutator(rep.S_rot[a], rep.S_rot[b]) != eps_sum(rep.S_rot, a, b, 1))
        return fail("[S_a,S_b]");
      if (commutator(rep.S_rot[a], rep.S_boost[b]) != eps_sum(rep.S_boost, a, b, 1))
        return fail("[S_a,S_0b]");
      if (a < b && commutator(rep.S_boost[a], rep.S_boost[b]) != eps_sum(rep.S_rot, a, b, -1))
        return fail("[S_0a,S_0b]");
    }
  return true;
}

namespace {

EpsMatrix lift(const QMatrix& m) {
  return m.map<EpsSeries>([](const GQ& c) { return EpsSeries(c); });
}

ContractionScheme make_scheme(std::string name, EpsMatrix v, EpsMatrix vinv) {
  if (!(v * vinv == lift(QMatrix::identity(v.rows()))))
    throw std::logic_error("contraction scheme: V * V_inv != I");
  return {std::move(name), std::move(v), std::move(vinv)};
}

}  // namespace

ContractionScheme scheme_v1() {
  EpsMatrix v(4, 4), vinv(4, 4);
  for (int k = 0; k < 3; ++k) {
    v(k, k) = EpsSeries::eps(1);
    vinv(k, k) = EpsSeries::eps(-1);
  }
  v(3, 3) = EpsSeries(1);
  vinv(3, 3) = EpsSeries(1);
  return make_scheme("v1", std::move(v), std::move(vinv));
}

ContractionScheme scheme_v2() {
  EpsMatrix v(4, 4), vinv(4, 4);
  for (int k = 0; k < 3; ++k) {
    v(k, k) = EpsSeries(1);
    vinv(k, k) = EpsSeries(1);
  }
  v(3, 3) = EpsSeries::eps(1);
  vinv(3, 3) = EpsSeries::eps(-1);
  return make_scheme("v2", std::move(v), std::move(vinv));
}

ContractionScheme scheme_v3() {
  EpsMatrix v(5, 5), vinv(5, 5);
  for (int k = 0; k < 3; ++k) {
    v(k, k) = EpsSeries(1);
    vinv(k, k) = EpsSeries(1);
  }
  const GQ half(ratq(1, 2));
  v(3, 3) = EpsSeries::eps(1, half);
  v(3, 4) = EpsSeries::eps(1, half);
  v(4, 3) = EpsSeries::eps(-1, GQ(-1));
  v(4, 4) = EpsSeries::eps(-1);
  vinv(3, 3) = EpsSeries::eps(-1);
  vinv(3, 4) = EpsSeries::eps(1, -half);
  vinv(4, 3) = EpsSeries::eps(-1);
  vinv(4, 4) = EpsSeries::eps(1, half);
  return make_scheme("v3", std::move(v), std::move(vinv));
}

ContractionScheme scheme_by_name(const std::string& name) {
  if (name == "v1") return scheme_v1();
  if (name == "v2") return scheme_v2();
  if (name == "v3") return scheme_v3();
  throw std::invalid_argument("unknown contraction scheme: " + name);
}

ContractionScheme scheme_from_matrix(const EpsMatrix& v, const std::string& name) {
  return make_scheme(name, v, exact_inverse(v));
}

ContractResult contract(const LorentzRep& rep, const ContractionScheme& scheme) {
  if (scheme.V.rows() != rep.dim)
    throw std::invalid_argument("contraction scheme dimension mismatch");
  ContractResult res;
  res.trivial_boosts = true;
  for (int a = 0; a < 3; ++a) {
    EpsMatrix rot = scheme.V * lift(rep.S_rot[a]) * scheme.V_inv;
    res.S[a] = eps_limit(rot);
    EpsMatrix boost = scheme.V * lift(rep.S_boost[a]) * scheme.V_inv;
    boost = boost.map<EpsSeries>([](const EpsSeries& s) { return s.shifted(1); });
    res.eta[a] = eps_limit(boost);
    if (!res.eta[a].is_zero()) res.trivial_boosts = false;
  }
  // Internal consistency guard: the contracted generators always close
  // into hg(1,3) when both limits exist.
  reps::GalileiRep probe;
  probe.dim = rep.dim;
  probe.S = res.S;
  probe.eta = res.eta;
  if (!reps::check_structure(probe).all_pass)
    throw std::logic_error("contracted generators violate hg(1,3)");
  return res;
}

// ---- identification ------------------------------------------------------

namespace {

struct SlotStructure {
  // component index -> slot offset; kinds parallel to offsets
  std::vector<int> offsets;
  std::vector<bool> vec;
};

/// Reads the spin-block structure off the rotation generators: scalars are
/// slots with vanishing rows and columns, vectors must appear as standard
/// contiguous spin-one blocks.
std::optional<SlotStructure> slot_structure(const std::array<QMatrix, 3>& S) {
  const int d = S[0].rows();
  std::vector<bool> scalar(d, true);
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!S[a](i, j).is_zero()) scalar[i] = scalar[j] = false;
  SlotStructure st;
  for (int i = 0; i < d;) {
    if (scalar[i]) {
      st.offsets.push_back(i);
      st.vec.push_back(false);
      ++i;
      continue;
    }
    if (i + 2 >= d || scalar[i + 1] || scalar[i + 2]) return std::nullopt;
    for (int a = 0; a < 3; ++a) {
      QMatrix s = spin_one(a);
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          if (S[a](i + b, i + c) != s(b, c)) return std::nullopt;
      // block must not leak outside itself
      for (int b = 0; b < 3; ++b)
        for (int j = 0; j < d; ++j)
          if ((j < i || j > i + 2) && (!S[a](i + b, j).is_zero() || !S[a](j, i + b).is_zero()))
            return std::nullopt;
    }
    st.offsets.push_back(i);
    st.vec.push_back(true);
    i += 3;
  }
  return st;
}

}  // namespace

IdentifyResult identify(const std::array<QMatrix, 3>& S, const std::array<QMatrix, 3>& eta) {
  IdentifyResult res;
  const int d = S[0].rows();
  auto st = slot_structure(S);
  if (!st) return res;
  const int nc = int(st->offsets.size());
  const int nvec = int(std::count(st->vec.begin(), st->vec.end(), true));
  const int nsc = nc - nvec;

  for (const reps::RepLabel& label : reps::enumerate_labels()) {
    if (label.m != nvec || label.n != nsc) continue;
    reps::GalileiRep target = reps::build_rep(label);

    // candidate component slots split by kind
    std::vector<int> cand_vec, cand_sc, targ_vec, targ_sc;
    for (int i = 0; i < nc; ++i) (st->vec[i] ? cand_vec : cand_sc).push_back(i);
    for (int i = 0; i < int(target.layout.size()); ++i)
      (reps::is_vector(target.layout[i]) ? targ_vec : targ_sc).push_back(i);

    std::vector<int> pv(cand_vec.size()), ps(cand_sc.size());
    std::iota(pv.begin(), pv.end(), 0);
    std::iota(ps.begin(), ps.end(), 0);
    do {
      std::vector<int> ps_copy = ps;
      do {
        // slot map: candidate slot -> target slot
        std::vector<int> to_target(d, -1);
        for (size_t k = 0; k < cand_vec.size(); ++k) {
          int co = st->offsets[cand_vec[k]];
          int to = target.offset(targ_vec[pv[k]]);
          for (int b = 0; b < 3; ++b) to_target[co + b] = to + b;
        }
        for (size_t k = 0; k < cand_sc.size(); ++k)
          to_target[st->offsets[cand_sc[k]]] = target.offset(targ_sc[ps_copy[k]]);

        QMatrix perm = QMatrix::zero(d, d);
        for (int i = 0; i < d; ++i) perm(to_target[i], i) = GQ(1);
        QMatrix perm_inv = perm.transpose();

        // permuted generators; then solve for per-component scales
        std::array<QMatrix, 3> ep;
        for (int a = 0; a < 3; ++a) ep[a] = perm * eta[a] * perm_inv;

        // Scale ratios between target components, determined entrywise.
        // Ratio constraints scale_I / scale_J = t/s form a graph; anchor
        // each connected cluster at 1 and propagate until stable.
        const int ncomp = int(target.layout.size());
        std::vector<GQ> scale(ncomp, GQ(1));
        std::vector<bool> fixed(ncomp, false);
        bool ok = true;
        auto propagate = [&]() {
          bool changed = true;
          while (changed && ok) {
            changed = false;
            for (int a = 0; a < 3 && ok; ++a)
              for (int I = 0; I < ncomp && ok; ++I)
                for (int J = 0; J < ncomp && ok; ++J) {
                  const int oi = target.offset(I), di = reps::is_vector(target.layout[I]) ? 3 : 1;
                  const int oj = target.offset(J), dj = reps::is_vector(target.layout[J]) ? 3 : 1;
                  for (int r = 0; r < di && ok; ++r)
                    for (int c = 0; c < dj && ok; ++c) {
                      const GQ& t = target.eta[a](oi + r, oj + c);
                      const GQ& s = ep[a](oi + r, oj + c);
                      if (t.is_zero() != s.is_zero()) {
                        ok = false;
                        break;
                      }
                      if (t.is_zero()) continue;
                      GQ ratio = t / s;  // = scale_I / scale_J
                      if (fixed[I] && fixed[J]) {
                        if (scale[I] != ratio * scale[J]) ok = false;
                      } else if (fixed[J]) {
                        scale[I] = ratio * scale[J];
                        fixed[I] = true;
                        changed = true;
                      } else if (fixed[I]) {
                        scale[J] = scale[I] / ratio;
                        fixed[J] = true;
                        changed = true;
                      }
                    }
                }
          }
        };
        for (int seed = 0; seed < ncomp && ok; ++seed) {
          if (fixed[seed]) continue;
          fixed[seed] = true;
          scale[seed] = GQ(1);
          propagate();
        }
        if (ok) {
          QMatrix dia = QMatrix::zero(d, d);
          for (int I = 0; I < int(target.layout.size()); ++I) {
            const int oi = target.offset(I), di = reps::is_vector(target.layout[I]) ? 3 : 1;
            for (int r = 0; r < di; ++r) dia(oi + r, oi + r) = scale[I];
          }
          QMatrix basis = dia * perm;
          QMatrix basis_inv = exact_inverse(basis);
          bool match = true;
          for (int a = 0; a < 3 && match; ++a)
            match = (basis * eta[a] * basis_inv == target.eta[a]) &&
                    (basis * S[a] * basis_inv == target.S[a]);
          if (match) {
            res.identified = true;
            res.label = label;
            res.basis = basis;
            return res;
          }
        }
      } while (std::next_permutation(ps_copy.begin(), ps_copy.end()));
    } while (std::next_permutation(pv.begin(), pv.end()));
  }
  return res;
}

}  // namespace galilei::contraction
