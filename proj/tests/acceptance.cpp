// Acceptance suite: every verification the project promises, one line per
// criterion. Exit code 0 only when all criteria hold.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>

#include "galilei/contraction.hpp"
#include "galilei/fieldsys.hpp"
#include "galilei/limits.hpp"
#include "galilei/potentials.hpp"
#include "galilei/reps.hpp"
#include "support.hpp"

using namespace galilei;

namespace {

int failures = 0;

struct Criterion {
  int number;
  std::string summary;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  ~Criterion() {
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", number,
                summary.c_str(), seconds(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
};

}  // namespace

static void criterion1() {
  Criterion c{1, "all ten representations satisfy the commutation relations exactly"};
  for (const auto& l : reps::enumerate_labels()) {
    auto rpt = reps::check_structure(reps::build_rep(l));
    c.require(rpt.items.size() == 15, l.str() + ": relation count");
    c.require(rpt.all_pass, l.str() + ": a relation failed");
  }
  c.require(c.seconds() < 5.0, "runtime exceeded 5 s");
}

static void criterion2() {
  Criterion c{2, "finite boosts reproduce all eight transformation laws symbolically"};
  std::set<std::string> laws;
  for (const auto& l : reps::enumerate_labels()) {
    reps::GalileiRep rep = reps::build_rep(l);
    VMatrix got = reps::finite_boost(rep);
    VMatrix want = testsupport::expected_boost_law(rep.layout);  // independent transcription
    c.require(got == want, l.str() + ": boost law residual nonzero");
    for (reps::Comp comp : rep.layout) laws.insert(reps::comp_name(comp));
  }
  c.require(laws.size() == 8, "not all eight quantities exercised");
}

static void criterion3() {
  Criterion c{3, "ten indecomposables; all 45 pairwise sums decompose with witnesses"};
  auto labels = reps::enumerate_labels();
  for (const auto& l : labels)
    c.require(reps::is_indecomposable(reps::build_rep(l)).indecomposable,
              l.str() + " reported decomposable");
  int pairs = 0;
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j) {
      ++pairs;
      reps::GalileiRep sum =
          reps::direct_sum(reps::build_rep(labels[i]), reps::build_rep(labels[j]));
      auto rpt = reps::is_indecomposable(sum);
      std::string name = labels[i].str() + "+" + labels[j].str();
      c.require(!rpt.indecomposable, name + " reported indecomposable");
      c.require(rpt.witness.has_value(), name + " lacks a witness");
      if (rpt.witness) {
        const QMatrix& w = *rpt.witness;
        c.require(w * w == w && !w.is_zero() && w != QMatrix::identity(sum.dim),
                  name + ": witness is not a proper idempotent");
        for (int a = 0; a < 3; ++a)
          c.require(commutator(w, sum.S[a]).is_zero() && commutator(w, sum.eta[a]).is_zero(),
                    name + ": witness does not commute");
      }
    }
  c.require(pairs == 45, "pair count");
}

static void criterion4() {
  Criterion c{4, "contractions land on D(1,1,0), D(1,1,1), D(1,2,1) entry for entry"};
  using namespace contraction;
  struct Case {
    const char* scheme;
    reps::RepLabel label;
    bool five;
  } cases[] = {{"v1", {1, 1, 0}, false}, {"v2", {1, 1, 1}, false}, {"v3", {1, 2, 1}, true}};
  for (const auto& cs : cases) {
    LorentzRep rep = cs.five ? direct_sum({four_vector_rep(), scalar_rep()}) : four_vector_rep();
    ContractResult res = contract(rep, scheme_by_name(cs.scheme));
    IdentifyResult id = identify(res.S, res.eta);
    c.require(id.identified && id.label == cs.label,
              std::string(cs.scheme) + " not identified as " + cs.label.str());
    if (id.identified) {
      reps::GalileiRep target = reps::build_rep(id.label);
      QMatrix binv = exact_inverse(id.basis);
      for (int a = 0; a < 3; ++a) {
        c.require(id.basis * res.eta[a] * binv == target.eta[a],
                  std::string(cs.scheme) + ": eta mismatch");
        c.require(id.basis * res.S[a] * binv == target.S[a],
                  std::string(cs.scheme) + ": S mismatch");
      }
      if (!cs.five)
        c.require(id.basis == QMatrix::identity(4),
                  std::string(cs.scheme) + ": printed generators need no basis change");
    }
  }
  // V = identity: the limit exists but the boosts collapse
  auto lift_id = QMatrix::identity(4).map<EpsSeries>([](const GQ& g) { return EpsSeries(g); });
  ContractResult trivial = contract(four_vector_rep(), scheme_from_matrix(lift_id, "identity"));
  c.require(trivial.trivial_boosts, "identity scheme should flag trivial boosts");
  // diag(eps^2, eps^2, eps^2, 1): the limit does not exist
  EpsMatrix bad(4, 4);
  for (int k = 0; k < 3; ++k) bad(k, k) = EpsSeries::eps(2);
  bad(3, 3) = EpsSeries(1);
  bool threw = false;
  try {
    contract(four_vector_rep(), scheme_from_matrix(bad, "bad"));
  } catch (const NegativePowerError&) {
    threw = true;
  }
  c.require(threw, "eps^2 counterexample should raise NegativePower");
}

static void criterion5() {
  Criterion c{5, "all 11 catalogued systems boost- and rotation-covariant with exact M"};
  testsupport::Rng rng(51);
  for (const auto& name : fieldsys::catalogue_names()) {
    fieldsys::LinearFieldSystem sys = fieldsys::catalogue(name);
    auto cov = fieldsys::boost_covariance(sys);
    c.require(cov.covariant, name + ": " + cov.failing_identity);
    auto rot = fieldsys::rotation_covariance(sys);
    c.require(rot.covariant, name + ": rotation failed");
    if (cov.kind == fieldsys::BoostKind::Galilean && cov.covariant) {
      c.require(eval(cov.M, {GQ(), GQ(), GQ()}) == QMatrix::identity(sys.total_rows()),
                name + ": M(0) != I");
      for (int t = 0; t < 10; ++t) {
        auto v = rng.vec3(), w = rng.vec3();
        std::array<GQ, 3> s{v[0] + w[0], v[1] + w[1], v[2] + w[2]};
        c.require(eval(cov.M, v) * eval(cov.M, w) == eval(cov.M, s), name + ": group law");
      }
    }
  }
  // the two relativistic systems are verified at the Lie-algebra level;
  // no polynomial Galilean law exists for them (both candidates fail)
  fieldsys::LinearFieldSystem mx = fieldsys::catalogue("maxwell");
  for (int cand = 0; cand < 2; ++cand) {
    fieldsys::LinearFieldSystem trial = mx;
    trial.field.kind = fieldsys::BoostKind::Galilean;
    trial.current.kind = fieldsys::BoostKind::Galilean;
    for (int a = 0; a < 3; ++a) {
      trial.field.boost_gen[a] = QMatrix::zero(6, 6);
      trial.current.boost_gen[a] = QMatrix::zero(4, 4);
    }
    if (cand == 0)
      gen_vec_cross(trial.field.boost_gen, 0, 3, GQ(-1));
    else
      gen_vec_cross(trial.field.boost_gen, 3, 0, GQ(1));
    c.require(!fieldsys::boost_covariance(trial).covariant,
              "a Galilean law unexpectedly fits Maxwell");
  }
}

static void criterion6() {
  Criterion c{6, "all five designated sign-flip mutations break covariance"};
  auto names = fieldsys::mutation_names();
  c.require(names.size() == 5, "mutation count");
  for (const auto& n : names) {
    auto cov = fieldsys::boost_covariance(fieldsys::sign_flip_mutation(n));
    c.require(!cov.covariant, n + ": mutation stayed covariant");
    c.require(!cov.failing_identity.empty(), n + ": missing residual report");
  }
}

static void criterion7() {
  Criterion c{7, "the reduction lattice reproduces every catalogued child"};
  auto edges = fieldsys::reduction_lattice();
  const std::set<std::pair<std::string, std::string>> expected{
      {"extended", "reduced_R0"},       {"reduced_R0", "magnetic"},
      {"magnetic", "electrostatic"},    {"extended", "subsystem_8"},
      {"subsystem_8", "scalar_system"}, {"subsystem_8", "electric"},
      {"subsystem_8", "reduced_W"},     {"electric", "magnetostatic"}};
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& e : edges) got.insert({e.parent, e.child});
  c.require(got == expected, "edge set differs");
  for (const auto& e : edges) {
    try {
      auto match = fieldsys::check_edge(e);
      c.require(match.matched, e.parent + "->" + e.child + ": " + match.detail);
    } catch (const std::exception& ex) {
      c.require(false, e.parent + "->" + e.child + ": " + ex.what());
    }
  }
}

static void criterion8() {
  Criterion c{8, "potential substitutions kill all homogeneous equations identically"};
  for (const auto& name : fieldsys::potential_scheme_names()) {
    auto rpt = fieldsys::potential_identities(name);
    c.require(rpt.all_zero, name + ": a residual survived");
    c.require(rpt.intertwines, name + ": boost intertwining failed");
  }
  auto sys = fieldsys::potential_system_check();
  c.require(sys.contraction_matches, "contracted potential system mismatch");
  c.require(sys.covariant, "contracted potential system not covariant");
  c.require(sys.boost_law_matches && sys.current_law_matches,
            "five-potential transformation laws mismatch");
  c.require(sys.strengths_close, "coupled equations not recovered from potentials");
}

static void criterion9() {
  Criterion c{9, "boosted plane waves annihilate the boosted symbol exactly"};
  testsupport::Rng rng(91);
  for (const auto& name : fieldsys::catalogue_names()) {
    fieldsys::LinearFieldSystem sys = fieldsys::catalogue(name);
    if (sys.field.kind != fieldsys::BoostKind::Galilean) continue;
    VMatrix lam = sys.field.finite_boost();
    for (int t = 0; t < 20; ++t) {
      GQ pt = rng.gq_real();
      std::array<GQ, 3> p = (t % 4 == 0) ? std::array<GQ, 3>{GQ(), GQ(), GQ()} : rng.vec3();
      auto v = rng.vec3();
      GQ ptb = pt + v[0] * p[0] + v[1] * p[1] + v[2] * p[2];
      QMatrix boosted = fieldsys::symbol_matrix(sys, ptb, p);
      QMatrix lam_v = eval(lam, v);
      for (const auto& amp : fieldsys::plane_wave(sys, pt, p))
        c.require((boosted * (lam_v * amp)).is_zero(), name + ": boosted amplitude escaped");
    }
  }
}

static void criterion10() {
  Criterion c{10, "limit probes match the exact symbolic eps-orders within 0.1"};
  struct Case {
    const char* scheme;
    const char* target;
  } cases[] = {{"v1", "magnetic"}, {"v2", "electric"}, {"v3", "extended"}};
  for (const auto& cs : cases) {
    limits::LimitProbe probe;
    probe.scheme = cs.scheme;
    probe.target = cs.target;
    probe.eps_values = {1e-1, 1e-2, 1e-3};
    auto table = limits::run_probe(probe);
    c.require(!table.all_zero, std::string(cs.scheme) + ": degenerate probe");
    c.require(std::abs(table.slope - double(table.symbolic_max_order)) <= 0.1,
              std::string(cs.scheme) + ": slope vs symbolic order");
    c.require(table.slope >= 0.9, std::string(cs.scheme) + ": slope below 0.9");
    c.require(table.exact_check_rel_err <= 1e-12,
              std::string(cs.scheme) + ": float/exact disagreement");
  }
  c.require(c.seconds() < 60.0, "runtime exceeded 60 s");
}

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("ACCEPTANCE: %d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
