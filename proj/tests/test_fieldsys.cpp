#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galilei/fieldsys.hpp"
#include "support.hpp"

using namespace galilei;
using namespace galilei::fieldsys;
using testsupport::Rng;

namespace {

std::vector<std::string> galilean_systems() {
  std::vector<std::string> out;
  for (const auto& n : catalogue_names())
    if (catalogue(n).field.kind == BoostKind::Galilean) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("the catalogue holds the eleven named first-order systems") {
  auto names = catalogue_names();
  CHECK(names.size() == 11);
  for (const auto& n : names) {
    LinearFieldSystem sys = catalogue(n);
    CHECK(sys.order() == 1);
    CHECK(sys.total_rows() > 0);
  }
  CHECK_THROWS_AS(catalogue("nonsense"), UnknownSystemError);

  // the printed shapes of three systems, spot-checked
  LinearFieldSystem mag = catalogue("magnetic");
  CHECK(mag.eqs.size() == 4);
  CHECK(mag.total_rows() == 8);
  CHECK(mag.field.layout.dim() == 6);

  LinearFieldSystem ext = catalogue("extended");
  CHECK(ext.eqs.size() == 7);
  CHECK(ext.total_rows() == 15);
  CHECK(ext.field.layout.dim() == 10);
  CHECK(ext.current.layout.dim() == 5);

  LinearFieldSystem scl = catalogue("scalar_system");
  CHECK(scl.eqs.size() == 3);
  CHECK(scl.total_rows() == 7);
}

TEST_CASE("every catalogued system is exactly boost and rotation covariant") {
  for (const auto& n : catalogue_names()) {
    LinearFieldSystem sys = catalogue(n);
    auto cov = boost_covariance(sys);
    CHECK_MESSAGE(cov.covariant, n, ": ", cov.failing_identity);
    auto rot = rotation_covariance(sys);
    CHECK_MESSAGE(rot.covariant, n, ": ", rot.failing_identity);
  }
}

TEST_CASE("equation-multiplet boosts compose additively") {
  Rng rng(31);
  for (const auto& n : galilean_systems()) {
    LinearFieldSystem sys = catalogue(n);
    auto cov = boost_covariance(sys);
    REQUIRE(cov.covariant);
    CHECK(eval(cov.M, {GQ(), GQ(), GQ()}) == QMatrix::identity(sys.total_rows()));
    for (int t = 0; t < 10; ++t) {
      auto v = rng.vec3(), w = rng.vec3();
      std::array<GQ, 3> sum{v[0] + w[0], v[1] + w[1], v[2] + w[2]};
      CHECK(eval(cov.M, v) * eval(cov.M, w) == eval(cov.M, sum));
    }
  }
}

TEST_CASE("the coupled system's M(v) restricted to the homogeneous rows is the "
          "field boost at reversed parameter") {
  LinearFieldSystem ext = catalogue("extended");
  auto cov = boost_covariance(ext);
  REQUIRE(cov.covariant);
  auto rows = ext.row_names();
  // homogeneous block (calN, calW, calR, calB) against the D(3,1,1)-type
  // multiplet (N, R-as-calR, ...): the correspondence swaps the roles, so
  // check the defining relations directly on a few entries instead:
  // calW row picks up -v x calR, calB picks up -v.calR, J0 couples to J,
  // calW and J4 with the C-type pattern at reversed parameter.
  auto idx = [&](const std::string& name) {
    for (int i = 0; i < int(rows.size()); ++i)
      if (rows[i] == name) return i;
    return -1;
  };
  CHECK(cov.M(idx("calB"), idx("calR.x")) == VPoly::v(0, GQ(-1)));
  CHECK(cov.M(idx("calW.x"), idx("calR.y")) == VPoly::v(2, GQ(1)));   // -(v x calR)_x
  CHECK(cov.M(idx("calW.x"), idx("calR.z")) == VPoly::v(1, GQ(-1)));
  CHECK(cov.M(idx("J0"), idx("J.x")) == VPoly::v(0, GQ(-1)));
  CHECK(cov.M(idx("J0"), idx("calW.x")) == VPoly::v(0, GQ(-1)));
  VPoly half_vsq;
  for (int a = 0; a < 3; ++a) half_vsq += VPoly::v(a) * VPoly::v(a);
  half_vsq = GQ(ratq(-1, 2)) * half_vsq;
  CHECK(cov.M(idx("J0"), idx("J4")) == half_vsq);
  CHECK(cov.M(idx("calN.x"), idx("calB")) == VPoly::v(0));  // + v calB
}

TEST_CASE("each designated sign flip breaks covariance") {
  for (const auto& n : mutation_names()) {
    LinearFieldSystem flipped = sign_flip_mutation(n);
    auto cov = boost_covariance(flipped);
    CHECK_MESSAGE(!cov.covariant, n, " mutation unexpectedly covariant");
    CHECK(!cov.failing_identity.empty());
  }
}

TEST_CASE("relativistic systems admit no polynomial Galilean boost law") {
  // swapping in either Galilean candidate law leaves Maxwell non-covariant
  LinearFieldSystem mx = catalogue("maxwell");
  for (int candidate = 0; candidate < 2; ++candidate) {
    LinearFieldSystem trial = mx;
    trial.field.kind = BoostKind::Galilean;
    trial.current.kind = BoostKind::Galilean;
    const int oe = trial.field.layout.offset(trial.field.layout.index_of("E"));
    const int oh = trial.field.layout.offset(trial.field.layout.index_of("H"));
    for (int a = 0; a < 3; ++a)
      trial.field.boost_gen[a] = QMatrix::zero(6, 6);
    if (candidate == 0)
      gen_vec_cross(trial.field.boost_gen, oe, oh, GQ(-1));  // magnetic-type law
    else
      gen_vec_cross(trial.field.boost_gen, oh, oe, GQ(1));  // electric-type law
    for (int a = 0; a < 3; ++a) trial.current.boost_gen[a] = QMatrix::zero(4, 4);
    auto cov = boost_covariance(trial);
    CHECK_FALSE(cov.covariant);
  }
  // while the genuine Lorentz covariance holds at the Lie-algebra level
  CHECK(boost_covariance(mx).covariant);
  CHECK(boost_covariance(catalogue("scalar_gradient")).covariant);
}

TEST_CASE("a rotation-anisotropic row is rejected") {
  LinearFieldSystem sys = catalogue("scalar_system");
  Equation extra;
  extra.name = "anisotropic";
  extra.rows = 1;
  QMatrix c(1, sys.field.layout.dim());
  c(0, sys.field.layout.slot_of("B")) = GQ(1);
  extra.coef[{0, 1, 0, 0}] = c;  // d_x B = 0 singles out an axis
  extra.src = QMatrix::zero(1, sys.current.layout.dim());
  sys.eqs.push_back(extra);
  auto rot = rotation_covariance(sys);
  CHECK_FALSE(rot.covariant);
}

TEST_CASE("plane waves: polarization counts and symbol membership") {
  // two polarizations for Maxwell on the light cone
  LinearFieldSystem mx = catalogue("maxwell");
  auto waves = plane_wave(mx, GQ(1), {GQ(1), GQ(), GQ()});
  CHECK(waves.size() == 2);
  for (const auto& w : waves)
    CHECK((symbol_matrix(mx, GQ(1), {GQ(1), GQ(), GQ()}) * w).is_zero());

  // the magnetic system pins every amplitude at a generic covector
  LinearFieldSystem mag = catalogue("magnetic");
  for (long pt : {0L, 1L, 3L}) {
    auto mw = plane_wave(mag, GQ(pt), {GQ(), GQ(), GQ(1)});
    for (const auto& w : mw) {
      // solutions satisfy p.H = 0 automatically (divH row)
      GQ dot = w(mag.field.layout.slot_of("H_m.z"), 0);
      CHECK(dot.is_zero());
    }
  }

  // zero symbol: the whole space
  CHECK(plane_wave(mag, GQ(), {GQ(), GQ(), GQ()}).size() == 6);
}

TEST_CASE("boosted plane-wave amplitudes annihilate the boosted symbol") {
  Rng rng(32);
  for (const auto& n : galilean_systems()) {
    LinearFieldSystem sys = catalogue(n);
    VMatrix lam = sys.field.finite_boost();
    int nontrivial = 0;
    for (int t = 0; t < 20; ++t) {
      GQ pt = rng.gq_real();
      std::array<GQ, 3> p;
      if (t % 4 == 0)
        p = {GQ(), GQ(), GQ()};  // spatially constant waves have solutions
      else
        p = rng.vec3();
      auto v = rng.vec3();
      auto amps = plane_wave(sys, pt, p);
      nontrivial += amps.empty() ? 0 : 1;
      // chain rule: p_t -> p_t + v.p
      GQ ptb = pt + v[0] * p[0] + v[1] * p[1] + v[2] * p[2];
      QMatrix boosted_symbol = symbol_matrix(sys, ptb, p);
      QMatrix lam_v = eval(lam, v);
      for (const auto& amp : amps) CHECK((boosted_symbol * (lam_v * amp)).is_zero());
    }
    CHECK(nontrivial > 0);
  }
}

TEST_CASE("induced current constraints are reported") {
  auto mag = current_constraint_diagnostic(catalogue("magnetic"));
  // the magnetic limit forces a solenoidal current
  bool found = false;
  for (const auto& line : mag)
    if (line.find("j_m") != std::string::npos) found = true;
  CHECK(found);

  auto mx = current_constraint_diagnostic(catalogue("maxwell"));
  bool continuity = false;
  for (const auto& line : mx)
    if (line.find("dt") != std::string::npos && line.find("j0") != std::string::npos)
      continuity = true;
  CHECK(continuity);
}

TEST_CASE("boost_shift expands the substituted time derivative") {
  auto terms = boost_shift({2, 0, 0, 0});
  // (d_t + v.grad)^2 has 10 monomials
  CHECK(terms.size() == 10);
  for (const auto& [m, w] : terms)
    if (m == Mono4{1, 1, 0, 0}) CHECK(w == VPoly::v(0, GQ(2)));
}

TEST_CASE("finite rational Lorentz boosts transport plane waves of the "
          "relativistic systems") {
  // rational hyperbolic pair: ch^2 - sh^2 = 1
  const GQ ch(ratq(5, 4)), sh(ratq(3, 4));
  Rng rng(33);
  for (const std::string name : {"maxwell", "scalar_gradient"}) {
    LinearFieldSystem sys = catalogue(name);
    REQUIRE(sys.field.kind == BoostKind::Lorentz);
    for (int axis = 0; axis < 3; ++axis) {
      const QMatrix& g = sys.field.boost_gen[axis];
      // hyperbolic generators close at the third power
      CHECK(g * g * g == g);
      QMatrix lam = QMatrix::identity(g.rows()) + sh * g + (ch - GQ(1)) * (g * g);
      int nontrivial = 0;
      for (int t = 0; t < 12; ++t) {
        GQ pt = rng.gq_real();
        auto p = rng.vec3();
        if (t % 3 == 0) {  // put some samples on the light cone
          pt = GQ(5);
          p = {GQ(3), GQ(4), GQ(0)};
        }
        auto amps = plane_wave(sys, pt, p);
        nontrivial += amps.empty() ? 0 : 1;
        // the symbol covector mixes hyperbolically along the boost axis
        GQ qt = ch * pt - sh * p[axis];
        auto q = p;
        q[axis] = ch * p[axis] - sh * pt;
        QMatrix boosted = symbol_matrix(sys, qt, q);
        for (const auto& amp : amps) CHECK((boosted * (lam * amp)).is_zero());
      }
      CHECK(nontrivial > 0);
    }
  }
}

TEST_CASE("M(v) M(v') = M(v+v') holds as an exact polynomial identity") {
  // Entries have per-variable degree at most two, so agreement on a
  // 3-point grid per variable certifies the identity in all six variables.
  const std::array<GQ, 3> grid{GQ(0), GQ(1), GQ(2)};
  for (const auto& n : galilean_systems()) {
    auto cov = boost_covariance(catalogue(n));
    REQUIRE(cov.covariant);
    // precompute M over the 3-grid and the 5-point sum grid
    std::map<std::array<long, 3>, QMatrix> at;
    auto key = [](const std::array<GQ, 3>& v) {
      return std::array<long, 3>{v[0].re.get_num().get_si(), v[1].re.get_num().get_si(),
                                 v[2].re.get_num().get_si()};
    };
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; b <= 4; ++b)
        for (long c = 0; c <= 4; ++c)
          at[{a, b, c}] = eval(cov.M, {GQ(a), GQ(b), GQ(c)});
    for (const GQ& x : grid)
      for (const GQ& y : grid)
        for (const GQ& z : grid)
          for (const GQ& u : grid)
            for (const GQ& vv : grid)
              for (const GQ& w : grid) {
                std::array<GQ, 3> v1{x, y, z}, v2{u, vv, w};
                std::array<GQ, 3> s{x + u, y + vv, z + w};
                CHECK(at[key(v1)] * at[key(v2)] == at[key(s)]);
              }
  }
}

TEST_CASE("magnetic symbol nullspace dimension agrees with an independent rank") {
  LinearFieldSystem mag = catalogue("magnetic");
  for (long pt : {0L, 1L, 2L, 5L}) {
    QMatrix sym = symbol_matrix(mag, GQ(pt), {GQ(1), GQ(), GQ()});
    auto basis = plane_wave(mag, GQ(pt), {GQ(1), GQ(), GQ()});
    CHECK(int(basis.size()) == sym.cols() - testsupport::oracle_rank(sym));
  }
}
