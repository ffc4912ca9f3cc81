#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "galilei/reps.hpp"
#include "support.hpp"

using namespace galilei;
using namespace galilei::reps;
using testsupport::Rng;

TEST_CASE("the catalogue holds exactly the ten labels with their layouts") {
  auto labels = enumerate_labels();
  CHECK(labels.size() == 10);

  auto layout121 = layout_of({1, 2, 1});
  CHECK(layout121 == std::vector<Comp>{Comp::U, Comp::A, Comp::C});
  CHECK(layout_of({0, 1, 0}) == std::vector<Comp>{Comp::A});

  for (const auto& l : labels) {
    auto layout = layout_of(l);
    int vecs = 0, scals = 0;
    for (Comp c : layout) (is_vector(c) ? vecs : scals)++;
    CHECK(vecs == l.m);
    CHECK(scals == l.n);
    CHECK(build_rep(l).dim == 3 * l.m + l.n);
  }
  CHECK_THROWS_AS(build_rep({9, 9, 9}), UnknownLabelError);
  CHECK(label_from_string("D(2,2,1)") == RepLabel{2, 2, 1});
  CHECK(label_from_string("1,1,0") == RepLabel{1, 1, 0});
}

TEST_CASE("boost generators carry the k_a blocks of the contracted bases") {
  // D(1,1,0) on column(R, B): eta_a has k_a = i e_a^T in the lower-left
  GalileiRep d110 = build_rep({1, 1, 0});
  for (int a = 0; a < 3; ++a)
    for (int j = 0; j < 3; ++j) CHECK(d110.eta[a](3, j) == (j == a ? GQ::i() : GQ()));

  // D(1,1,1) on column(U, A): -k_a^dagger = i e_a in the upper-right
  GalileiRep d111 = build_rep({1, 1, 1});
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i) CHECK(d111.eta[a](i, 3) == (i == a ? GQ::i() : GQ()));

  // D(1,2,1) on column(U, A, C): -k_a^dagger into U from A, k_a into C from U
  GalileiRep d121 = build_rep({1, 2, 1});
  for (int a = 0; a < 3; ++a) {
    for (int i = 0; i < 3; ++i) {
      CHECK(d121.eta[a](i, 3) == (i == a ? GQ::i() : GQ()));
      CHECK(d121.eta[a](4, i) == (i == a ? GQ::i() : GQ()));
    }
    CHECK(d121.eta[a](3, 4).is_zero());
    CHECK(d121.eta[a](4, 3).is_zero());
  }
}

TEST_CASE("all ten representations satisfy the hg(1,3) relations exactly") {
  for (const auto& l : enumerate_labels()) {
    auto rpt = check_structure(build_rep(l));
    CHECK(rpt.items.size() == 15);
    CHECK(rpt.all_pass);
  }
}

TEST_CASE("a deliberately broken generator fails the commutation check") {
  GalileiRep rep = build_rep({2, 2, 1});
  rep.eta[0] += rep.S[0];
  auto rpt = check_structure(rep);
  CHECK_FALSE(rpt.all_pass);
  bool eta_eta_failed = false;
  for (const auto& item : rpt.items)
    if (item.relation == "[eta1,eta2]" && !item.pass) eta_eta_failed = true;
  CHECK(eta_eta_failed);
}

TEST_CASE("triple products of boost generators vanish") {
  for (const auto& l : enumerate_labels()) {
    GalileiRep rep = build_rep(l);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) CHECK((rep.eta[a] * rep.eta[b] * rep.eta[c]).is_zero());
  }
}

TEST_CASE("finite boosts reproduce every transformation law verbatim") {
  std::set<std::string> laws_seen;
  for (const auto& l : enumerate_labels()) {
    GalileiRep rep = build_rep(l);
    VMatrix boost = finite_boost(rep);
    VMatrix expected = testsupport::expected_boost_law(rep.layout);
    CHECK(boost == expected);
    for (Comp c : rep.layout) laws_seen.insert(comp_name(c));
  }
  CHECK(laws_seen.size() == 8);  // all eight quantities exercised
}

TEST_CASE("finite boost composes additively and is the identity at v = 0") {
  Rng rng(11);
  for (const auto& l : enumerate_labels()) {
    GalileiRep rep = build_rep(l);
    VMatrix boost = finite_boost(rep);
    CHECK(eval(boost, {GQ(), GQ(), GQ()}) == QMatrix::identity(rep.dim));
    for (int t = 0; t < 10; ++t) {
      auto v = rng.vec3(), w = rng.vec3();
      std::array<GQ, 3> sum{v[0] + w[0], v[1] + w[1], v[2] + w[2]};
      CHECK(eval(boost, v) * eval(boost, w) == eval(boost, sum));
    }
  }
}

TEST_CASE("commutant: scalars, the four-dimensional case, and block sums") {
  GalileiRep triv = build_rep({0, 1, 0});
  auto cb = commutant(triv);
  REQUIRE(cb.size() == 1);
  CHECK(cb[0] == QMatrix::identity(1));

  // D(1,1,0): dimension cross-checked against the 16-unknown linear system
  GalileiRep d110 = build_rep({1, 1, 0});
  auto basis = commutant(d110);
  {
    const int d = d110.dim;
    QMatrix sys(6 * d * d, d * d);
    int block = 0;
    for (const auto& gens : {d110.S, d110.eta})
      for (int a = 0; a < 3; ++a) {
        // [X, G] entries as linear forms in the entries of X
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
              // (XG)_{ij} gets X_{ik} G_{kj}; (GX)_{ij} gets G_{ik} X_{kj}
              sys(block * d * d + i * d + j, i * d + k) += gens[a](k, j);
              sys(block * d * d + i * d + j, k * d + j) -= gens[a](i, k);
            }
        ++block;
      }
    CHECK(int(basis.size()) == d * d - testsupport::oracle_rank(sys));
  }
  for (const auto& x : basis) {
    for (int a = 0; a < 3; ++a) {
      CHECK(commutator(x, d110.S[a]).is_zero());
      CHECK(commutator(x, d110.eta[a]).is_zero());
    }
  }

  // a direct sum always carries the two orthogonal block projectors
  GalileiRep sum = direct_sum(build_rep({0, 1, 0}), build_rep({1, 0, 0}));
  auto cs = commutant(sum);
  QMatrix p1 = QMatrix::zero(4, 4), p2 = QMatrix::zero(4, 4);
  p1(0, 0) = GQ(1);
  for (int k = 1; k < 4; ++k) p2(k, k) = GQ(1);
  auto contains = [&](const QMatrix& target) {
    // membership in the span via rank comparison
    QMatrix stack(16, int(cs.size()) + 1);
    for (int c = 0; c < int(cs.size()); ++c)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) stack(i * 4 + j, c) = cs[c](i, j);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) stack(i * 4 + j, int(cs.size())) = target(i, j);
    return testsupport::oracle_rank(stack) == int(cs.size());
  };
  CHECK(contains(p1));
  CHECK(contains(p2));
}

TEST_CASE("each catalogued representation is indecomposable") {
  for (const auto& l : enumerate_labels()) {
    auto rpt = is_indecomposable(build_rep(l));
    CHECK(rpt.indecomposable);
    CHECK(rpt.local_quotient_dim == 1);
  }
}

TEST_CASE("direct sums decompose with an idempotent witness") {
  auto check_sum = [](const RepLabel& a, const RepLabel& b) {
    GalileiRep sum = direct_sum(build_rep(a), build_rep(b));
    auto rpt = is_indecomposable(sum);
    CHECK_FALSE(rpt.indecomposable);
    REQUIRE(rpt.witness.has_value());
    const QMatrix& w = *rpt.witness;
    CHECK(w * w == w);
    CHECK_FALSE(w.is_zero());
    CHECK_FALSE(w == QMatrix::identity(sum.dim));
    for (int k = 0; k < 3; ++k) {
      CHECK(commutator(w, sum.S[k]).is_zero());
      CHECK(commutator(w, sum.eta[k]).is_zero());
    }
  };
  check_sum({1, 1, 0}, {1, 1, 1});
  check_sum({3, 1, 1}, {2, 2, 1});
  check_sum({0, 1, 0}, {0, 1, 0});
}

TEST_CASE("legal set-to-zero subsets") {
  // D(1,2,1): exactly the chain {A}, {A,U}, {A,U,C} (slot order U,A,C)
  GalileiRep d121 = build_rep({1, 2, 1});
  auto subsets = invariant_component_subsets(d121);
  std::set<std::set<int>> got;
  for (auto& s : subsets) got.insert(std::set<int>(s.begin(), s.end()));
  std::set<std::set<int>> expect{{1}, {0, 1}, {0, 1, 2}};
  CHECK(got == expect);

  // the carrier of the coupled field system: R alone may be set to zero
  GalileiRep d311 = build_rep({3, 1, 1});
  auto sub311 = invariant_component_subsets(d311);
  std::set<std::set<int>> got311;
  for (auto& s : sub311) got311.insert(std::set<int>(s.begin(), s.end()));
  // layout (B, N, W, R): index of R is 3
  CHECK(got311.count({3}) == 1);
  CHECK(got311.count({0}) == 0);  // B = 0 alone is not preserved (B' = B + v.R)

  GalileiRep triv = build_rep({0, 1, 0});
  auto subt = invariant_component_subsets(triv);
  REQUIRE(subt.size() == 1);
  CHECK(subt[0] == std::vector<int>{0});
}

TEST_CASE("the finite boost group law certified symbolically on a grid") {
  const std::array<GQ, 3> grid{GQ(0), GQ(1), GQ(2)};
  for (const auto& l : enumerate_labels()) {
    VMatrix boost = finite_boost(build_rep(l));
    std::map<std::array<long, 3>, QMatrix> at;
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; b <= 4; ++b)
        for (long c = 0; c <= 4; ++c)
          at[{a, b, c}] = eval(boost, {GQ(a), GQ(b), GQ(c)});
    for (const GQ& x : grid)
      for (const GQ& y : grid)
        for (const GQ& z : grid)
          for (const GQ& u : grid)
            for (const GQ& v : grid)
              for (const GQ& w : grid) {
                auto k = [](const GQ& a, const GQ& b, const GQ& c) {
                  return std::array<long, 3>{a.re.get_num().get_si(),
                                             b.re.get_num().get_si(),
                                             c.re.get_num().get_si()};
                };
                CHECK(at[k(x, y, z)] * at[k(u, v, w)] == at[k(x + u, y + v, z + w)]);
              }
  }
}
