#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galilei/fieldsys.hpp"
#include "support.hpp"

using namespace galilei;
using namespace galilei::fieldsys;

TEST_CASE("the full reduction lattice reproduces every catalogued child") {
  auto edges = reduction_lattice();
  CHECK(edges.size() == 8);
  for (const auto& edge : edges) {
    auto match = check_edge(edge);
    CHECK_MESSAGE(match.matched, edge.parent, " -> ", edge.child, ": ", match.detail);
    // the reduced system must itself be covariant
    LinearFieldSystem parent = catalogue(edge.parent);
    LinearFieldSystem red =
        edge.by_constraint
            ? apply_constraint(parent, edge.zero_fields, edge.zero_currents, edge.field_alias,
                               edge.current_alias)
            : drop_equations(parent, edge.drop_eqs, edge.field_alias, edge.current_alias);
    CHECK(boost_covariance(red).covariant);
    CHECK(rotation_covariance(red).covariant);
  }
}

TEST_CASE("specific edges and their recombinations") {
  // extended + {R = 0, j4 = 0} lands on the reduced system after renaming
  LinearFieldSystem ext = catalogue("extended");
  LinearFieldSystem red = apply_constraint(ext, {"R"}, {"j4"},
                                           {{"W", "Htilde"}, {"N", "Etilde"}, {"B", "S"}}, {});
  auto m = match_catalogued(red, "reduced_R0");
  CHECK(m.matched);
  // the J row splits into ampere + gradS, so rows recombine
  CHECK_FALSE(m.coefficient_exact);

  // dropping calN and J0 reaches the eight-field subsystem; its J row is
  // the time-derivative variant, equal modulo the calW row
  LinearFieldSystem sub = drop_equations(ext, {"calN", "J0"});
  auto m2 = match_catalogued(sub, "subsystem_8");
  CHECK(m2.matched);
  CHECK_FALSE(m2.coefficient_exact);
  // j0 is no longer referenced and is pruned
  CHECK(sub.current.layout.index_of("j0") == -1);
  CHECK(sub.field.layout.index_of("B") >= 0);

  // dropping calW from the subsystem gives the electric limit verbatim
  LinearFieldSystem sub_cat = catalogue("subsystem_8");
  LinearFieldSystem el = drop_equations(sub_cat, {"calW"}, {{"W", "H_e"}, {"R", "E_e"}},
                                        {{"j", "j_e"}, {"j4", "j4_e"}});
  auto m3 = match_catalogued(el, "electric");
  CHECK(m3.matched);
  CHECK(m3.coefficient_exact);
  CHECK(el.field.layout.index_of("B") == -1);  // B pruned

  // the magnetic edge needs the orientation flip H_m = -Htilde
  LinearFieldSystem r0 = catalogue("reduced_R0");
  LinearFieldSystem mag =
      apply_constraint(r0, {"S"}, {}, {{"Htilde", "H_m", GQ(-1)}, {"Etilde", "E_m"}},
                       {{"j0", "j0_m"}, {"j", "j_m", GQ(-1)}});
  auto m4 = match_catalogued(mag, "magnetic");
  CHECK(m4.matched);
  CHECK(m4.coefficient_exact);
}

TEST_CASE("illegal constraints and non-closed drops are rejected") {
  LinearFieldSystem mag = catalogue("magnetic");
  // E_m = 0 is not boost invariant: E'_m = E_m - v x H_m
  CHECK_THROWS_AS(apply_constraint(mag, {"E_m"}, {}), NotInvariantError);

  // H_m = 0 alone is invariant
  CHECK_NOTHROW(apply_constraint(mag, {"H_m"}, {"j_m"}));

  // dropping the calR row from the subsystem leaves calW non-closed
  LinearFieldSystem sub = catalogue("subsystem_8");
  CHECK_THROWS_AS(drop_equations(sub, {"calR"}), NotClosedError);

  CHECK_THROWS_AS(apply_constraint(mag, {"nonsense"}, {}), UnknownSystemError);
  CHECK_THROWS_AS(drop_equations(mag, {"nonsense"}), UnknownSystemError);
}

TEST_CASE("zeroing B in the scalar system leaves a covariant remnant") {
  // {B} is a legal zero set of D(1,1,0)-type multiplets? B' = B + v.R says
  // no: its vanishing is not preserved while R survives.
  LinearFieldSystem scl = catalogue("scalar_system");
  CHECK_THROWS_AS(apply_constraint(scl, {"B"}, {}), NotInvariantError);
  // but R = 0 with j4 = 0 is legal and kills the system down to grad B = 0
  LinearFieldSystem red = apply_constraint(scl, {"R"}, {"j4"});
  CHECK(red.total_rows() == 3);
  CHECK(boost_covariance(red).covariant);
}

TEST_CASE("equation dropping is rejected on the relativistic systems") {
  CHECK_THROWS_AS(drop_equations(catalogue("maxwell"), {"divH"}), NotClosedError);
}
