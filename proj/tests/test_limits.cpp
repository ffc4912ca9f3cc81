#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galilei/limits.hpp"
#include "support.hpp"

using namespace galilei;
using namespace galilei::limits;

TEST_CASE("the default wave is null and gauge consistent") {
  CHECK_NOTHROW(validate_wave(default_wave()));
  Wave bad = default_wave();
  bad.p0 = 4;  // not null
  CHECK_THROWS_AS(validate_wave(bad), DispersionViolatedError);
  Wave bad2 = default_wave();
  bad2.amp[3] = GQ(1);  // breaks the gauge
  CHECK_THROWS_AS(validate_wave(bad2), DispersionViolatedError);
}

TEST_CASE("unsupported pairings are rejected") {
  LimitProbe probe;
  probe.scheme = "v1";
  probe.target = "electric";
  CHECK_THROWS_AS(run_probe(probe), TargetMismatchError);
}

TEST_CASE("the eps ladder must be decreasing inside (0,1]") {
  LimitProbe probe;
  probe.scheme = "v1";
  probe.target = "magnetic";
  probe.eps_values = {0.1, 0.2};
  CHECK_THROWS_AS(run_probe(probe), std::invalid_argument);
  probe.eps_values = {1.5, 0.1};
  CHECK_THROWS_AS(run_probe(probe), std::invalid_argument);
}

TEST_CASE("a zero wave leaves every residual exactly zero") {
  LimitProbe probe;
  probe.scheme = "v1";
  probe.target = "magnetic";
  probe.wave.amp = {GQ(), GQ(), GQ(), GQ(), GQ()};
  auto table = run_probe(probe);
  CHECK(table.all_zero);
  for (const auto& row : table.residual)
    for (double r : row) CHECK(r == 0.0);
}

TEST_CASE("float slopes match the exact symbolic leading orders") {
  const std::vector<std::pair<std::string, std::string>> probes{
      {"v1", "magnetic"}, {"v2", "electric"}, {"v3", "extended"}};
  for (const auto& [scheme, target] : probes) {
    LimitProbe probe;
    probe.scheme = scheme;
    probe.target = target;
    auto table = run_probe(probe);
    REQUIRE_FALSE(table.all_zero);
    CHECK(table.symbolic_max_order >= 1);
    CHECK(std::abs(table.slope - double(table.symbolic_max_order)) <= 0.1);
    CHECK(table.slope >= 0.9);
    CHECK(table.exact_check_rel_err <= 1e-12);
    // residuals never grow along the ladder
    for (size_t k = 1; k < table.max_residual.size(); ++k)
      CHECK(table.max_residual[k] <= table.max_residual[k - 1]);
    // per-row float decay agrees with the per-row symbolic order; rows the
    // exact expansion kills entirely sit at the rounding floor
    for (size_t r = 0; r < table.symbolic_order.size(); ++r) {
      if (table.symbolic_order[r] < 0) {
        for (const auto& row : table.residual) CHECK(row[r] <= 1e-12);
      } else {
        CHECK(std::abs(table.row_slope[r] - double(table.symbolic_order[r])) <= 0.1);
      }
    }
  }
}

TEST_CASE("extended probe: the homogeneous rows vanish identically and the "
          "sourced rows decay at staggered orders") {
  LimitProbe probe;
  probe.scheme = "v3";
  probe.target = "extended";
  auto table = run_probe(probe);
  std::map<std::string, int> order;
  for (size_t r = 0; r < table.equations.size(); ++r)
    order[table.equations[r]] = table.symbolic_order[r];
  CHECK(order["calN.x"] == -1);
  CHECK(order["calW.x"] == -1);
  CHECK(order["calR.x"] == -1);
  CHECK(order["calB"] == -1);
  CHECK(order["J0"] == 1);
  CHECK(order["J.x"] == 2);
  CHECK(order["J4"] == 3);
}

TEST_CASE("probe tables are bit-identical across runs") {
  LimitProbe probe;
  probe.scheme = "v1";
  probe.target = "magnetic";
  auto a = run_probe(probe), b = run_probe(probe);
  CHECK(a.residual == b.residual);
  CHECK(a.slope == b.slope);
  CHECK(a.max_residual == b.max_residual);
}

TEST_CASE("residual over eps^slope stays bounded above and below") {
  LimitProbe probe;
  probe.scheme = "v1";
  probe.target = "magnetic";
  auto table = run_probe(probe);
  double lo = 1e300, hi = 0;
  for (size_t k = 0; k < table.eps.size(); ++k) {
    double scaled = table.max_residual[k] / std::pow(table.eps[k], table.slope);
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  CHECK(hi / lo < 2.0);
}
