#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galilei/report.hpp"
#include "galilei/textio.hpp"
#include "support.hpp"

using namespace galilei;
using namespace galilei::fieldsys;
using namespace galilei::textio;

TEST_CASE("every catalogued system round-trips through the text format") {
  for (const auto& name : catalogue_names()) {
    LinearFieldSystem sys = catalogue(name);
    LinearFieldSystem back = import_system(export_system(sys));
    CHECK(back.name == sys.name);
    REQUIRE(back.field.layout.dim() == sys.field.layout.dim());
    REQUIRE(back.current.layout.dim() == sys.current.layout.dim());
    CHECK(back.stacked() == sys.stacked());
    CHECK(back.stacked_src() == sys.stacked_src());
    for (int a = 0; a < 3; ++a) CHECK(back.field.boost_gen[a] == sys.field.boost_gen[a]);
  }
  // the second-order potential system round-trips too
  LinearFieldSystem pot = galilean_potential_system();
  LinearFieldSystem back = import_system(export_system(pot));
  CHECK(back.stacked() == pot.stacked());
}

TEST_CASE("exported text shows the expected grammar") {
  std::string text = export_system(catalogue("scalar_system"));
  CHECK(text.find("system scalar_system") == 0);
  CHECK(text.find("fields R:vec B:scalar") != std::string::npos);
  CHECK(text.find("J4 : 1 * dx R.x + 1 * dy R.y + 1 * dz R.z + -1 * src j4 = 0") !=
        std::string::npos);
  CHECK(text.find("calW.x : 1 * dt R.x + -1 * dx B = 0") != std::string::npos);
  CHECK(text.find("currents j4:scalar") != std::string::npos);
}

TEST_CASE("scheme files parse into exactly invertible matrices") {
  auto scheme = parse_scheme("4\n e 0 0 0\n 0 e 0 0\n 0 0 e 0\n 0 0 0 1\n", "v1-file");
  CHECK(scheme.V == contraction::scheme_v1().V);
  CHECK(scheme.V_inv == contraction::scheme_v1().V_inv);

  CHECK_THROWS(parse_scheme("2\n e e\n e e\n"));
  CHECK_THROWS(parse_scheme("1\n"));

  auto v3 = parse_scheme("5\n"
                         "1 0 0 0 0\n"
                         "0 1 0 0 0\n"
                         "0 0 1 0 0\n"
                         "0 0 0 1/2*e 1/2*e\n"
                         "0 0 0 -e^-1 e^-1\n",
                         "v3-file");
  CHECK(v3.V == contraction::scheme_v3().V);
}

TEST_CASE("reports are deterministic and carry the convention record") {
  using namespace galilei::report;
  Json a = covariance_report("magnetic");
  Json b = covariance_report("magnetic");
  CHECK(a.dump() == b.dump());
  CHECK(a.contains("convention"));
  CHECK(a["pass"].get<bool>());

  Json lim1 = limits_report("v1", "magnetic", {});
  Json lim2 = limits_report("v1", "magnetic", {});
  CHECK(lim1.dump() == lim2.dump());

  Json red = reduce_report("magnetic", {"E_m"}, {});
  CHECK_FALSE(red["pass"].get<bool>());
  CHECK(red["error"] == "NotInvariant");

  Json cat = catalog_export_report("electric");
  CHECK(cat["text"].get<std::string>().find("H_e") != std::string::npos);
}
