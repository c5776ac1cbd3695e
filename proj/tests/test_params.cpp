#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinkerr/params.hpp"

using namespace spinkerr;

namespace {

PhysicalParams spinning(double omega, Drive drive = Drive::cw) {
  PhysicalParams p;
  p.omega_rad_s = omega;
  p.drive = drive;
  return p;
}

}  // namespace

TEST_SUITE("params") {

TEST_CASE("reference rates reproduce hand-evaluated values") {
  DerivedRates r = derive_rates(PhysicalParams{});
  CHECK(r.omega0 == doctest::Approx(1.215259075683131e+15).epsilon(1e-12));
  CHECK(r.gamma == doctest::Approx(2.430518151366262e+05).epsilon(1e-12));
  CHECK(r.chi == doctest::Approx(3.176268994618018e+05).epsilon(1e-12));
  CHECK(r.xi == doctest::Approx(1.947564794123924e+04).epsilon(1e-12));
  CHECK(r.gamma == r.omega0 / PhysicalParams{}.quality_factor);

  DerivedRates r38 = derive_rates(spinning(3.8e3));
  CHECK(r38.sagnac_abs == doctest::Approx(3.168810138330570e+05).epsilon(1e-12));
  DerivedRates r58 = derive_rates(spinning(5.8e3));
  CHECK(r58.sagnac_abs / r58.gamma ==
        doctest::Approx(1.989948087924975).epsilon(1e-12));
}

TEST_CASE("rate ratios sit in the documented bands") {
  DerivedRates r = derive_rates(spinning(3.8e3));
  CHECK(r.chi / r.gamma == doctest::Approx(1.30).epsilon(0.02));
  CHECK(r.xi / r.gamma == doctest::Approx(0.080).epsilon(0.025));
  CHECK(r.sagnac_abs / r.gamma == doctest::Approx(1.30).epsilon(0.02));
}

TEST_CASE("zero spin gives zero shift") {
  DerivedRates r = derive_rates(PhysicalParams{});
  CHECK(r.sagnac_abs == 0.0);
  CHECK(r.sagnac == 0.0);
}

TEST_CASE("drive direction flips only the sign of the shift") {
  DerivedRates cw = derive_rates(spinning(3.8e3, Drive::cw));
  DerivedRates ccw = derive_rates(spinning(3.8e3, Drive::ccw));
  CHECK(cw.sagnac == cw.sagnac_abs);
  CHECK(ccw.sagnac == -ccw.sagnac_abs);
  CHECK(cw.sagnac == -ccw.sagnac);
  CHECK(cw.gamma == ccw.gamma);
  CHECK(cw.chi == ccw.chi);
  CHECK(cw.xi == ccw.xi);
}

TEST_CASE("shift is linear in the spin rate") {
  DerivedRates one = derive_rates(spinning(2.7e3));
  DerivedRates two = derive_rates(spinning(5.4e3));
  CHECK(two.sagnac_abs == doctest::Approx(2.0 * one.sagnac_abs).epsilon(1e-14));
}

TEST_CASE("dispersion term rescales the drag factor") {
  PhysicalParams p = spinning(3.8e3);
  p.dn1_dlambda_per_m = 1e4;
  DerivedRates disp = derive_rates(p);
  CHECK(disp.sagnac_abs == doctest::Approx(3.097181825828722e+05).epsilon(1e-12));

  DerivedRates plain = derive_rates(spinning(3.8e3));
  double drag0 = 1.0 - 1.0 / (p.n1 * p.n1);
  double drag1 = drag0 - (p.wavelength_m / p.n1) * p.dn1_dlambda_per_m;
  CHECK(plain.sagnac_abs / disp.sagnac_abs ==
        doctest::Approx(drag0 / drag1).epsilon(1e-12));
}

TEST_CASE("invalid physical inputs are rejected") {
  PhysicalParams p;
  p.wavelength_m = -1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);

  p = PhysicalParams{};
  p.quality_factor = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);

  p = PhysicalParams{};
  p.omega_rad_s = -5.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);

  p = PhysicalParams{};
  p.power_w = std::nan("");
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);

  p = PhysicalParams{};
  p.n2_m2_per_w = -2e-15;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);

  CHECK_NOTHROW(PhysicalParams{}.validate());
  CHECK_THROWS_AS(derive_rates(p), std::invalid_argument);
}

TEST_CASE("a vanishing nonlinear index is a valid linear resonator") {
  PhysicalParams p;
  p.n2_m2_per_w = 0.0;
  CHECK_NOTHROW(p.validate());
  DerivedRates r = derive_rates(p);
  CHECK(r.chi == 0.0);
  CHECK(r.xi > 0.0);
}

TEST_CASE("enum round trips and parse errors") {
  CHECK(parse_drive("cw") == Drive::cw);
  CHECK(parse_drive("ccw") == Drive::ccw);
  CHECK_THROWS_AS(parse_drive("up"), std::invalid_argument);
  CHECK(opposite(Drive::cw) == Drive::ccw);
  CHECK(opposite(Drive::ccw) == Drive::cw);
  CHECK(to_string(Drive::ccw) == "ccw");

  CHECK(parse_model("single") == Model::single_mode);
  CHECK(parse_model("single_mode") == Model::single_mode);
  CHECK(parse_model("two_mode") == Model::two_mode);
  CHECK_THROWS_AS(parse_model("triple"), std::invalid_argument);

  CHECK(parse_engine("numeric") == Engine::numeric);
  CHECK(parse_engine("analytic") == Engine::analytic);
  CHECK(parse_engine("both") == Engine::both);
  CHECK_THROWS_AS(parse_engine("fast"), std::invalid_argument);
}

TEST_CASE("default truncation per model") {
  CHECK(default_dimension(Model::single_mode) == 8);
  CHECK(default_dimension(Model::two_mode) == 6);
}

TEST_CASE("config files parse keys, comments, and overrides") {
  std::istringstream in(
      "# reference setup\n"
      "wavelength_m = 1.55e-6\n"
      "quality_factor = 5e9\n"
      "mode_volume_m3 = 150e-18\n"
      "n0 = 1.4\n"
      "n1 = 1.4\n"
      "n2_m2_per_w = 2e-15\n"
      "radius_m = 30e-6\n"
      "power_w = 2e-16\n"
      "omega_rad_s = 5.8e3   # spin rate\n"
      "\n"
      "j_over_gamma = 2\n"
      "delta_l_over_gamma = -0.25\n"
      "drive = ccw\n"
      "model = two_mode\n"
      "engine = both\n"
      "nmax = 7\n");
  RunConfig cfg = load_config(in);
  CHECK(cfg.physical.omega_rad_s == 5.8e3);
  CHECK(cfg.physical.drive == Drive::ccw);
  CHECK(cfg.j_over_gamma == 2.0);
  CHECK(cfg.delta_l_over_gamma == -0.25);
  CHECK(cfg.model == Model::two_mode);
  CHECK(cfg.engine == Engine::both);
  CHECK(cfg.nmax == 7);
}

TEST_CASE("config rejects unknown keys and malformed values with line numbers") {
  std::istringstream unknown("wavelength_m = 1.55e-6\nqualty_factor = 5e9\n");
  CHECK_THROWS_WITH_AS(load_config(unknown),
                       doctest::Contains("line 2"), std::runtime_error);

  std::istringstream bad_value("power_w = strong\n");
  CHECK_THROWS_AS(load_config(bad_value), std::runtime_error);

  std::istringstream no_equals("power_w 2e-16\n");
  CHECK_THROWS_AS(load_config(no_equals), std::runtime_error);

  std::istringstream bad_enum("drive = sideways\n");
  CHECK_THROWS_AS(load_config(bad_enum), std::runtime_error);

  CHECK_THROWS_AS(load_config_file("/nonexistent/config.txt"), std::runtime_error);
}

TEST_CASE("dispersion key is loadable from config") {
  std::istringstream in("dn1_dlambda_per_m = 1e4\nomega_rad_s = 3.8e3\n");
  RunConfig cfg = load_config(in);
  CHECK(cfg.physical.dn1_dlambda_per_m == 1e4);
  DerivedRates r = derive_rates(cfg.physical);
  CHECK(r.sagnac_abs == doctest::Approx(3.097181825828722e+05).epsilon(1e-12));
}

}  // TEST_SUITE
