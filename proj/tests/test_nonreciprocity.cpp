#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "spinkerr/nonreciprocity.hpp"

using namespace spinkerr;

namespace {

ObservableSet make_set(double n, double g2, double g3, Drive drive) {
  ObservableSet obs;
  obs.n = n;
  obs.g2 = g2;
  obs.g3 = g3;
  obs.drive = drive;
  return obs;
}

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

}  // namespace

TEST_SUITE("nonreciprocity") {

TEST_CASE("second-order contrast across the blockade window") {
  ObservableSet cw = make_set(3.3e-3, 0.28, nan_v, Drive::cw);
  ObservableSet ccw = make_set(3.3e-3, 7.0, nan_v, Drive::ccw);
  NRReport rep = ratios(cw, ccw);
  CHECK(rep.r1_db == 0.0);
  CHECK(rep.r2_db == doctest::Approx(13.97940008672038).epsilon(1e-13));
  CHECK(rep.r3_db == 0.0);
  CHECK_FALSE(rep.cnr);
  CHECK(rep.qnr);
  CHECK_FALSE(rep.hqnr);
  CHECK_FALSE(rep.reciprocal);
}

TEST_CASE("identical statistics classify as reciprocal") {
  ObservableSet cw = make_set(1.7e-3, 0.9, 0.8, Drive::cw);
  ObservableSet ccw = make_set(1.7e-3, 0.9, 0.8, Drive::ccw);
  NRReport rep = ratios(cw, ccw);
  CHECK(rep.r1_db == 0.0);
  CHECK(rep.r2_db == 0.0);
  CHECK(rep.r3_db == 0.0);
  CHECK(rep.reciprocal);
  CHECK_FALSE(rep.cnr);
  CHECK_FALSE(rep.qnr);
  CHECK_FALSE(rep.hqnr);
}

TEST_CASE("third-order-only contrast with both lower orders quiet") {
  ToleranceConfig tol;
  tol.photon_equality_rel = 1e-2;
  ObservableSet cw = make_set(4.008e-4, 1.052, 0.86, Drive::cw);
  ObservableSet ccw = make_set(4.028e-4, 6.131, 272.68, Drive::ccw);
  NRReport rep = ratios(cw, ccw, tol);
  CHECK(rep.r1_db == 0.0);
  CHECK(rep.r2_db == 0.0);  // both sides above 1, no straddle
  CHECK(rep.r3_db ==
        doctest::Approx(10.0 * std::log10(272.68 / 0.86)).epsilon(1e-13));
  CHECK(rep.hqnr);
  CHECK_FALSE(rep.cnr);
  CHECK_FALSE(rep.qnr);
  CHECK_FALSE(rep.reciprocal);
}

TEST_CASE("photon equality band controls the first ratio") {
  ObservableSet cw = make_set(1.000e-3, 0.5, 0.4, Drive::cw);
  ObservableSet ccw = make_set(1.005e-3, 1.5, 1.4, Drive::ccw);

  NRReport tight = ratios(cw, ccw);  // default band 1e-6, 5e-3 contrast counts
  CHECK(tight.r1_db != 0.0);
  CHECK(tight.cnr);
  CHECK_FALSE(tight.hqnr);

  ToleranceConfig wide;
  wide.photon_equality_rel = 1e-2;
  NRReport loose = ratios(cw, ccw, wide);
  CHECK(loose.r1_db == 0.0);
  CHECK_FALSE(loose.cnr);
  CHECK(loose.r2_db != 0.0);
  CHECK(loose.qnr);
}

TEST_CASE("swapping the directions negates every live ratio exactly") {
  ObservableSet a = make_set(2.0e-3, 0.3, 0.2, Drive::cw);
  ObservableSet b = make_set(9.0e-3, 4.0, 11.0, Drive::ccw);
  NRReport fwd = ratios(a, b);

  ObservableSet a2 = b;
  a2.drive = Drive::cw;
  ObservableSet b2 = a;
  b2.drive = Drive::ccw;
  NRReport rev = ratios(a2, b2);

  CHECK(fwd.r1_db == -rev.r1_db);
  CHECK(fwd.r2_db == -rev.r2_db);
  CHECK(fwd.r3_db == -rev.r3_db);
  CHECK(fwd.r1_db != 0.0);
  CHECK(fwd.r2_db != 0.0);
  CHECK(fwd.r3_db != 0.0);
}

TEST_CASE("unity dead band decides what counts as straddling") {
  ObservableSet cw = make_set(1.0e-3, 1.0 - 2e-9, 1.0, Drive::cw);
  ObservableSet ccw = make_set(2.0e-3, 1.0 + 2e-9, 7.0, Drive::ccw);
  NRReport rep = ratios(cw, ccw);
  CHECK(rep.r2_db != 0.0);  // just outside the default 1e-9 band on both sides
  CHECK(rep.r3_db == 0.0);  // g3 = 1 sits inside the band, no straddle

  ObservableSet cw2 = make_set(1.0e-3, 0.4, 0.2, Drive::cw);
  ObservableSet ccw2 = make_set(2.0e-3, 0.9, 0.7, Drive::ccw);
  NRReport same_side = ratios(cw2, ccw2);
  CHECK(same_side.r2_db == 0.0);
  CHECK(same_side.r3_db == 0.0);
}

TEST_CASE("undefined third-order correlators never straddle") {
  ObservableSet cw = make_set(1.0e-3, 0.3, nan_v, Drive::cw);
  ObservableSet ccw = make_set(5.0e-3, 3.0, 42.0, Drive::ccw);
  NRReport rep = ratios(cw, ccw);
  CHECK(rep.r3_db == 0.0);
  CHECK(rep.r2_db != 0.0);
}

TEST_CASE("re-applying the conventions changes nothing") {
  ObservableSet cw = make_set(4.008e-4, 1.052, 0.86, Drive::cw);
  ObservableSet ccw = make_set(4.028e-4, 6.131, 272.68, Drive::ccw);
  ToleranceConfig tol;
  tol.photon_equality_rel = 1e-2;
  NRReport once = ratios(cw, ccw, tol);
  NRReport twice = enforce_conventions(once, tol);
  CHECK(once.r1_db == twice.r1_db);
  CHECK(once.r2_db == twice.r2_db);
  CHECK(once.r3_db == twice.r3_db);
  CHECK(once.cnr == twice.cnr);
  CHECK(once.qnr == twice.qnr);
  CHECK(once.hqnr == twice.hqnr);
  CHECK(once.reciprocal == twice.reciprocal);
}

TEST_CASE("mismatched drive tags are rejected") {
  ObservableSet cw = make_set(1.0e-3, 0.3, 0.2, Drive::cw);
  ObservableSet ccw = make_set(5.0e-3, 3.0, 42.0, Drive::ccw);
  CHECK_THROWS_AS(ratios(ccw, cw), std::invalid_argument);
  ObservableSet mislabeled = cw;
  mislabeled.drive = Drive::ccw;
  CHECK_THROWS_AS(ratios(mislabeled, ccw), std::invalid_argument);
}

TEST_CASE("report carries both observable sets through") {
  ObservableSet cw = make_set(2.0e-3, 0.3, 0.2, Drive::cw);
  ObservableSet ccw = make_set(9.0e-3, 4.0, 11.0, Drive::ccw);
  NRReport rep = ratios(cw, ccw);
  CHECK(rep.cw.n == cw.n);
  CHECK(rep.ccw.g3 == ccw.g3);
  CHECK(rep.cw.drive == Drive::cw);
  CHECK(rep.ccw.drive == Drive::ccw);
}

}  // TEST_SUITE
