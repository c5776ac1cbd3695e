#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "spinkerr/hamiltonian.hpp"

using namespace spinkerr;

namespace {

ModelPoint reference_point(Drive drive, double omega, double dl_over_gamma = 0.0,
                           double j_over_gamma = 0.0) {
  PhysicalParams p;
  p.omega_rad_s = omega;
  p.drive = drive;
  return make_point(p, dl_over_gamma, j_over_gamma);
}

Eigen::MatrixXcd dense(const FockOperator& op) { return Eigen::MatrixXcd(op.mat); }

}  // namespace

TEST_SUITE("hamiltonian") {

TEST_CASE("make_point applies the drive sign and linewidth scaling") {
  ModelPoint cw = reference_point(Drive::cw, 3.8e3, -0.5, 2.0);
  CHECK(cw.delta_f == doctest::Approx(3.168810138330570e+05).epsilon(1e-12));
  CHECK(cw.delta_l == doctest::Approx(-0.5 * cw.gamma).epsilon(1e-14));
  CHECK(cw.j == doctest::Approx(2.0 * cw.gamma).epsilon(1e-14));

  ModelPoint ccw = reference_point(Drive::ccw, 3.8e3);
  CHECK(ccw.delta_f == doctest::Approx(-cw.delta_f).epsilon(1e-14));
}

TEST_CASE("ladder energies") {
  ModelPoint mp;
  mp.delta_l = 0.4;
  mp.delta_f = -1.1;
  mp.chi = 0.3;
  mp.gamma = 1.0;
  CHECK(eigenenergy(0, mp) == 0.0);
  CHECK(eigenenergy(1, mp) == doctest::Approx(-0.7).epsilon(1e-14));
  CHECK(eigenenergy(2, mp) == doctest::Approx(-0.8).epsilon(1e-14));
  CHECK(eigenenergy(3, mp) == doctest::Approx(-0.3).epsilon(1e-13));
  mp.chi = 0.0;
  CHECK(eigenenergy(2, mp) == doctest::Approx(2 * (0.4 - 1.1)).epsilon(1e-14));
}

TEST_CASE("driven-mode matrix is the pure ladder when on resonance and linear") {
  ModelPoint mp;
  mp.delta_l = 1.3;
  mp.delta_f = -1.3;
  mp.chi = 0.0;
  mp.xi = 0.25;
  mp.gamma = 1.0;
  Eigen::MatrixXcd h = dense(build_h1(mp, 5));
  Eigen::MatrixXcd a = dense(annihilation(5));
  CHECK((h - mp.xi * (a + a.adjoint())).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("diagonal of the undriven matrix equals the ladder energies") {
  ModelPoint mp = reference_point(Drive::ccw, 5.8e3, 0.35);
  mp.xi = 0.0;
  FockOperator h = build_h1(mp, 8);
  Eigen::MatrixXcd m = dense(h);
  for (int n = 0; n < 8; ++n)
    CHECK(m(n, n).real() ==
          doctest::Approx(eigenenergy(n, mp)).epsilon(1e-12));
  CHECK((m - m.diagonal().asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("two-photon level of the spinning resonator") {
  ModelPoint mp = reference_point(Drive::cw, 3.8e3);
  Eigen::MatrixXcd h = dense(build_h1(mp, 4));
  CHECK(h(2, 2).real() / mp.gamma ==
        doctest::Approx(5.221174035982280).epsilon(1e-12));
  CHECK(h(2, 2).real() / mp.gamma == doctest::Approx(5.22).epsilon(0.01));
}

TEST_CASE("both builders produce Hermitian matrices") {
  ModelPoint mp = reference_point(Drive::ccw, 5.8e3, 0.3, 1.7);
  Eigen::MatrixXcd h1 = dense(build_h1(mp, 7));
  CHECK((h1 - h1.adjoint()).cwiseAbs().maxCoeff() <
        1e-12 * h1.cwiseAbs().maxCoeff());
  Eigen::MatrixXcd h2 = dense(build_h2(mp, 5, 5));
  CHECK((h2 - h2.adjoint()).cwiseAbs().maxCoeff() <
        1e-12 * h2.cwiseAbs().maxCoeff());
}

TEST_CASE("two-mode matrix elements: cross-Kerr and backscattering") {
  ModelPoint mp = reference_point(Drive::cw, 5.8e3, 0.6, 2.0);
  const int d2 = 4;
  Eigen::MatrixXcd h = dense(build_h2(mp, 4, d2));

  const int i11 = 1 * d2 + 1;
  CHECK(h(i11, i11).real() ==
        doctest::Approx(2 * mp.delta_l + 2 * mp.chi).epsilon(1e-12));

  const int i10 = 1 * d2 + 0;
  const int i01 = 0 * d2 + 1;
  CHECK(h(i10, i01).real() == doctest::Approx(mp.j).epsilon(1e-12));
  CHECK(std::abs(h(i10, i01).imag()) == 0.0);

  CHECK(h(i10, i10).real() ==
        doctest::Approx(mp.delta_l + mp.delta_f).epsilon(1e-12));
  CHECK(h(i01, i01).real() ==
        doctest::Approx(mp.delta_l - mp.delta_f).epsilon(1e-12));
}

TEST_CASE("undriven two-mode matrix conserves total photon number") {
  ModelPoint mp = reference_point(Drive::ccw, 5.8e3, -0.4, 2.0);
  mp.xi = 0.0;
  const int d = 5;
  Eigen::MatrixXcd h = dense(build_h2(mp, d, d));
  FockOperator n1 = embed_two_mode(annihilation(d), 1, d, d);
  FockOperator n2 = embed_two_mode(annihilation(d), 2, d, d);
  Eigen::MatrixXcd ntot =
      dense(n1).adjoint() * dense(n1) + dense(n2).adjoint() * dense(n2);
  CHECK((h * ntot - ntot * h).cwiseAbs().maxCoeff() <
        1e-12 * h.cwiseAbs().maxCoeff());
}

TEST_CASE("drive-direction swap exchanges the mode detunings") {
  ModelPoint mp = reference_point(Drive::cw, 5.8e3, 0.2, 1.0);
  ModelPoint flipped = mp;
  flipped.delta_f = -mp.delta_f;
  const int d2 = 3;
  Eigen::MatrixXcd h = dense(build_h2(mp, 3, d2));
  Eigen::MatrixXcd g = dense(build_h2(flipped, 3, d2));
  CHECK(h(1 * d2 + 0, 1 * d2 + 0) == g(0 * d2 + 1, 0 * d2 + 1));
  CHECK(h(0 * d2 + 1, 0 * d2 + 1) == g(1 * d2 + 0, 1 * d2 + 0));
}

TEST_CASE("operating-point validation") {
  ModelPoint mp;
  mp.gamma = 0.0;
  CHECK_THROWS_AS(mp.validate(), std::invalid_argument);
  mp = ModelPoint{};
  mp.chi = -1.0;
  CHECK_THROWS_AS(mp.validate(), std::invalid_argument);
  mp = ModelPoint{};
  mp.j = -0.5;
  CHECK_THROWS_AS(mp.validate(), std::invalid_argument);
  mp = ModelPoint{};
  mp.xi = -0.1;
  CHECK_THROWS_AS(mp.validate(), std::invalid_argument);
  CHECK_NOTHROW(ModelPoint{}.validate());
}

}  // TEST_SUITE
