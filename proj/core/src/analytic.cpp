#include "spinkerr/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spinkerr {

namespace {

constexpr Complex half_i{0.0, 0.5};

double abs2(Complex z) { return std::norm(z); }

double quiet_nan() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

SingleModeAmplitudes single_mode_amplitudes(const ModelPoint& mp) {
  mp.validate();
  const double e1 = mp.delta_l + mp.delta_f;
  const double e2 = 2.0 * (mp.delta_l + mp.delta_f) + 2.0 * mp.chi;
  SingleModeAmplitudes out;
  out.c0 = 1.0;
  out.c1 = -mp.xi / (e1 - half_i * mp.gamma);
  out.c2 = -std::sqrt(2.0) * mp.xi * out.c1 / (e2 - Complex(0.0, 1.0) * mp.gamma);
  out.normalization = 1.0 + abs2(out.c1) + abs2(out.c2);
  return out;
}

ObservableSet single_mode_observables(const ModelPoint& mp, Drive drive) {
  mp.validate();
  const double e1 = mp.delta_l + mp.delta_f;
  const double g24 = mp.gamma * mp.gamma / 4.0;
  ObservableSet out;
  out.n = mp.xi * mp.xi / (e1 * e1 + g24);
  out.g2 = (e1 * e1 + g24) / ((e1 + mp.chi) * (e1 + mp.chi) + g24);
  out.g3 = quiet_nan();
  SingleModeAmplitudes amp = single_mode_amplitudes(mp);
  out.distribution = Eigen::MatrixXd(3, 1);
  out.distribution << 1.0 / amp.normalization, abs2(amp.c1) / amp.normalization,
      abs2(amp.c2) / amp.normalization;
  out.drive = drive;
  return out;
}

ObservableSet single_mode_observables_normalized(const ModelPoint& mp, Drive drive) {
  ObservableSet out = single_mode_observables(mp, drive);
  Eigen::VectorXd p = out.distribution.col(0);
  double n = factorial_moment(p, 1);
  out.n = n;
  out.g2 = factorial_moment(p, 2) / (n * n);
  out.g3 = quiet_nan();
  return out;
}

TwoModeConstants two_mode_constants(const ModelPoint& mp) {
  mp.validate();
  const double dplus = mp.delta_l + mp.delta_f;
  const double dminus = mp.delta_l - mp.delta_f;
  const Complex jj = mp.j * mp.j;
  TwoModeConstants k;
  k.d3 = dplus - half_i * mp.gamma;
  k.d4 = dminus - half_i * mp.gamma;
  k.d5 = k.d3 + mp.chi;
  k.d6 = k.d4 + mp.chi;
  k.d7 = k.d5 + mp.chi;
  k.d8 = k.d6 + mp.chi;
  k.sig1 = k.d4 + k.d5;
  k.sig2 = k.d5 + k.d6;
  k.sig3 = k.d7 + k.d8;
  k.zeta = k.sig2 * k.sig2 + k.sig3 * k.d7 - 4.0 * jj;
  k.eta1 = jj - k.d3 * k.d4;
  k.eta2 = jj - k.d5 * k.d6;
  k.eta3 = jj - k.d7 * k.d8;
  k.mu = k.eta3 * (k.eta3 - 2.0 * k.sig3 * k.sig3);
  k.gam3 = (2.0 * k.d8 * k.d8 - k.eta3) *
           (jj * mp.chi + k.d6 * (k.sig2 * k.d4 + 2.0 * k.sig1 * k.d7));
  k.gam4 = k.sig1 * (k.eta3 - 2.0 * k.d7 * k.d7 - 4.0 * k.d6 * k.d7) -
           2.0 * (jj * mp.chi + k.sig2 * k.d4 * k.d6);
  // Three-photon numerator split so that eta3*gam1 - d8*gam2 carries the
  // driven-mode amplitude.
  Complex n30 = -(jj * (k.gam3 + 2.0 * jj * k.sig1 * k.d7 * k.d8) +
                  k.mu * (k.sig2 * k.d4 * k.d6 + jj * mp.chi)) /
                k.d7;
  k.gam2 = 2.0 * k.d8 * k.d8 *
           (k.sig2 * k.d4 * k.d6 + k.d7 * k.d8 * mp.chi +
            k.sig1 * k.d7 * (2.0 * k.d6 + k.d7));
  k.gam1 = (n30 + k.d8 * k.gam2) / k.eta3;
  return k;
}

void assert_nondegenerate(const TwoModeConstants& k, double gamma) {
  const double g2 = gamma * gamma;
  const double tiny = 1e-12;
  if (std::abs(k.eta1) < tiny * g2 || std::abs(k.eta2) < tiny * g2 ||
      std::abs(k.mu) < tiny * g2 * g2 || std::abs(k.sig2) < tiny * gamma)
    throw std::domain_error(
        "closed-form amplitudes degenerate at this point (vanishing denominator)");
}

TwoModeAmplitudes two_mode_amplitudes(const ModelPoint& mp) {
  TwoModeConstants k = two_mode_constants(mp);
  assert_nondegenerate(k, mp.gamma);
  const double x = mp.xi;
  const double jc = mp.j;
  const Complex jj = jc * jc;
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
  const Complex pair_denom = k.eta1 * k.eta2 * k.sig2;
  const Complex triple_denom = k.sig2 * k.mu * k.eta1 * k.eta2;

  TwoModeAmplitudes a;
  a.k = k;
  a.c00 = 1.0;
  a.c10 = x * k.d4 / k.eta1;
  a.c01 = -x * jc / k.eta1;
  a.c02 = jj * x * x * k.sig1 / (r2 * pair_denom);
  a.c11 = -jc * x * x * k.d6 * k.sig1 / pair_denom;
  a.c20 = x * x * (k.sig2 * k.d4 * k.d6 + jj * mp.chi) / (r2 * pair_denom);
  const double x3 = x * x * x;
  a.c03 = -jc * jc * jc * x3 * k.gam4 / (r6 * triple_denom);
  a.c12 = jj * x3 * k.d8 * k.gam4 / (r2 * triple_denom);
  a.c21 = jc * x3 * (k.gam3 + 2.0 * jj * k.sig1 * k.d7 * k.d8) / (r2 * triple_denom);
  a.c30 = x3 * (k.eta3 * k.gam1 - k.d8 * k.gam2) / (r6 * triple_denom);
  a.normalization = abs2(a.c00) + abs2(a.c10) + abs2(a.c01) + abs2(a.c20) +
                    abs2(a.c11) + abs2(a.c02) + abs2(a.c30) + abs2(a.c21) +
                    abs2(a.c12) + abs2(a.c03);
  return a;
}

namespace {

Eigen::MatrixXd joint_distribution(const TwoModeAmplitudes& a) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(4, 4);
  const double m = a.normalization;
  p(0, 0) = abs2(a.c00) / m;
  p(1, 0) = abs2(a.c10) / m;
  p(0, 1) = abs2(a.c01) / m;
  p(2, 0) = abs2(a.c20) / m;
  p(1, 1) = abs2(a.c11) / m;
  p(0, 2) = abs2(a.c02) / m;
  p(3, 0) = abs2(a.c30) / m;
  p(2, 1) = abs2(a.c21) / m;
  p(1, 2) = abs2(a.c12) / m;
  p(0, 3) = abs2(a.c03) / m;
  return p;
}

}  // namespace

ObservableSet two_mode_observables(const ModelPoint& mp, Drive drive) {
  TwoModeAmplitudes a = two_mode_amplitudes(mp);
  const TwoModeConstants& k = a.k;
  const Complex jj = mp.j * mp.j;
  const double x2 = mp.xi * mp.xi;
  const double d4_2 = abs2(k.d4);
  const double e1_2 = abs2(k.eta1);
  const double e2s2 = abs2(k.eta2) * abs2(k.sig2);

  ObservableSet out;
  out.n = x2 * d4_2 / e1_2;
  out.g2 = e1_2 * abs2(k.sig2 * k.d4 * k.d6 + jj * mp.chi) / (e2s2 * d4_2 * d4_2);
  out.g3 = e1_2 * e1_2 * abs2(k.eta3 * k.gam1 - k.d8 * k.gam2) /
           (abs2(k.mu) * e2s2 * d4_2 * d4_2 * d4_2);
  out.distribution = joint_distribution(a);
  out.drive = drive;
  return out;
}

ObservableSet two_mode_observables_normalized(const ModelPoint& mp, Drive drive) {
  TwoModeAmplitudes a = two_mode_amplitudes(mp);
  ObservableSet out;
  out.distribution = joint_distribution(a);
  Eigen::VectorXd marginal = mode_marginal(out.distribution, 1);
  const double n = factorial_moment(marginal, 1);
  out.n = n;
  out.g2 = factorial_moment(marginal, 2) / (n * n);
  out.g3 = factorial_moment(marginal, 3) / (n * n * n);
  out.drive = drive;
  return out;
}

ObservableSet analytic_observables(const ModelPoint& mp, Model model, Drive drive) {
  return model == Model::single_mode ? single_mode_observables(mp, drive)
                                     : two_mode_observables(mp, drive);
}

}  // namespace spinkerr
