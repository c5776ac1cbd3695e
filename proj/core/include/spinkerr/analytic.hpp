#ifndef SPINKERR_ANALYTIC_HPP
#define SPINKERR_ANALYTIC_HPP

#include "spinkerr/hamiltonian.hpp"
#include "spinkerr/observables.hpp"

namespace spinkerr {

// Closed-form weak-drive steady state, valid for xi << gamma. The state is
// expanded over few-photon Fock amplitudes; decay enters through complex
// ladder energies. Two flavors of observables are exposed:
//   *_observables            leading order in xi/gamma (what sweeps report
//                            as the analytic engine),
//   *_observables_normalized ratios of the normalized amplitude populations
//                            (keeps the O((xi/gamma)^2) normalization terms;
//                            used for convergence diagnostics).

struct SingleModeAmplitudes {
  Complex c0;  // always 1
  Complex c1;
  Complex c2;
  double normalization;  // M = 1 + |c1|^2 + |c2|^2
};

SingleModeAmplitudes single_mode_amplitudes(const ModelPoint& mp);

// Leading order: N = xi^2 / (E1^2 + gamma^2/4) and
// g2 = (E1^2 + gamma^2/4) / ((E1+chi)^2 + gamma^2/4) with E1 = delta_l+delta_f.
// g3 is NaN (the expansion stops at two photons).
ObservableSet single_mode_observables(const ModelPoint& mp, Drive drive);

ObservableSet single_mode_observables_normalized(const ModelPoint& mp, Drive drive);

// Intermediate constants of the two-mode closed forms. Detunings d3..d8 are
// the one-, two- and three-photon ladder energies shifted into the complex
// plane by -i*gamma/2 steps of chi; eta_k are the corresponding two-mode
// secular determinants, mu the three-photon system determinant scaled by
// d7*d8, and gam1..gam4 the numerator polynomials of the three-photon
// amplitudes. zeta is carried for completeness.
struct TwoModeConstants {
  Complex d3, d4, d5, d6, d7, d8;
  Complex sig1, sig2, sig3;
  Complex zeta;
  Complex eta1, eta2, eta3;
  Complex mu;
  Complex gam1, gam2, gam3, gam4;
};

TwoModeConstants two_mode_constants(const ModelPoint& mp);

// Throws std::domain_error if eta1, eta2, mu, or sig2 is within 1e-12 of
// zero on its natural gamma-power scale (cannot happen for gamma > 0 at
// generic parameters; guards contrived inputs).
void assert_nondegenerate(const TwoModeConstants& k, double gamma);

struct TwoModeAmplitudes {
  // c_mn: m photons in the driven mode, n in the counter-propagating mode.
  Complex c00;  // always 1
  Complex c10, c01;
  Complex c20, c11, c02;
  Complex c30, c21, c12, c03;
  TwoModeConstants k;
  double normalization;  // M = sum |c_mn|^2
};

TwoModeAmplitudes two_mode_amplitudes(const ModelPoint& mp);

// Leading-order N, g2, g3 of the driven mode. distribution carries the
// normalized joint populations |c_mn|^2 / M.
ObservableSet two_mode_observables(const ModelPoint& mp, Drive drive);

ObservableSet two_mode_observables_normalized(const ModelPoint& mp, Drive drive);

// Dispatch on the model.
ObservableSet analytic_observables(const ModelPoint& mp, Model model, Drive drive);

}  // namespace spinkerr

#endif
