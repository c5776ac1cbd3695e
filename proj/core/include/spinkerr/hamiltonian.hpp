#ifndef SPINKERR_HAMILTONIAN_HPP
#define SPINKERR_HAMILTONIAN_HPP

#include "spinkerr/fock.hpp"
#include "spinkerr/params.hpp"

namespace spinkerr {

// One operating point of either model, all rates in rad/s. delta_f is the
// signed Sagnac shift of the driven mode; the counter-propagating mode in
// the two-mode model sees -delta_f. Driving cw instead of ccw flips the
// sign of delta_f and nothing else.
struct ModelPoint {
  double delta_l = 0.0;  // laser detuning omega0 - omega_L
  double delta_f = 0.0;  // signed Sagnac shift of the driven mode
  double chi = 0.0;      // Kerr shift
  double xi = 0.0;       // drive amplitude
  double gamma = 1.0;    // linewidth
  double j = 0.0;        // backscattering coupling

  // gamma > 0; chi, xi, j >= 0. Throws std::invalid_argument.
  void validate() const;
};

// Assemble the operating point for a physical configuration: derives the
// rates and applies the drive-direction sign to the Sagnac shift.
ModelPoint make_point(const PhysicalParams& p, double delta_l_over_gamma,
                      double j_over_gamma);

// Fock-ladder energy of the driven mode: n*(delta_l + delta_f) + (n^2-n)*chi.
double eigenenergy(int n, const ModelPoint& mp);

// Driven Kerr mode in the frame rotating at the drive frequency:
//   (delta_l + delta_f) a^dag a + chi a^dag a^dag a a + xi (a^dag + a).
FockOperator build_h1(const ModelPoint& mp, int dim);

// Two counter-propagating modes with self-Kerr, cross-Kerr (2*chi),
// backscattering J, and the drive on mode 1:
//   sum_j Delta_j n_j + chi sum_j a_j^dag a_j^dag a_j a_j
//   + 2 chi n_1 n_2 + J (a_1^dag a_2 + a_2^dag a_1) + xi (a_1^dag + a_1),
// where Delta_1 = delta_l + delta_f and Delta_2 = delta_l - delta_f.
FockOperator build_h2(const ModelPoint& mp, int d1, int d2);

}  // namespace spinkerr

#endif
