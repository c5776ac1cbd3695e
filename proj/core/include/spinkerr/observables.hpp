#ifndef SPINKERR_OBSERVABLES_HPP
#define SPINKERR_OBSERVABLES_HPP

#include "spinkerr/fock.hpp"
#include "spinkerr/params.hpp"

namespace spinkerr {

// Correlation functions are undefined below this mean photon number; the
// extractors throw std::domain_error instead of returning NaN.
inline constexpr double vacuum_threshold = 1e-15;

// Photon statistics of one drive direction. For the two-mode model every
// scalar refers to the driven mode; distribution is then the joint P(m, n)
// with the driven mode as the row index. g3 is NaN where a model does not
// define it (the single-mode closed forms stop at two photons).
struct ObservableSet {
  double n = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
  Eigen::MatrixXd distribution;
  Drive drive = Drive::cw;
};

// Modes are numbered 1 (driven) and 2; single-mode states only accept 1.
double mean_photon(const DensityMatrix& rho, int mode = 1);

// g2(0) = <a^dag^2 a^2> / <a^dag a>^2 via operator expectations.
double g2_zero(const DensityMatrix& rho, int mode = 1);

// g3(0) = <a^dag^3 a^3> / <a^dag a>^3 via operator expectations.
double g3_zero(const DensityMatrix& rho, int mode = 1);

// Diagonal of rho as P(n), or P(m, n) for two modes.
Eigen::MatrixXd photon_distribution(const DensityMatrix& rho);

// Marginal distribution of one mode of a joint P(m, n).
Eigen::VectorXd mode_marginal(const Eigen::MatrixXd& joint, int mode);

// k-th factorial moment <n(n-1)...(n-k+1)> of a number distribution.
// Independent of the operator route; used to cross-check it.
double factorial_moment(const Eigen::VectorXd& marginal, int order);

// Full set for the driven mode, tagged with the drive direction.
ObservableSet observe(const DensityMatrix& rho, Drive drive);

}  // namespace spinkerr

#endif
