#include "spinkerr/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace spinkerr {

namespace {

FockOperator mode_ladder(const DensityMatrix& rho, int mode) {
  const int n_modes = static_cast<int>(rho.dims.size());
  if (mode < 1 || mode > n_modes)
    throw std::invalid_argument("mode index out of range");
  if (n_modes == 1) return annihilation(rho.dims[0]);
  return embed_two_mode(annihilation(rho.dims[mode - 1]), mode, rho.dims[0],
                        rho.dims[1]);
}

// <a^dag^k a^k> via the operator route: build the normally ordered product
// and trace it against rho. The distribution route (factorial_moment) is the
// independent cross-check.
double ordered_moment(const DensityMatrix& rho, int mode, int order) {
  FockOperator a = mode_ladder(rho, mode);
  SparseMatrix ak = a.mat;
  for (int k = 1; k < order; ++k) ak = SparseMatrix(ak * a.mat);
  FockOperator op{rho.dims, SparseMatrix(SparseMatrix(ak.adjoint()) * ak)};
  return std::real(expectation(rho.mat, op));
}

double corr(const DensityMatrix& rho, int mode, int order) {
  double nbar = ordered_moment(rho, mode, 1);
  if (nbar < vacuum_threshold)
    throw std::domain_error("correlation function undefined: mean photon number below 1e-15");
  return ordered_moment(rho, mode, order) / std::pow(nbar, order);
}

}  // namespace

double mean_photon(const DensityMatrix& rho, int mode) {
  return ordered_moment(rho, mode, 1);
}

double g2_zero(const DensityMatrix& rho, int mode) { return corr(rho, mode, 2); }

double g3_zero(const DensityMatrix& rho, int mode) { return corr(rho, mode, 3); }

Eigen::MatrixXd photon_distribution(const DensityMatrix& rho) {
  const int d1 = rho.dims[0];
  const int d2 = rho.dims.size() == 2 ? rho.dims[1] : 1;
  Eigen::MatrixXd p(d1, d2);
  for (int m = 0; m < d1; ++m)
    for (int n = 0; n < d2; ++n) p(m, n) = std::real(rho.mat(m * d2 + n, m * d2 + n));
  return p;
}

Eigen::VectorXd mode_marginal(const Eigen::MatrixXd& joint, int mode) {
  if (mode == 1) return joint.rowwise().sum();
  if (mode == 2) return joint.colwise().sum().transpose();
  throw std::invalid_argument("mode index out of range");
}

double factorial_moment(const Eigen::VectorXd& marginal, int order) {
  double sum = 0.0;
  for (int n = 0; n < marginal.size(); ++n) {
    double weight = 1.0;
    for (int k = 0; k < order; ++k) weight *= double(n - k);
    sum += weight * marginal[n];
  }
  return sum;
}

ObservableSet observe(const DensityMatrix& rho, Drive drive) {
  ObservableSet out;
  out.n = mean_photon(rho, 1);
  if (out.n >= vacuum_threshold) {
    out.g2 = g2_zero(rho, 1);
    out.g3 = g3_zero(rho, 1);
  } else {
    out.g2 = 0.0;
    out.g3 = 0.0;
  }
  out.distribution = photon_distribution(rho);
  out.drive = drive;
  return out;
}

}  // namespace spinkerr
