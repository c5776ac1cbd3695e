#ifndef SPINKERR_LINDBLAD_HPP
#define SPINKERR_LINDBLAD_HPP

#include <utility>
#include <vector>

#include "spinkerr/fock.hpp"
#include "spinkerr/hamiltonian.hpp"

namespace spinkerr {

// A steady state is accepted when ||L vec(rho)||_2 / ||L||_F is below this.
inline constexpr double steady_state_residual_tol = 1e-8;

struct SteadyStateSolution {
  DensityMatrix rho;
  double residual;      // ||L vec(rho)||_2 / ||L||_F against the unmodified L
  bool converged;       // residual < steady_state_residual_tol
  int refinements;      // iterative-refinement passes applied (0 or 1)
  std::vector<int> dims;
};

// Vectorized generator of
//   drho/dt = -i[H, rho] + sum_k (rate_k/2)(2 A_k rho A_k^dag
//                                           - A_k^dag A_k rho - rho A_k^dag A_k)
// acting on column-stacked rho. Throws std::invalid_argument on mismatched
// dimensions or a non-positive rate.
SparseMatrix build_liouvillian(
    const FockOperator& h,
    const std::vector<std::pair<FockOperator, double>>& collapse);

// Solve L vec(rho) = 0 with trace(rho) = 1 imposed by replacing the first
// scalar equation, via sparse LU. One iterative-refinement pass is applied
// if the residual misses the tolerance. Throws std::runtime_error if the
// factorization fails outright.
SteadyStateSolution steady_state(const SparseMatrix& liou,
                                 const std::vector<int>& dims);

// Build the model at the point and solve it: H1 or H2 plus one decay channel
// per mode at rate gamma. dims must have one entry per mode of the model.
SteadyStateSolution solve_model(const ModelPoint& mp, Model model,
                                const std::vector<int>& dims);

struct TruncationResult {
  std::vector<int> dims;  // smallest dims whose increase changed nothing
  double rel_change;      // observable change from dims to dims+1
  bool converged;
};

// Grow every mode dimension together until N, g2, g3 of the driven mode move
// by less than rel_tol between successive sizes. Gives up at dim_cap per mode
// (converged = false).
TruncationResult check_truncation(const ModelPoint& mp, Model model,
                                  std::vector<int> base_dims,
                                  double rel_tol = 1e-6, int dim_cap = 16);

// Fixed-step fourth-order propagation of vec(rho). Validation helper for the
// steady-state solver (uniqueness probes in the test suite), not a user-facing
// integrator; dt should stay at or below 0.01/gamma.
Eigen::MatrixXcd propagate(const SparseMatrix& liou, const Eigen::MatrixXcd& rho0,
                           double t_final, double dt);

}  // namespace spinkerr

#endif
