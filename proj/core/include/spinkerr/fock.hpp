#ifndef SPINKERR_FOCK_HPP
#define SPINKERR_FOCK_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace spinkerr {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

// An operator on a truncated Fock space of one or two modes. The matrix acts
// on the product basis |n1> x |n2> ordered with mode 1 as the slow index,
// so its dimension is the product of the per-mode truncations.
struct FockOperator {
  std::vector<int> dims;
  SparseMatrix mat;

  int total_dim() const;
};

// Ladder operator a with entries a[n-1, n] = sqrt(n). Requires dim >= 2.
FockOperator annihilation(int dim);

// Conjugate transpose.
FockOperator dagger(const FockOperator& op);

// Identity with the given per-mode truncations.
FockOperator identity(const std::vector<int>& dims);

// Lift a single-mode operator into the two-mode product space:
// mode_index 1 gives op (x) I, mode_index 2 gives I (x) op.
// Throws std::invalid_argument on a dimension mismatch or bad index.
FockOperator embed_two_mode(const FockOperator& op, int mode_index, int d1, int d2);

// tr(rho * op). Throws std::invalid_argument on a dimension mismatch.
Complex expectation(const Eigen::MatrixXcd& rho, const FockOperator& op);

// A state on the same truncated space. Produced by the steady-state solver;
// the diagnostic accessors quantify how well it satisfies the defining
// properties (unit trace, Hermiticity, positivity).
struct DensityMatrix {
  std::vector<int> dims;
  Eigen::MatrixXcd mat;

  int total_dim() const;
  double trace_error() const;        // |tr(rho) - 1|
  double hermiticity_error() const;  // max |rho - rho^dag|
  double min_eigenvalue() const;     // smallest eigenvalue of (rho+rho^dag)/2
};

}  // namespace spinkerr

#endif
