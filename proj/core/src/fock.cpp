#include "spinkerr/fock.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace spinkerr {

int FockOperator::total_dim() const {
  int n = 1;
  for (int d : dims) n *= d;
  return n;
}

FockOperator annihilation(int dim) {
  if (dim < 2) throw std::invalid_argument("annihilation needs dim >= 2");
  SparseMatrix a(dim, dim);
  a.reserve(Eigen::VectorXi::Constant(dim, 1));
  for (int n = 1; n < dim; ++n) a.insert(n - 1, n) = std::sqrt(double(n));
  a.makeCompressed();
  return {{dim}, std::move(a)};
}

FockOperator dagger(const FockOperator& op) {
  return {op.dims, op.mat.adjoint()};
}

FockOperator identity(const std::vector<int>& dims) {
  int n = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("identity needs dims >= 1");
    n *= d;
  }
  SparseMatrix id(n, n);
  id.setIdentity();
  return {dims, std::move(id)};
}

FockOperator embed_two_mode(const FockOperator& op, int mode_index, int d1, int d2) {
  if (mode_index != 1 && mode_index != 2)
    throw std::invalid_argument("mode_index must be 1 or 2");
  if (op.dims.size() != 1)
    throw std::invalid_argument("embed_two_mode takes a single-mode operator");
  int own = mode_index == 1 ? d1 : d2;
  if (op.dims[0] != own)
    throw std::invalid_argument("operator dimension does not match its mode");
  SparseMatrix id1(d1, d1), id2(d2, d2);
  id1.setIdentity();
  id2.setIdentity();
  SparseMatrix out = mode_index == 1
                         ? Eigen::kroneckerProduct(op.mat, id2).eval()
                         : Eigen::kroneckerProduct(id1, op.mat).eval();
  return {{d1, d2}, std::move(out)};
}

Complex expectation(const Eigen::MatrixXcd& rho, const FockOperator& op) {
  if (rho.rows() != op.mat.rows() || rho.cols() != op.mat.cols())
    throw std::invalid_argument("expectation: state and operator dimensions differ");
  // tr(rho * op) without forming the product.
  Complex sum = 0.0;
  for (int k = 0; k < op.mat.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(op.mat, k); it; ++it)
      sum += rho(it.col(), it.row()) * it.value();
  return sum;
}

int DensityMatrix::total_dim() const {
  int n = 1;
  for (int d : dims) n *= d;
  return n;
}

double DensityMatrix::trace_error() const {
  return std::abs(mat.trace() - Complex(1.0, 0.0));
}

double DensityMatrix::hermiticity_error() const {
  return (mat - mat.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::MatrixXcd herm = 0.5 * (mat + mat.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace spinkerr
