#include "spinkerr/lindblad.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/SparseLU>
#include <unsupported/Eigen/KroneckerProduct>

#include "spinkerr/observables.hpp"

namespace spinkerr {

namespace {

// Column-stacked vec(rho): vec(A rho B) = (B^T kron A) vec(rho).
SparseMatrix left_mult(const SparseMatrix& a, const SparseMatrix& id) {
  return Eigen::kroneckerProduct(id, a).eval();
}

SparseMatrix right_mult(const SparseMatrix& b, const SparseMatrix& id) {
  return Eigen::kroneckerProduct(SparseMatrix(b.transpose()), id).eval();
}

}  // namespace

SparseMatrix build_liouvillian(
    const FockOperator& h,
    const std::vector<std::pair<FockOperator, double>>& collapse) {
  const int n = h.mat.rows();
  if (h.mat.cols() != n) throw std::invalid_argument("Hamiltonian must be square");
  SparseMatrix id(n, n);
  id.setIdentity();
  const Complex i_unit(0.0, 1.0);
  SparseMatrix liou = -i_unit * SparseMatrix(left_mult(h.mat, id) - right_mult(h.mat, id));
  for (const auto& [op, rate] : collapse) {
    if (op.mat.rows() != n || op.mat.cols() != n)
      throw std::invalid_argument("collapse operator dimension mismatch");
    if (!(rate > 0.0)) throw std::invalid_argument("collapse rate must be positive");
    SparseMatrix adag_a = SparseMatrix(op.mat.adjoint()) * op.mat;
    SparseMatrix sandwich =
        Eigen::kroneckerProduct(SparseMatrix(op.mat.conjugate()), op.mat).eval();
    liou += (rate / 2.0) *
            SparseMatrix(2.0 * sandwich - left_mult(adag_a, id) - right_mult(adag_a, id));
  }
  liou.makeCompressed();
  return liou;
}

SteadyStateSolution steady_state(const SparseMatrix& liou,
                                 const std::vector<int>& dims) {
  const int nn = liou.rows();
  const int n = static_cast<int>(std::lround(std::sqrt(double(nn))));
  if (n * n != nn || liou.cols() != nn)
    throw std::invalid_argument("Liouvillian must be n^2 x n^2");
  {
    int prod = 1;
    for (int d : dims) prod *= d;
    if (prod != n) throw std::invalid_argument("dims do not match the Liouvillian");
  }

  // Null vector with unit trace: replace the first scalar equation by the
  // trace row (vec index of rho(i,i) is i*(n+1) under column stacking).
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(liou.nonZeros() + n);
  for (int k = 0; k < liou.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(liou, k); it; ++it)
      if (it.row() != 0) trips.emplace_back(it.row(), it.col(), it.value());
  for (int i = 0; i < n; ++i) trips.emplace_back(0, i * (n + 1), Complex(1.0, 0.0));
  SparseMatrix sys(nn, nn);
  sys.setFromTriplets(trips.begin(), trips.end());
  sys.makeCompressed();

  Eigen::SparseLU<SparseMatrix> solver;
  solver.analyzePattern(sys);
  solver.factorize(sys);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("steady state: sparse LU factorization failed (singular system?)");

  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(nn);
  rhs[0] = Complex(1.0, 0.0);
  Eigen::VectorXcd x = solver.solve(rhs);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("steady state: sparse LU solve failed");

  const double liou_norm = liou.norm();
  auto residual_of = [&](const Eigen::VectorXcd& v) {
    return (liou * v).norm() / liou_norm;
  };

  double residual = residual_of(x);
  int refinements = 0;
  if (residual >= steady_state_residual_tol) {
    Eigen::VectorXcd correction = solver.solve(rhs - sys * x);
    if (solver.info() == Eigen::Success) {
      x += correction;
      residual = residual_of(x);
      refinements = 1;
    }
  }

  SteadyStateSolution out;
  out.rho.dims = dims;
  out.rho.mat = Eigen::Map<const Eigen::MatrixXcd>(x.data(), n, n);
  out.residual = residual;
  out.converged = residual < steady_state_residual_tol;
  out.refinements = refinements;
  out.dims = dims;
  return out;
}

SteadyStateSolution solve_model(const ModelPoint& mp, Model model,
                                const std::vector<int>& dims) {
  mp.validate();
  if (model == Model::single_mode) {
    if (dims.size() != 1) throw std::invalid_argument("single-mode model takes one dim");
    FockOperator h = build_h1(mp, dims[0]);
    FockOperator a = annihilation(dims[0]);
    return steady_state(build_liouvillian(h, {{a, mp.gamma}}), dims);
  }
  if (dims.size() != 2) throw std::invalid_argument("two-mode model takes two dims");
  FockOperator h = build_h2(mp, dims[0], dims[1]);
  FockOperator a1 = embed_two_mode(annihilation(dims[0]), 1, dims[0], dims[1]);
  FockOperator a2 = embed_two_mode(annihilation(dims[1]), 2, dims[0], dims[1]);
  return steady_state(build_liouvillian(h, {{a1, mp.gamma}, {a2, mp.gamma}}), dims);
}

namespace {

struct DrivenStats {
  double n, g2, g3;
};

DrivenStats driven_stats(const SteadyStateSolution& sol) {
  double n = mean_photon(sol.rho, 1);
  if (n < vacuum_threshold) return {n, 0.0, 0.0};
  return {n, g2_zero(sol.rho, 1), g3_zero(sol.rho, 1)};
}

double rel_delta(double a, double b) {
  double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double max_rel_delta(const DrivenStats& a, const DrivenStats& b) {
  return std::max({rel_delta(a.n, b.n), rel_delta(a.g2, b.g2), rel_delta(a.g3, b.g3)});
}

}  // namespace

TruncationResult check_truncation(const ModelPoint& mp, Model model,
                                  std::vector<int> base_dims, double rel_tol,
                                  int dim_cap) {
  mp.validate();
  if (base_dims.empty())
    base_dims.assign(model == Model::single_mode ? 1 : 2, default_dimension(model));
  for (int d : base_dims)
    if (d < 2 || d > dim_cap)
      throw std::invalid_argument("base dims must lie in [2, dim_cap]");

  std::vector<int> current = base_dims;
  DrivenStats prev = driven_stats(solve_model(mp, model, current));
  double change = std::numeric_limits<double>::infinity();
  while (true) {
    std::vector<int> next = current;
    bool capped = false;
    for (int& d : next)
      if (++d > dim_cap) capped = true;
    if (capped) return {current, change, false};
    DrivenStats stats = driven_stats(solve_model(mp, model, next));
    change = max_rel_delta(prev, stats);
    if (change < rel_tol) return {current, change, true};
    current = next;
    prev = stats;
  }
}

Eigen::MatrixXcd propagate(const SparseMatrix& liou, const Eigen::MatrixXcd& rho0,
                           double t_final, double dt) {
  const int n = rho0.rows();
  if (rho0.cols() != n || liou.rows() != n * n)
    throw std::invalid_argument("propagate: state does not match the Liouvillian");
  if (!(dt > 0.0) || t_final < 0.0)
    throw std::invalid_argument("propagate: need dt > 0 and t_final >= 0");
  long steps = std::lround(std::ceil(t_final / dt - 1e-12));
  if (steps <= 0) return rho0;
  double h = t_final / double(steps);  // <= dt, lands exactly on t_final

  Eigen::VectorXcd x = Eigen::Map<const Eigen::VectorXcd>(rho0.data(), n * n);
  Eigen::VectorXcd k1(n * n), k2(n * n), k3(n * n), k4(n * n);
  for (long s = 0; s < steps; ++s) {
    k1 = liou * x;
    k2 = liou * (x + 0.5 * h * k1);
    k3 = liou * (x + 0.5 * h * k2);
    k4 = liou * (x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return Eigen::Map<const Eigen::MatrixXcd>(x.data(), n, n);
}

}  // namespace spinkerr
