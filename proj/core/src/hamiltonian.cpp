#include "spinkerr/hamiltonian.hpp"

#include <stdexcept>

namespace spinkerr {

void ModelPoint::validate() const {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (chi < 0.0) throw std::invalid_argument("chi must be >= 0");
  if (xi < 0.0) throw std::invalid_argument("xi must be >= 0");
  if (j < 0.0) throw std::invalid_argument("j must be >= 0");
}

ModelPoint make_point(const PhysicalParams& p, double delta_l_over_gamma,
                      double j_over_gamma) {
  DerivedRates r = derive_rates(p);
  ModelPoint mp;
  mp.delta_l = delta_l_over_gamma * r.gamma;
  mp.delta_f = r.sagnac;
  mp.chi = r.chi;
  mp.xi = r.xi;
  mp.gamma = r.gamma;
  mp.j = j_over_gamma * r.gamma;
  mp.validate();
  return mp;
}

double eigenenergy(int n, const ModelPoint& mp) {
  if (n < 0) throw std::invalid_argument("photon number must be >= 0");
  return n * (mp.delta_l + mp.delta_f) + double(n) * (n - 1) * mp.chi;
}

FockOperator build_h1(const ModelPoint& mp, int dim) {
  mp.validate();
  FockOperator a = annihilation(dim);
  SparseMatrix ad = a.mat.adjoint();
  SparseMatrix num = ad * a.mat;
  SparseMatrix h = (mp.delta_l + mp.delta_f) * num +
                   mp.chi * SparseMatrix(ad * ad * a.mat * a.mat) +
                   mp.xi * SparseMatrix(ad + a.mat);
  h.makeCompressed();
  return {{dim}, std::move(h)};
}

FockOperator build_h2(const ModelPoint& mp, int d1, int d2) {
  mp.validate();
  FockOperator a1 = embed_two_mode(annihilation(d1), 1, d1, d2);
  FockOperator a2 = embed_two_mode(annihilation(d2), 2, d1, d2);
  SparseMatrix ad1 = a1.mat.adjoint();
  SparseMatrix ad2 = a2.mat.adjoint();
  SparseMatrix n1 = ad1 * a1.mat;
  SparseMatrix n2 = ad2 * a2.mat;
  double dplus = mp.delta_l + mp.delta_f;   // driven mode
  double dminus = mp.delta_l - mp.delta_f;  // counter-propagating mode
  SparseMatrix h = dplus * n1 + dminus * n2 +
                   mp.chi * SparseMatrix(ad1 * ad1 * a1.mat * a1.mat) +
                   mp.chi * SparseMatrix(ad2 * ad2 * a2.mat * a2.mat) +
                   2.0 * mp.chi * SparseMatrix(n1 * n2) +
                   mp.j * SparseMatrix(ad1 * a2.mat + ad2 * a1.mat) +
                   mp.xi * SparseMatrix(ad1 + a1.mat);
  h.makeCompressed();
  return {{d1, d2}, std::move(h)};
}

}  // namespace spinkerr
