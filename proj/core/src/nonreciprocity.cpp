#include "spinkerr/nonreciprocity.hpp"

#include <cmath>
#include <stdexcept>

namespace spinkerr {

namespace {

// 10 log10 of the ccw/cw contrast, or 0 under the zero-forcing rules.
double forced_ratio_db(double cw, double ccw, bool force_zero) {
  if (force_zero) return 0.0;
  // Difference of logs rather than log of the ratio, so that swapping the
  // directions negates the result bit-exactly.
  return 10.0 * (std::log10(ccw) - std::log10(cw));
}

bool photons_equal(double n_cw, double n_ccw, double rel_tol) {
  double scale = std::max(n_cw, n_ccw);
  if (scale <= 0.0) return true;
  return std::abs(n_ccw - n_cw) / scale < rel_tol;
}

// One side strictly below the dead band around 1, the other strictly above.
// NaN (correlator not defined for a model) never straddles.
bool straddles_unity(double a, double b, double band) {
  return (a < 1.0 - band && b > 1.0 + band) || (b < 1.0 - band && a > 1.0 + band);
}

}  // namespace

NRReport ratios(const ObservableSet& cw, const ObservableSet& ccw,
                const ToleranceConfig& tol) {
  if (cw.drive != Drive::cw || ccw.drive != Drive::ccw)
    throw std::invalid_argument("ratios: observable sets carry the wrong drive tags");
  NRReport report;
  report.cw = cw;
  report.ccw = ccw;
  report.r1_db = forced_ratio_db(cw.n, ccw.n,
                                 photons_equal(cw.n, ccw.n, tol.photon_equality_rel));
  report.r2_db = forced_ratio_db(cw.g2, ccw.g2,
                                 !straddles_unity(cw.g2, ccw.g2, tol.unity_band));
  report.r3_db = forced_ratio_db(cw.g3, ccw.g3,
                                 !straddles_unity(cw.g3, ccw.g3, tol.unity_band));
  return enforce_conventions(std::move(report), tol);
}

NRReport enforce_conventions(NRReport report, const ToleranceConfig& tol) {
  if (photons_equal(report.cw.n, report.ccw.n, tol.photon_equality_rel))
    report.r1_db = 0.0;
  if (!straddles_unity(report.cw.g2, report.ccw.g2, tol.unity_band))
    report.r2_db = 0.0;
  if (!straddles_unity(report.cw.g3, report.ccw.g3, tol.unity_band))
    report.r3_db = 0.0;
  report.cnr = report.r1_db != 0.0;
  report.qnr = report.r2_db != 0.0;
  report.hqnr = report.r3_db != 0.0 && report.r1_db == 0.0 && report.r2_db == 0.0;
  report.reciprocal = report.r1_db == 0.0 && report.r2_db == 0.0 && report.r3_db == 0.0;
  return report;
}

}  // namespace spinkerr
