#ifndef SPINKERR_NONRECIPROCITY_HPP
#define SPINKERR_NONRECIPROCITY_HPP

#include "spinkerr/observables.hpp"

namespace spinkerr {

// Bands that turn the exact textbook conditions ("N_cw != N_ccw",
// "g2 < 1 on one side and > 1 on the other") into floating-point decisions.
// Defaults sit far below physical effect sizes; widen photon_equality_rel
// when near-equal photon numbers should still count as reciprocal.
struct ToleranceConfig {
  double photon_equality_rel = 1e-6;  // relative |N_ccw - N_cw| treated as equal
  double unity_band = 1e-9;           // half-width of the dead band around g = 1
};

// Directional contrast of each statistic in dB, with the conventions:
//   r1 = 10 log10(N_ccw / N_cw), forced to 0 when the photon numbers are
//        equal within tolerance;
//   r2 = 10 log10(g2_ccw / g2_cw), forced to 0 unless one side is below
//        1 - unity_band and the other above 1 + unity_band;
//   r3 = same straddle rule applied to g3.
// Flags: cnr = photon-number contrast, qnr = second-order contrast,
// hqnr = third-order contrast with both lower orders reciprocal,
// reciprocal = no contrast anywhere.
struct NRReport {
  double r1_db = 0.0;
  double r2_db = 0.0;
  double r3_db = 0.0;
  bool cnr = false;
  bool qnr = false;
  bool hqnr = false;
  bool reciprocal = true;
  ObservableSet cw;
  ObservableSet ccw;
};

// Classify a matched pair of drive directions. Both sets must carry the
// drive tags they claim (throws std::invalid_argument otherwise). A NaN g3
// (single-mode closed forms) never straddles, so r3 is 0 there.
NRReport ratios(const ObservableSet& cw, const ObservableSet& ccw,
                const ToleranceConfig& tol = {});

// Re-apply the zero-forcing conventions to an existing report. Idempotent:
// applying it to the output of ratios() changes nothing.
NRReport enforce_conventions(NRReport report, const ToleranceConfig& tol = {});

}  // namespace spinkerr

#endif
