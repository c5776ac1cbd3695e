#ifndef SPINKERR_SWEEP_HPP
#define SPINKERR_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "spinkerr/lindblad.hpp"
#include "spinkerr/nonreciprocity.hpp"
#include "spinkerr/params.hpp"

namespace spinkerr {

enum class SweepAxis { delta_l, omega, j };

std::string_view to_string(SweepAxis a);
SweepAxis parse_axis(std::string_view text);

// A linear grid over one axis; the other knobs come from base. Axis units:
// delta_l and j in linewidths (gamma), omega in rad/s.
struct SweepSpec {
  RunConfig base;
  SweepAxis axis = SweepAxis::delta_l;
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  ToleranceConfig tol;
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;  // count >= 1, start <= stop, base params valid
};

// Grid point i of count over [start, stop]; count == 1 pins start.
// Reruns reproduce the points bit-exactly.
std::vector<double> grid_points(double start, double stop, int count);

// One grid point, both drive directions. Numeric and analytic blocks are
// filled according to the requested engine. A failed point carries the
// failure text in error and keeps its place in the table.
struct ResultRow {
  int index = 0;
  double axis_value = 0.0;
  double delta_l_over_gamma = 0.0;
  double omega_rad_s = 0.0;
  double j_over_gamma = 0.0;
  bool has_numeric = false;
  bool has_analytic = false;
  ObservableSet cw, ccw;                      // numeric
  ObservableSet cw_analytic, ccw_analytic;    // closed-form
  NRReport report;  // from the numeric sets when present, else analytic
  double residual_cw = 0.0, residual_ccw = 0.0;
  std::vector<int> dims;
  std::string error;
};

// Solve one resolved point (helper shared by sweep and the point command).
ResultRow solve_point(const RunConfig& cfg, const ToleranceConfig& tol);

// Run the grid on a worker pool; rows come back ordered by index regardless
// of scheduling, so identical specs produce identical tables.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

// Comma-separated table, one header line, floats at 12 significant digits.
void write_csv(std::ostream& out, const SweepSpec& spec,
               const std::vector<ResultRow>& rows);

// Same fields as the CSV in structured form.
void write_json(std::ostream& out, const SweepSpec& spec,
                const std::vector<ResultRow>& rows);

// Entry point behind the command-line tool. Returns the process exit code.
int cli_main(int argc, const char* const* argv);

}  // namespace spinkerr

#endif
