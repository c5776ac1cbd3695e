#ifndef SPINKERR_PARAMS_HPP
#define SPINKERR_PARAMS_HPP

#include <iosfwd>
#include <string>
#include <string_view>

namespace spinkerr {

namespace constants {
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double light_speed = 299792458.0;     // m/s
}  // namespace constants

// Direction of the pump relative to the resonator. The resonator itself
// always spins in the fixed positive sense, so the drive direction alone
// decides the sign of the Sagnac shift seen by the driven mode.
enum class Drive { cw, ccw };

enum class Model { single_mode, two_mode };

enum class Engine { numeric, analytic, both };

Drive opposite(Drive d);

std::string_view to_string(Drive d);
std::string_view to_string(Model m);
std::string_view to_string(Engine e);

// Throw std::invalid_argument on unrecognized text.
Drive parse_drive(std::string_view text);
Model parse_model(std::string_view text);
Engine parse_engine(std::string_view text);

// Experimental inputs, SI units. Defaults are the reference silica
// microsphere: 1550 nm pump, Q = 5e9, 30 um radius, weak pump (0.2 fW).
struct PhysicalParams {
  double wavelength_m = 1.55e-6;
  double quality_factor = 5e9;
  double mode_volume_m3 = 150e-18;
  double n0 = 1.4;                 // linear refractive index
  double n1 = 1.4;                 // index entering the Sagnac shift
  double n2_m2_per_w = 2e-15;      // nonlinear (Kerr) index
  double dn1_dlambda_per_m = 0.0;  // dispersion correction to the Sagnac shift
  double radius_m = 30e-6;
  double power_w = 2e-16;
  double omega_rad_s = 0.0;        // spin rate, >= 0
  Drive drive = Drive::cw;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

// Every rate appearing in the Hamiltonians, in rad/s.
struct DerivedRates {
  double omega0;      // resonance frequency 2*pi*c/lambda
  double gamma;       // linewidth omega0/Q
  double chi;         // Kerr shift per photon pair
  double xi;          // drive amplitude sqrt(gamma*P/(hbar*omega0))
  double sagnac_abs;  // |Delta_F|
  double sagnac;      // signed Delta_F: +|Delta_F| for cw drive, - for ccw
};

DerivedRates derive_rates(const PhysicalParams& p);

// One fully specified run: physical inputs plus the model-level knobs that
// the key=value configuration file and the CLI expose.
struct RunConfig {
  PhysicalParams physical;
  double delta_l_over_gamma = 0.0;  // laser detuning in linewidths
  double j_over_gamma = 0.0;        // backscattering coupling in linewidths
  Model model = Model::single_mode;
  Engine engine = Engine::numeric;
  int nmax = 0;  // Fock truncation per mode; 0 means the model default
};

// Default per-mode truncation: 8 for the single-mode model, 6 per mode for
// the two-mode model (enough for g3 plus convergence headroom at weak drive).
int default_dimension(Model m);

// Parse a flat "key = value" file ('#' starts a comment). Unknown keys and
// malformed lines raise std::runtime_error naming the line number.
RunConfig load_config(std::istream& in);
RunConfig load_config_file(const std::string& path);

}  // namespace spinkerr

#endif
