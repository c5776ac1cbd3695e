#include "spinkerr/params.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace spinkerr {

Drive opposite(Drive d) { return d == Drive::cw ? Drive::ccw : Drive::cw; }

std::string_view to_string(Drive d) { return d == Drive::cw ? "cw" : "ccw"; }

std::string_view to_string(Model m) {
  return m == Model::single_mode ? "single" : "two_mode";
}

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::numeric: return "numeric";
    case Engine::analytic: return "analytic";
    default: return "both";
  }
}

Drive parse_drive(std::string_view text) {
  if (text == "cw") return Drive::cw;
  if (text == "ccw") return Drive::ccw;
  throw std::invalid_argument("drive must be cw or ccw, got '" + std::string(text) + "'");
}

Model parse_model(std::string_view text) {
  if (text == "single" || text == "single_mode") return Model::single_mode;
  if (text == "two_mode" || text == "two-mode") return Model::two_mode;
  throw std::invalid_argument("model must be single or two_mode, got '" + std::string(text) + "'");
}

Engine parse_engine(std::string_view text) {
  if (text == "numeric") return Engine::numeric;
  if (text == "analytic") return Engine::analytic;
  if (text == "both") return Engine::both;
  throw std::invalid_argument("engine must be numeric, analytic, or both, got '" +
                              std::string(text) + "'");
}

void PhysicalParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument(std::string(name) + " must be positive and finite");
  };
  positive(wavelength_m, "wavelength_m");
  positive(quality_factor, "quality_factor");
  positive(mode_volume_m3, "mode_volume_m3");
  positive(n0, "n0");
  positive(n1, "n1");
  // Zero is allowed: it switches the Kerr shift off and leaves a linear
  // resonator, a limit the symmetry checks rely on.
  if (!(n2_m2_per_w >= 0.0) || !std::isfinite(n2_m2_per_w))
    throw std::invalid_argument("n2_m2_per_w must be >= 0 and finite");
  positive(radius_m, "radius_m");
  positive(power_w, "power_w");
  if (!(omega_rad_s >= 0.0) || !std::isfinite(omega_rad_s))
    throw std::invalid_argument("omega_rad_s must be >= 0 and finite");
  if (!std::isfinite(dn1_dlambda_per_m))
    throw std::invalid_argument("dn1_dlambda_per_m must be finite");
}

DerivedRates derive_rates(const PhysicalParams& p) {
  p.validate();
  DerivedRates r;
  r.omega0 = 2.0 * M_PI * constants::light_speed / p.wavelength_m;
  r.gamma = r.omega0 / p.quality_factor;
  r.chi = constants::hbar * r.omega0 * r.omega0 * constants::light_speed *
          p.n2_m2_per_w / (p.n0 * p.n0 * p.mode_volume_m3);
  // The drive frequency differs from omega0 by detunings ~1e5 rad/s against
  // omega0 ~1e15, so omega0 stands in for it here.
  r.xi = std::sqrt(r.gamma * p.power_w / (constants::hbar * r.omega0));
  double drag = 1.0 - 1.0 / (p.n1 * p.n1) -
                (p.wavelength_m / p.n1) * p.dn1_dlambda_per_m;
  r.sagnac_abs = std::abs(p.n1 * p.radius_m * p.omega_rad_s * r.omega0 /
                          constants::light_speed * drag);
  r.sagnac = (p.drive == Drive::cw) ? r.sagnac_abs : -r.sagnac_abs;
  return r;
}

int default_dimension(Model m) { return m == Model::single_mode ? 8 : 6; }

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& value, int line_no) {
  size_t pos = 0;
  double v;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("config line " + std::to_string(line_no) +
                             ": expected a number, got '" + value + "'");
  }
  if (pos != value.size())
    throw std::runtime_error("config line " + std::to_string(line_no) +
                             ": trailing characters in '" + value + "'");
  return v;
}

int parse_int(const std::string& value, int line_no) {
  size_t pos = 0;
  int v;
  try {
    v = std::stoi(value, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("config line " + std::to_string(line_no) +
                             ": expected an integer, got '" + value + "'");
  }
  if (pos != value.size())
    throw std::runtime_error("config line " + std::to_string(line_no) +
                             ": trailing characters in '" + value + "'");
  return v;
}

}  // namespace

RunConfig load_config(std::istream& in) {
  RunConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": expected 'key = value', got '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": empty key or value");
    try {
      if (key == "wavelength_m") cfg.physical.wavelength_m = parse_double(value, line_no);
      else if (key == "quality_factor") cfg.physical.quality_factor = parse_double(value, line_no);
      else if (key == "mode_volume_m3") cfg.physical.mode_volume_m3 = parse_double(value, line_no);
      else if (key == "n0") cfg.physical.n0 = parse_double(value, line_no);
      else if (key == "n1") cfg.physical.n1 = parse_double(value, line_no);
      else if (key == "n2_m2_per_w") cfg.physical.n2_m2_per_w = parse_double(value, line_no);
      else if (key == "dn1_dlambda_per_m") cfg.physical.dn1_dlambda_per_m = parse_double(value, line_no);
      else if (key == "radius_m") cfg.physical.radius_m = parse_double(value, line_no);
      else if (key == "power_w") cfg.physical.power_w = parse_double(value, line_no);
      else if (key == "omega_rad_s") cfg.physical.omega_rad_s = parse_double(value, line_no);
      else if (key == "drive") cfg.physical.drive = parse_drive(value);
      else if (key == "delta_l_over_gamma") cfg.delta_l_over_gamma = parse_double(value, line_no);
      else if (key == "j_over_gamma") cfg.j_over_gamma = parse_double(value, line_no);
      else if (key == "model") cfg.model = parse_model(value);
      else if (key == "engine") cfg.engine = parse_engine(value);
      else if (key == "nmax") cfg.nmax = parse_int(value, line_no);
      else
        throw std::runtime_error("config line " + std::to_string(line_no) +
                                 ": unknown key '" + key + "'");
    } catch (const std::invalid_argument& ex) {
      throw std::runtime_error("config line " + std::to_string(line_no) + ": " + ex.what());
    }
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  return load_config(in);
}

}  // namespace spinkerr
