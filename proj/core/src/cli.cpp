#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinkerr/analytic.hpp"
#include "spinkerr/sweep.hpp"

namespace spinkerr {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Options shared by every subcommand: a config file plus flag overrides for
// each documented key. Flags win over file values.
class CommonOptions {
 public:
  void attach(CLI::App& sub) {
    sub.add_option("-c,--config", config_path_,
                   "flat 'key = value' configuration file");
    auto num = [this, &sub](const std::string& name, const std::string& desc,
                            std::function<void(RunConfig&, double)> set) {
      sub.add_option_function<double>(
          name,
          [this, set](double v) {
            overrides_.push_back([v, set](RunConfig& c) { set(c, v); });
          },
          desc);
    };
    num("--wavelength-m", "pump wavelength (m)",
        [](RunConfig& c, double v) { c.physical.wavelength_m = v; });
    num("--quality-factor", "loaded quality factor",
        [](RunConfig& c, double v) { c.physical.quality_factor = v; });
    num("--mode-volume-m3", "effective mode volume (m^3)",
        [](RunConfig& c, double v) { c.physical.mode_volume_m3 = v; });
    num("--n0", "linear refractive index",
        [](RunConfig& c, double v) { c.physical.n0 = v; });
    num("--n1", "index entering the rotation-induced shift",
        [](RunConfig& c, double v) { c.physical.n1 = v; });
    num("--n2-m2-per-w", "nonlinear index (m^2/W)",
        [](RunConfig& c, double v) { c.physical.n2_m2_per_w = v; });
    num("--dn1-dlambda-per-m", "index dispersion dn1/dlambda (1/m)",
        [](RunConfig& c, double v) { c.physical.dn1_dlambda_per_m = v; });
    num("--radius-m", "resonator radius (m)",
        [](RunConfig& c, double v) { c.physical.radius_m = v; });
    num("--power-w", "pump power (W)",
        [](RunConfig& c, double v) { c.physical.power_w = v; });
    num("--omega", "spin rate (rad/s)",
        [](RunConfig& c, double v) { c.physical.omega_rad_s = v; });
    num("--delta-l", "laser detuning in linewidths",
        [](RunConfig& c, double v) { c.delta_l_over_gamma = v; });
    num("--j", "backscattering coupling in linewidths",
        [](RunConfig& c, double v) { c.j_over_gamma = v; });
    sub.add_option_function<std::string>(
           "--drive",
           [this](const std::string& s) {
             overrides_.push_back([s](RunConfig& c) { c.physical.drive = parse_drive(s); });
           },
           "pumped direction")
        ->check(CLI::IsMember({"cw", "ccw"}));
    sub.add_option_function<std::string>(
           "--model",
           [this](const std::string& s) {
             overrides_.push_back([s](RunConfig& c) { c.model = parse_model(s); });
           },
           "single or two_mode")
        ->check(CLI::IsMember({"single", "single_mode", "two_mode", "two-mode"}));
    sub.add_option_function<std::string>(
           "--engine",
           [this](const std::string& s) {
             overrides_.push_back([s](RunConfig& c) { c.engine = parse_engine(s); });
           },
           "numeric, analytic, or both")
        ->check(CLI::IsMember({"numeric", "analytic", "both"}));
    sub.add_option_function<int>(
        "--nmax",
        [this](int v) {
          overrides_.push_back([v](RunConfig& c) { c.nmax = v; });
        },
        "Fock truncation per mode (0 = model default)");
    sub.add_option("--eps-n", eps_n_, "relative tolerance treating photon numbers as equal");
    sub.add_option("--delta-g", delta_g_, "dead band half-width around g = 1");
    sub.add_option("--threads", threads_, "worker threads (0 = hardware)");
  }

  RunConfig config() const {
    RunConfig cfg = config_path_.empty() ? RunConfig{} : load_config_file(config_path_);
    for (const auto& apply : overrides_) apply(cfg);
    return cfg;
  }

  ToleranceConfig tolerances() const { return {eps_n_, delta_g_}; }
  int threads() const { return threads_; }

 private:
  std::string config_path_;
  std::vector<std::function<void(RunConfig&)>> overrides_;
  double eps_n_ = 1e-6;
  double delta_g_ = 1e-9;
  int threads_ = 0;
};

struct GridOptions {
  std::string axis = "delta_l";
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  std::string output;
  std::string json_path;

  void attach(CLI::App& sub, bool with_json) {
    sub.add_option("--axis", axis, "swept axis")
        ->check(CLI::IsMember({"delta_l", "delta-l", "omega", "j"}));
    sub.add_option("--start", start, "first grid value");
    sub.add_option("--stop", stop, "last grid value");
    sub.add_option("--count", count, "number of grid points");
    sub.add_option("-o,--output", output, "write the table here instead of stdout");
    if (with_json) sub.add_option("--json", json_path, "also write structured output here");
  }
};

void run_to_stream(const std::string& path, const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  emit(out);
}

void print_set_line(std::ostream& out, const std::string& label, const ObservableSet& set) {
  out << label << " n=" << fmt(set.n) << " g2=" << fmt(set.g2) << " g3=" << fmt(set.g3)
      << '\n';
}

int run_derive(const CommonOptions& opt) {
  RunConfig cfg = opt.config();
  DerivedRates r = derive_rates(cfg.physical);
  std::cout << "omega0_rad_s = " << fmt(r.omega0) << '\n'
            << "gamma_rad_s = " << fmt(r.gamma) << '\n'
            << "chi_rad_s = " << fmt(r.chi) << "  (chi/gamma = " << fmt(r.chi / r.gamma)
            << ")\n"
            << "xi_rad_s = " << fmt(r.xi) << "  (xi/gamma = " << fmt(r.xi / r.gamma)
            << ")\n"
            << "sagnac_abs_rad_s = " << fmt(r.sagnac_abs) << "  (|sagnac|/gamma = "
            << fmt(r.sagnac_abs / r.gamma) << ")\n"
            << "sagnac_rad_s = " << fmt(r.sagnac) << "  (drive "
            << to_string(cfg.physical.drive) << ")\n";
  return 0;
}

int run_point(const CommonOptions& opt) {
  RunConfig cfg = opt.config();
  ResultRow row = solve_point(cfg, opt.tolerances());
  if (!row.error.empty()) throw std::runtime_error(row.error);
  std::cout << "model=" << to_string(cfg.model) << " engine=" << to_string(cfg.engine)
            << " delta_l_over_gamma=" << fmt(row.delta_l_over_gamma)
            << " omega_rad_s=" << fmt(row.omega_rad_s)
            << " j_over_gamma=" << fmt(row.j_over_gamma) << '\n';
  if (row.has_numeric) {
    print_set_line(std::cout, "cw ", row.cw);
    print_set_line(std::cout, "ccw", row.ccw);
    std::cout << "residual_cw=" << fmt(row.residual_cw)
              << " residual_ccw=" << fmt(row.residual_ccw) << '\n';
  }
  if (row.has_analytic) {
    print_set_line(std::cout, "cw_analytic ", row.cw_analytic);
    print_set_line(std::cout, "ccw_analytic", row.ccw_analytic);
  }
  std::cout << "r1_db=" << fmt(row.report.r1_db) << " r2_db=" << fmt(row.report.r2_db)
            << " r3_db=" << fmt(row.report.r3_db) << '\n';
  std::cout << "cnr=" << (row.report.cnr ? "yes" : "no")
            << " qnr=" << (row.report.qnr ? "yes" : "no")
            << " hqnr=" << (row.report.hqnr ? "yes" : "no")
            << " reciprocal=" << (row.report.reciprocal ? "yes" : "no") << '\n';
  return 0;
}

SweepSpec make_spec(const CommonOptions& opt, const GridOptions& grid) {
  SweepSpec spec;
  spec.base = opt.config();
  spec.axis = parse_axis(grid.axis);
  spec.start = grid.start;
  spec.stop = grid.stop;
  spec.count = grid.count;
  spec.tol = opt.tolerances();
  spec.threads = opt.threads();
  return spec;
}

int run_sweep_cmd(const CommonOptions& opt, const GridOptions& grid) {
  SweepSpec spec = make_spec(opt, grid);
  std::vector<ResultRow> rows = run_sweep(spec);
  run_to_stream(grid.output, [&](std::ostream& out) { write_csv(out, spec, rows); });
  if (!grid.json_path.empty())
    run_to_stream(grid.json_path, [&](std::ostream& out) { write_json(out, spec, rows); });
  return 0;
}

double rel_err(double analytic, double numeric) {
  return std::abs(analytic - numeric) / std::abs(numeric);
}

int run_compare(const CommonOptions& opt, const GridOptions& grid) {
  SweepSpec spec = make_spec(opt, grid);
  spec.base.engine = Engine::both;
  const bool with_g3 = spec.base.model == Model::two_mode;
  std::vector<ResultRow> rows = run_sweep(spec);

  run_to_stream(grid.output, [&](std::ostream& out) {
    out << "index,axis_value,direction,n_numeric,n_analytic,n_rel_err,"
           "g2_numeric,g2_analytic,g2_rel_err";
    if (with_g3) out << ",g3_numeric,g3_analytic,g3_rel_err";
    out << '\n';
    double max_n = 0.0, max_g2 = 0.0, max_g3 = 0.0;
    double at_n = 0.0, at_g2 = 0.0, at_g3 = 0.0;
    for (const ResultRow& row : rows) {
      if (!row.error.empty()) {
        out << row.index << ',' << fmt(row.axis_value) << ",-,error: " << row.error
            << '\n';
        continue;
      }
      for (const auto& [numeric, analytic, dir] :
           {std::tuple{&row.cw, &row.cw_analytic, "cw"},
            std::tuple{&row.ccw, &row.ccw_analytic, "ccw"}}) {
        double en = rel_err(analytic->n, numeric->n);
        double e2 = rel_err(analytic->g2, numeric->g2);
        out << row.index << ',' << fmt(row.axis_value) << ',' << dir << ','
            << fmt(numeric->n) << ',' << fmt(analytic->n) << ',' << fmt(en) << ','
            << fmt(numeric->g2) << ',' << fmt(analytic->g2) << ',' << fmt(e2);
        if (en > max_n) { max_n = en; at_n = row.axis_value; }
        if (e2 > max_g2) { max_g2 = e2; at_g2 = row.axis_value; }
        if (with_g3) {
          double e3 = rel_err(analytic->g3, numeric->g3);
          out << ',' << fmt(numeric->g3) << ',' << fmt(analytic->g3) << ',' << fmt(e3);
          if (e3 > max_g3) { max_g3 = e3; at_g3 = row.axis_value; }
        }
        out << '\n';
      }
    }
    out << "# max_rel_err_n = " << fmt(max_n) << " at axis_value = " << fmt(at_n) << '\n';
    out << "# max_rel_err_g2 = " << fmt(max_g2) << " at axis_value = " << fmt(at_g2)
        << '\n';
    if (with_g3)
      out << "# max_rel_err_g3 = " << fmt(max_g3) << " at axis_value = " << fmt(at_g3)
          << '\n';
  });
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"steady-state photon statistics of a spinning Kerr microresonator"};
  app.require_subcommand(1);

  int status = 0;

  auto* derive = app.add_subcommand("derive", "print the derived rates");
  auto derive_opt = std::make_shared<CommonOptions>();
  derive_opt->attach(*derive);
  derive->callback([derive_opt, &status]() { status = run_derive(*derive_opt); });

  auto* point = app.add_subcommand("point", "solve one operating point, both directions");
  auto point_opt = std::make_shared<CommonOptions>();
  point_opt->attach(*point);
  point->callback([point_opt, &status]() { status = run_point(*point_opt); });

  auto* sweep = app.add_subcommand("sweep", "run a grid and emit a CSV table");
  auto sweep_opt = std::make_shared<CommonOptions>();
  auto sweep_grid = std::make_shared<GridOptions>();
  sweep_opt->attach(*sweep);
  sweep_grid->attach(*sweep, true);
  sweep->callback(
      [sweep_opt, sweep_grid, &status]() { status = run_sweep_cmd(*sweep_opt, *sweep_grid); });

  auto* compare = app.add_subcommand(
      "compare", "closed-form versus numeric relative errors over a grid");
  auto compare_opt = std::make_shared<CommonOptions>();
  auto compare_grid = std::make_shared<GridOptions>();
  compare_opt->attach(*compare);
  compare_grid->attach(*compare, false);
  compare->callback([compare_opt, compare_grid, &status]() {
    status = run_compare(*compare_opt, *compare_grid);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}

}  // namespace spinkerr
