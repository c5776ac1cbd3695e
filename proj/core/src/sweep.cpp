#include "spinkerr/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "spinkerr/analytic.hpp"

namespace spinkerr {

std::string_view to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::delta_l: return "delta_l";
    case SweepAxis::omega: return "omega";
    default: return "j";
  }
}

SweepAxis parse_axis(std::string_view text) {
  if (text == "delta_l" || text == "delta-l") return SweepAxis::delta_l;
  if (text == "omega") return SweepAxis::omega;
  if (text == "j") return SweepAxis::j;
  throw std::invalid_argument("axis must be delta_l, omega, or j, got '" +
                              std::string(text) + "'");
}

void SweepSpec::validate() const {
  base.physical.validate();
  if (count < 1) throw std::invalid_argument("sweep count must be >= 1");
  if (!(start <= stop)) throw std::invalid_argument("sweep start must be <= stop");
  if ((axis == SweepAxis::omega || axis == SweepAxis::j) && start < 0.0)
    throw std::invalid_argument("omega and j sweeps must stay >= 0");
  if (base.nmax != 0 && base.nmax < 2)
    throw std::invalid_argument("nmax must be 0 (default) or >= 2");
  if (threads < 0) throw std::invalid_argument("threads must be >= 0");
}

std::vector<double> grid_points(double start, double stop, int count) {
  if (count < 1) throw std::invalid_argument("grid needs count >= 1");
  std::vector<double> points(count);
  if (count == 1) {
    points[0] = start;
    return points;
  }
  for (int i = 0; i < count; ++i)
    points[i] = start + (stop - start) * double(i) / double(count - 1);
  return points;
}

namespace {

RunConfig at_axis_value(const RunConfig& base, SweepAxis axis, double value) {
  RunConfig cfg = base;
  switch (axis) {
    case SweepAxis::delta_l: cfg.delta_l_over_gamma = value; break;
    case SweepAxis::omega: cfg.physical.omega_rad_s = value; break;
    case SweepAxis::j: cfg.j_over_gamma = value; break;
  }
  return cfg;
}

std::vector<int> dims_for(const RunConfig& cfg) {
  int d = cfg.nmax > 0 ? cfg.nmax : default_dimension(cfg.model);
  if (cfg.model == Model::single_mode) return {d};
  return {d, d};
}

// First entries of the driven-mode number distribution, padded with zeros.
std::array<double, 4> leading_populations(const ObservableSet& set) {
  std::array<double, 4> p{0.0, 0.0, 0.0, 0.0};
  if (set.distribution.size() == 0) return p;
  Eigen::VectorXd marginal = set.distribution.cols() == 1
                                 ? Eigen::VectorXd(set.distribution.col(0))
                                 : mode_marginal(set.distribution, 1);
  for (int i = 0; i < 4 && i < marginal.size(); ++i) p[i] = marginal[i];
  return p;
}

}  // namespace

ResultRow solve_point(const RunConfig& cfg, const ToleranceConfig& tol) {
  ResultRow row;
  row.delta_l_over_gamma = cfg.delta_l_over_gamma;
  row.omega_rad_s = cfg.physical.omega_rad_s;
  row.j_over_gamma = cfg.j_over_gamma;
  try {
    PhysicalParams cw_params = cfg.physical;
    cw_params.drive = Drive::cw;
    PhysicalParams ccw_params = cfg.physical;
    ccw_params.drive = Drive::ccw;
    ModelPoint mp_cw = make_point(cw_params, cfg.delta_l_over_gamma, cfg.j_over_gamma);
    ModelPoint mp_ccw = make_point(ccw_params, cfg.delta_l_over_gamma, cfg.j_over_gamma);
    row.dims = dims_for(cfg);

    if (cfg.engine != Engine::analytic) {
      SteadyStateSolution cw = solve_model(mp_cw, cfg.model, row.dims);
      SteadyStateSolution ccw = solve_model(mp_ccw, cfg.model, row.dims);
      row.cw = observe(cw.rho, Drive::cw);
      row.ccw = observe(ccw.rho, Drive::ccw);
      row.residual_cw = cw.residual;
      row.residual_ccw = ccw.residual;
      row.has_numeric = true;
    }
    if (cfg.engine != Engine::numeric) {
      row.cw_analytic = analytic_observables(mp_cw, cfg.model, Drive::cw);
      row.ccw_analytic = analytic_observables(mp_ccw, cfg.model, Drive::ccw);
      row.has_analytic = true;
    }
    row.report = row.has_numeric ? ratios(row.cw, row.ccw, tol)
                                 : ratios(row.cw_analytic, row.ccw_analytic, tol);
  } catch (const std::exception& ex) {
    row.error = ex.what();
  }
  return row;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> points = grid_points(spec.start, spec.stop, spec.count);
  std::vector<ResultRow> rows(points.size());

  unsigned pool = spec.threads > 0 ? unsigned(spec.threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
  if (points.size() < pool) pool = unsigned(points.size());

  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    for (size_t i = cursor.fetch_add(1); i < points.size(); i = cursor.fetch_add(1)) {
      rows[i] = solve_point(at_axis_value(spec.base, spec.axis, points[i]), spec.tol);
      rows[i].index = static_cast<int>(i);
      rows[i].axis_value = points[i];
    }
  };
  if (pool <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (unsigned t = 0; t < pool; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return rows;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string classification_label(const NRReport& r) {
  if (r.reciprocal) return "reciprocal";
  if (r.hqnr) return "hqnr";
  std::string label;
  auto append = [&label](const char* piece) {
    if (!label.empty()) label += '+';
    label += piece;
  };
  if (r.cnr) append("cnr");
  if (r.qnr) append("qnr");
  if (r.r3_db != 0.0) append("r3");
  return label;
}

std::string dims_label(const std::vector<int>& dims) {
  std::string out;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(dims[i]);
  }
  return out.empty() ? "-" : out;
}

std::string sanitized(std::string text) {
  for (char& c : text)
    if (c == ',' || c == '\n') c = ';';
  return text;
}

void append_set_csv(std::ostream& out, const ObservableSet& set, bool with_p) {
  out << ',' << fmt(set.n) << ',' << fmt(set.g2) << ',' << fmt(set.g3);
  if (with_p) {
    auto p = leading_populations(set);
    for (double v : p) out << ',' << fmt(v);
  }
}

}  // namespace

void write_csv(std::ostream& out, const SweepSpec& spec,
               const std::vector<ResultRow>& rows) {
  const bool numeric = spec.base.engine != Engine::analytic;
  const bool analytic = spec.base.engine != Engine::numeric;

  out << "index,axis,axis_value,delta_l_over_gamma,omega_rad_s,j_over_gamma";
  if (numeric) {
    for (const char* dir : {"cw", "ccw"})
      out << ",n_" << dir << ",g2_" << dir << ",g3_" << dir << ",p0_" << dir
          << ",p1_" << dir << ",p2_" << dir << ",p3_" << dir;
    out << ",residual_cw,residual_ccw,dims";
  }
  if (analytic) {
    for (const char* dir : {"cw", "ccw"})
      out << ",n_" << dir << "_analytic,g2_" << dir << "_analytic,g3_" << dir
          << "_analytic";
  }
  out << ",r1_db,r2_db,r3_db,classification,status\n";

  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const ResultRow& row : rows) {
    out << row.index << ',' << to_string(spec.axis) << ',' << fmt(row.axis_value)
        << ',' << fmt(row.delta_l_over_gamma) << ',' << fmt(row.omega_rad_s) << ','
        << fmt(row.j_over_gamma);
    const bool ok = row.error.empty();
    if (numeric) {
      if (ok) {
        append_set_csv(out, row.cw, true);
        append_set_csv(out, row.ccw, true);
        out << ',' << fmt(row.residual_cw) << ',' << fmt(row.residual_ccw) << ','
            << dims_label(row.dims);
      } else {
        for (int i = 0; i < 16; ++i) out << ',' << fmt(nan);
        out << ",-";
      }
    }
    if (analytic) {
      if (ok) {
        append_set_csv(out, row.cw_analytic, false);
        append_set_csv(out, row.ccw_analytic, false);
      } else {
        for (int i = 0; i < 6; ++i) out << ',' << fmt(nan);
      }
    }
    if (ok) {
      out << ',' << fmt(row.report.r1_db) << ',' << fmt(row.report.r2_db) << ','
          << fmt(row.report.r3_db) << ',' << classification_label(row.report) << ",ok";
    } else {
      out << ',' << fmt(nan) << ',' << fmt(nan) << ',' << fmt(nan) << ",-,error: "
          << sanitized(row.error);
    }
    out << '\n';
  }
}

namespace {

nlohmann::json set_to_json(const ObservableSet& set, bool with_p) {
  nlohmann::json j{{"n", set.n}, {"g2", set.g2}, {"g3", set.g3}};
  if (with_p) {
    auto p = leading_populations(set);
    j["p"] = p;
  }
  return j;
}

}  // namespace

void write_json(std::ostream& out, const SweepSpec& spec,
                const std::vector<ResultRow>& rows) {
  nlohmann::json root;
  root["spec"] = {{"axis", to_string(spec.axis)},
                  {"start", spec.start},
                  {"stop", spec.stop},
                  {"count", spec.count},
                  {"model", to_string(spec.base.model)},
                  {"engine", to_string(spec.base.engine)}};
  root["rows"] = nlohmann::json::array();
  for (const ResultRow& row : rows) {
    nlohmann::json r{{"index", row.index},
                     {"axis_value", row.axis_value},
                     {"delta_l_over_gamma", row.delta_l_over_gamma},
                     {"omega_rad_s", row.omega_rad_s},
                     {"j_over_gamma", row.j_over_gamma}};
    if (!row.error.empty()) {
      r["error"] = row.error;
      root["rows"].push_back(std::move(r));
      continue;
    }
    if (row.has_numeric) {
      r["cw"] = set_to_json(row.cw, true);
      r["ccw"] = set_to_json(row.ccw, true);
      r["residual_cw"] = row.residual_cw;
      r["residual_ccw"] = row.residual_ccw;
      r["dims"] = row.dims;
    }
    if (row.has_analytic) {
      r["cw_analytic"] = set_to_json(row.cw_analytic, false);
      r["ccw_analytic"] = set_to_json(row.ccw_analytic, false);
    }
    r["r1_db"] = row.report.r1_db;
    r["r2_db"] = row.report.r2_db;
    r["r3_db"] = row.report.r3_db;
    r["classification"] = classification_label(row.report);
    root["rows"].push_back(std::move(r));
  }
  out << root.dump(2) << '\n';
}

}  // namespace spinkerr
