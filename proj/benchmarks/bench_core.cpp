#include <benchmark/benchmark.h>

#include "spinkerr/analytic.hpp"
#include "spinkerr/hamiltonian.hpp"
#include "spinkerr/lindblad.hpp"
#include "spinkerr/nonreciprocity.hpp"
#include "spinkerr/observables.hpp"

namespace {

spinkerr::ModelPoint reference_point(spinkerr::Drive drive, double omega, double j) {
  spinkerr::PhysicalParams p;
  p.omega_rad_s = omega;
  p.drive = drive;
  spinkerr::ModelPoint mp = spinkerr::make_point(p, 0.0, j);
  return mp;
}

void BM_BuildLiouvillianSingle(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  spinkerr::ModelPoint mp = reference_point(spinkerr::Drive::cw, 3.8e3, 0.0);
  spinkerr::FockOperator h = spinkerr::build_h1(mp, dim);
  spinkerr::FockOperator a = spinkerr::annihilation(dim);
  for (auto _ : state) {
    auto liou = spinkerr::build_liouvillian(h, {{a, mp.gamma}});
    benchmark::DoNotOptimize(liou);
  }
}
BENCHMARK(BM_BuildLiouvillianSingle)->Arg(8)->Arg(12);

void BM_SteadyStateSingle(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  spinkerr::ModelPoint mp = reference_point(spinkerr::Drive::cw, 3.8e3, 0.0);
  for (auto _ : state) {
    auto sol = spinkerr::solve_model(mp, spinkerr::Model::single_mode, {dim});
    benchmark::DoNotOptimize(sol.rho.mat);
  }
}
BENCHMARK(BM_SteadyStateSingle)->Arg(8)->Arg(12);

void BM_SteadyStateTwoMode(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  spinkerr::ModelPoint mp = reference_point(spinkerr::Drive::ccw, 5.8e3, 2.0);
  for (auto _ : state) {
    auto sol = spinkerr::solve_model(mp, spinkerr::Model::two_mode, {dim, dim});
    benchmark::DoNotOptimize(sol.rho.mat);
  }
}
BENCHMARK(BM_SteadyStateTwoMode)->Arg(5)->Arg(6);

void BM_TwoModeClosedForm(benchmark::State& state) {
  spinkerr::ModelPoint mp = reference_point(spinkerr::Drive::ccw, 5.8e3, 2.0);
  for (auto _ : state) {
    auto obs = spinkerr::two_mode_observables(mp, spinkerr::Drive::ccw);
    benchmark::DoNotOptimize(obs);
  }
}
BENCHMARK(BM_TwoModeClosedForm);

void BM_Classify(benchmark::State& state) {
  spinkerr::ModelPoint cw = reference_point(spinkerr::Drive::cw, 5.8e3, 2.0);
  spinkerr::ModelPoint ccw = reference_point(spinkerr::Drive::ccw, 5.8e3, 2.0);
  auto cw_obs = spinkerr::two_mode_observables(cw, spinkerr::Drive::cw);
  auto ccw_obs = spinkerr::two_mode_observables(ccw, spinkerr::Drive::ccw);
  for (auto _ : state) {
    auto report = spinkerr::ratios(cw_obs, ccw_obs);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
