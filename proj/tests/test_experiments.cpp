#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ggm/entanglement.hpp"
#include "ggm/experiments.hpp"
#include "ggm/state.hpp"

using namespace ggm;

namespace {

PureState neel_superposition(int n) {
  const auto [first, second] = neel_masks(n);
  std::vector<Complex> amp(state_dim(n), Complex(0, 0));
  const double r = 1.0 / std::sqrt(2.0);
  amp[first] = Complex(r, 0);
  amp[second] = Complex(r, 0);
  return PureState(n, std::move(amp));
}

ScanGrid small_grid() {
  ScanGrid grid;
  grid.n_sites = 6;
  grid.regime = Regime::kAFM;
  grid.alpha_values = {AlphaValue::power_law(10), AlphaValue::power_law(1)};
  grid.delta_values = {1.5, 0.5};
  return grid;
}

}  // namespace

TEST_CASE("neel_weight of the anchor states") {
  CHECK(neel_weight(neel_superposition(6)) == doctest::Approx(1.0).epsilon(1e-14));
  for (int n : {4, 8, 12}) {
    CHECK(neel_weight(product_plus_state(n)) ==
          doctest::Approx(2.0 * std::pow(2.0, -n)).epsilon(1e-12));
  }
  const double w = neel_weight(random_state(6, 5));
  CHECK(w >= 0.0);
  CHECK(w <= 1.0);
  CHECK_THROWS_AS(neel_weight(random_state(5, 5)), std::invalid_argument);
}

TEST_CASE("scan_point_params maps the regime onto the couplings") {
  ScanGrid grid = small_grid();
  const ModelParams afm = scan_point_params(grid, AlphaValue::power_law(2), 0.7);
  CHECK(afm.jx == 1.0);
  CHECK(afm.jy == 1.0);
  CHECK(afm.delta == 0.7);
  CHECK(afm.alpha == 2.0);
  grid.regime = Regime::kFM;
  const ModelParams fm = scan_point_params(grid, AlphaValue::nearest_neighbor(), 0.7);
  CHECK(fm.jx == -1.0);
  CHECK(fm.nn_only);
}

TEST_CASE("ground_scan emits sorted records with GGM inside the qubit bound") {
  const ScanGrid grid = small_grid();
  const auto records = ground_scan(grid);
  REQUIRE(records.size() == 4);
  // Sorted by (alpha, delta) regardless of the input order.
  CHECK(records[0].alpha.value == 1.0);
  CHECK(records[0].delta == 0.5);
  CHECK(records[1].alpha.value == 1.0);
  CHECK(records[1].delta == 1.5);
  CHECK(records[2].alpha.value == 10.0);
  for (const ScanRecord& rec : records) {
    CHECK(rec.status == PointStatus::kOk);
    CHECK(rec.ggm >= 0.0);
    CHECK(rec.ggm <= 0.5 + 1e-12);
    CHECK(rec.neel_weight >= 0.0);
    CHECK(rec.neel_weight <= 1.0);
    CHECK(rec.gap > 0.0);
  }
}

TEST_CASE("scan output is byte-identical across worker counts") {
  ScanGrid grid = small_grid();
  grid.workers = 1;
  const std::string serial = ground_csv_text(grid, ground_scan(grid));
  grid.workers = 4;
  const std::string parallel = ground_csv_text(grid, ground_scan(grid));
  CHECK(serial == parallel);
  CHECK(serial.find("regime,n,alpha,delta,energy,gap,ggm,neel_weight,status") == 0);
  CHECK(serial.find("AFM,6,1,0.5,") != std::string::npos);
}

TEST_CASE("degenerate points carry the marker instead of a GGM value") {
  ScanGrid grid;
  grid.n_sites = 6;
  grid.regime = Regime::kFM;
  grid.alpha_values = {AlphaValue::power_law(10)};
  grid.delta_values = {-1.5};  // ferromagnetic multiplet
  const auto records = ground_scan(grid);
  REQUIRE(records.size() == 1);
  CHECK(records[0].status == PointStatus::kDegenerate);
  CHECK(std::isnan(records[0].ggm));
  CHECK(std::isnan(records[0].neel_weight));
  CHECK(std::isfinite(records[0].energy));
  const std::string csv = ground_csv_text(grid, records);
  CHECK(csv.find("DEGENERATE") != std::string::npos);
  CHECK(csv.find("nan") != std::string::npos);
}

TEST_CASE("per-point failures never abort a scan") {
  ScanGrid grid = small_grid();
  grid.solver_opts.max_krylov_dim = 4;  // cannot reach 1e-10 at dim 64
  const auto records = ground_scan(grid);
  REQUIRE(records.size() == 4);
  for (const ScanRecord& rec : records) {
    CHECK(rec.status == PointStatus::kFailed);
    CHECK(std::isnan(rec.ggm));
  }
  const std::string csv = ground_csv_text(grid, records);
  CHECK(csv.find("FAILED") != std::string::npos);
}

TEST_CASE("quench_scan starts separable and stays normalized") {
  ModelParams params;
  params.n_sites = 6;
  params.alpha = 1.0;
  params.jx = params.jy = 1.0;
  params.delta = 0.5;
  const std::vector<double> times{0.0, 0.25, 0.5, 0.75, 1.0};
  const QuenchTrace trace = quench_scan(params, times, {});
  REQUIRE(trace.times == times);
  CHECK(trace.ggm_values[0] == 0.0);
  CHECK(trace.ggm_values[2] > 0.0);
  for (double err : trace.norm_errors) CHECK(err < 1e-9);

  const std::string csv = quench_csv_text(Regime::kAFM, params, trace);
  CHECK(csv.find("regime,n,alpha,delta,time,ggm,energy,norm_error") == 0);
  CHECK(csv.find("AFM,6,1,0.5,0,0,") != std::string::npos);  // G(0) = 0 exactly

  // Determinism of the trace text.
  CHECK(quench_csv_text(Regime::kAFM, params, quench_scan(params, times, {})) == csv);
}

TEST_CASE("alpha values sort with the nearest-neighbor sentinel last") {
  ScanGrid grid = small_grid();
  grid.alpha_values = {AlphaValue::nearest_neighbor(), AlphaValue::power_law(3)};
  grid.delta_values = {0.5};
  const auto records = ground_scan(grid);
  REQUIRE(records.size() == 2);
  CHECK_FALSE(records[0].alpha.nn_only);
  CHECK(records[1].alpha.nn_only);
  const std::string csv = ground_csv_text(grid, records);
  CHECK(csv.find("AFM,6,nn,0.5,") != std::string::npos);
}
