#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "ggm/hamiltonian.hpp"
#include "ggm/lanczos.hpp"
#include "ggm/propagator.hpp"
#include "ggm/state.hpp"

namespace ggm {

// Sign of the x-y plane couplings; J = |jx| = |jy| = 1 throughout the scans.
enum class Regime { kFM, kAFM };

const char* regime_name(Regime regime);
double regime_coupling(Regime regime);  // -1 for FM, +1 for AFM

// Interaction-range value in a scan list: a power-law exponent or the strict
// nearest-neighbor sentinel (sorts after every finite alpha).
struct AlphaValue {
  double value = 1.0;
  bool nn_only = false;

  static AlphaValue power_law(double alpha) { return {alpha, false}; }
  static AlphaValue nearest_neighbor() { return {0.0, true}; }
  double sort_key() const { return nn_only ? std::numeric_limits<double>::infinity() : value; }
  std::string label() const;  // "nn" or the number
};

struct ScanGrid {
  int n_sites = 12;
  Regime regime = Regime::kAFM;
  std::vector<double> delta_values;
  std::vector<AlphaValue> alpha_values;
  LanczosOpts solver_opts;
  int workers = 1;
};

enum class PointStatus { kOk, kDegenerate, kFailed };

const char* status_name(PointStatus status);

struct ScanRecord {
  AlphaValue alpha;
  double delta = 0.0;
  double energy = 0.0;
  double gap = 0.0;
  double ggm = 0.0;          // only meaningful when status == kOk
  double neel_weight = 0.0;  // NaN for odd chains or non-kOk points
  PointStatus status = PointStatus::kOk;
};

ModelParams scan_point_params(const ScanGrid& grid, const AlphaValue& alpha, double delta);

// One ground solve + GGM + Neel weight per (alpha, delta). Solver failures mark
// the record kFailed instead of aborting the sweep; degenerate manifolds are
// reported, never fed to compute_ggm(). Output order is (alpha, delta) sorted and
// independent of the worker count.
std::vector<ScanRecord> ground_scan(const ScanGrid& grid);

// Quench from the separable |+>^N state under the given couplings.
QuenchTrace quench_scan(const ModelParams& params, const std::vector<double>& times,
                        const PropagatorOpts& opts, int ggm_workers = 1);

// Weight of the two-dimensional Neel subspace in psi. Even chains only.
double neel_weight(const PureState& psi);

// CSV emission, 12 significant digits, byte-stable for a fixed grid + seed.
void write_ground_csv(std::ostream& out, const ScanGrid& grid,
                      const std::vector<ScanRecord>& records);
std::string ground_csv_text(const ScanGrid& grid, const std::vector<ScanRecord>& records);

void write_quench_csv(std::ostream& out, Regime regime, const ModelParams& params,
                      const QuenchTrace& trace);
std::string quench_csv_text(Regime regime, const ModelParams& params, const QuenchTrace& trace);

}  // namespace ggm
