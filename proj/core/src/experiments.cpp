#include "ggm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ggm/entanglement.hpp"
#include "ggm/parallel.hpp"

namespace ggm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// %.12g: fixed-width-free, locale-independent, reproducible.
std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

const char* regime_name(Regime regime) { return regime == Regime::kFM ? "FM" : "AFM"; }

double regime_coupling(Regime regime) { return regime == Regime::kFM ? -1.0 : 1.0; }

std::string AlphaValue::label() const { return nn_only ? "nn" : fmt(value); }

const char* status_name(PointStatus status) {
  switch (status) {
    case PointStatus::kOk: return "OK";
    case PointStatus::kDegenerate: return "DEGENERATE";
    case PointStatus::kFailed: return "FAILED";
  }
  return "?";
}

ModelParams scan_point_params(const ScanGrid& grid, const AlphaValue& alpha, double delta) {
  ModelParams params;
  params.n_sites = grid.n_sites;
  params.alpha = alpha.value;
  params.nn_only = alpha.nn_only;
  params.jx = params.jy = regime_coupling(grid.regime);
  params.delta = delta;
  return params;
}

std::vector<ScanRecord> ground_scan(const ScanGrid& grid) {
  if (grid.alpha_values.empty() || grid.delta_values.empty()) {
    throw std::invalid_argument("ground_scan: alpha and delta lists must be nonempty");
  }
  for (double d : grid.delta_values) {
    if (!std::isfinite(d)) throw std::invalid_argument("ground_scan: delta must be finite");
  }
  // Sorted point list; records come back in this order no matter how many
  // workers pull jobs.
  std::vector<AlphaValue> alphas = grid.alpha_values;
  std::stable_sort(alphas.begin(), alphas.end(),
                   [](const AlphaValue& a, const AlphaValue& b) {
                     return a.sort_key() < b.sort_key();
                   });
  std::vector<double> deltas = grid.delta_values;
  std::sort(deltas.begin(), deltas.end());

  struct Point {
    AlphaValue alpha;
    double delta;
  };
  std::vector<Point> points;
  for (const AlphaValue& a : alphas) {
    for (double d : deltas) points.push_back({a, d});
  }

  std::vector<ScanRecord> records(points.size());
  parallel_for(points.size(), grid.workers, [&](std::size_t idx) {
    const Point& p = points[idx];
    ScanRecord rec;
    rec.alpha = p.alpha;
    rec.delta = p.delta;
    rec.ggm = kNaN;
    rec.neel_weight = kNaN;
    try {
      LanczosOpts opts = grid.solver_opts;
      opts.seed = mix_seed(grid.solver_opts.seed, idx);
      const LongRangeOperator op = build_model(scan_point_params(grid, p.alpha, p.delta));
      const GroundResult ground = ground_state(op, opts);
      rec.energy = ground.energy;
      rec.gap = ground.gap_estimate;
      if (ground.degenerate) {
        rec.status = PointStatus::kDegenerate;
      } else {
        rec.status = PointStatus::kOk;
        rec.ggm = compute_ggm(ground.state).value;
        if (grid.n_sites % 2 == 0) rec.neel_weight = neel_weight(ground.state);
      }
    } catch (const std::exception&) {
      rec.energy = kNaN;
      rec.gap = kNaN;
      rec.status = PointStatus::kFailed;
    }
    records[idx] = std::move(rec);
  });
  return records;
}

QuenchTrace quench_scan(const ModelParams& params, const std::vector<double>& times,
                        const PropagatorOpts& opts, int ggm_workers) {
  const LongRangeOperator op = build_model(params);
  TraceOptions trace_opts;
  trace_opts.ggm.workers = ggm_workers;
  return evolve_series(op, product_plus_state(params.n_sites), times, opts, trace_opts);
}

double neel_weight(const PureState& psi) {
  const auto [first, second] = neel_masks(psi.n_sites());
  return std::norm(psi[first]) + std::norm(psi[second]);
}

void write_ground_csv(std::ostream& out, const ScanGrid& grid,
                      const std::vector<ScanRecord>& records) {
  out << "regime,n,alpha,delta,energy,gap,ggm,neel_weight,status\n";
  for (const ScanRecord& rec : records) {
    out << regime_name(grid.regime) << ',' << grid.n_sites << ',' << rec.alpha.label() << ','
        << fmt(rec.delta) << ',' << fmt(rec.energy) << ',' << fmt(rec.gap) << ','
        << fmt(rec.ggm) << ',' << fmt(rec.neel_weight) << ',' << status_name(rec.status)
        << '\n';
  }
}

std::string ground_csv_text(const ScanGrid& grid, const std::vector<ScanRecord>& records) {
  std::ostringstream out;
  write_ground_csv(out, grid, records);
  return out.str();
}

void write_quench_csv(std::ostream& out, Regime regime, const ModelParams& params,
                      const QuenchTrace& trace) {
  out << "regime,n,alpha,delta,time,ggm,energy,norm_error\n";
  const AlphaValue alpha{params.alpha, params.nn_only};
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    out << regime_name(regime) << ',' << params.n_sites << ',' << alpha.label() << ','
        << fmt(params.delta) << ',' << fmt(trace.times[i]) << ',' << fmt(trace.ggm_values[i])
        << ',' << fmt(trace.energies[i]) << ',' << fmt(trace.norm_errors[i]) << '\n';
  }
}

std::string quench_csv_text(Regime regime, const ModelParams& params, const QuenchTrace& trace) {
  std::ostringstream out;
  write_quench_csv(out, regime, params, trace);
  return out.str();
}

}  // namespace ggm
