#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ggm/entanglement.hpp"
#include "ggm/hamiltonian.hpp"
#include "ggm/state.hpp"

namespace ggm {

struct PropagatorOpts {
  int krylov_dim = 30;
  double step_tolerance = 1e-10;  // estimated local error per substep
  long max_substeps = 1000000;
};

// Time series from one quench run. times are in units of 1/J, starting at 0.
struct QuenchTrace {
  std::vector<double> times;
  std::optional<std::vector<PureState>> states;  // only when snapshots requested
  std::vector<double> ggm_values;
  std::vector<double> energies;
  std::vector<double> norm_errors;
};

// The substep budget ran out before reaching the requested time.
class PropagationError : public std::runtime_error {
 public:
  PropagationError(const std::string& what, double reached_time)
      : std::runtime_error(what), reached_time_(reached_time) {}
  double reached_time() const noexcept { return reached_time_; }

 private:
  double reached_time_;
};

// exp(-i H t) psi0 via Lanczos subspaces with adaptive substepping: a substep
// is halved until the component leaking out of the Krylov space stays under
// step_tolerance.
PureState evolve(const LongRangeOperator& op, const PureState& psi0, double t,
                 const PropagatorOpts& opts = {});

struct TraceOptions {
  GgmOptions ggm;
  bool store_states = false;
};

// Evolves along an increasing time grid (starting at 0) without restarting
// from t = 0, recording GGM, energy and norm error at every point.
QuenchTrace evolve_series(const LongRangeOperator& op, const PureState& psi0,
                          const std::vector<double>& times, const PropagatorOpts& opts = {},
                          const TraceOptions& trace_opts = {});

// Exact exponential through full spectral decomposition. Oracle, n_sites <= 10.
PureState dense_evolve(const LongRangeOperator& op, const PureState& psi0, double t);

// Bare trace CSV (time,ggm,energy,norm_error), 12 significant digits.
std::string trace_csv_text(const QuenchTrace& trace);

}  // namespace ggm
