#pragma once

#include <cstdint>
#include <stdexcept>

#include "ggm/hamiltonian.hpp"
#include "ggm/state.hpp"

namespace ggm {

struct LanczosOpts {
  double tolerance = 1e-10;  // residual ||H psi - E psi||
  int max_krylov_dim = 200;
  std::uint64_t seed = 1;
  bool reorthogonalize = true;
  double degeneracy_tol = 1e-8;  // gap below this flags a degenerate manifold
};

struct GroundResult {
  double energy;
  PureState state;
  double gap_estimate;  // E1 - E0, never negative
  int iterations;
  bool converged;
  // Ground manifold not unique within degeneracy_tol; GGM consumers must
  // refuse such states.
  bool degenerate;
};

// Lanczos ran out of Krylov dimensions before meeting the residual tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

// Seeded Lanczos with full reorthogonalization. The gap estimate comes from a
// second, deflated run in the orthogonal complement of the ground vector, so
// exact degeneracies are detected rather than hidden inside one Krylov space.
GroundResult ground_state(const LongRangeOperator& op, const LanczosOpts& opts = {});

// Full spectral decomposition oracle, n_sites <= 12.
GroundResult dense_ground(const LongRangeOperator& op, double degeneracy_tol = 1e-8);

}  // namespace ggm
