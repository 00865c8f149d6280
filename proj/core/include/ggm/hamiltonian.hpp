#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <vector>

#include "ggm/state.hpp"

namespace ggm {

// Couplings of the variable-range XXZ chain
//   H = sum_{i<j} w_ij (jx X_i X_j + jy Y_i Y_j + delta Z_i Z_j),
// w_ij = 1/d(i,j)^alpha with the chord distance d = min(|i-j|, N-|i-j|)
// (periodic chain). nn_only is the strict nearest-neighbor limit (alpha -> inf).
struct ModelParams {
  int n_sites = 2;
  double alpha = 1.0;  // ignored when nn_only
  bool nn_only = false;
  double jx = 1.0;
  double jy = 1.0;
  double delta = 0.0;
};

// Throws std::invalid_argument on out-of-range fields.
void validate(const ModelParams& params);

// One weighted exchange bond, i < j.
struct TwoSiteTerm {
  int site_i;
  int site_j;
  double weight;
};

int chord_distance(int i, int j, int n_sites);

// Matrix-free long-range Hamiltonian. Immutable after build_model.
class LongRangeOperator {
 public:
  const ModelParams& params() const noexcept { return params_; }
  std::span<const TwoSiteTerm> terms() const noexcept { return terms_; }
  int n_sites() const noexcept { return params_.n_sites; }
  std::size_t dim() const noexcept { return state_dim(params_.n_sites); }

  // Sum of all bond weights; the all-up diagonal energy is delta * coupling_sum().
  double coupling_sum() const;

  // out = H in. Deterministic, no aliasing allowed between in and out.
  void apply(std::span<const Complex> in, std::span<Complex> out) const;
  std::vector<Complex> apply(const PureState& psi) const;

  // Dense Hermitian matrix assembled column-by-column from apply. Oracle only,
  // refuses n_sites > 12.
  Eigen::MatrixXcd dense_matrix() const;

  // <psi|H|psi>. Throws if the imaginary residue exceeds 1e-8.
  double expectation(const PureState& psi) const;

  // Fault-injection knob for the validate negative control: skews one direction
  // of the exchange flip so the operator is no longer Hermitian. Leave at 0.
  double hermiticity_skew = 0.0;

 private:
  friend LongRangeOperator build_model(const ModelParams& params);
  ModelParams params_;
  std::vector<TwoSiteTerm> terms_;
};

LongRangeOperator build_model(const ModelParams& params);

// Diagonal total-magnetization action, (S^z_tot psi)[b] = (N - 2 popcount(b)) psi[b].
// Commutes with H when jx == jy.
std::vector<Complex> apply_total_sz(const PureState& psi);

}  // namespace ggm
