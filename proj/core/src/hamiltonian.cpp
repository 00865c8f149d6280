#include "ggm/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ggm {

void validate(const ModelParams& params) {
  if (params.n_sites < 2 || params.n_sites > kMaxSites) {
    throw std::invalid_argument("n_sites must be in [2, " + std::to_string(kMaxSites) + "]");
  }
  if (!params.nn_only && !(params.alpha > 0.0)) {
    throw std::invalid_argument("alpha must be > 0 (use nn_only for the strict NN limit)");
  }
  if (!std::isfinite(params.jx) || !std::isfinite(params.jy) || !std::isfinite(params.delta)) {
    throw std::invalid_argument("couplings must be finite");
  }
  if (!params.nn_only && !std::isfinite(params.alpha)) {
    throw std::invalid_argument("alpha must be finite (use nn_only for the strict NN limit)");
  }
}

int chord_distance(int i, int j, int n_sites) {
  const int d = std::abs(i - j);
  return std::min(d, n_sites - d);
}

LongRangeOperator build_model(const ModelParams& params) {
  validate(params);
  LongRangeOperator op;
  op.params_ = params;
  const int n = params.n_sites;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = chord_distance(i, j, n);
      if (params.nn_only) {
        if (d == 1) op.terms_.push_back({i, j, 1.0});
      } else {
        op.terms_.push_back({i, j, std::pow(static_cast<double>(d), -params.alpha)});
      }
    }
  }
  return op;
}

double LongRangeOperator::coupling_sum() const {
  long double acc = 0.0L;
  for (const TwoSiteTerm& t : terms_) acc += t.weight;
  return static_cast<double>(acc);
}

namespace {

// Per-term constants hoisted out of the basis loop.
struct CompiledTerm {
  std::uint64_t bit_i;
  std::uint64_t bit_j;
  std::uint64_t flip_mask;
  double anti;     // (jx + jy) w, exchange amplitude for anti-aligned pairs
  double aligned;  // (jx - jy) w, double-flip amplitude for aligned pairs
  double zz;       // delta * w, same-sign diagonal contribution
};

}  // namespace

void LongRangeOperator::apply(std::span<const Complex> in, std::span<Complex> out) const {
  const std::size_t dim = this->dim();
  if (in.size() != dim || out.size() != dim) {
    throw std::invalid_argument("apply: vector length must be 2^n_sites");
  }
  std::vector<CompiledTerm> ct;
  ct.reserve(terms_.size());
  for (const TwoSiteTerm& t : terms_) {
    const std::uint64_t bi = std::uint64_t{1} << t.site_i;
    const std::uint64_t bj = std::uint64_t{1} << t.site_j;
    ct.push_back({bi, bj, bi | bj, (params_.jx + params_.jy) * t.weight,
                  (params_.jx - params_.jy) * t.weight, params_.delta * t.weight});
  }
  const double skew = hermiticity_skew;
  for (std::size_t b = 0; b < dim; ++b) {
    double diag = 0.0;
    Complex acc(0.0, 0.0);
    for (const CompiledTerm& t : ct) {
      const bool si = (b & t.bit_i) != 0;
      const bool sj = (b & t.bit_j) != 0;
      if (si == sj) {
        diag += t.zz;
        if (t.aligned != 0.0) acc += t.aligned * in[b ^ t.flip_mask];
      } else {
        diag -= t.zz;
        double c = t.anti;
        if (skew != 0.0 && si) c *= 1.0 + skew;
        acc += c * in[b ^ t.flip_mask];
      }
    }
    out[b] = acc + diag * in[b];
  }
}

std::vector<Complex> LongRangeOperator::apply(const PureState& psi) const {
  if (psi.n_sites() != params_.n_sites) {
    throw std::invalid_argument("apply: state has wrong n_sites");
  }
  std::vector<Complex> out(dim());
  apply(psi.amplitudes(), out);
  return out;
}

Eigen::MatrixXcd LongRangeOperator::dense_matrix() const {
  if (params_.n_sites > 12) {
    throw std::invalid_argument("dense_matrix is an oracle for n_sites <= 12");
  }
  const std::size_t dim = this->dim();
  Eigen::MatrixXcd mat(dim, dim);
  std::vector<Complex> unit(dim, Complex(0.0, 0.0));
  std::vector<Complex> col(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    unit[j] = Complex(1.0, 0.0);
    apply(unit, col);
    for (std::size_t i = 0; i < dim; ++i) mat(i, j) = col[i];
    unit[j] = Complex(0.0, 0.0);
  }
  return mat;
}

double LongRangeOperator::expectation(const PureState& psi) const {
  const std::vector<Complex> h_psi = apply(psi);
  long double re = 0.0L, im = 0.0L;
  const auto amp = psi.amplitudes();
  for (std::size_t i = 0; i < amp.size(); ++i) {
    const Complex t = std::conj(amp[i]) * h_psi[i];
    re += t.real();
    im += t.imag();
  }
  if (std::abs(static_cast<double>(im)) > 1e-8) {
    throw std::runtime_error("expectation: imaginary residue " +
                             std::to_string(static_cast<double>(im)) +
                             " exceeds hermiticity bound");
  }
  return static_cast<double>(re);
}

std::vector<Complex> apply_total_sz(const PureState& psi) {
  const int n = psi.n_sites();
  std::vector<Complex> out(psi.dim());
  for (std::size_t b = 0; b < out.size(); ++b) {
    out[b] = static_cast<double>(n - 2 * std::popcount(b)) * psi[b];
  }
  return out;
}

}  // namespace ggm
