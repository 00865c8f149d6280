#include "ggm/entanglement.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "ggm/parallel.hpp"

namespace ggm {

Bipartition::Bipartition(int n_sites, std::uint64_t subset_mask)
    : n_sites_(n_sites), mask_(subset_mask) {
  if (n_sites < 2 || n_sites > kMaxSites) {
    throw std::invalid_argument("Bipartition: n_sites must be in [2, " +
                                std::to_string(kMaxSites) + "]");
  }
  const std::uint64_t all = (std::uint64_t{1} << n_sites) - 1;
  if (mask_ == 0 || (mask_ & ~all) != 0 || mask_ == all) {
    throw std::invalid_argument("Bipartition: mask must be a nonempty proper subset");
  }
}

int Bipartition::size() const noexcept { return std::popcount(mask_); }

std::uint64_t Bipartition::complement_mask() const noexcept {
  return mask_ ^ ((std::uint64_t{1} << n_sites_) - 1);
}

Bipartition Bipartition::complement() const { return Bipartition(n_sites_, complement_mask()); }

bool Bipartition::is_canonical() const noexcept {
  const int s = size();
  if (2 * s < n_sites_) return true;
  if (2 * s > n_sites_) return false;
  return (mask_ & 1) != 0;  // balanced class keeps the representative with site 0
}

std::vector<Bipartition> canonical_bipartitions(int n_sites) {
  if (n_sites < 2 || n_sites > kMaxSites) {
    throw std::invalid_argument("canonical_bipartitions: n_sites out of range");
  }
  std::vector<Bipartition> cuts;
  const int half = n_sites / 2;
  for (int s = 1; s <= half; ++s) {
    const bool balanced = (2 * s == n_sites);
    // Gosper's hack walks the size-s masks in ascending order.
    std::uint64_t mask = (std::uint64_t{1} << s) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n_sites;
    while (mask < limit) {
      if (!balanced || (mask & 1)) cuts.emplace_back(n_sites, mask);
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return cuts;
}

namespace {

// Amplitudes rearranged as a 2^|A| x 2^|B| matrix: row = packed A-bits of the
// basis index, column = packed B-bits.
Eigen::MatrixXcd cut_matrix(const PureState& psi, std::uint64_t mask_a) {
  const int n = psi.n_sites();
  std::vector<int> sites_a, sites_b;
  for (int i = 0; i < n; ++i) {
    ((mask_a >> i) & 1 ? sites_a : sites_b).push_back(i);
  }
  const std::size_t rows = std::size_t{1} << sites_a.size();
  const std::size_t cols = std::size_t{1} << sites_b.size();
  std::vector<std::uint64_t> row_bits(rows), col_bits(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint64_t b = 0;
    for (std::size_t k = 0; k < sites_a.size(); ++k) {
      if ((r >> k) & 1) b |= std::uint64_t{1} << sites_a[k];
    }
    row_bits[r] = b;
  }
  for (std::size_t c = 0; c < cols; ++c) {
    std::uint64_t b = 0;
    for (std::size_t k = 0; k < sites_b.size(); ++k) {
      if ((c >> k) & 1) b |= std::uint64_t{1} << sites_b[k];
    }
    col_bits[c] = b;
  }
  Eigen::MatrixXcd m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const std::uint64_t cb = col_bits[c];
    for (std::size_t r = 0; r < rows; ++r) {
      m(r, c) = psi[row_bits[r] | cb];
    }
  }
  return m;
}

double clamp_prob(double x) { return std::clamp(x, 0.0, 1.0); }

double top_gram_eigenvalue_dense(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd gram = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

// Power iteration on M M^dag; only the top eigenvalue is needed and the
// degenerate-top case still converges in value.
double top_gram_eigenvalue_power(const Eigen::MatrixXcd& m, std::uint64_t seed) {
  constexpr double kRelTol = 1e-12;
  constexpr int kMaxIter = 10000;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(m.rows());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < kMaxIter; ++it) {
    const Eigen::VectorXcd w = m * (m.adjoint() * v);
    const double next = std::real(v.dot(w));
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;  // psi has no weight on this part
    v = w / wn;
    if (it > 0 && std::abs(next - lambda) <= kRelTol * std::max(std::abs(next), 1e-300)) {
      return next;
    }
    lambda = next;
  }
  return lambda;
}

}  // namespace

double max_schmidt_sq(const PureState& psi, const Bipartition& cut, SchmidtMethod method) {
  if (cut.n_sites() != psi.n_sites()) {
    throw std::invalid_argument("max_schmidt_sq: cut does not match state size");
  }
  // Complementary cuts share a spectrum; contract over the smaller part.
  const std::uint64_t mask =
      2 * cut.size() <= cut.n_sites() ? cut.subset_mask() : cut.complement_mask();
  const Eigen::MatrixXcd m = cut_matrix(psi, mask);
  if (method == SchmidtMethod::kAuto) {
    method = m.rows() <= 256 ? SchmidtMethod::kDenseSpectrum : SchmidtMethod::kPowerIteration;
  }
  double top = 0.0;
  if (method == SchmidtMethod::kDenseSpectrum) {
    top = top_gram_eigenvalue_dense(m);
  } else {
    const std::uint64_t seed =
        mix_seed(0x99d35a17ull + static_cast<std::uint64_t>(psi.n_sites()), mask);
    top = top_gram_eigenvalue_power(m, seed);
  }
  return clamp_prob(top);
}

std::vector<double> schmidt_spectrum(const PureState& psi, const Bipartition& cut) {
  if (cut.n_sites() != psi.n_sites()) {
    throw std::invalid_argument("schmidt_spectrum: cut does not match state size");
  }
  const std::size_t dim_a = std::size_t{1} << cut.size();
  if (dim_a > 4096) {
    throw std::invalid_argument("schmidt_spectrum: part A larger than 4096 states");
  }
  // rho_A and rho_B share nonzero eigenvalues; compute on the smaller side and
  // pad with exact zeros up to 2^|A|.
  const std::uint64_t mask =
      2 * cut.size() <= cut.n_sites() ? cut.subset_mask() : cut.complement_mask();
  const Eigen::MatrixXcd m = cut_matrix(psi, mask);
  const Eigen::MatrixXcd gram = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  std::vector<double> spectrum(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + solver.eigenvalues().size());
  for (double& x : spectrum) x = clamp_prob(x);
  std::sort(spectrum.rbegin(), spectrum.rend());
  spectrum.resize(dim_a, 0.0);
  return spectrum;
}

GgmResult compute_ggm(const PureState& psi, const GgmOptions& options) {
  if (psi.norm_error() > 1e-8) {
    throw std::invalid_argument("ggm: input state is not normalized");
  }
  if (psi.n_sites() < 2) {
    throw std::invalid_argument("ggm: need at least two sites");
  }
  const std::vector<Bipartition> cuts = canonical_bipartitions(psi.n_sites());
  std::vector<double> values(cuts.size());
  parallel_for(cuts.size(), options.workers,
               [&](std::size_t i) { values[i] = max_schmidt_sq(psi, cuts[i], options.method); });
  // Full pass first, then the deterministic tie-break: the max itself, and the
  // first cut within 1e-12 of it.
  double v_max = 0.0;
  for (double v : values) v_max = std::max(v_max, v);
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= v_max - 1e-12) {
      argmax = i;
      break;
    }
  }
  return GgmResult{1.0 - v_max, cuts[argmax], v_max, cuts.size()};
}

}  // namespace ggm
