#include "ggm/lanczos.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ggm/parallel.hpp"

namespace ggm {

namespace {

using Vec = Eigen::VectorXcd;

Vec random_vec(std::size_t dim, std::uint64_t seed) {
  const int n = std::countr_zero(dim);
  const PureState s = random_state(n, seed);
  return Eigen::Map<const Vec>(s.amplitudes().data(), static_cast<Eigen::Index>(dim));
}

struct LowestRitz {
  double theta;        // lowest Ritz value
  Vec vector;          // assembled Ritz vector, normalized
  double residual;     // ||H x - theta x||
  int iterations;
  bool converged;
};

// Lanczos for the lowest eigenpair of H restricted to the orthogonal
// complement of `deflate` (if given). Full reorthogonalization keeps ghost
// copies of converged eigenvalues out of the tridiagonal matrix.
LowestRitz lowest_eigenpair(const LongRangeOperator& op, const LanczosOpts& opts,
                            std::uint64_t seed, const Vec* deflate) {
  const std::size_t dim = op.dim();
  const Eigen::Index edim = static_cast<Eigen::Index>(dim);
  const int space = deflate ? static_cast<int>(dim) - 1 : static_cast<int>(dim);
  const int m_max = std::min(opts.max_krylov_dim, space);

  Vec v = random_vec(dim, seed);
  if (deflate) v -= (*deflate) * deflate->dot(v);
  v.normalize();

  std::vector<Vec> basis;
  basis.push_back(v);
  std::vector<double> alpha, beta;  // beta[j] couples basis[j] and basis[j+1]
  Vec w(edim), h_ritz(edim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;

  double best_residual = std::numeric_limits<double>::infinity();
  std::optional<LowestRitz> best;

  for (int j = 0; j < m_max; ++j) {
    op.apply({basis[j].data(), dim}, {w.data(), dim});
    const double a = std::real(basis[j].dot(w));
    alpha.push_back(a);
    w -= a * basis[j];
    if (j > 0) w -= beta[j - 1] * basis[j - 1];
    if (deflate) w -= (*deflate) * deflate->dot(w);
    if (opts.reorthogonalize) {
      for (const Vec& u : basis) w -= u * u.dot(w);
    }
    const double b = w.norm();
    const int k = j + 1;

    // Ritz data for the current k-dimensional space.
    Eigen::Map<const Eigen::VectorXd> diag(alpha.data(), k);
    Eigen::VectorXd sub(std::max(k - 1, 0));
    for (int i = 0; i + 1 < k; ++i) sub(i) = beta[i];
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const double theta = tri.eigenvalues()(0);
    const Eigen::VectorXd s = tri.eigenvectors().col(0);
    const double residual_estimate = std::abs(b * s(k - 1));

    const bool exhausted = (b <= 1e-13) || (k == m_max);
    if (residual_estimate < opts.tolerance || exhausted) {
      Vec x = Vec::Zero(edim);
      for (int i = 0; i < k; ++i) x += s(i) * basis[i];
      x.normalize();
      op.apply({x.data(), dim}, {h_ritz.data(), dim});
      const double residual = (h_ritz - theta * x).norm();
      if (residual < best_residual) {
        best_residual = residual;
        best = LowestRitz{theta, std::move(x), residual, k, residual < opts.tolerance};
      }
      if (best->converged || exhausted) return *best;
    }
    beta.push_back(b);
    basis.push_back(w / b);
  }
  throw std::logic_error("Lanczos loop ended without hitting the exhausted branch");
}

GroundResult package(const LongRangeOperator& op, const LanczosOpts& opts,
                     const LowestRitz& ground, double second_energy) {
  const double gap = std::max(second_energy - ground.theta, 0.0);
  std::vector<Complex> amp(ground.vector.data(), ground.vector.data() + ground.vector.size());
  return GroundResult{ground.theta,
                      PureState(op.n_sites(), std::move(amp)),
                      gap,
                      ground.iterations,
                      ground.converged,
                      gap < opts.degeneracy_tol};
}

}  // namespace

GroundResult ground_state(const LongRangeOperator& op, const LanczosOpts& opts) {
  if (!(opts.tolerance > 0.0) || opts.max_krylov_dim < 2) {
    throw std::invalid_argument("LanczosOpts: tolerance must be > 0, max_krylov_dim >= 2");
  }
  const LowestRitz ground = lowest_eigenpair(op, opts, opts.seed, nullptr);
  if (!ground.converged) {
    throw ConvergenceError("Lanczos did not reach the residual tolerance within " +
                               std::to_string(opts.max_krylov_dim) +
                               " Krylov dimensions (best residual " +
                               std::to_string(ground.residual) + ")",
                           ground.residual);
  }
  // Deflated second pass: lowest eigenvalue orthogonal to the ground vector is
  // E1 including multiplicity, which a single Krylov run cannot see.
  // TODO: restrict to the S^z = 0 sector when jx == jy; halves the memory
  // needed for the stored basis on N = 20 runs.
  LanczosOpts gap_opts = opts;
  gap_opts.tolerance = std::max(opts.tolerance, 1e-11);
  const LowestRitz excited =
      lowest_eigenpair(op, gap_opts, mix_seed(opts.seed, 0x6a09e667ull), &ground.vector);
  return package(op, opts, ground, excited.theta);
}

GroundResult dense_ground(const LongRangeOperator& op, double degeneracy_tol) {
  if (op.n_sites() > 12) {
    throw std::invalid_argument("dense_ground is an oracle for n_sites <= 12");
  }
  const std::size_t dim = op.dim();
  // H is real symmetric in this basis; assemble and solve in reals.
  Eigen::MatrixXd mat(dim, dim);
  {
    std::vector<Complex> unit(dim, Complex(0.0, 0.0));
    std::vector<Complex> col(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      unit[j] = Complex(1.0, 0.0);
      op.apply(unit, col);
      for (std::size_t i = 0; i < dim; ++i) {
        mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col[i].real();
      }
      unit[j] = Complex(0.0, 0.0);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
  const double e0 = solver.eigenvalues()(0);
  const double gap = std::max(solver.eigenvalues()(1) - e0, 0.0);
  std::vector<Complex> amp(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    amp[i] = Complex(solver.eigenvectors()(static_cast<Eigen::Index>(i), 0), 0.0);
  }
  return GroundResult{e0,   PureState(op.n_sites(), std::move(amp)),
                      gap,  0,
                      true, gap < degeneracy_tol};
}

}  // namespace ggm
