#include "ggm/propagator.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace ggm {

namespace {

using Vec = Eigen::VectorXcd;

void check_opts(const PropagatorOpts& opts) {
  if (opts.krylov_dim < 4 || !(opts.step_tolerance > 0.0) || opts.max_substeps < 1) {
    throw std::invalid_argument(
        "PropagatorOpts: krylov_dim >= 4, step_tolerance > 0, max_substeps >= 1");
  }
}

struct KrylovSpace {
  std::vector<Vec> basis;      // orthonormal, first vector is the input state
  Eigen::VectorXd eigvals;     // of the k x k tridiagonal projection
  Eigen::MatrixXd eigvecs;
  double leak;                 // coupling out of the space, 0 on happy breakdown
};

// Lanczos basis of dim <= m from v (normalized). Fully reorthogonalized so the
// small propagator stays unitary to rounding.
KrylovSpace build_space(const LongRangeOperator& op, const Vec& v, int m) {
  const std::size_t dim = op.dim();
  KrylovSpace space;
  space.basis.push_back(v);
  std::vector<double> alpha, beta;
  Vec w(v.size());
  for (int j = 0; j < m; ++j) {
    op.apply({space.basis[j].data(), dim}, {w.data(), dim});
    const double a = std::real(space.basis[j].dot(w));
    alpha.push_back(a);
    w -= a * space.basis[j];
    if (j > 0) w -= beta[j - 1] * space.basis[j - 1];
    for (const Vec& u : space.basis) w -= u * u.dot(w);
    const double b = w.norm();
    if (j + 1 == m || b <= 1e-13) {
      space.leak = (b <= 1e-13) ? 0.0 : b;
      break;
    }
    beta.push_back(b);
    space.basis.push_back(w / b);
  }
  const int k = static_cast<int>(space.basis.size());
  Eigen::Map<const Eigen::VectorXd> diag(alpha.data(), k);
  Eigen::VectorXd sub(std::max(k - 1, 0));
  for (int i = 0; i + 1 < k; ++i) sub(i) = beta[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
  tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  space.eigvals = tri.eigenvalues();
  space.eigvecs = tri.eigenvectors();
  return space;
}

// exp(-i dt T) e1 in the Ritz eigenbasis.
Eigen::VectorXcd small_exponential(const KrylovSpace& space, double dt) {
  const Eigen::VectorXd first_row = space.eigvecs.row(0);
  Eigen::VectorXcd y(space.eigvals.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    y(i) = std::polar(1.0, -dt * space.eigvals(i)) * first_row(i);
  }
  return space.eigvecs * y;
}

}  // namespace

PureState evolve(const LongRangeOperator& op, const PureState& psi0, double t,
                 const PropagatorOpts& opts) {
  check_opts(opts);
  if (psi0.n_sites() != op.n_sites()) {
    throw std::invalid_argument("evolve: state does not match operator size");
  }
  if (!std::isfinite(t)) throw std::invalid_argument("evolve: time must be finite");
  if (t == 0.0) return psi0;

  const Eigen::Index edim = static_cast<Eigen::Index>(op.dim());
  Vec current = Eigen::Map<const Vec>(psi0.amplitudes().data(), edim);
  const double direction = t > 0.0 ? 1.0 : -1.0;
  const double total = std::abs(t);
  double done = 0.0;
  double dt = total;
  long substeps = 0;

  while (done < total) {
    if (++substeps > opts.max_substeps) {
      throw PropagationError("substep budget exhausted at t = " +
                                 std::to_string(direction * done),
                             direction * done);
    }
    const KrylovSpace space = build_space(op, current, opts.krylov_dim);
    dt = std::min(dt, total - done);
    Eigen::VectorXcd y = small_exponential(space, direction * dt);
    if (space.leak > 0.0) {
      // Component that would couple to the next Krylov vector: the local
      // error leaked by truncating the space.
      while (space.leak * std::abs(y(y.size() - 1)) > opts.step_tolerance && dt > 1e-15) {
        dt *= 0.5;
        y = small_exponential(space, direction * dt);
      }
    } else {
      dt = total - done;  // invariant subspace, one exact step finishes
      y = small_exponential(space, direction * dt);
    }
    Vec next = Vec::Zero(edim);
    for (std::size_t i = 0; i < space.basis.size(); ++i) next += y(i) * space.basis[i];
    current = std::move(next);
    done += dt;
    dt *= 2.0;  // try growing again; the next loop clips to the remaining time
  }
  std::vector<Complex> amp(current.data(), current.data() + current.size());
  return PureState(op.n_sites(), std::move(amp));
}

QuenchTrace evolve_series(const LongRangeOperator& op, const PureState& psi0,
                          const std::vector<double>& times, const PropagatorOpts& opts,
                          const TraceOptions& trace_opts) {
  check_opts(opts);
  if (times.empty() || times.front() != 0.0) {
    throw std::invalid_argument("evolve_series: time grid must start at 0");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw std::invalid_argument("evolve_series: times must be strictly increasing");
    }
  }
  QuenchTrace trace;
  trace.times = times;
  if (trace_opts.store_states) trace.states.emplace();
  PureState current = psi0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i > 0) current = evolve(op, current, times[i] - times[i - 1], opts);
    trace.ggm_values.push_back(compute_ggm(current, trace_opts.ggm).value);
    trace.energies.push_back(op.expectation(current));
    trace.norm_errors.push_back(current.norm_error());
    if (trace.states) trace.states->push_back(current);
  }
  return trace;
}

std::string trace_csv_text(const QuenchTrace& trace) {
  std::string out = "time,ggm,energy,norm_error\n";
  char buf[160];
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g\n", trace.times[i],
                  trace.ggm_values[i], trace.energies[i], trace.norm_errors[i]);
    out += buf;
  }
  return out;
}

PureState dense_evolve(const LongRangeOperator& op, const PureState& psi0, double t) {
  if (op.n_sites() > 10) {
    throw std::invalid_argument("dense_evolve is an oracle for n_sites <= 10");
  }
  if (psi0.n_sites() != op.n_sites()) {
    throw std::invalid_argument("dense_evolve: state does not match operator size");
  }
  const Eigen::Index dim = static_cast<Eigen::Index>(op.dim());
  const Eigen::MatrixXd mat = op.dense_matrix().real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
  const Vec psi = Eigen::Map<const Vec>(psi0.amplitudes().data(), dim);
  Eigen::VectorXcd coeff = solver.eigenvectors().transpose() * psi;
  for (Eigen::Index i = 0; i < dim; ++i) {
    coeff(i) *= std::polar(1.0, -t * solver.eigenvalues()(i));
  }
  const Vec out = solver.eigenvectors() * coeff;
  std::vector<Complex> amp(out.data(), out.data() + out.size());
  return PureState(op.n_sites(), std::move(amp));
}

}  // namespace ggm
