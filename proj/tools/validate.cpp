#include "validate.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <cstdio>

#include "ggm/entanglement.hpp"
#include "ggm/hamiltonian.hpp"
#include "ggm/lanczos.hpp"
#include "ggm/propagator.hpp"
#include "ggm/state.hpp"

namespace ggm::checks {

namespace {

ModelParams make(int n, double alpha, double j, double delta) {
  ModelParams p;
  p.n_sites = n;
  p.alpha = alpha;
  p.jx = p.jy = j;
  p.delta = delta;
  return p;
}

double vec_norm(const std::vector<Complex>& v) {
  long double acc = 0.0L;
  for (const Complex& c : v) acc += std::norm(c);
  return std::sqrt(static_cast<double>(acc));
}

Complex pair_with_h(const LongRangeOperator& op, const PureState& a, const PureState& b) {
  const auto hb = op.apply(b);
  Complex acc(0, 0);
  for (std::size_t i = 0; i < hb.size(); ++i) acc += std::conj(a[i]) * hb[i];
  return acc;
}

CheckResult lanczos_vs_dense_energy_overlap(bool overlap) {
  double dev = 0.0;
  for (double j : {1.0, -1.0}) {
    for (double delta : {0.25, 1.0, 1.75}) {
      for (double alpha : {1.0, 3.0, 10.0}) {
        const auto op = build_model(make(6, alpha, j, delta));
        const GroundResult lz = ground_state(op);
        const GroundResult dn = dense_ground(op);
        if (overlap) {
          dev = std::max(dev, std::abs(1.0 - std::abs(inner(lz.state, dn.state))));
        } else {
          dev = std::max(dev, std::abs(lz.energy - dn.energy));
        }
      }
    }
  }
  return {overlap ? "lanczos_vs_dense_overlap" : "lanczos_vs_dense_energy", dev,
          overlap ? 1e-6 : 1e-8};
}

CheckResult krylov_vs_dense_evolve() {
  double dev = 0.0;
  for (double j : {1.0, -1.0}) {
    for (double alpha : {1.0, 10.0}) {
      const auto op = build_model(make(6, alpha, j, 0.5));
      const PureState psi0 = product_plus_state(6);
      for (double t : {0.5, 1.0, 2.0}) {
        const PureState krylov = evolve(op, psi0, t);
        const PureState dense = dense_evolve(op, psi0, t);
        long double acc = 0.0L;
        for (std::size_t b = 0; b < krylov.dim(); ++b) acc += std::norm(krylov[b] - dense[b]);
        dev = std::max(dev, std::sqrt(static_cast<double>(acc)));
      }
    }
  }
  return {"krylov_vs_dense_evolve", dev, 1e-8};
}

CheckResult ggm_power_vs_spectrum() {
  GgmOptions power;
  power.method = SchmidtMethod::kPowerIteration;
  GgmOptions dense;
  dense.method = SchmidtMethod::kDenseSpectrum;
  double dev = 0.0;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const PureState psi = random_state(8, 9000 + seed);
    dev = std::max(dev, std::abs(compute_ggm(psi, power).value - compute_ggm(psi, dense).value));
  }
  const auto op = build_model(make(8, 1.0, 1.0, 0.5));
  const PureState ground = ground_state(op).state;
  dev = std::max(dev, std::abs(compute_ggm(ground, power).value - compute_ggm(ground, dense).value));
  return {"ggm_power_vs_spectrum", dev, 1e-10};
}

CheckResult hermiticity_inner(bool inject_fault) {
  auto op = build_model(make(8, 1.0, 1.0, 0.5));
  if (inject_fault) op.hermiticity_skew = 1e-3;
  double dev = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PureState phi = random_state(8, 500 + seed);
    const PureState psi = random_state(8, 600 + seed);
    dev = std::max(dev,
                   std::abs(pair_with_h(op, phi, psi) - std::conj(pair_with_h(op, psi, phi))));
  }
  return {"hermiticity_inner", dev, 1e-10};
}

CheckResult sz_commutator() {
  const auto op = build_model(make(8, 1.0, 1.0, 0.7));
  double dev = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PureState psi = random_state(8, 700 + seed);
    std::vector<Complex> h_sz(op.dim());
    op.apply(apply_total_sz(psi), h_sz);
    const auto h_psi = op.apply(psi);
    std::vector<Complex> comm(op.dim());
    for (std::size_t b = 0; b < op.dim(); ++b) {
      const double m = static_cast<double>(8 - 2 * static_cast<int>(std::popcount(b)));
      comm[b] = h_sz[b] - m * h_psi[b];
    }
    dev = std::max(dev, vec_norm(comm));
  }
  return {"sz_commutator", dev, 1e-10};
}

CheckResult translation_commutator() {
  const int n = 8;
  const auto op = build_model(make(n, 1.3, 1.0, 0.4));
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  double dev = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PureState psi = random_state(n, 800 + seed);
    const auto h_t = op.apply(cyclic_shift(psi));
    const auto hv = op.apply(psi);
    std::vector<Complex> comm(op.dim());
    for (std::uint64_t b = 0; b <= all; ++b) {
      const std::uint64_t shifted = ((b << 1) | (b >> (n - 1))) & all;
      comm[b] = h_t[shifted] - hv[b];
    }
    dev = std::max(dev, vec_norm(comm));
  }
  return {"translation_commutator", dev, 1e-10};
}

CheckResult complement_schmidt() {
  double dev = 0.0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const PureState psi = random_state(7, 900 + seed);
    for (const Bipartition& cut : canonical_bipartitions(7)) {
      dev = std::max(dev,
                     std::abs(max_schmidt_sq(psi, cut) - max_schmidt_sq(psi, cut.complement())));
    }
  }
  return {"complement_schmidt", dev, 1e-10};
}

CheckResult ggm_local_unitary() {
  double dev = 0.0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const PureState psi = random_state(6, 1000 + seed);
    const double g = compute_ggm(psi).value;
    dev = std::max(dev, std::abs(compute_ggm(alternating_z_conjugate(psi)).value - g));
    dev = std::max(dev, std::abs(compute_ggm(cyclic_shift(psi)).value - g));
  }
  return {"ggm_relabeling_invariance", dev, 1e-10};
}

CheckResult nn_vs_alpha50() {
  ModelParams nn = make(6, 1.0, 1.0, 0.9);
  nn.nn_only = true;
  const auto h_nn = build_model(nn).dense_matrix();
  const auto h_far = build_model(make(6, 50.0, 1.0, 0.9)).dense_matrix();
  return {"nn_vs_alpha50_elements", (h_nn - h_far).cwiseAbs().maxCoeff(), 1e-10};
}

}  // namespace

std::vector<CheckResult> run_checks(bool inject_fault) {
  return {
      lanczos_vs_dense_energy_overlap(false),
      lanczos_vs_dense_energy_overlap(true),
      krylov_vs_dense_evolve(),
      ggm_power_vs_spectrum(),
      hermiticity_inner(inject_fault),
      sz_commutator(),
      translation_commutator(),
      complement_schmidt(),
      ggm_local_unitary(),
      nn_vs_alpha50(),
  };
}

int report(const std::vector<CheckResult>& results) {
  int failed = 0;
  for (const CheckResult& r : results) {
    if (!r.passed()) ++failed;
    std::printf("[%s] %-28s max_dev=%.3e  tol=%.0e\n", r.passed() ? "PASS" : "FAIL",
                r.name.c_str(), r.max_deviation, r.tolerance);
  }
  std::printf("validate: %zu/%zu checks passed\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace ggm::checks
