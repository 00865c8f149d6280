#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "ggm/entanglement.hpp"
#include "ggm/state.hpp"

using namespace ggm;

namespace {

PureState ghz(int n) {
  std::vector<Complex> amp(state_dim(n), Complex(0, 0));
  const double r = 1.0 / std::sqrt(2.0);
  amp[0] = Complex(r, 0);
  amp[amp.size() - 1] = Complex(r, 0);
  return PureState(n, std::move(amp));
}

PureState w3() {
  const double r = 1.0 / std::sqrt(3.0);
  std::vector<Complex> amp(8, Complex(0, 0));
  amp[1] = amp[2] = amp[4] = Complex(r, 0);
  return PureState(3, std::move(amp));
}

PureState neel_superposition(int n) {
  const auto [first, second] = neel_masks(n);
  std::vector<Complex> amp(state_dim(n), Complex(0, 0));
  const double r = 1.0 / std::sqrt(2.0);
  amp[first] = Complex(r, 0);
  amp[second] = Complex(r, 0);
  return PureState(n, std::move(amp));
}

std::size_t expected_cut_count(int n) {
  // Half-sum of binomials with the balanced class deduplicated.
  std::size_t count = 0;
  for (int s = 1; 2 * s <= n; ++s) {
    std::size_t c = 1;
    for (int k = 0; k < s; ++k) c = c * (n - k) / (k + 1);
    count += (2 * s == n) ? c / 2 : c;
  }
  return count;
}

}  // namespace

TEST_CASE("canonical_bipartitions enumerates deduplicated cuts in order") {
  CHECK(canonical_bipartitions(2).size() == 1);
  CHECK(canonical_bipartitions(2)[0].subset_mask() == 0b01);
  CHECK(canonical_bipartitions(3).size() == 3);

  const auto cuts4 = canonical_bipartitions(4);
  REQUIRE(cuts4.size() == 7);
  // Four singletons, then the three balanced cuts containing site 0.
  CHECK(cuts4[0].subset_mask() == 0b0001);
  CHECK(cuts4[3].subset_mask() == 0b1000);
  CHECK(cuts4[4].subset_mask() == 0b0011);
  CHECK(cuts4[5].subset_mask() == 0b0101);
  CHECK(cuts4[6].subset_mask() == 0b1001);

  for (int n = 2; n <= 12; ++n) {
    const auto cuts = canonical_bipartitions(n);
    CHECK(cuts.size() == expected_cut_count(n));
    for (const Bipartition& cut : cuts) CHECK(cut.is_canonical());
    // Ordering: by size, then ascending mask.
    for (std::size_t i = 1; i < cuts.size(); ++i) {
      const bool size_up = cuts[i].size() > cuts[i - 1].size();
      const bool mask_up =
          cuts[i].size() == cuts[i - 1].size() && cuts[i].subset_mask() > cuts[i - 1].subset_mask();
      CHECK((size_up || mask_up));
    }
  }
}

TEST_CASE("Bipartition rejects empty and full masks") {
  CHECK_THROWS_AS(Bipartition(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(Bipartition(4, 0b1111), std::invalid_argument);
  CHECK_THROWS_AS(Bipartition(4, 0b10000), std::invalid_argument);
  const Bipartition cut(4, 0b0110);
  CHECK(cut.complement_mask() == 0b1001);
  CHECK(cut.size() == 2);
}

TEST_CASE("max_schmidt_sq on known states") {
  // Bell pair: maximal two-qubit entanglement.
  const double r = 1.0 / std::sqrt(2.0);
  const PureState bell(2, {Complex(r, 0), Complex(0, 0), Complex(0, 0), Complex(r, 0)});
  CHECK(max_schmidt_sq(bell, Bipartition(2, 0b01)) == doctest::Approx(0.5).epsilon(1e-14));

  // Product state: every cut is rank one.
  const PureState plus = product_plus_state(5);
  for (const Bipartition& cut : canonical_bipartitions(5)) {
    CHECK(max_schmidt_sq(plus, cut) == doctest::Approx(1.0).epsilon(1e-13));
  }

  // W state, single-site cut: reduced density eigenvalues {2/3, 1/3}.
  CHECK(max_schmidt_sq(w3(), Bipartition(3, 0b001)) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("complement cuts share their maximal Schmidt coefficient") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const PureState psi = random_state(7, 100 + seed);
    for (const Bipartition& cut : canonical_bipartitions(7)) {
      const double a = max_schmidt_sq(psi, cut);
      const double b = max_schmidt_sq(psi, cut.complement());
      CHECK(std::abs(a - b) < 1e-10);
    }
  }
}

TEST_CASE("schmidt_spectrum is a decreasing probability vector") {
  const double r = 1.0 / std::sqrt(2.0);
  const PureState bell(2, {Complex(r, 0), Complex(0, 0), Complex(0, 0), Complex(r, 0)});
  const auto bell_spec = schmidt_spectrum(bell, Bipartition(2, 0b01));
  REQUIRE(bell_spec.size() == 2);
  CHECK(bell_spec[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(bell_spec[1] == doctest::Approx(0.5).epsilon(1e-14));

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const PureState psi = random_state(8, 55 + seed);
    for (const Bipartition& cut :
         {Bipartition(8, 0b1), Bipartition(8, 0b1101), Bipartition(8, 0b11110000)}) {
      const auto spec = schmidt_spectrum(psi, cut);
      CHECK(spec.size() == state_dim(cut.size()));
      CHECK(std::abs(std::accumulate(spec.begin(), spec.end(), 0.0) - 1.0) < 1e-10);
      for (std::size_t i = 1; i < spec.size(); ++i) CHECK(spec[i] <= spec[i - 1] + 1e-15);
      CHECK(std::abs(spec[0] - max_schmidt_sq(psi, cut)) < 1e-12);
    }
  }
}

TEST_CASE("ggm on the exactly known families") {
  for (int n = 2; n <= 10; ++n) {
    CHECK(std::abs(compute_ggm(ghz(n)).value - 0.5) < 1e-12);
  }
  for (int n : {2, 4, 8, 10}) {
    CHECK(std::abs(compute_ggm(neel_superposition(n)).value - 0.5) < 1e-12);
  }
  for (int n : {2, 3, 6, 9}) {
    CHECK(std::abs(compute_ggm(product_plus_state(n)).value) < 1e-12);
  }
  const GgmResult w = compute_ggm(w3());
  CHECK(std::abs(w.value - 1.0 / 3.0) < 1e-12);
  CHECK(w.lambda_sq_max == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(w.partitions_evaluated == 3);
  CHECK(w.value == 1.0 - w.lambda_sq_max);  // exact identity, not approximate
}

TEST_CASE("ggm tie-break picks the first maximizing cut in enumeration order") {
  // GHZ: every cut ties at 1/2, so the argmax must be the first singleton.
  const GgmResult g = compute_ggm(ghz(6));
  CHECK(g.argmax_partition.subset_mask() == 0b000001);
}

TEST_CASE("interpolated GHZ matches the closed form") {
  for (double theta : {0.1, 0.35, 0.7854, 1.1, 1.45}) {
    std::vector<Complex> amp(state_dim(5), Complex(0, 0));
    amp[0] = Complex(std::cos(theta), 0);
    amp[31] = Complex(std::sin(theta), 0);
    const PureState psi(5, std::move(amp));
    const double c2 = std::cos(theta) * std::cos(theta);
    const double expected = 1.0 - std::max(c2, 1.0 - c2);
    CHECK(std::abs(compute_ggm(psi).value - expected) < 1e-12);
  }
}

TEST_CASE("ggm is invariant under the local unitary and under relabeling") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const PureState psi = random_state(6, 300 + seed);
    const double g = compute_ggm(psi).value;
    CHECK(std::abs(compute_ggm(alternating_z_conjugate(psi)).value - g) < 1e-10);
    CHECK(std::abs(compute_ggm(cyclic_shift(psi)).value - g) < 1e-10);
    CHECK(g >= 0.0);
    CHECK(g <= 0.5 + 1e-12);
  }
}

TEST_CASE("power iteration agrees with the dense spectrum route") {
  GgmOptions power;
  power.method = SchmidtMethod::kPowerIteration;
  GgmOptions dense;
  dense.method = SchmidtMethod::kDenseSpectrum;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const PureState psi = random_state(8, 400 + seed);
    const GgmResult a = compute_ggm(psi, power);
    const GgmResult b = compute_ggm(psi, dense);
    CHECK(std::abs(a.value - b.value) < 1e-10);
    CHECK(a.argmax_partition.subset_mask() == b.argmax_partition.subset_mask());
  }
  // Degenerate top eigenvalue still converges in value.
  CHECK(std::abs(compute_ggm(ghz(8), power).value - 0.5) < 1e-10);
}

TEST_CASE("ggm parallel sweep is identical to the serial sweep") {
  const PureState psi = random_state(9, 77);
  const GgmResult serial = compute_ggm(psi);
  GgmOptions opts;
  opts.workers = 4;
  const GgmResult parallel = compute_ggm(psi, opts);
  CHECK(serial.value == parallel.value);  // bitwise: same per-cut values, same reduction
  CHECK(serial.argmax_partition.subset_mask() == parallel.argmax_partition.subset_mask());
}
