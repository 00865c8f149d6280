#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

namespace ggm {

using Complex = std::complex<double>;

// Hard cap on chain length: the amplitude vector has 2^N entries.
inline constexpr int kMaxSites = 24;

inline std::size_t state_dim(int n_sites) { return std::size_t{1} << n_sites; }

// One computational-basis configuration of an N-site chain.
// Bit i of `bits` is the state of site i, with |0>_i = up (sigma^z eigenvalue +1).
struct BasisConfig {
  int n_sites;
  std::uint64_t bits;
};

// Normalized pure state of an N-qubit chain, amplitudes indexed by BasisConfig bits.
class PureState {
 public:
  PureState(int n_sites, std::vector<Complex> amplitudes);

  int n_sites() const noexcept { return n_sites_; }
  std::size_t dim() const noexcept { return amp_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amp_; }
  const Complex& operator[](std::size_t index) const noexcept { return amp_[index]; }

  double norm() const;
  // |norm - 1|, what the CSV reports as norm_error.
  double norm_error() const;

 private:
  int n_sites_;
  std::vector<Complex> amp_;
};

// |+>^N, the separable quench start: every amplitude 2^{-N/2}.
PureState product_plus_state(int n_sites);

PureState basis_state(const BasisConfig& config);

// Basis indices of the two alternating configurations (up-down-... , down-up-...).
std::pair<std::uint64_t, std::uint64_t> neel_masks(int n_sites);

// The two Neel basis states; first has odd sites flipped down. Requires even N.
std::pair<PureState, PureState> neel_pair(int n_sites);

// <a|b>, conjugate-linear in the first argument.
Complex inner(const PureState& a, const PureState& b);

// Product of sigma^z over all odd sites: amplitude at b picks up
// (-1)^popcount(odd-site bits of b). Involution, norm preserving.
PureState alternating_z_conjugate(const PureState& psi);

// Cyclic one-site translation: site i -> i+1 mod N.
PureState cyclic_shift(const PureState& psi);

// Seeded Gaussian random state, normalized. Start vectors and property tests.
PureState random_state(int n_sites, std::uint64_t seed);

// Binary state file: magic "GGM1", n_sites as uint32 LE, then 2^N (re, im)
// little-endian IEEE-754 double pairs.
void save_state(const PureState& psi, const std::filesystem::path& path);
PureState load_state(const std::filesystem::path& path);

}  // namespace ggm
