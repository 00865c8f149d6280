#include "ggm/state.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>

namespace ggm {

namespace {

constexpr double kNormTol = 1e-8;

void check_site_count(int n_sites) {
  if (n_sites < 1 || n_sites > kMaxSites) {
    throw std::invalid_argument("n_sites must be in [1, " + std::to_string(kMaxSites) +
                                "], got " + std::to_string(n_sites));
  }
}

double norm_of(std::span<const Complex> amp) {
  long double acc = 0.0L;
  for (const Complex& a : amp) acc += std::norm(a);
  return static_cast<double>(std::sqrt(acc));
}

}  // namespace

PureState::PureState(int n_sites, std::vector<Complex> amplitudes)
    : n_sites_(n_sites), amp_(std::move(amplitudes)) {
  check_site_count(n_sites_);
  if (amp_.size() != state_dim(n_sites_)) {
    throw std::invalid_argument("amplitude vector must have length 2^n_sites");
  }
  const double n = norm_of(amp_);
  if (std::abs(n - 1.0) > kNormTol) {
    throw std::invalid_argument("state is not normalized: |norm-1| = " +
                                std::to_string(std::abs(n - 1.0)));
  }
}

double PureState::norm() const { return norm_of(amp_); }

double PureState::norm_error() const { return std::abs(norm() - 1.0); }

PureState product_plus_state(int n_sites) {
  check_site_count(n_sites);
  const std::size_t dim = state_dim(n_sites);
  const double a = 1.0 / std::sqrt(static_cast<double>(dim));
  return PureState(n_sites, std::vector<Complex>(dim, Complex(a, 0.0)));
}

PureState basis_state(const BasisConfig& config) {
  check_site_count(config.n_sites);
  const std::size_t dim = state_dim(config.n_sites);
  if (config.bits >= dim) {
    throw std::invalid_argument("basis bits out of range for n_sites");
  }
  std::vector<Complex> amp(dim, Complex(0.0, 0.0));
  amp[config.bits] = Complex(1.0, 0.0);
  return PureState(config.n_sites, std::move(amp));
}

std::pair<std::uint64_t, std::uint64_t> neel_masks(int n_sites) {
  check_site_count(n_sites);
  if (n_sites % 2 != 0) {
    throw std::invalid_argument("Neel configurations need an even number of sites");
  }
  std::uint64_t odd = 0;
  for (int i = 1; i < n_sites; i += 2) odd |= std::uint64_t{1} << i;
  const std::uint64_t all = (std::uint64_t{1} << n_sites) - 1;
  return {odd, odd ^ all};
}

std::pair<PureState, PureState> neel_pair(int n_sites) {
  const auto [first, second] = neel_masks(n_sites);
  return {basis_state({n_sites, first}), basis_state({n_sites, second})};
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.n_sites() != b.n_sites()) {
    throw std::invalid_argument("inner product needs equal n_sites");
  }
  long double re = 0.0L, im = 0.0L;
  const auto av = a.amplitudes();
  const auto bv = b.amplitudes();
  for (std::size_t i = 0; i < av.size(); ++i) {
    const Complex t = std::conj(av[i]) * bv[i];
    re += t.real();
    im += t.imag();
  }
  return Complex(static_cast<double>(re), static_cast<double>(im));
}

PureState alternating_z_conjugate(const PureState& psi) {
  std::uint64_t odd = 0;
  for (int i = 1; i < psi.n_sites(); i += 2) odd |= std::uint64_t{1} << i;
  std::vector<Complex> amp(psi.amplitudes().begin(), psi.amplitudes().end());
  for (std::size_t b = 0; b < amp.size(); ++b) {
    if (std::popcount(b & odd) & 1) amp[b] = -amp[b];
  }
  return PureState(psi.n_sites(), std::move(amp));
}

PureState cyclic_shift(const PureState& psi) {
  const int n = psi.n_sites();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::vector<Complex> amp(psi.dim());
  for (std::size_t b = 0; b < amp.size(); ++b) {
    const std::uint64_t target = ((b << 1) | (b >> (n - 1))) & all;
    amp[target] = psi[b];
  }
  return PureState(n, std::move(amp));
}

PureState random_state(int n_sites, std::uint64_t seed) {
  check_site_count(n_sites);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amp(state_dim(n_sites));
  for (Complex& a : amp) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = Complex(re, im);
  }
  const double n = norm_of(amp);
  for (Complex& a : amp) a /= n;
  return PureState(n_sites, std::move(amp));
}

namespace {

constexpr char kMagic[4] = {'G', 'G', 'M', '1'};

static_assert(std::endian::native == std::endian::little,
              "state files are little-endian; add byte swaps for this platform");

}  // namespace

void save_state(const PureState& psi, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(kMagic, 4);
  const std::uint32_t n = static_cast<std::uint32_t>(psi.n_sites());
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  out.write(reinterpret_cast<const char*>(psi.amplitudes().data()),
            static_cast<std::streamsize>(psi.dim() * sizeof(Complex)));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

PureState load_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw std::runtime_error(path.string() + " is not a GGM1 state file");
  }
  std::uint32_t n = 0;
  in.read(reinterpret_cast<char*>(&n), sizeof(n));
  if (!in || n < 1 || n > static_cast<std::uint32_t>(kMaxSites)) {
    throw std::runtime_error("bad site count in " + path.string());
  }
  std::vector<Complex> amp(state_dim(static_cast<int>(n)));
  in.read(reinterpret_cast<char*>(amp.data()),
          static_cast<std::streamsize>(amp.size() * sizeof(Complex)));
  if (!in) throw std::runtime_error("truncated state file " + path.string());
  return PureState(static_cast<int>(n), std::move(amp));
}

}  // namespace ggm
