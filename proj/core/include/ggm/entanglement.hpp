#pragma once

#include <cstdint>
#include <vector>

#include "ggm/state.hpp"

namespace ggm {

// One cut A:B of the chain, A given as a site bitmask. Any nonempty proper
// subset is a valid cut; the canonical enumeration used by compute_ggm() keeps
// |A| <= floor(N/2) and, for the balanced size class on even N, only the
// representative containing site 0 (complementary cuts share a Schmidt
// spectrum).
class Bipartition {
 public:
  Bipartition(int n_sites, std::uint64_t subset_mask);

  int n_sites() const noexcept { return n_sites_; }
  std::uint64_t subset_mask() const noexcept { return mask_; }
  int size() const noexcept;
  std::uint64_t complement_mask() const noexcept;
  Bipartition complement() const;
  bool is_canonical() const noexcept;

 private:
  int n_sites_;
  std::uint64_t mask_;
};

// All canonical cuts, ordered by part size then ascending mask.
std::vector<Bipartition> canonical_bipartitions(int n_sites);

enum class SchmidtMethod {
  kAuto,           // dense spectrum when the contracted side has <= 256 rows
  kDenseSpectrum,  // full Hermitian eigensolve of the Gram matrix
  kPowerIteration, // top eigenvalue only, relative tolerance 1e-12, cap 1e4
};

// Largest eigenvalue of the reduced density operator across the cut
// (the squared maximal Schmidt coefficient). Contracts over the smaller part;
// invariant under swapping A and B. Result clamped into [0, 1].
double max_schmidt_sq(const PureState& psi, const Bipartition& cut,
                      SchmidtMethod method = SchmidtMethod::kAuto);

// Full spectrum of the reduced density operator of part A, decreasing,
// 2^|A| entries summing to 1. Diagnostic oracle; requires 2^|A| <= 4096.
std::vector<double> schmidt_spectrum(const PureState& psi, const Bipartition& cut);

struct GgmResult {
  double value;                  // 1 - lambda_sq_max, in [0, 1/2] for qubits
  Bipartition argmax_partition;  // first cut attaining the max within 1e-12
  double lambda_sq_max;
  std::size_t partitions_evaluated;
};

struct GgmOptions {
  int workers = 1;
  SchmidtMethod method = SchmidtMethod::kAuto;
};

// Generalized geometric measure: 1 minus the largest squared Schmidt
// coefficient over all canonical bipartitions. Input must be normalized
// (norm deviation above 1e-8 is a contract violation).
GgmResult compute_ggm(const PureState& psi, const GgmOptions& options = {});

}  // namespace ggm
