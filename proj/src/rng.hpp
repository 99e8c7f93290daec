#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace compresso {

/// Deterministic splitmix64 generator. All randomness in the project flows
/// through this class so that runs are reproducible from a single seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64();

  /// Uniform in [0, bound). Unbiased (Lemire with rejection).
  uint64_t bounded(uint64_t bound);

  /// Uniform integer in [lo, hi], inclusive.
  long uniform_int(long lo, long hi);

  /// Uniform double in [0, 1).
  double uniform_real();

  /// Uniform double in [lo, hi).
  double uniform_real(double lo, double hi);

  /// Standard normal via Box-Muller.
  double normal();

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// k distinct indices from [0, n), in ascending order.
  std::vector<size_t> sample_indices(size_t n, size_t k);

  /// Hash-combine for deriving independent streams from (seed, index, ...).
  static uint64_t mix(uint64_t a, uint64_t b);
  static uint64_t mix(uint64_t a, uint64_t b, uint64_t c);

 private:
  uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// FNV-1a over a byte string; used to derive per-word embedding seeds.
uint64_t hash_bytes(const void* data, size_t len);

}  // namespace compresso
