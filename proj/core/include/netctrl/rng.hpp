#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace netctrl {

/// Counter-based Philox4x32-10 stream (Salmon et al., Random123 variant).
///
/// A stream is identified by a 64-bit seed (the cipher key) and a 64-bit
/// stream id stored in the upper counter words, so substreams derived from
/// the same seed are non-overlapping by construction. Output is identical
/// on every platform, which is what makes experiment sweeps replayable
/// from (seed, label) pairs alone.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller; draws come in deterministic pairs.
  double next_gaussian();
  /// Uniform index in [0, n). n must be > 0.
  std::size_t next_index(std::size_t n);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_{};
  int block_pos_ = 4;  // forces refill on first draw
  double cached_gaussian_ = 0.0;
  bool has_cached_gaussian_ = false;
};

/// FNV-1a 64-bit hash, used to map substream labels to stream ids.
std::uint64_t hash_label(std::string_view label);

/// Stream dedicated to one purpose ("positions", "lambda_a", ...).
inline RandomStream substream(std::uint64_t seed, std::string_view label) {
  return RandomStream(seed, hash_label(label));
}

/// Child seed for a nested generator, derived by one Philox block over
/// (label, index) under a tweaked key. Children of distinct labels or
/// indices are independent.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index = 0);

}  // namespace netctrl
