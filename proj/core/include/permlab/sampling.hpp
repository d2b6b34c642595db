#pragma once

#include <cstdint>
#include <vector>

namespace permlab {

/// Seed used when a sampled run does not name one.
inline constexpr std::uint64_t kDefaultSeed = 20231117;

std::uint64_t splitmix64(std::uint64_t x);

/// Stateless generator: the value for (index, lane) depends only on the seed,
/// so any sample can be regenerated without replaying earlier ones.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] std::uint64_t bits(std::uint64_t index, std::uint32_t lane) const;
  /// Uniform in [0, bound); bound > 0.
  [[nodiscard]] std::uint64_t below(std::uint64_t index, std::uint32_t lane, std::uint64_t bound) const;

 private:
  std::uint64_t seed_;
};

/// Mixed-radix numbering of tuples; digit 0 is least significant.
class MixedRadix {
 public:
  /// Throws CapExceeded when the tuple count does not fit in 64 bits.
  explicit MixedRadix(std::vector<std::uint64_t> radices);

  [[nodiscard]] const std::vector<std::uint64_t>& radices() const { return radices_; }
  [[nodiscard]] std::uint64_t count() const { return count_; }
  [[nodiscard]] std::vector<std::uint32_t> decode(std::uint64_t index) const;
  [[nodiscard]] std::uint64_t encode(const std::vector<std::uint32_t>& digits) const;
  /// A uniformly drawn tuple for sample number `index`.
  [[nodiscard]] std::vector<std::uint32_t> sample(const CounterRng& rng, std::uint64_t index) const;

 private:
  std::vector<std::uint64_t> radices_;
  std::uint64_t count_ = 1;
};

}  // namespace permlab
