#include "permlab/sampling.hpp"

#include "permlab/error.hpp"

namespace permlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t CounterRng::bits(std::uint64_t index, std::uint32_t lane) const {
  return splitmix64(splitmix64(seed_ ^ (std::uint64_t{lane} << 48)) + index);
}

std::uint64_t CounterRng::below(std::uint64_t index, std::uint32_t lane, std::uint64_t bound) const {
  if (bound == 0) throw DomainError("empty sampling range");
  const unsigned __int128 wide = static_cast<unsigned __int128>(bits(index, lane)) * bound;
  return static_cast<std::uint64_t>(wide >> 64);
}

MixedRadix::MixedRadix(std::vector<std::uint64_t> radices) : radices_(std::move(radices)) {
  for (auto r : radices_) {
    if (r == 0) throw DomainError("zero radix");
    if (count_ > UINT64_MAX / r) throw CapExceeded("tuple space does not fit in 64 bits");
    count_ *= r;
  }
}

std::vector<std::uint32_t> MixedRadix::decode(std::uint64_t index) const {
  std::vector<std::uint32_t> d(radices_.size());
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    d[i] = static_cast<std::uint32_t>(index % radices_[i]);
    index /= radices_[i];
  }
  return d;
}

std::uint64_t MixedRadix::encode(const std::vector<std::uint32_t>& digits) const {
  std::uint64_t idx = 0;
  for (std::size_t i = radices_.size(); i-- > 0;) idx = idx * radices_[i] + digits.at(i);
  return idx;
}

std::vector<std::uint32_t> MixedRadix::sample(const CounterRng& rng, std::uint64_t index) const {
  std::vector<std::uint32_t> d(radices_.size());
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    d[i] = static_cast<std::uint32_t>(rng.below(index, static_cast<std::uint32_t>(i), radices_[i]));
  }
  return d;
}

}  // namespace permlab
