#pragma once

#include <cstdint>
#include <random>

namespace dtc {

// splitmix64 finalizer; good avalanche, cheap enough to use as a seed mixer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent engine for (stream, substream) from one master seed.
// Every (SNR point, trial batch) gets its own counter-derived generator, so
// serial and parallel simulation runs produce bit-identical results.
inline std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t stream,
                                   std::uint64_t substream) {
  std::uint64_t s = splitmix64(master_seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
  s = splitmix64(s ^ splitmix64(substream + 0x9e6c63d0876a9a47ULL));
  return std::mt19937_64(s);
}

}  // namespace dtc
