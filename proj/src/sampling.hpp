// Seeded, index-addressable board sampling. Draw i is a pure function of
// (seed, stream, i), so sampled sweeps are reproducible and independent of
// evaluation order and thread count.
#pragma once

#include <cstdint>

#include "bingo/grid.hpp"

namespace bingo::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline CellSet sample_board(BoardSize size, std::uint64_t seed,
                            std::uint64_t index, std::uint64_t stream = 0) {
  std::uint64_t h = splitmix64(splitmix64(seed + 0x9e3779b97f4a7c15ull * stream) + index);
  std::uint64_t lo = splitmix64(h);
  std::uint64_t hi = splitmix64(h ^ 0x6a09e667f3bcc909ull);
  const CellSet full = CellSet::full(size);
  return CellSet::from_bits(size, lo & full.word(0), hi & full.word(1));
}

}  // namespace bingo::detail
