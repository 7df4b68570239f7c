#pragma once

// Gray-code enumeration of the span of a list of binary generators.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>

#include "z4kit/bits.hpp"

namespace z4kit::detail {

// Shard count depends only on the dimension, never on the worker count, so
// merged results are identical however the shards are scheduled.
inline int shard_bits_for(int k) { return k >= 24 ? 8 : (k >= 16 ? 4 : 0); }

// Visits every codeword whose top `shard_bits` coefficients equal `shard`.
// The low (up to 8) generators are expanded into a table; the remaining free
// generators are stepped in Gray order, one XOR per table pass.
template <typename Visit>
void sweep_shard(std::span<const Word> gens, int shard_bits, std::uint64_t shard, Visit&& visit) {
  const int k = static_cast<int>(gens.size());
  const int free = k - shard_bits;
  Word w = 0;
  Word c = 0;
  for (int b = 0; b < shard_bits; ++b) {
    if ((shard >> b) & 1) {
      w ^= gens[free + b];
      c |= bit(free + b);
    }
  }
  const int tb = std::min(free, 8);
  const int tsize = 1 << tb;
  std::array<Word, 256> table{};
  for (int i = 1; i < tsize; ++i) {
    const int low = std::countr_zero(static_cast<unsigned>(i));
    table[i] = table[i & (i - 1)] ^ gens[low];
  }
  const std::uint64_t steps = std::uint64_t{1} << (free - tb);
  for (std::uint64_t s = 0;;) {
    for (int t = 0; t < tsize; ++t) visit(w ^ table[t], c | static_cast<Word>(t));
    if (++s == steps) break;
    const int b = std::countr_zero(s);
    w ^= gens[tb + b];
    c ^= bit(tb + b);
  }
}

}  // namespace z4kit::detail
