#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace z4kit {

// One coordinate per bit; coordinate i (1-based) lives in bit i-1.
using Word = std::uint64_t;

inline constexpr int kMaxLength = 64;

constexpr Word low_mask(int n) noexcept { return n >= 64 ? ~Word{0} : (Word{1} << n) - 1; }
constexpr int weight(Word w) noexcept { return std::popcount(w); }
constexpr int parity(Word w) noexcept { return std::popcount(w) & 1; }
constexpr Word bit(int index0) noexcept { return Word{1} << index0; }

// Length-tagged binary word. Bits beyond n are always zero.
struct BinaryWord {
  int n = 0;
  Word bits = 0;

  static BinaryWord from_string(std::string_view digits);
  std::string to_string() const;
  int weight() const noexcept { return std::popcount(bits); }
  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
};

// Position sets written as 1-based comma lists with ranges ("33-61,63").
Word parse_positions(std::string_view text, int n);
std::string format_positions(Word set);
std::vector<int> positions_of(Word set);  // 1-based, ascending

// Calls f(subset) for every subset of `set`, starting with the empty set.
template <typename F>
void for_each_subset(Word set, F&& f) {
  Word sub = 0;
  while (true) {
    f(sub);
    if (sub == set) break;
    sub = (sub - set) & set;
  }
}

// Calls f(subset) for every subset of `set` with exactly r elements.
template <typename F>
void for_each_subset_of_size(Word set, int r, F&& f) {
  std::vector<int> idx;
  for (Word s = set; s; s &= s - 1) idx.push_back(std::countr_zero(s));
  const int m = static_cast<int>(idx.size());
  if (r < 0 || r > m) return;
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    Word sub = 0;
    for (int i = 0; i < r; ++i) sub |= bit(idx[pick[i]]);
    f(sub);
    int i = r - 1;
    while (i >= 0 && pick[i] == m - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace z4kit
