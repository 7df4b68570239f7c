#include "z4kit/designs.hpp"

#include <algorithm>
#include <bitset>

#include "z4kit/error.hpp"

namespace z4kit {

std::vector<Word> supports_of_weight(const BinaryCode& c, int w, const Runner& runner) {
  std::vector<Word> out;
  for (const auto& r : codewords_of_weight(c, w, runner)) out.push_back(r.word);
  return out;
}

std::optional<int> one_design_lambda(const std::vector<Word>& blocks, int v) {
  if (blocks.empty()) throw PreconditionError("empty block list");
  std::vector<int> count(v, 0);
  for (Word b : blocks) {
    if (b & ~low_mask(v)) throw PreconditionError("block has points beyond v");
    for (; b; b &= b - 1) ++count[std::countr_zero(b)];
  }
  if (std::adjacent_find(count.begin(), count.end(), std::not_equal_to<>()) != count.end()) return std::nullopt;
  return count.front();
}

IntersectionSummary self_orthogonality_and_intersections(const std::vector<Word>& blocks, const Runner& runner) {
  constexpr std::size_t kRows = 64;
  const std::size_t tasks = (blocks.size() + kRows - 1) / kRows;
  std::vector<std::bitset<65>> seen(tasks);  // bit i: intersection size i occurred
  runner(tasks, [&](std::size_t t) {
    const std::size_t end = std::min(blocks.size(), (t + 1) * kRows);
    std::bitset<65> s;
    for (std::size_t i = t * kRows; i < end; ++i) {
      for (std::size_t j = i + 1; j < blocks.size(); ++j) s.set(weight(blocks[i] & blocks[j]));
    }
    seen[t] = s;
  });
  IntersectionSummary out;
  std::bitset<65> all;
  for (const auto& s : seen) all |= s;
  for (int i = 0; i <= 64; ++i) {
    if (all[i]) out.intersections.insert(i);
  }
  const bool even_sizes = std::all_of(blocks.begin(), blocks.end(), [](Word b) { return weight(b) % 2 == 0; });
  const bool even_meets = std::all_of(out.intersections.begin(), out.intersections.end(), [](int x) { return x % 2 == 0; });
  out.self_orthogonal = even_sizes && even_meets;
  return out;
}

Design analyze_design(std::vector<Word> blocks, int v, const Runner& runner) {
  Design d;
  d.v = v;
  d.blocks = std::move(blocks);
  if (d.blocks.empty()) return d;
  const int k = weight(d.blocks.front());
  if (std::all_of(d.blocks.begin(), d.blocks.end(), [k](Word b) { return weight(b) == k; })) d.uniform_k = k;
  d.lambda1 = one_design_lambda(d.blocks, v);
  auto s = self_orthogonality_and_intersections(d.blocks, runner);
  d.self_orthogonal = s.self_orthogonal;
  d.intersection_numbers = std::move(s.intersections);
  return d;
}

}  // namespace z4kit
