#pragma once

#include <optional>
#include <set>
#include <vector>

#include "z4kit/gf2.hpp"
#include "z4kit/parallel.hpp"

namespace z4kit {

// Incidence structure on points 1..v; blocks are bit masks.
struct Design {
  int v = 0;
  std::vector<Word> blocks;
  std::optional<int> uniform_k;
  std::optional<int> lambda1;
  std::set<int> intersection_numbers;
  bool self_orthogonal = false;

  bool quasi_symmetric() const noexcept { return intersection_numbers.size() == 2; }
};

// Supports of all codewords of weight exactly w, in sweep order.
std::vector<Word> supports_of_weight(const BinaryCode& c, int w, const Runner& runner = serial_runner());

// lambda if every point of 1..v lies in the same number of blocks.
std::optional<int> one_design_lambda(const std::vector<Word>& blocks, int v);

struct IntersectionSummary {
  bool self_orthogonal = false;  // all block sizes and pairwise intersections even
  std::set<int> intersections;
};

IntersectionSummary self_orthogonality_and_intersections(const std::vector<Word>& blocks,
                                                         const Runner& runner = serial_runner());

Design analyze_design(std::vector<Word> blocks, int v, const Runner& runner = serial_runner());

}  // namespace z4kit
