#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "z4kit/lifts.hpp"
#include "z4kit/parallel.hpp"
#include "z4kit/z4.hpp"

namespace z4kit {

// Thresholds for one length. For production lengths the excluded Euclidean
// weights are 8 and 16, residue words of weight 16 may lift with no 2's off
// the candidate and weight-12 words with one.
struct FilterParams {
  int length = 0;
  int max_excluded = 0;  // largest excluded Euclidean weight

  int min_size() const noexcept { return max_excluded / 4 + 2; }
  int residue_min_weight() const noexcept { return 4 * (length / 24) + 4; }

  static FilterParams production(int n);   // n in {48, 56, 64}
  static FilterParams generalized(int n);  // 24 <= n <= 64
};

enum class Condition : int {
  two_u_in_code = 0,
  full_lift = 1,  // residue weight max_excluded, no 2's off the candidate
  near_lift = 2,  // residue weight max_excluded - 4, one 2 off
  even = 3,       // even codeword, symmetric difference 2 or 4
};

struct FilterWitness {
  Condition condition = Condition::even;
  Z4Vector v;     // codeword of the base code
  Z4Vector word;  // v + 2u, a codeword of the doubled code
  int euclidean_weight = 0;
};

struct Verdict {
  bool suitable = true;
  std::optional<FilterWitness> witness;
};

// Precomputation for one base code: residue words up to max_excluded with
// their lifts, torsion syndromes, and the even-word syndrome table.
class CandidateFilter {
 public:
  // Validates: Type II, type 4^k with identity on 1..k, extremal residue,
  // base extremal. Throws PreconditionError otherwise.
  CandidateFilter(const Z4Code& base, const FilterParams& params, const Runner& runner = serial_runner());

  const Z4Code& base() const noexcept { return lifts_->code(); }
  const FilterParams& params() const noexcept { return params_; }
  const LiftIndex& lifts() const noexcept { return *lifts_; }
  int k() const noexcept { return base().k1(); }
  Word tail_mask() const noexcept { return low_mask(base().length()) & ~low_mask(k()); }

  bool admissible(Word candidate) const noexcept;
  // Throws PreconditionError for inadmissible sizes or positions in 1..k.
  Verdict check(Word candidate) const;

  // Membership of B in the collection produced by the even-codeword steps
  // (3-6) of the exclusion algorithm.
  bool excluded_by_even_steps(Word candidate) const;

 private:
  FilterParams params_;
  std::unique_ptr<LiftIndex> lifts_;
  std::vector<Word> tail_rows_;  // odd part of each generator restricted to k+1..n
};

Verdict check_candidate(const Z4Code& base, Word candidate, const FilterParams& params);

// ---- exclusion algorithm ----------------------------------------------------

enum class AlgBStep : int { s2_2_3, s2_3_3, s2_3_4, s2_3_7, s3_2, s3_3, s3_4, s4_2, s4_3, s5_2, s5_3, s6_2 };
inline constexpr int kAlgBStepCount = 12;
std::string_view step_label(AlgBStep s) noexcept;

using AlgBSink = std::function<void(Word set, AlgBStep step)>;

struct AlgBOptions {
  int max_dimension = 16;
};

// Emits the collection of unsuitable sets step by step as printed, sets
// possibly repeated and of any size. Throws GuardError if k exceeds
// max_dimension.
void algorithm_b(const CandidateFilter& ctx, const AlgBSink& sink, const AlgBOptions& options = {});

// Steps 3-6 alone, over explicit generator rows restricted to `tail`.
void even_step_sets(std::span<const Word> tail_rows, Word tail, int max_excluded, const AlgBSink& sink);

struct AlgBCounts {
  std::array<std::uint64_t, kAlgBStepCount> per_step{};
  std::uint64_t total = 0;
};

class CountingSink {
 public:
  void operator()(Word, AlgBStep step) {
    ++counts_.per_step[static_cast<int>(step)];
    ++counts_.total;
  }
  const AlgBCounts& counts() const noexcept { return counts_; }

 private:
  AlgBCounts counts_;
};

// Keeps distinct sets; throws GuardError beyond `capacity` of them.
class DedupSink {
 public:
  explicit DedupSink(std::size_t capacity) : capacity_(capacity) {}
  void operator()(Word set, AlgBStep);
  const std::unordered_set<Word>& sets() const noexcept { return sets_; }
  std::vector<Word> sorted() const;

 private:
  std::size_t capacity_;
  std::unordered_set<Word> sets_;
};

// ---- random search -----------------------------------------------------------

struct SearchOptions {
  std::uint64_t seed = 0;
  std::uint64_t attempts = 0;
  int min_size = 0;  // even sizes min_size..max_size drawn uniformly
  int max_size = 0;
  bool prefilter = true;
  std::vector<Word> injected;  // processed ahead of the random draws
};

struct SearchResult {
  std::vector<Word> suitable;  // stream order
  std::uint64_t drawn = 0;
  std::uint64_t duplicates = 0;
  std::uint64_t prefiltered = 0;
  std::uint64_t checked = 0;
  std::array<std::uint64_t, 4> unsuitable_by_condition{};
  // Survivors of the prefilter that fail through an even codeword: sets the
  // printed even steps do not cover.
  std::uint64_t even_missed_by_prefilter = 0;
};

SearchResult random_candidate_search(const CandidateFilter& ctx, const SearchOptions& options,
                                     const Runner& runner = serial_runner());

}  // namespace z4kit
