#include "z4kit/filter.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "z4kit/doubling.hpp"
#include "z4kit/error.hpp"

namespace z4kit {

namespace {

// Even-codeword patterns 2 * (sum of `rows` generators): the tail part O of
// that codeword loses `removed` positions and gains `added` ones.
struct Pattern {
  int rows;
  int removed;
  int added;
  AlgBStep step;
};

std::vector<Pattern> even_patterns(int max_excluded) {
  if (max_excluded == 16) {
    return {{1, 1, 0, AlgBStep::s3_2}, {1, 3, 0, AlgBStep::s3_2}, {1, 0, 1, AlgBStep::s3_3},
            {1, 0, 3, AlgBStep::s3_4}, {2, 0, 0, AlgBStep::s4_2}, {2, 0, 2, AlgBStep::s4_3},
            {3, 1, 0, AlgBStep::s5_2}, {3, 0, 1, AlgBStep::s5_3}, {4, 0, 0, AlgBStep::s6_2}};
  }
  // Only Euclidean weight 8 is excluded: one generator with symmetric
  // difference 1 on the tail, or two with difference 0.
  return {{1, 1, 0, AlgBStep::s3_2}, {1, 0, 1, AlgBStep::s3_3}, {2, 0, 0, AlgBStep::s4_2}};
}

int max_pattern_rows(const std::vector<Pattern>& ps) {
  int r = 0;
  for (const auto& p : ps) r = std::max(r, p.rows);
  return r;
}

// Visits XOR of every r-subset of rows (r = 1..max_rows).
template <typename F>
void for_each_row_combination(const std::vector<Word>& rows, int max_rows, F&& f) {
  const int k = static_cast<int>(rows.size());
  std::vector<int> idx;
  std::function<void(int, Word)> rec = [&](int start, Word acc) {
    if (!idx.empty()) f(static_cast<int>(idx.size()), acc);
    if (static_cast<int>(idx.size()) == max_rows) return;
    for (int i = start; i < k; ++i) {
      idx.push_back(i);
      rec(i + 1, acc ^ rows[i]);
      idx.pop_back();
    }
  };
  rec(0, 0);
}

Condition condition_for(const LiftIndex::Hit& h, int max_excluded) {
  if (h.residue_weight == 0) return Condition::even;
  return h.residue_weight == max_excluded ? Condition::full_lift : Condition::near_lift;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  // Uniform in [0, bound) by rejection, independent of the standard library's
  // distribution implementations.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = rng_();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

FilterParams FilterParams::production(int n) {
  if (n != 48 && n != 56 && n != 64) {
    throw PreconditionError("the candidate filter covers n = 48, 56, 64 (use generalized thresholds for n = " +
                            std::to_string(n) + ")");
  }
  return {n, 16};
}

FilterParams FilterParams::generalized(int n) {
  if (n < 24 || n > 64) throw PreconditionError("generalized thresholds need 24 <= n <= 64");
  return {n, 8 * (n / 24)};
}

CandidateFilter::CandidateFilter(const Z4Code& base, const FilterParams& params, const Runner& runner)
    : params_(params) {
  if (params.length != base.length()) throw PreconditionError("filter thresholds were built for another length");
  if (!is_type_ii(base)) throw PreconditionError("base code is not Type II");
  if (!has_leading_identity(base)) {
    throw PreconditionError("base code must be of type 4^k with the identity on coordinates 1..k");
  }
  lifts_ = std::make_unique<LiftIndex>(base, params.max_excluded, runner);
  const auto rmin = lifts_->residue_distribution().min_nonzero_weight();
  if (!rmin || *rmin < params.residue_min_weight()) {
    throw PreconditionError("residue code is not extremal (minimum weight " + std::to_string(rmin.value_or(0)) +
                            ", need " + std::to_string(params.residue_min_weight()) + ")");
  }
  if (lifts_->find(0)) throw PreconditionError("base code is not extremal");
  for (const auto& g : base.odd_generators()) tail_rows_.push_back(g.lo & tail_mask());
}

bool CandidateFilter::admissible(Word candidate) const noexcept {
  const int s = weight(candidate);
  return s % 2 == 0 && s >= params_.min_size() && (candidate & ~tail_mask()) == 0;
}

Verdict CandidateFilter::check(Word candidate) const {
  const int n = base().length();
  if (candidate & ~low_mask(n)) throw PreconditionError("candidate has positions beyond n");
  const int s = weight(candidate);
  if (s % 2 != 0 || s < params_.min_size()) {
    throw PreconditionError("candidate size must be even and at least " + std::to_string(params_.min_size()));
  }
  const Z4Vector two_u = Z4Vector::two_times(n, candidate);
  if (base().contains(two_u)) {
    return {false, FilterWitness{Condition::two_u_in_code, two_u, two_u, euclidean_weight(two_u)}};
  }
  if (candidate & ~tail_mask()) {
    throw PreconditionError("candidate must avoid coordinates 1.." + std::to_string(k()));
  }
  auto hit = lifts_->find(candidate);
  if (!hit) return {};
  FilterWitness w{condition_for(*hit, params_.max_excluded), hit->v, hit->word, hit->euclidean_weight()};
  if (!base().contains(w.v) || inner_product(w.v, two_u) != 0 || !(w.v + two_u == w.word) ||
      w.euclidean_weight == 0 || w.euclidean_weight > params_.max_excluded || w.euclidean_weight % 8 != 0) {
    throw Error("internal: candidate witness failed replay");
  }
  return {false, w};
}

bool CandidateFilter::excluded_by_even_steps(Word candidate) const {
  const auto patterns = even_patterns(params_.max_excluded);
  bool found = false;
  for_each_row_combination(tail_rows_, max_pattern_rows(patterns), [&](int rows, Word o) {
    if (found) return;
    const int removed = weight(o & ~candidate);
    const int added = weight(candidate & ~o);
    for (const auto& p : patterns) {
      if (p.rows == rows && p.removed == removed && p.added == added) found = true;
    }
  });
  return found;
}

Verdict check_candidate(const Z4Code& base, Word candidate, const FilterParams& params) {
  return CandidateFilter(base, params).check(candidate);
}

std::string_view step_label(AlgBStep s) noexcept {
  static constexpr std::string_view labels[kAlgBStepCount] = {"2.2.3", "2.3.3", "2.3.4", "2.3.7", "3.2", "3.3",
                                                              "3.4",   "4.2",   "4.3",   "5.2",   "5.3", "6.2"};
  return labels[static_cast<int>(s)];
}

void algorithm_b(const CandidateFilter& ctx, const AlgBSink& sink, const AlgBOptions& options) {
  const int k = ctx.k();
  if (k > options.max_dimension) {
    throw GuardError("k = " + std::to_string(k) + " exceeds the exclusion-algorithm limit of " +
                     std::to_string(options.max_dimension) + "; use `filter check` or `filter search` instead");
  }
  const int top = ctx.params().max_excluded;
  const Word tail = ctx.tail_mask();
  const auto gens = ctx.base().odd_generators();
  const auto& lifts = ctx.lifts();

  auto tail_parts = [&](const Z4Vector& v) { return std::pair{v.hi & ~v.lo & tail, v.lo & tail}; };

  for (const auto& rec : lifts.residue_words()) {
    const int w = weight(rec.word);
    if (w != top && w != top - 4) continue;
    const Z4Vector lift = lifts.lift(rec);
    for_each_subset(rec.coeffs, [&](Word e) {
      Word e_lo = 0;
      for (Word s = e; s; s &= s - 1) e_lo ^= gens[std::countr_zero(s)].lo;
      const Z4Vector v = lift + Z4Vector::two_times(lift.n, e_lo);
      const auto [t, o] = tail_parts(v);
      if (w == top) {
        for_each_subset(o, [&](Word part) {
          if (weight(t | part) % 2 == 0) sink(t | part, AlgBStep::s2_2_3);
        });
        return;
      }
      const Word outside = tail & ~(t | o);
      for_each_subset(o, [&](Word part) {
        for (Word m = outside; m; m &= m - 1) sink(t | part | (m & -m), AlgBStep::s2_3_3);
      });
      for (Word drop = t; drop; drop &= drop - 1) {
        const Word base_set = t & ~(drop & -drop);
        for_each_subset(o, [&](Word part) { sink(base_set | part, AlgBStep::s2_3_4); });
      }
      for (int i = 0; i < k; ++i) {
        if ((rec.coeffs >> i) & 1) continue;
        const Z4Vector vi = v + times_two(gens[i]);
        const auto [ti, oi] = tail_parts(vi);
        for_each_subset(oi, [&](Word part) { sink(ti | part, AlgBStep::s2_3_7); });
      }
    });
  }

  std::vector<Word> rows;
  for (const auto& g : gens) rows.push_back(g.lo & tail);
  even_step_sets(rows, tail, top, sink);
}

void even_step_sets(std::span<const Word> tail_rows, Word tail, int max_excluded, const AlgBSink& sink) {
  const std::vector<Word> rows(tail_rows.begin(), tail_rows.end());
  const auto patterns = even_patterns(max_excluded);
  // Printed step order: all single rows, then pairs, triples, quadruples.
  for (int r = 1; r <= max_pattern_rows(patterns); ++r) {
    for_each_row_combination(rows, r, [&](int size, Word o) {
      if (size != r) return;
      for (const auto& p : patterns) {
        if (p.rows != r) continue;
        for_each_subset_of_size(o, p.removed, [&](Word rem) {
          for_each_subset_of_size(tail & ~o, p.added, [&](Word add) { sink((o & ~rem) | add, p.step); });
        });
      }
    });
  }
}

void DedupSink::operator()(Word set, AlgBStep) {
  sets_.insert(set);
  if (sets_.size() > capacity_) {
    throw GuardError("deduplicating sink exceeded its capacity of " + std::to_string(capacity_) + " sets");
  }
}

std::vector<Word> DedupSink::sorted() const {
  std::vector<Word> out(sets_.begin(), sets_.end());
  std::sort(out.begin(), out.end());
  return out;
}

SearchResult random_candidate_search(const CandidateFilter& ctx, const SearchOptions& options, const Runner& runner) {
  SearchResult result;
  const Word tail = ctx.tail_mask();
  std::vector<int> positions;
  for (Word s = tail; s; s &= s - 1) positions.push_back(std::countr_zero(s));
  const int m = static_cast<int>(positions.size());

  std::vector<Word> stream;
  for (Word b : options.injected) {
    if (!ctx.admissible(b)) throw PreconditionError("injected candidate " + format_positions(b) + " is not admissible");
    stream.push_back(b);
  }
  if (options.attempts > 0) {
    const int lo = std::max(options.min_size + (options.min_size & 1), ctx.params().min_size());
    const int hi = std::min(options.max_size - (options.max_size & 1), m - (m & 1));
    if (lo > hi) {
      throw PreconditionError("no admissible even size in " + std::to_string(options.min_size) + ":" +
                              std::to_string(options.max_size));
    }
    const std::uint64_t choices = static_cast<std::uint64_t>((hi - lo) / 2 + 1);
    Sampler sampler(options.seed);
    for (std::uint64_t a = 0; a < options.attempts; ++a) {
      const int size = lo + 2 * static_cast<int>(sampler.below(choices));
      Word b = 0;
      for (int i = 0; i < size; ++i) {
        const int j = i + static_cast<int>(sampler.below(static_cast<std::uint64_t>(m - i)));
        std::swap(positions[i], positions[j]);
        b |= Word{1} << positions[i];
      }
      stream.push_back(b);
    }
  }
  result.drawn = options.attempts;

  std::vector<std::size_t> unique;
  {
    std::unordered_set<Word> seen;
    for (std::size_t i = 0; i < stream.size(); ++i) {
      if (seen.insert(stream[i]).second) {
        unique.push_back(i);
      } else {
        ++result.duplicates;
      }
    }
  }

  // 0..3: unsuitable by condition, 4: suitable, 5: prefiltered.
  std::vector<std::uint8_t> status(unique.size());
  std::vector<std::uint8_t> even_missed(unique.size());
  constexpr std::size_t kChunk = 32;
  const std::size_t chunks = (unique.size() + kChunk - 1) / kChunk;
  runner(chunks, [&](std::size_t c) {
    const std::size_t end = std::min(unique.size(), (c + 1) * kChunk);
    for (std::size_t u = c * kChunk; u < end; ++u) {
      const Word b = stream[unique[u]];
      if (options.prefilter && ctx.excluded_by_even_steps(b)) {
        status[u] = 5;
        continue;
      }
      const auto verdict = ctx.check(b);
      if (verdict.suitable) {
        status[u] = 4;
      } else {
        status[u] = static_cast<std::uint8_t>(verdict.witness->condition);
        even_missed[u] = options.prefilter && verdict.witness->condition == Condition::even;
      }
    }
  });

  for (std::size_t u = 0; u < unique.size(); ++u) {
    if (status[u] == 5) {
      ++result.prefiltered;
      continue;
    }
    ++result.checked;
    if (status[u] == 4) {
      result.suitable.push_back(stream[unique[u]]);
    } else {
      ++result.unsuitable_by_condition[status[u]];
      result.even_missed_by_prefilter += even_missed[u];
    }
  }
  return result;
}

}  // namespace z4kit
