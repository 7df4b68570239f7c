#include "z4kit/lifts.hpp"

#include <algorithm>
#include <bit>

#include "z4kit/error.hpp"

namespace z4kit {

namespace {

int top_bit(Word w) noexcept { return 63 - std::countl_zero(w); }

// Fully reduced basis with distinct leading bits; origin tracks which support
// columns were combined.
struct ReducedBasis {
  std::vector<Word> vec;
  std::vector<Word> origin;

  void insert(Word v, Word from) {
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if ((v >> top_bit(vec[i])) & 1) {
        v ^= vec[i];
        from ^= origin[i];
      }
    }
    if (v == 0) return;
    const int p = top_bit(v);
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if ((vec[i] >> p) & 1) {
        vec[i] ^= v;
        origin[i] ^= from;
      }
    }
    vec.push_back(v);
    origin.push_back(from);
  }

  std::pair<Word, Word> reduce(Word s) const {
    Word from = 0;
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if ((s >> top_bit(vec[i])) & 1) {
        s ^= vec[i];
        from ^= origin[i];
      }
    }
    return {s, from};
  }
};

}  // namespace

LiftIndex::LiftIndex(const Z4Code& code, int max_weight, const Runner& runner)
    : code_(code), max_weight_(max_weight), torsion_(torsion_code(code)), residue_dist_(code.length()) {
  if (max_weight < 4 || max_weight > 16 || max_weight % 4 != 0) {
    throw PreconditionError("lift search supports Euclidean weight bounds 4, 8, 12, 16");
  }
  const int n = code.length();
  columns_.resize(n);
  for (int j = 0; j < n; ++j) columns_[j] = torsion_.syndrome(Word{1} << j);

  std::vector<Word> residue_rows;
  for (const auto& g : code.odd_generators()) residue_rows.push_back(g.lo);
  auto sweep = weight_distribution_of_rows(n, residue_rows, max_weight, runner);
  residue_dist_ = std::move(sweep.distribution);
  records_ = std::move(sweep.collected);

  std::vector<std::uint32_t> order(records_.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return weight(records_[a].word) > weight(records_[b].word); });

  const Word mask = low_mask(n);
  prepared_.reserve(records_.size());
  for (auto idx : order) {
    const auto& r = records_[idx];
    Prepared p;
    p.residue = r.word;
    p.record = idx;
    p.budget = static_cast<std::uint8_t>((max_weight - weight(r.word)) / 4);
    const Z4Vector l = lift(r);
    p.syndrome_h = syndrome(l.hi & ~r.word);
    ReducedBasis basis;
    for (Word s = r.word; s; s &= s - 1) basis.insert(columns_[std::countr_zero(s)], 0);
    p.basis_offset = static_cast<std::uint32_t>(basis_.size());
    p.basis_size = static_cast<std::uint8_t>(basis.vec.size());
    basis_.insert(basis_.end(), basis.vec.begin(), basis.vec.end());
    if (p.budget > 0) {
      p.columns_offset = static_cast<std::uint32_t>(reduced_columns_.size());
      const auto begin = reduced_columns_.size();
      for (Word s = mask & ~r.word; s; s &= s - 1) {
        const int j = std::countr_zero(s);
        reduced_columns_.emplace_back(basis.reduce(columns_[j]).first, j);
      }
      std::sort(reduced_columns_.begin() + static_cast<std::ptrdiff_t>(begin), reduced_columns_.end());
      p.columns_size = static_cast<std::uint8_t>(reduced_columns_.size() - begin);
    }
    prepared_.push_back(p);
  }

  for (int w = 1; w <= max_weight / 4; ++w) {
    for_each_subset_of_size(mask, w, [&](Word e) { even_table_.emplace_back(syndrome(e), e); });
  }
  std::sort(even_table_.begin(), even_table_.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    if (weight(a.second) != weight(b.second)) return weight(a.second) < weight(b.second);
    return a.second < b.second;
  });
  even_table_.erase(std::unique(even_table_.begin(), even_table_.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; }),
                    even_table_.end());
}

std::size_t LiftIndex::residue_words_of_weight(int w) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [w](const auto& r) { return weight(r.word) == w; }));
}

Word LiftIndex::syndrome(Word x) const noexcept {
  Word s = 0;
  for (; x; x &= x - 1) s ^= columns_[std::countr_zero(x)];
  return s;
}

Z4Vector LiftIndex::lift(const CodewordRecord& r) const {
  Z4Vector l = Z4Vector::zero(code_.length());
  const auto gens = code_.odd_generators();
  for (Word c = r.coeffs; c; c &= c - 1) l = l + gens[std::countr_zero(c)];
  return l;
}

Word LiftIndex::reduce(const Prepared& p, Word s) const noexcept {
  const Word* b = basis_.data() + p.basis_offset;
  for (int i = 0; i < p.basis_size; ++i) {
    if ((s >> top_bit(b[i])) & 1) s ^= b[i];
  }
  return s;
}

std::optional<LiftIndex::Hit> LiftIndex::probe(const Prepared& p, Word x) const {
  if (parity(p.residue & x)) return std::nullopt;
  const Word s = reduce(p, p.syndrome_h ^ syndrome(x));
  if (s == 0) return witness(p, x, 0);
  if (p.budget == 0) return std::nullopt;
  const auto* first = reduced_columns_.data() + p.columns_offset;
  const auto* last = first + p.columns_size;
  auto lookup = [&](Word key) -> int {
    auto it = std::lower_bound(first, last, std::pair<Word, int>{key, -1});
    return (it != last && it->first == key) ? it->second : -1;
  };
  if (int j = lookup(s); j >= 0) return witness(p, x, Word{1} << j);
  if (p.budget >= 2) {
    for (const auto* a = first; a != last; ++a) {
      if (int j = lookup(s ^ a->first); j >= 0 && j != a->second) {
        return witness(p, x, (Word{1} << a->second) | (Word{1} << j));
      }
    }
  }
  if (p.budget >= 3) {
    for (const auto* a = first; a != last; ++a) {
      for (const auto* b = a + 1; b != last; ++b) {
        int j = lookup(s ^ a->first ^ b->first);
        if (j >= 0 && j != a->second && j != b->second) {
          return witness(p, x, (Word{1} << a->second) | (Word{1} << b->second) | (Word{1} << j));
        }
      }
    }
  }
  return std::nullopt;
}

LiftIndex::Hit LiftIndex::witness(const Prepared& p, Word x, Word extra) const {
  const auto& r = records_[p.record];
  const Z4Vector l = lift(r);
  ReducedBasis basis;
  for (Word s = r.word; s; s &= s - 1) {
    const int j = std::countr_zero(s);
    basis.insert(columns_[j], Word{1} << j);
  }
  const Word y = ((l.hi ^ x) & ~r.word) ^ extra;
  const auto [rest, from] = basis.reduce(syndrome(y));
  if (rest != 0) throw Error("internal: lift witness reconstruction failed");
  const Word c = y ^ from;
  Hit h;
  h.residue_weight = weight(r.word);
  h.off_support_twos = weight(extra);
  h.v = l + Z4Vector::two_times(code_.length(), c);
  h.word = h.v + Z4Vector::two_times(code_.length(), x);
  return h;
}

std::optional<LiftIndex::Hit> LiftIndex::find_even(Word x) const {
  const Word s = syndrome(x);
  auto it = std::lower_bound(even_table_.begin(), even_table_.end(), std::pair<Word, Word>{s, 0});
  if (it == even_table_.end() || it->first != s) return std::nullopt;
  const int n = code_.length();
  Hit h;
  h.off_support_twos = weight(it->second);
  h.v = Z4Vector::two_times(n, x ^ it->second);
  h.word = h.v + Z4Vector::two_times(n, x);
  return h;
}

std::optional<LiftIndex::Hit> LiftIndex::find_odd(Word x, int w) const {
  for (const auto& p : prepared_) {
    if (weight(p.residue) != w) continue;
    if (auto h = probe(p, x)) return h;
  }
  return std::nullopt;
}

std::optional<LiftIndex::Hit> LiftIndex::find(Word x) const {
  if (auto h = find_even(x)) return h;
  for (const auto& p : prepared_) {
    if (auto h = probe(p, x)) return h;
  }
  return std::nullopt;
}

std::optional<LiftIndex::Hit> LiftIndex::find_lightest(Word x) const {
  // probe() tries off-support flips in increasing number, so each record's
  // hit is already its lightest.
  auto best = find_even(x);
  for (const auto& p : prepared_) {
    auto h = probe(p, x);
    if (h && (!best || h->euclidean_weight() < best->euclidean_weight())) best = h;
  }
  return best;
}

}  // namespace z4kit
