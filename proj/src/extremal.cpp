#include "z4kit/extremal.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "z4kit/error.hpp"
#include "z4kit/lifts.hpp"

namespace z4kit {

namespace {

void require_type_ii(const Z4Code& c) {
  if (!is_self_dual(c)) throw PreconditionError("code is not self-dual");
  if (int g = first_non_type_ii_generator(c); g >= 0) {
    throw PreconditionError("generator " + std::to_string(g + 1) + " has Euclidean weight not divisible by 8");
  }
}

}  // namespace

ExtremalityReport verify_extremal(const Z4Code& c, const Runner& runner) {
  require_type_ii(c);
  const int n = c.length();
  if (n != 48 && n != 56 && n != 64) {
    throw PreconditionError("production verifier covers n = 48, 56, 64; use the brute-force check for n = " +
                            std::to_string(n));
  }
  return verify_extremal_generalized(c, runner);
}

ExtremalityReport verify_extremal_generalized(const Z4Code& c, const Runner& runner) {
  require_type_ii(c);
  const int n = c.length();
  ExtremalityReport r;
  r.length = n;
  r.bound = extremal_bound(n);
  const int top = largest_excluded_weight(n);
  for (int w = 8; w <= top; w += 8) r.excluded_weights.push_back(w);
  if (top == 0) {
    r.extremal = true;
    return r;
  }

  LiftIndex index(c, top, runner);
  const auto& residue = index.residue_distribution();
  r.residue_min_weight = residue.min_nonzero_weight();
  for (int w = 1; w <= top; ++w) {
    if (auto count = index.residue_words_of_weight(w)) r.residue_low_profile[w] = count;
  }

  // Type II implies self-dual, so the torsion code is the dual of the residue.
  const auto torsion = macwilliams_transform(residue, c.k1());
  bool torsion_low = false;
  for (int w = 1; w <= top / 4; ++w) {
    r.torsion_low_counts[w] = torsion.counts[w];
    if (torsion.counts[w] != 0) torsion_low = true;
  }

  auto even = index.find_even(0);
  if (even.has_value() != torsion_low) throw Error("internal: torsion counts disagree with the syndrome table");
  auto hit = index.find_lightest(0);
  if (hit) {
    const int w = hit->euclidean_weight();
    if (!c.contains(hit->word) || w == 0 || w > top || w % 8 != 0) {
      throw Error("internal: extremality witness failed replay");
    }
    r.witness = hit->word;
  }
  r.extremal = !hit.has_value();
  return r;
}

std::optional<int> min_euclidean_weight_bruteforce(const Z4Code& c) {
  std::optional<int> best;
  for_each_codeword(c, [&](const Z4Vector& v) {
    if (!v.is_zero()) {
      const int w = euclidean_weight(v);
      if (!best || w < *best) best = w;
    }
    return true;
  });
  return best;
}

std::optional<LatticeStats> lattice_stats_bruteforce(const Z4Code& c, int radius4) {
  const int n = c.length();
  if (n > kMaxLatticeLength) {
    throw GuardError("lattice enumeration is limited to n <= " + std::to_string(kMaxLatticeLength));
  }
  std::optional<LatticeStats> best;
  std::vector<int> residues(n);
  // Representatives y = r (mod 4) in increasing |y|.
  static const std::vector<int> reps[4] = {{0, 4, -4, 8, -8}, {1, -3, 5, -7}, {2, -2, 6, -6}, {-1, 3, -5, 7}};

  auto record = [&](int norm4) {
    if (norm4 == 0) return;
    if (!best || norm4 < best->min_norm4) {
      best = LatticeStats{norm4, 1};
    } else if (norm4 == best->min_norm4) {
      ++best->kissing;
    }
  };
  std::function<void(int, int)> dfs = [&](int pos, int norm4) {
    if (pos == n) {
      record(norm4);
      return;
    }
    for (int y : reps[residues[pos]]) {
      const int next = norm4 + y * y;
      if (next > radius4) continue;
      dfs(pos + 1, next);
    }
  };
  for_each_codeword(c, [&](const Z4Vector& v) {
    for (int i = 0; i < n; ++i) residues[i] = v.at(i);
    dfs(0, 0);
    return true;
  });
  return best;
}

LatticeStats lattice_stats_from_codewords(const Z4Code& c) {
  std::map<int, std::uint64_t> by_weight;
  for_each_codeword(c, [&](const Z4Vector& v) {
    if (!v.is_zero()) {
      const int w = euclidean_weight(v);
      if (w <= 16) by_weight[w] += std::uint64_t{1} << weight(v.hi & ~v.lo);
    }
    return true;
  });
  by_weight[16] += 2 * static_cast<std::uint64_t>(c.length());
  const auto& [w, count] = *by_weight.begin();
  return {w, count};
}

}  // namespace z4kit
