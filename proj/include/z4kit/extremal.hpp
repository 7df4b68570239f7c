#pragma once

#include <map>
#include <optional>
#include <vector>

#include "z4kit/gf2.hpp"
#include "z4kit/parallel.hpp"
#include "z4kit/z4.hpp"

namespace z4kit {

// d_E bound for Type II codes of length n.
constexpr int extremal_bound(int n) noexcept { return 8 * (n / 24) + 8; }
// Largest Euclidean weight an extremal code must avoid (0 when n < 24).
constexpr int largest_excluded_weight(int n) noexcept { return 8 * (n / 24); }

struct ExtremalityReport {
  bool extremal = false;
  int length = 0;
  int bound = 0;
  std::vector<int> excluded_weights;
  std::optional<Z4Vector> witness;
  // Torsion weights 1..max_excluded/4 from the MacWilliams transform.
  std::map<int, BigInt> torsion_low_counts;
  // Residue words of weight w <= max_excluded examined by the lift search.
  std::map<int, std::size_t> residue_low_profile;
  std::optional<int> residue_min_weight;
};

// Production verifier, n in {48, 56, 64}. Throws PreconditionError for non
// Type II input (naming the failing generator) and for other lengths.
ExtremalityReport verify_extremal(const Z4Code& c, const Runner& runner = serial_runner());
// Same decision procedure for any Type II code with n <= 64: excluded weights
// are the positive multiples of 8 below extremal_bound(n).
ExtremalityReport verify_extremal_generalized(const Z4Code& c, const Runner& runner = serial_runner());

// Exact d_E by full enumeration; nullopt for the zero code.
std::optional<int> min_euclidean_weight_bruteforce(const Z4Code& c);

// Norms are stored scaled by 4 so they are integers: norm(x) = norm4 / 4.
struct LatticeStats {
  int min_norm4 = 0;
  std::uint64_t kissing = 0;
  double min_norm() const noexcept { return min_norm4 / 4.0; }
  friend bool operator==(const LatticeStats&, const LatticeStats&) = default;
};

inline constexpr int kMaxLatticeLength = 16;

// Enumerates x = y/2 with y = c (mod 4) for every codeword c and |y|^2 <=
// radius4; minimum nonzero norm and its multiplicity. nullopt if no nonzero
// vector lies within the radius.
std::optional<LatticeStats> lattice_stats_bruteforce(const Z4Code& c, int radius4 = 16);

// Same numbers from the codeword side: a codeword coset has minimal vectors
// of norm wt_E/4, 2^{n_2} of them, and the zero coset contributes 2n vectors
// of norm 4. Minimal norm is therefore min(d_E, 16)/4.
LatticeStats lattice_stats_from_codewords(const Z4Code& c);

}  // namespace z4kit
