#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "z4kit/bits.hpp"
#include "z4kit/gf2.hpp"

namespace z4kit {

// Word over Z4 as two bit-planes: coordinate value = lo + 2*hi.
struct Z4Vector {
  int n = 0;
  Word lo = 0;
  Word hi = 0;

  static Z4Vector zero(int n) { return {n, 0, 0}; }
  static Z4Vector from_digits(std::string_view digits);
  // 2 on the positions of `support`, 0 elsewhere.
  static Z4Vector two_times(int n, Word support) { return {n, 0, support}; }

  std::string digits() const;
  int at(int pos0) const noexcept { return static_cast<int>(((lo >> pos0) & 1) | (((hi >> pos0) & 1) << 1)); }
  void set(int pos0, int value);
  bool is_even() const noexcept { return lo == 0; }
  bool is_zero() const noexcept { return lo == 0 && hi == 0; }

  friend bool operator==(const Z4Vector&, const Z4Vector&) = default;
};

inline Z4Vector operator+(const Z4Vector& a, const Z4Vector& b) noexcept {
  return {a.n, a.lo ^ b.lo, a.hi ^ b.hi ^ (a.lo & b.lo)};
}
inline Z4Vector operator-(const Z4Vector& a) noexcept { return {a.n, a.lo, a.hi ^ a.lo}; }
inline Z4Vector operator-(const Z4Vector& a, const Z4Vector& b) noexcept { return a + (-b); }
inline Z4Vector times_two(const Z4Vector& a) noexcept { return {a.n, 0, a.lo}; }
Z4Vector scale(const Z4Vector& a, int k) noexcept;

// Position sets S_0..S_3 as bit masks.
struct SupportProfile {
  std::array<Word, 4> s{};
  Word operator[](int i) const noexcept { return s[i]; }
};

inline SupportProfile support_profile(const Z4Vector& v) noexcept {
  const Word mask = low_mask(v.n);
  return {{~v.lo & ~v.hi & mask, v.lo & ~v.hi, ~v.lo & v.hi, v.lo & v.hi}};
}

// n_0..n_3
inline std::array<int, 4> coordinate_counts(const Z4Vector& v) noexcept {
  const auto p = support_profile(v);
  return {weight(p[0]), weight(p[1]), weight(p[2]), weight(p[3])};
}

// n_1 + 4 n_2 + n_3
inline int euclidean_weight(const Z4Vector& v) noexcept { return weight(v.lo) + 4 * weight(v.hi & ~v.lo); }

int inner_product(const Z4Vector& x, const Z4Vector& y);  // throws on length mismatch
inline int inner_product_unchecked(const Z4Vector& x, const Z4Vector& y) noexcept {
  return (weight(x.lo & y.lo) + 2 * (weight(x.lo & y.hi) + weight(x.hi & y.lo))) & 3;
}

// Standard form [I_k1 A B1+2B2 ; O 2I_k2 2D] of a permuted copy of the code.
struct StandardForm {
  std::vector<int> permutation;  // permutation[j] = original 0-based column placed at column j
  std::vector<Z4Vector> rows;    // permuted generator rows
  int k1 = 0;
  int k2 = 0;

  bool is_identity_permutation() const;
  BinaryMatrix block_a() const;             // k1 x k2, entries 0/1
  std::vector<Z4Vector> block_b() const;    // k1 x (n-k1-k2), B1 + 2 B2
  BinaryMatrix block_d() const;             // k2 x (n-k1-k2), entries 0/1
};

// A Z4-linear code of type 4^k1 2^k2 with a reduced generator matrix.
class Z4Code {
 public:
  Z4Code() = default;
  // Rows may be dependent; the code is their Z4 span.
  static Z4Code from_generators(int n, std::span<const Z4Vector> rows);

  int length() const noexcept { return n_; }
  int k1() const noexcept { return k1_; }
  int k2() const noexcept { return k2_; }
  // log2 of the number of codewords, 2 k1 + k2.
  int log2_size() const noexcept { return 2 * k1_ + k2_; }

  // First k1 rows carry a 1 on their pivot column and 0 on the other odd
  // pivots; the last k2 rows are even and vanish on all odd pivots.
  const std::vector<Z4Vector>& generators() const noexcept { return gen_; }
  std::span<const Z4Vector> odd_generators() const noexcept { return {gen_.data(), static_cast<std::size_t>(k1_)}; }
  std::span<const Z4Vector> even_generators() const noexcept {
    return {gen_.data() + k1_, static_cast<std::size_t>(k2_)};
  }
  const std::vector<int>& odd_pivots() const noexcept { return odd_pivots_; }    // 0-based
  const std::vector<int>& even_pivots() const noexcept { return even_pivots_; }  // 0-based
  const StandardForm& standard_form() const noexcept { return sf_; }

  bool contains(const Z4Vector& v) const;

 private:
  int n_ = 0;
  int k1_ = 0;
  int k2_ = 0;
  std::vector<Z4Vector> gen_;
  std::vector<int> odd_pivots_;
  std::vector<int> even_pivots_;
  StandardForm sf_;
};

Z4Code standard_form(int n, std::span<const Z4Vector> rows);

BinaryCode residue_code(const Z4Code& c);
BinaryCode torsion_code(const Z4Code& c);

bool is_self_orthogonal(const Z4Code& c);
bool is_self_dual(const Z4Code& c);
bool is_type_ii(const Z4Code& c);
// Index of the first generator with Euclidean weight not divisible by 8, or -1.
int first_non_type_ii_generator(const Z4Code& c);

inline constexpr int kMaxBruteForceLog2Size = 26;

// Visits every codeword (Gray order over the 2 k1 + k2 bit coefficients).
// Return false from visit to stop early. Throws GuardError past max_log2_size.
void for_each_codeword(const Z4Code& c, const std::function<bool(const Z4Vector&)>& visit,
                       int max_log2_size = kMaxBruteForceLog2Size);

// Z4CODE v1: "z4 n=<n> k1=<k1> k2=<k2>" then k1+k2 rows of digits 0..3;
// lines starting with '#' are ignored.
Z4Code parse_z4code(std::istream& in);
Z4Code parse_z4code(const std::string& text);
// Writes the reduced generators (first k1 odd rows, then k2 even rows).
std::string format_z4code(const Z4Code& c, std::string_view comment = {});

}  // namespace z4kit
