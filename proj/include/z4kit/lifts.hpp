#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "z4kit/gf2.hpp"
#include "z4kit/parallel.hpp"
#include "z4kit/z4.hpp"

namespace z4kit {

// Low-weight coset analysis of a Z4 code C.
//
// Every codeword reducing to the residue word t is L + 2c with L a fixed lift
// of t and c in the torsion code. For a binary mask x,
//   wt_E(L + 2c + 2x) = wt(t) + 4 * wt((h ^ x ^ c) restricted off supp(t)),
// h being the 2-plane of L. Whether some c brings the second term down to a
// budget r is a coset-weight question in the torsion code punctured on
// supp(t): syndromes are reduced modulo the span of the support columns and
// matched against sums of at most r reduced off-support columns. Even
// codewords (t = 0) are matched against a table of syndromes of all words of
// weight <= max_weight/4.
class LiftIndex {
 public:
  struct Hit {
    int residue_weight = 0;  // wt(t); 0 for the even case
    int off_support_twos = 0;
    Z4Vector v;     // codeword of C
    Z4Vector word;  // v + 2x
    int euclidean_weight() const { return z4kit::euclidean_weight(word); }
  };

  // max_weight: largest Euclidean weight searched (a multiple of 4, <= 16).
  LiftIndex(const Z4Code& code, int max_weight, const Runner& runner = serial_runner());

  const Z4Code& code() const noexcept { return code_; }
  int max_weight() const noexcept { return max_weight_; }
  const BinaryCode& torsion() const noexcept { return torsion_; }
  // Residue distribution from the sweep over the odd generators.
  const WeightDistribution& residue_distribution() const noexcept { return residue_dist_; }
  // Residue words of weight 1..max_weight, coefficients over odd_generators().
  const std::vector<CodewordRecord>& residue_words() const noexcept { return records_; }
  std::size_t residue_words_of_weight(int w) const;

  Word syndrome(Word x) const noexcept;

  // First codeword w = v + 2x, v in C, <v, 2x> = 0, with 0 < wt_E(w) <=
  // max_weight. Order: even codewords, then residue weights descending.
  std::optional<Hit> find(Word x) const;
  // Hit of least Euclidean weight over every residue word.
  std::optional<Hit> find_lightest(Word x) const;
  // Same restricted to even codewords v = 2c.
  std::optional<Hit> find_even(Word x) const;
  // Same restricted to residue words of weight w.
  std::optional<Hit> find_odd(Word x, int w) const;

  Z4Vector lift(const CodewordRecord& r) const;

 private:
  struct Prepared {
    Word residue = 0;
    Word syndrome_h = 0;
    std::uint32_t basis_offset = 0;
    std::uint8_t basis_size = 0;
    std::uint8_t budget = 0;
    std::uint32_t columns_offset = 0;  // into reduced_columns_, budget > 0 only
    std::uint8_t columns_size = 0;
    std::uint32_t record = 0;
  };

  Word reduce(const Prepared& p, Word s) const noexcept;
  std::optional<Hit> probe(const Prepared& p, Word x) const;
  Hit witness(const Prepared& p, Word x, Word extra) const;

  Z4Code code_;
  int max_weight_;
  BinaryCode torsion_;
  std::vector<Word> columns_;  // syndrome of each coordinate
  WeightDistribution residue_dist_;
  std::vector<CodewordRecord> records_;
  std::vector<Prepared> prepared_;  // residue weight descending, sweep order within
  std::vector<Word> basis_;
  std::vector<std::pair<Word, int>> reduced_columns_;  // (reduced syndrome, position), sorted per record
  std::vector<std::pair<Word, Word>> even_table_;     // (syndrome, word), sorted
};

}  // namespace z4kit
