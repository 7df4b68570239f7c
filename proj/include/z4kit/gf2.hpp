#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "z4kit/bits.hpp"
#include "z4kit/parallel.hpp"

namespace z4kit {

using BigInt = boost::multiprecision::cpp_int;

// Rows of a binary matrix with n <= 64 columns.
struct BinaryMatrix {
  int n = 0;
  std::vector<Word> rows;
};

struct RrefResult {
  BinaryMatrix reduced;     // nonzero rows only
  int rank = 0;
  std::vector<int> pivots;  // 1-based pivot column of each reduced row
};

RrefResult rref(const BinaryMatrix& m);

// Binary linear code; generators are kept in reduced row-echelon form.
class BinaryCode {
 public:
  BinaryCode() = default;
  // Rows may be dependent; the code is their span.
  BinaryCode(int n, std::span<const Word> rows);
  static BinaryCode zero(int n) { return BinaryCode(n, {}); }

  int length() const noexcept { return n_; }
  int dimension() const noexcept { return static_cast<int>(gen_.size()); }
  const std::vector<Word>& generators() const noexcept { return gen_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }  // 0-based columns
  // Basis of the dual code, used as parity checks.
  const std::vector<Word>& parity_checks() const noexcept { return checks_; }

  bool contains(Word w) const noexcept;
  bool contains(const BinaryWord& w) const;  // throws on length mismatch
  // Bit i is the parity of w against parity check i.
  Word syndrome(Word w) const noexcept;

  BinaryMatrix matrix() const { return {n_, gen_}; }

 private:
  int n_ = 0;
  std::vector<Word> gen_;
  std::vector<int> pivots_;
  std::vector<Word> checks_;
};

BinaryCode dual_code(const BinaryCode& c);
bool same_code(const BinaryCode& a, const BinaryCode& b);

// Exact weight counts; counts[i] = W_i.
struct WeightDistribution {
  int n = 0;
  std::vector<BigInt> counts;  // size n + 1

  explicit WeightDistribution(int length = 0) : n(length), counts(length + 1) {}
  BigInt total() const;
  std::optional<int> min_nonzero_weight() const;
  WeightDistribution& operator+=(const WeightDistribution& other);
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

// A codeword together with the set of generator rows summing to it
// (bit i of coeffs selects generator i).
struct CodewordRecord {
  Word word = 0;
  Word coeffs = 0;
  friend bool operator==(const CodewordRecord&, const CodewordRecord&) = default;
};

struct WeightEnumeration {
  WeightDistribution distribution;
  std::vector<CodewordRecord> collected;  // weight in [1, bound], sweep order
};

inline constexpr int kMaxEnumerationDimension = 40;

// Gray-code sweep over all 2^k codewords. With collect_up_to, every nonzero
// codeword of weight <= bound is returned with its coefficient set.
WeightEnumeration weight_distribution(const BinaryCode& c, std::optional<int> collect_up_to = std::nullopt,
                                      const Runner& runner = serial_runner());

// Same sweep over an explicit list of linearly independent rows; coefficient
// sets in the result refer to these rows.
WeightEnumeration weight_distribution_of_rows(int n, std::span<const Word> rows,
                                              std::optional<int> collect_up_to = std::nullopt,
                                              const Runner& runner = serial_runner());

// Codewords of weight exactly w (w > 0), sweep order.
std::vector<CodewordRecord> codewords_of_weight(const BinaryCode& c, int w, const Runner& runner = serial_runner());

// Minimum nonzero weight; n + 1 for the zero code.
int min_weight(const BinaryCode& c, const Runner& runner = serial_runner());

// Dual distribution via Krawtchouk sums. Requires sum(W) == 2^k.
WeightDistribution macwilliams_transform(const WeightDistribution& w, int k);

// GF2MAT v1: "gf2 n=<n> k=<k>" then k rows of n characters from {0,1}.
BinaryMatrix parse_gf2mat(std::istream& in);
BinaryMatrix parse_gf2mat(const std::string& text);
std::string format_gf2mat(const BinaryMatrix& m);

// {"n":..,"k":..,"counts":{"0":"1",...}}, nonzero counts as decimal strings.
std::string weight_distribution_json(const WeightDistribution& w, int k);
// Returns the distribution and its k.
std::pair<WeightDistribution, int> parse_weight_distribution_json(const std::string& text);

}  // namespace z4kit
