#include "z4kit/gf2.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "sweep.hpp"
#include "z4kit/error.hpp"

namespace z4kit {

namespace {

void check_length(int n) {
  if (n < 0 || n > kMaxLength) throw PreconditionError("length " + std::to_string(n) + " outside [0, 64]");
}

// In-place reduced row echelon form; returns 0-based pivot columns.
std::vector<int> reduce_rows(std::vector<Word>& rows, int n) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int col = 0; col < n && r < rows.size(); ++col) {
    const Word m = bit(col);
    std::size_t p = r;
    while (p < rows.size() && !(rows[p] & m)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && (rows[i] & m)) rows[i] ^= rows[r];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

BinaryWord BinaryWord::from_string(std::string_view digits) {
  check_length(static_cast<int>(digits.size()));
  BinaryWord w{static_cast<int>(digits.size()), 0};
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == '1') {
      w.bits |= bit(static_cast<int>(i));
    } else if (digits[i] != '0') {
      throw ParseError(0, std::string("invalid binary digit '") + digits[i] + "'");
    }
  }
  return w;
}

std::string BinaryWord::to_string() const {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i) {
    if (bits & bit(i)) s[i] = '1';
  }
  return s;
}

RrefResult rref(const BinaryMatrix& m) {
  check_length(m.n);
  RrefResult out;
  out.reduced.n = m.n;
  out.reduced.rows = m.rows;
  for (Word& r : out.reduced.rows) r &= low_mask(m.n);
  const auto piv = reduce_rows(out.reduced.rows, m.n);
  out.rank = static_cast<int>(piv.size());
  for (int p : piv) out.pivots.push_back(p + 1);
  return out;
}

BinaryCode::BinaryCode(int n, std::span<const Word> rows) : n_(n), gen_(rows.begin(), rows.end()) {
  check_length(n);
  for (Word& r : gen_) r &= low_mask(n);
  pivots_ = reduce_rows(gen_, n);
  // Dual basis: one check per non-pivot column q, e_q + sum of pivots of rows containing q.
  Word pivot_mask = 0;
  for (int p : pivots_) pivot_mask |= bit(p);
  for (int q = 0; q < n; ++q) {
    if (pivot_mask & bit(q)) continue;
    Word h = bit(q);
    for (std::size_t i = 0; i < gen_.size(); ++i) {
      if (gen_[i] & bit(q)) h |= bit(pivots_[i]);
    }
    checks_.push_back(h);
  }
}

bool BinaryCode::contains(Word w) const noexcept {
  if (w & ~low_mask(n_)) return false;
  for (Word h : checks_) {
    if (parity(h & w)) return false;
  }
  return true;
}

bool BinaryCode::contains(const BinaryWord& w) const {
  if (w.n != n_) {
    throw PreconditionError("word length " + std::to_string(w.n) + " does not match code length " + std::to_string(n_));
  }
  return contains(w.bits);
}

Word BinaryCode::syndrome(Word w) const noexcept {
  Word s = 0;
  for (std::size_t i = 0; i < checks_.size(); ++i) s |= static_cast<Word>(parity(checks_[i] & w)) << i;
  return s;
}

BinaryCode dual_code(const BinaryCode& c) { return BinaryCode(c.length(), c.parity_checks()); }

bool same_code(const BinaryCode& a, const BinaryCode& b) {
  return a.length() == b.length() && a.generators() == b.generators();
}

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

std::optional<int> WeightDistribution::min_nonzero_weight() const {
  for (int i = 1; i <= n; ++i) {
    if (counts[i] != 0) return i;
  }
  return std::nullopt;
}

WeightDistribution& WeightDistribution::operator+=(const WeightDistribution& other) {
  if (other.n != n) throw PreconditionError("cannot merge distributions of different lengths");
  for (int i = 0; i <= n; ++i) counts[i] += other.counts[i];
  return *this;
}

namespace {

void check_dimension(int k) {
  if (k > kMaxEnumerationDimension) {
    throw GuardError("dimension " + std::to_string(k) + " exceeds the enumeration guard of " +
                     std::to_string(kMaxEnumerationDimension));
  }
}

void check_dimension(const BinaryCode& c) { check_dimension(c.dimension()); }

struct ShardResult {
  std::array<std::uint64_t, 65> hist{};
  std::vector<CodewordRecord> collected;
};

}  // namespace

WeightEnumeration weight_distribution(const BinaryCode& c, std::optional<int> collect_up_to, const Runner& runner) {
  return weight_distribution_of_rows(c.length(), c.generators(), collect_up_to, runner);
}

WeightEnumeration weight_distribution_of_rows(int n, std::span<const Word> gens, std::optional<int> collect_up_to,
                                              const Runner& runner) {
  check_dimension(static_cast<int>(gens.size()));
  const int sb = detail::shard_bits_for(static_cast<int>(gens.size()));
  const std::size_t shards = std::size_t{1} << sb;
  std::vector<ShardResult> results(shards);
  const int bound = collect_up_to.value_or(-1);
  runner(shards, [&](std::size_t s) {
    ShardResult& r = results[s];
    std::array<std::array<std::uint64_t, 65>, 4> hist{};
    unsigned lane = 0;
    detail::sweep_shard(gens, sb, s, [&](Word w, Word coeffs) {
      const int wt = std::popcount(w);
      ++hist[lane++ & 3][wt];
      if (wt <= bound && wt > 0) [[unlikely]]
        r.collected.push_back({w, coeffs});
    });
    for (const auto& h : hist) {
      for (int i = 0; i < 65; ++i) r.hist[i] += h[i];
    }
  });
  WeightEnumeration out{WeightDistribution(n), {}};
  std::array<std::uint64_t, 65> total{};
  for (auto& r : results) {
    for (int i = 0; i < 65; ++i) total[i] += r.hist[i];
    out.collected.insert(out.collected.end(), r.collected.begin(), r.collected.end());
  }
  for (int i = 0; i <= n; ++i) out.distribution.counts[i] = total[i];
  return out;
}

std::vector<CodewordRecord> codewords_of_weight(const BinaryCode& c, int w, const Runner& runner) {
  check_dimension(c);
  const auto& gens = c.generators();
  const int sb = detail::shard_bits_for(c.dimension());
  const std::size_t shards = std::size_t{1} << sb;
  std::vector<std::vector<CodewordRecord>> results(shards);
  runner(shards, [&](std::size_t s) {
    auto& out = results[s];
    detail::sweep_shard(gens, sb, s, [&](Word word, Word coeffs) {
      if (std::popcount(word) == w) [[unlikely]]
        out.push_back({word, coeffs});
    });
  });
  std::vector<CodewordRecord> all;
  for (auto& r : results) all.insert(all.end(), r.begin(), r.end());
  return all;
}

int min_weight(const BinaryCode& c, const Runner& runner) {
  check_dimension(c);
  const auto& gens = c.generators();
  const int sb = detail::shard_bits_for(c.dimension());
  const std::size_t shards = std::size_t{1} << sb;
  std::vector<int> best(shards, c.length() + 1);
  runner(shards, [&](std::size_t s) {
    int m = c.length() + 1;
    detail::sweep_shard(gens, sb, s, [&](Word w, Word) {
      const int wt = std::popcount(w);
      if (wt != 0 && wt < m) m = wt;
    });
    best[s] = m;
  });
  return *std::min_element(best.begin(), best.end());
}

WeightDistribution macwilliams_transform(const WeightDistribution& w, int k) {
  const int n = w.n;
  if (k < 0 || k > n) throw PreconditionError("dimension out of range for MacWilliams transform");
  const BigInt size = BigInt(1) << k;
  if (w.total() != size) throw PreconditionError("distribution total is not 2^k");
  // Binomials up to n.
  std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1));
  for (int a = 0; a <= n; ++a) {
    binom[a][0] = 1;
    for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : BigInt(0));
  }
  auto choose = [&](int a, int b) -> BigInt { return (b < 0 || b > a) ? BigInt(0) : binom[a][b]; };
  WeightDistribution out(n);
  for (int j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (int i = 0; i <= n; ++i) {
      if (w.counts[i] == 0) continue;
      BigInt kraw = 0;  // K_j(i)
      for (int s = 0; s <= j; ++s) {
        const BigInt term = choose(i, s) * choose(n - i, j - s);
        if (s & 1) {
          kraw -= term;
        } else {
          kraw += term;
        }
      }
      acc += w.counts[i] * kraw;
    }
    if (acc % size != 0 || acc < 0) throw PreconditionError("distribution is not the weight distribution of a linear code");
    out.counts[j] = acc / size;
  }
  return out;
}

BinaryMatrix parse_gf2mat(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1, k = -1;
  BinaryMatrix m;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (n < 0) {
      std::istringstream hs(line);
      std::string tag, nf, kf;
      if (!(hs >> tag >> nf >> kf) || tag != "gf2" || nf.rfind("n=", 0) != 0 || kf.rfind("k=", 0) != 0) {
        throw ParseError(lineno, "expected header 'gf2 n=<n> k=<k>'");
      }
      try {
        n = std::stoi(nf.substr(2));
        k = std::stoi(kf.substr(2));
      } catch (...) {
        throw ParseError(lineno, "malformed header numbers");
      }
      if (n < 0 || n > kMaxLength || k < 0) throw ParseError(lineno, "header values out of range (n must be <= 64)");
      m.n = n;
      continue;
    }
    if (static_cast<int>(line.size()) != n) {
      throw ParseError(lineno, "row has " + std::to_string(line.size()) + " entries, expected " + std::to_string(n));
    }
    Word row = 0;
    for (int i = 0; i < n; ++i) {
      if (line[i] == '1') {
        row |= bit(i);
      } else if (line[i] != '0') {
        throw ParseError(lineno, "invalid binary digit '" + std::string(1, line[i]) + "'");
      }
    }
    if (static_cast<int>(m.rows.size()) == k) throw ParseError(lineno, "more rows than k=" + std::to_string(k));
    m.rows.push_back(row);
  }
  if (n < 0) throw ParseError(lineno, "missing header");
  if (static_cast<int>(m.rows.size()) != k) {
    throw ParseError(lineno, "expected " + std::to_string(k) + " rows, found " + std::to_string(m.rows.size()));
  }
  return m;
}

BinaryMatrix parse_gf2mat(const std::string& text) {
  std::istringstream in(text);
  return parse_gf2mat(in);
}

std::string format_gf2mat(const BinaryMatrix& m) {
  std::string out = "gf2 n=" + std::to_string(m.n) + " k=" + std::to_string(m.rows.size()) + "\n";
  for (Word r : m.rows) out += BinaryWord{m.n, r}.to_string() + "\n";
  return out;
}

std::string weight_distribution_json(const WeightDistribution& w, int k) {
  nlohmann::ordered_json j;
  j["n"] = w.n;
  j["k"] = k;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (int i = 0; i <= w.n; ++i) {
    if (w.counts[i] != 0) counts[std::to_string(i)] = w.counts[i].str();
  }
  j["counts"] = counts;
  return j.dump();
}

std::pair<WeightDistribution, int> parse_weight_distribution_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("k") || !j.contains("counts") || !j["counts"].is_object()) {
    throw ParseError(0, "weight distribution JSON needs n, k and counts");
  }
  const int n = j["n"].get<int>();
  const int k = j["k"].get<int>();
  if (n < 0 || n > kMaxLength || k < 0 || k > n) throw ParseError(0, "n or k out of range");
  WeightDistribution w(n);
  for (auto it = j["counts"].begin(); it != j["counts"].end(); ++it) {
    int i = -1;
    try {
      i = std::stoi(it.key());
    } catch (...) {
    }
    if (i < 0 || i > n) throw ParseError(0, "weight key '" + it.key() + "' out of range");
    const std::string v = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(0, "count for weight " + it.key() + " is not a nonnegative integer");
    }
    w.counts[i] = BigInt(v);
  }
  return {w, k};
}

}  // namespace z4kit
