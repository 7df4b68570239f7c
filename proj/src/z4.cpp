#include "z4kit/z4.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "z4kit/error.hpp"

namespace z4kit {

Z4Vector Z4Vector::from_digits(std::string_view digits) {
  if (digits.size() > static_cast<std::size_t>(kMaxLength)) throw PreconditionError("Z4 word longer than 64");
  Z4Vector v = zero(static_cast<int>(digits.size()));
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char ch = digits[i];
    if (ch < '0' || ch > '3') throw ParseError(0, std::string("invalid Z4 digit '") + ch + "'");
    v.set(static_cast<int>(i), ch - '0');
  }
  return v;
}

std::string Z4Vector::digits() const {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i) s[i] = static_cast<char>('0' + at(i));
  return s;
}

void Z4Vector::set(int pos0, int value) {
  const Word m = bit(pos0);
  lo = (value & 1) ? (lo | m) : (lo & ~m);
  hi = (value & 2) ? (hi | m) : (hi & ~m);
}

Z4Vector scale(const Z4Vector& a, int k) noexcept {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return Z4Vector::zero(a.n);
    case 1:
      return a;
    case 2:
      return times_two(a);
    default:
      return -a;
  }
}

int inner_product(const Z4Vector& x, const Z4Vector& y) {
  if (x.n != y.n) throw PreconditionError("inner product of words of different lengths");
  return inner_product_unchecked(x, y);
}

namespace {

Z4Vector permute(const Z4Vector& v, const std::vector<int>& perm) {
  Z4Vector out = Z4Vector::zero(v.n);
  for (int j = 0; j < v.n; ++j) out.set(j, v.at(perm[j]));
  return out;
}

}  // namespace

bool StandardForm::is_identity_permutation() const {
  for (std::size_t j = 0; j < permutation.size(); ++j) {
    if (permutation[j] != static_cast<int>(j)) return false;
  }
  return true;
}

BinaryMatrix StandardForm::block_a() const {
  BinaryMatrix m{k2, {}};
  for (int i = 0; i < k1; ++i) m.rows.push_back((rows[i].lo >> k1) & low_mask(k2));
  return m;
}

std::vector<Z4Vector> StandardForm::block_b() const {
  const int off = k1 + k2;
  const int width = rows.empty() ? 0 : rows[0].n - off;
  std::vector<Z4Vector> out;
  for (int i = 0; i < k1; ++i) {
    out.push_back({width, (rows[i].lo >> off) & low_mask(width), (rows[i].hi >> off) & low_mask(width)});
  }
  return out;
}

BinaryMatrix StandardForm::block_d() const {
  const int off = k1 + k2;
  const int width = rows.empty() ? 0 : rows[0].n - off;
  BinaryMatrix m{width, {}};
  for (int i = k1; i < k1 + k2; ++i) m.rows.push_back((rows[i].hi >> off) & low_mask(width));
  return m;
}

// Unit pivots first (lowest column holding a 1 or 3 among the unreduced rows,
// ties to the earliest row), normalised to 1 and cleared from every other
// row. The even remainder is then reduced over GF(2) on its 2-plane.
Z4Code Z4Code::from_generators(int n, std::span<const Z4Vector> rows) {
  if (n < 0 || n > kMaxLength) throw PreconditionError("length outside [0, 64]");
  const Word mask = low_mask(n);
  std::vector<Z4Vector> rest;
  for (const auto& r : rows) {
    if (r.n != n) throw PreconditionError("generator length mismatch");
    rest.push_back({n, r.lo & mask, r.hi & mask});
  }
  Z4Code c;
  c.n_ = n;
  std::vector<Z4Vector> odd;
  while (true) {
    int best_col = n;
    std::size_t best_row = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i].lo == 0) continue;
      const int col = std::countr_zero(rest[i].lo);
      if (col < best_col) {
        best_col = col;
        best_row = i;
      }
    }
    if (best_row == rest.size()) break;
    Z4Vector p = rest[best_row];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best_row));
    if (p.at(best_col) == 3) p = -p;
    auto clear = [&](Z4Vector& r) {
      const int e = r.at(best_col);
      if (e != 0) r = r - scale(p, e);
    };
    for (auto& r : rest) clear(r);
    for (auto& r : odd) clear(r);
    odd.push_back(p);
    c.odd_pivots_.push_back(best_col);
  }
  std::vector<Word> halves;
  for (const auto& r : rest) halves.push_back(r.hi);
  BinaryCode even_part(n, halves);
  for (std::size_t j = 0; j < even_part.generators().size(); ++j) {
    const Word h = even_part.generators()[j];
    const int q = even_part.pivots()[j];
    for (auto& r : odd) {
      if (r.at(q) >= 2) r = r + Z4Vector{n, 0, h};
    }
    c.even_pivots_.push_back(q);
  }
  c.k1_ = static_cast<int>(odd.size());
  c.k2_ = even_part.dimension();
  c.gen_ = odd;
  for (Word h : even_part.generators()) c.gen_.push_back({n, 0, h});

  StandardForm& sf = c.sf_;
  sf.k1 = c.k1_;
  sf.k2 = c.k2_;
  std::vector<bool> used(n, false);
  for (int p : c.odd_pivots_) {
    sf.permutation.push_back(p);
    used[p] = true;
  }
  for (int p : c.even_pivots_) {
    sf.permutation.push_back(p);
    used[p] = true;
  }
  for (int j = 0; j < n; ++j) {
    if (!used[j]) sf.permutation.push_back(j);
  }
  for (const auto& g : c.gen_) sf.rows.push_back(permute(g, sf.permutation));
  return c;
}

bool Z4Code::contains(const Z4Vector& v) const {
  if (v.n != n_) return false;
  Z4Vector r = v;
  for (int i = 0; i < k1_; ++i) {
    const int e = r.at(odd_pivots_[i]);
    if (e != 0) r = r - scale(gen_[i], e);
  }
  if (r.lo != 0) return false;
  Word h = r.hi;
  for (int j = 0; j < k2_; ++j) {
    if (h & bit(even_pivots_[j])) h ^= gen_[k1_ + j].hi;
  }
  return h == 0;
}

Z4Code standard_form(int n, std::span<const Z4Vector> rows) { return Z4Code::from_generators(n, rows); }

BinaryCode residue_code(const Z4Code& c) {
  std::vector<Word> rows;
  for (const auto& g : c.odd_generators()) rows.push_back(g.lo);
  return BinaryCode(c.length(), rows);
}

BinaryCode torsion_code(const Z4Code& c) {
  std::vector<Word> rows;
  for (const auto& g : c.odd_generators()) rows.push_back(g.lo);
  for (const auto& g : c.even_generators()) rows.push_back(g.hi);
  return BinaryCode(c.length(), rows);
}

bool is_self_orthogonal(const Z4Code& c) {
  const auto& g = c.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i; j < g.size(); ++j) {
      if (inner_product_unchecked(g[i], g[j]) != 0) return false;
    }
  }
  return true;
}

bool is_self_dual(const Z4Code& c) { return c.log2_size() == c.length() && is_self_orthogonal(c); }

int first_non_type_ii_generator(const Z4Code& c) {
  const auto& g = c.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (euclidean_weight(g[i]) % 8 != 0) return static_cast<int>(i);
  }
  return -1;
}

// Self-orthogonality makes wt_E additive mod 8 (wt_E(x+y) = wt_E(x) + wt_E(y)
// + 2<x,y> mod 8), so checking the generators covers every codeword.
bool is_type_ii(const Z4Code& c) { return is_self_dual(c) && first_non_type_ii_generator(c) < 0; }

void for_each_codeword(const Z4Code& c, const std::function<bool(const Z4Vector&)>& visit, int max_log2_size) {
  const int m = c.log2_size();
  if (m > max_log2_size) {
    throw GuardError("code has 2^" + std::to_string(m) + " codewords, above the enumeration guard 2^" +
                     std::to_string(max_log2_size));
  }
  std::vector<Z4Vector> steps;
  for (const auto& g : c.odd_generators()) {
    steps.push_back(g);
    steps.push_back(times_two(g));
  }
  for (const auto& g : c.even_generators()) steps.push_back(g);
  Z4Vector v = Z4Vector::zero(c.length());
  if (!visit(v)) return;
  std::uint64_t state = 0;
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t s = 1; s < count; ++s) {
    const int b = std::countr_zero(s);
    const std::uint64_t flag = std::uint64_t{1} << b;
    v = (state & flag) ? v - steps[b] : v + steps[b];
    state ^= flag;
    if (!visit(v)) return;
  }
}

Z4Code parse_z4code(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1, k1 = -1, k2 = -1;
  std::vector<Z4Vector> rows;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (n < 0) {
      std::istringstream hs(line);
      std::string tag, nf, k1f, k2f;
      if (!(hs >> tag >> nf >> k1f >> k2f) || tag != "z4" || nf.rfind("n=", 0) != 0 || k1f.rfind("k1=", 0) != 0 ||
          k2f.rfind("k2=", 0) != 0) {
        throw ParseError(lineno, "expected header 'z4 n=<n> k1=<k1> k2=<k2>'");
      }
      try {
        n = std::stoi(nf.substr(2));
        k1 = std::stoi(k1f.substr(3));
        k2 = std::stoi(k2f.substr(3));
      } catch (...) {
        throw ParseError(lineno, "malformed header numbers");
      }
      if (n < 1 || n > kMaxLength || k1 < 0 || k2 < 0 || k1 + k2 > n) {
        throw ParseError(lineno, "header values out of range (n must be in 1..64)");
      }
      continue;
    }
    if (static_cast<int>(line.size()) != n) {
      throw ParseError(lineno, "row has " + std::to_string(line.size()) + " entries, expected " + std::to_string(n));
    }
    Z4Vector v = Z4Vector::zero(n);
    for (int i = 0; i < n; ++i) {
      const char ch = line[i];
      if (ch < '0' || ch > '3') throw ParseError(lineno, std::string("invalid Z4 digit '") + ch + "'");
      v.set(i, ch - '0');
    }
    const int index = static_cast<int>(rows.size());
    if (index >= k1 + k2) throw ParseError(lineno, "more than k1+k2=" + std::to_string(k1 + k2) + " rows");
    if (index < k1 && v.lo == 0) throw ParseError(lineno, "row " + std::to_string(index + 1) + " should contain a 1 or 3");
    if (index >= k1 && v.lo != 0) throw ParseError(lineno, "row " + std::to_string(index + 1) + " should be even");
    rows.push_back(v);
  }
  if (n < 0) throw ParseError(lineno, "missing header");
  if (static_cast<int>(rows.size()) != k1 + k2) {
    throw ParseError(lineno, "expected " + std::to_string(k1 + k2) + " rows, found " + std::to_string(rows.size()));
  }
  Z4Code c = Z4Code::from_generators(n, rows);
  if (c.k1() != k1 || c.k2() != k2) {
    throw ParseError(lineno, "rows generate a code of type 4^" + std::to_string(c.k1()) + " 2^" +
                                 std::to_string(c.k2()) + ", header says 4^" + std::to_string(k1) + " 2^" +
                                 std::to_string(k2));
  }
  return c;
}

Z4Code parse_z4code(const std::string& text) {
  std::istringstream in(text);
  return parse_z4code(in);
}

std::string format_z4code(const Z4Code& c, std::string_view comment) {
  std::string out;
  std::size_t start = 0;
  while (start < comment.size()) {
    std::size_t end = comment.find('\n', start);
    if (end == std::string_view::npos) end = comment.size();
    out += "# ";
    out += comment.substr(start, end - start);
    out += "\n";
    start = end + 1;
  }
  out += "z4 n=" + std::to_string(c.length()) + " k1=" + std::to_string(c.k1()) + " k2=" + std::to_string(c.k2()) + "\n";
  for (const auto& g : c.generators()) out += g.digits() + "\n";
  return out;
}

}  // namespace z4kit
