#include "fixtures.hpp"

#include <bitset>
#include <optional>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "z4kit/doubling.hpp"
#include "z4kit/extremal.hpp"

namespace fixtures {

namespace {

Poly mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Poly mod4(Poly p) {
  for (auto& x : p) x = ((x % 4) + 4) % 4;
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace

Poly hensel_lift(const Poly& g) {
  // g(x) = e(x^2) + x o(x^2); the lift is G(y) = +-(e(y)^2 - y o(y)^2).
  Poly e, o;
  for (std::size_t i = 0; i < g.size(); ++i) (i % 2 == 0 ? e : o).push_back(g[i]);
  if (o.empty()) o.push_back(0);
  Poly e2 = mul(e, e);
  Poly xo2 = mul(mul(o, o), Poly{0, 1});
  Poly h(std::max(e2.size(), xo2.size()), 0);
  for (std::size_t i = 0; i < e2.size(); ++i) h[i] += e2[i];
  for (std::size_t i = 0; i < xo2.size(); ++i) h[i] -= xo2[i];
  Poly out = mod4(h);
  if (out.back() != 1) out = mod4(oracle::scale(out, 3));
  if (out.back() != 1) throw std::logic_error("hensel lift is not monic");
  return out;
}

bool divides_xm_minus_1(const Poly& g, int m) {
  Poly r(m + 1, 0);
  r[0] = 3;  // -1
  r[m] = 1;
  const int d = static_cast<int>(g.size()) - 1;
  for (int i = m; i >= d; --i) {
    const int q = r[i];
    if (q == 0) continue;
    for (int j = 0; j <= d; ++j) r[i - d + j] = ((r[i - d + j] - q * g[j]) % 4 + 4) % 4;
  }
  for (int i = 0; i < d; ++i) {
    if (r[i] != 0) return false;
  }
  return true;
}

Poly reciprocal(const Poly& p) { return Poly(p.rbegin(), p.rend()); }

z4kit::Z4Code leading_identity_form(const z4kit::Z4Code& c) {
  const auto& rows = c.standard_form().rows;
  return z4kit::Z4Code::from_generators(c.length(), rows);
}

z4kit::Z4Code extended_cyclic(const Poly& g, int m, int sign) {
  const int d = static_cast<int>(g.size()) - 1;
  std::vector<z4kit::Z4Vector> rows;
  for (int s = 0; s < m - d; ++s) {
    oracle::Digits row(m + 1, 0);
    int sum = 0;
    for (int j = 0; j <= d; ++j) {
      row[s + j] = g[j];
      sum += g[j];
    }
    row[m] = ((sign * sum) % 4 + 4) % 4;
    rows.push_back(oracle::vector_of(row));
  }
  return leading_identity_form(z4kit::Z4Code::from_generators(m + 1, rows));
}

z4kit::Z4Code random_type_ii_lift(int n, const std::vector<std::uint64_t>& a_rows, std::uint64_t seed) {
  constexpr int kMaxVars = 256;
  using Mask = std::bitset<kMaxVars>;
  const int k = static_cast<int>(a_rows.size());
  const int m = n - k;
  const int vars = k * m;
  if (vars > kMaxVars) throw std::invalid_argument("too many lift variables");
  auto var = [m](int i, int l) { return i * m + l; };
  auto a = [&](int i, int l) { return static_cast<int>((a_rows[i] >> l) & 1); };

  // Equations over GF(2): (coefficient mask, right-hand side).
  std::vector<std::pair<Mask, int>> eqs;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      Mask mask;
      int common = 0;
      for (int l = 0; l < m; ++l) {
        common += a(i, l) * a(j, l);
        if (a(i, l)) mask.flip(var(j, l));
        if (a(j, l)) mask.flip(var(i, l));
      }
      eqs.emplace_back(mask, (common / 2) % 2);
    }
    Mask mask;
    int wt = 0;
    for (int l = 0; l < m; ++l) {
      wt += a(i, l);
      if (!a(i, l)) mask.set(var(i, l));
    }
    eqs.emplace_back(mask, ((1 + wt) / 4) % 2);
  }

  // Reduced echelon form; free variables drawn at random.
  std::vector<int> pivot_of_row;
  std::size_t r = 0;
  for (int c = 0; c < vars && r < eqs.size(); ++c) {
    std::size_t p = r;
    while (p < eqs.size() && !eqs[p].first[c]) ++p;
    if (p == eqs.size()) continue;
    std::swap(eqs[r], eqs[p]);
    for (std::size_t q = 0; q < eqs.size(); ++q) {
      if (q != r && eqs[q].first[c]) {
        eqs[q].first ^= eqs[r].first;
        eqs[q].second ^= eqs[r].second;
      }
    }
    pivot_of_row.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < eqs.size(); ++q) {
    if (eqs[q].second) throw std::logic_error("Type II lift conditions are inconsistent");
  }
  std::mt19937_64 rng(seed);
  Mask x;
  for (int v = 0; v < vars; ++v) x[v] = rng() & 1;
  for (std::size_t q = 0; q < r; ++q) x.reset(pivot_of_row[q]);
  for (std::size_t q = 0; q < r; ++q) {
    const int rest = static_cast<int>((eqs[q].first & x).count() & 1);
    if (rest != eqs[q].second) x.set(pivot_of_row[q]);
  }

  std::vector<z4kit::Z4Vector> rows;
  for (int i = 0; i < k; ++i) {
    oracle::Digits row(n, 0);
    row[i] = 1;
    for (int l = 0; l < m; ++l) row[k + l] = a(i, l) + 2 * static_cast<int>(x[var(i, l)]);
    rows.push_back(oracle::vector_of(row));
  }
  return z4kit::Z4Code::from_generators(n, rows);
}

namespace {

std::optional<int> min_euclidean(const z4kit::Z4Code& c) {
  if (c.log2_size() <= z4kit::kMaxBruteForceLog2Size) return z4kit::min_euclidean_weight_bruteforce(c);
  // Only residue weights up to 8 can produce Euclidean weight below 16.
  auto low = oracle::min_euclidean_low_residue(c, 8);
  return low && *low < 16 ? low : std::optional<int>(16);
}

z4kit::Z4Code first_type_ii(const Poly& binary, int m, int want_min_euclidean) {
  for (const Poly& b : {binary, reciprocal(binary)}) {
    const Poly g = hensel_lift(b);
    if (!divides_xm_minus_1(g, m)) throw std::logic_error("lift does not divide x^m - 1");
    for (int sign : {-1, 1}) {
      auto c = extended_cyclic(g, m, sign);
      if (!z4kit::is_type_ii(c)) continue;
      if (min_euclidean(c) != want_min_euclidean) continue;
      return c;
    }
  }
  throw std::logic_error("no Type II extension found");
}

}  // namespace

z4kit::Z4Code octacode() { return first_type_ii({1, 1, 0, 1}, 7, 8); }

z4kit::Z4Code type_ii_n16(std::uint64_t seed) {
  // [I4 | J - I] twice.
  std::vector<std::uint64_t> a;
  for (int b = 0; b < 2; ++b) {
    for (int i = 0; i < 4; ++i) a.push_back(std::uint64_t{0xF ^ (1u << i)} << (4 * b));
  }
  return random_type_ii_lift(16, a, seed);
}

z4kit::Z4Code lifted_golay() {
  return first_type_ii({1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1}, 23, 16);
}

z4kit::Z4Code lifted_qr32() {
  // Quadratic residues mod 31: x^15 + x^14 + x^13 + x^9 + x^8 + x^3 + 1.
  return first_type_ii({1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1}, 31, 16);
}

}  // namespace fixtures
