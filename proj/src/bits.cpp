#include <charconv>

#include "z4kit/bits.hpp"
#include "z4kit/error.hpp"

namespace z4kit {

namespace {

int parse_index(std::string_view s, std::string_view whole) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw PreconditionError("malformed position list '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Word parse_positions(std::string_view text, int n) {
  Word set = 0;
  std::size_t start = 0;
  if (text.empty()) return 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw PreconditionError("empty item in position list '" + std::string(text) + "'");
    const std::size_t dash = item.find('-');
    int lo = 0, hi = 0;
    if (dash == std::string_view::npos) {
      lo = hi = parse_index(item, text);
    } else {
      lo = parse_index(item.substr(0, dash), text);
      hi = parse_index(item.substr(dash + 1), text);
    }
    if (lo < 1 || hi > n || lo > hi) {
      throw PreconditionError("positions " + std::string(item) + " outside 1.." + std::to_string(n));
    }
    for (int p = lo; p <= hi; ++p) set |= bit(p - 1);
    start = end + 1;
  }
  return set;
}

std::string format_positions(Word set) {
  std::string out;
  int p = 0;
  while (set >> p) {
    if (!((set >> p) & 1)) {
      ++p;
      continue;
    }
    int q = p;
    while (q + 1 < 64 && ((set >> (q + 1)) & 1)) ++q;
    if (!out.empty()) out += ',';
    out += std::to_string(p + 1);
    if (q > p) out += "-" + std::to_string(q + 1);
    if (q == 63) break;
    p = q + 1;
  }
  return out;
}

std::vector<int> positions_of(Word set) {
  std::vector<int> out;
  for (Word s = set; s; s &= s - 1) out.push_back(std::countr_zero(s) + 1);
  return out;
}

}  // namespace z4kit
