// Regenerates the derived fixture codes in data/codes. Each code is checked
// by exhaustive enumeration before it is written; past 2^26 codewords only
// residue weights <= 8 are enumerated, which is enough to rule out wt_E 8.
#include <fstream>
#include <iostream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "z4kit/doubling.hpp"
#include "z4kit/extremal.hpp"
#include "z4kit/z4.hpp"

namespace {

bool verify(const z4kit::Z4Code& c, int expected_min) {
  const auto rows = oracle::generator_digits(c);
  for (const auto& a : rows) {
    for (const auto& b : rows) {
      if (oracle::inner(a, b) != 0) return false;
    }
    if (oracle::euclidean(a) % 8 != 0) return false;
  }
  if (2 * c.k1() + c.k2() != c.length()) return false;
  if (!z4kit::has_leading_identity(c)) return false;
  if (c.log2_size() > 26) {
    const auto low = oracle::min_euclidean_low_residue(c, 8);
    return expected_min == 16 && (!low || *low >= 16);
  }
  return oracle::min_euclidean(rows, oracle::generator_orders(c)) == expected_min;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data/codes";
  struct Item {
    const char* name;
    const char* description;
    z4kit::Z4Code code;
    int min_euclidean;
  };
  const Item items[] = {
      {"fixture_typeII_n8", "Octacode: Hensel lift of the extended Hamming code, type 4^4", fixtures::octacode(), 8},
      {"fixture_typeII_n16", "Type II lift of e8 + e8, type 4^8", fixtures::type_ii_n16(), 8},
      {"fixture_typeII_n24", "Lifted extended Golay code, type 4^12, d_E = 16", fixtures::lifted_golay(), 16},
      {"fixture_typeII_n32", "Lifted extended quadratic-residue code of length 32, type 4^16, d_E = 16",
       fixtures::lifted_qr32(), 16},
  };
  for (const auto& item : items) {
    if (!verify(item.code, item.min_euclidean)) {
      std::cerr << item.name << ": verification failed\n";
      return 1;
    }
    const std::string comment = std::string(item.description) + "\nsource: derived";
    std::ofstream out(dir + "/" + item.name + ".z4");
    out << z4kit::format_z4code(item.code, comment);
    std::cout << "wrote " << item.name << "\n";
  }
  return 0;
}
