#include "z4kit/doubling.hpp"

#include "z4kit/error.hpp"

namespace z4kit {

std::vector<Z4Vector> orthogonal_subcode_generators(const Z4Code& c, const Z4Vector& two_u) {
  if (!two_u.is_even()) throw PreconditionError("2u must be an even word");
  if (two_u.n != c.length()) throw PreconditionError("2u length does not match the code");
  // <2u, g> is 0 or 2; even generators are always orthogonal.
  std::vector<Z4Vector> out;
  const Z4Vector* pivot = nullptr;
  for (const auto& g : c.generators()) {
    if (inner_product_unchecked(two_u, g) == 0) {
      out.push_back(g);
    } else if (pivot == nullptr) {
      pivot = &g;
      out.push_back(times_two(g));
    } else {
      out.push_back(g + *pivot);
    }
  }
  return out;
}

Z4Code orthogonal_subcode(const Z4Code& c, const Z4Vector& two_u) {
  const auto gens = orthogonal_subcode_generators(c, two_u);
  return Z4Code::from_generators(c.length(), gens);
}

bool has_leading_identity(const Z4Code& c) {
  if (c.k2() != 0) return false;
  for (int i = 0; i < c.k1(); ++i) {
    if (c.odd_pivots()[i] != i) return false;
  }
  return true;
}

std::vector<Z4Vector> doubled_generators(const Z4Code& c, Word u_support) {
  const int n = c.length();
  if (u_support & ~low_mask(n)) throw PreconditionError("2u support outside 1.." + std::to_string(n));
  if (weight(u_support) % 2 != 0) throw PreconditionError("2u must have an even number of 2's");
  if (!is_type_ii(c)) throw PreconditionError("base code is not Type II");
  const Z4Vector two_u = Z4Vector::two_times(n, u_support);
  if (c.contains(two_u)) throw PreconditionError("2u is a codeword of the base code");
  if (has_leading_identity(c) && (u_support & low_mask(c.k1()))) {
    throw PreconditionError("for a type 4^" + std::to_string(c.k1()) + " base, 2u must vanish on coordinates 1.." +
                            std::to_string(c.k1()));
  }
  auto gens = orthogonal_subcode_generators(c, two_u);
  gens.push_back(two_u);
  return gens;
}

Z4Code double_code(const Z4Code& c, Word u_support) {
  const auto gens = doubled_generators(c, u_support);
  return Z4Code::from_generators(c.length(), gens);
}

}  // namespace z4kit
