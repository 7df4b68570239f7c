#pragma once

#include <vector>

#include "z4kit/z4.hpp"

namespace z4kit {

// C_0 = {v in C : <2u, v> = 0}. Generators of the index-1 or index-2 subcode.
std::vector<Z4Vector> orthogonal_subcode_generators(const Z4Code& c, const Z4Vector& two_u);
Z4Code orthogonal_subcode(const Z4Code& c, const Z4Vector& two_u);

// True when the first k1 coordinates carry the identity of a type 4^k1 code,
// the situation in which 2u is confined to coordinates k1+1..n.
bool has_leading_identity(const Z4Code& c);

// Generators of C_0 followed by 2u, not normalised. Validates the doubling
// preconditions: Type II base, |support| even, 2u not in C, and for a type 4^k
// base with leading identity, support inside {k+1..n}.
std::vector<Z4Vector> doubled_generators(const Z4Code& c, Word u_support);

// C~ = C_0 + <2u>, reduced.
Z4Code double_code(const Z4Code& c, Word u_support);

}  // namespace z4kit
