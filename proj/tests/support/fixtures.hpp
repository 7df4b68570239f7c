#pragma once

#include <cstdint>
#include <vector>

#include "z4kit/z4.hpp"

namespace fixtures {

// Polynomials as coefficient lists, lowest degree first.
using Poly = std::vector<int>;

// Hensel lift to Z4 of a binary factor of x^m - 1 (m odd), by Graeffe's method.
Poly hensel_lift(const Poly& binary);
bool divides_xm_minus_1(const Poly& g, int m);  // over Z4, g monic
Poly reciprocal(const Poly& p);  // binary polynomials with constant term 1

// Cyclic code of length m generated by g, extended by a coordinate making
// every coordinate sum 0 mod 4 (sign = -1) or adding the sum (sign = +1),
// permuted so that coordinates 1..k carry the identity.
z4kit::Z4Code extended_cyclic(const Poly& g, int m, int sign);

// Type II lift [I | A + 2X] of a doubly even self-dual binary code [I | A],
// X drawn uniformly from the solutions of the Type II conditions.
z4kit::Z4Code random_type_ii_lift(int n, const std::vector<std::uint64_t>& a_rows, std::uint64_t seed);

// Length 8, type 4^4.
z4kit::Z4Code octacode();
// Length 16, type 4^8, lift of e8 + e8.
z4kit::Z4Code type_ii_n16(std::uint64_t seed = 16);
// Length 24, type 4^12, lifted extended Golay code with d_E = 16.
z4kit::Z4Code lifted_golay();

// Length 32, type 4^16, lifted extended quadratic-residue code, d_E = 16.
z4kit::Z4Code lifted_qr32();

// Same code with generator rows permuted into leading-identity form.
z4kit::Z4Code leading_identity_form(const z4kit::Z4Code& c);

}  // namespace fixtures
