#include <doctest.h>

#include "fixtures.hpp"
#include "z4kit/designs.hpp"
#include "z4kit/error.hpp"
#include "z4kit/z4.hpp"

using namespace z4kit;

TEST_CASE("small designs") {
  BinaryCode rep(2, std::vector<Word>{3});
  CHECK(supports_of_weight(rep, 2) == std::vector<Word>{3});
  CHECK(one_design_lambda({3}, 2) == 1);
  CHECK_FALSE(one_design_lambda({3, 1}, 2).has_value());
  CHECK_THROWS_AS(one_design_lambda({}, 2), PreconditionError);

  auto s = self_orthogonality_and_intersections({0b0011, 0b1100});
  CHECK(s.self_orthogonal);
  CHECK(s.intersections == std::set<int>{0});
  auto odd = self_orthogonality_and_intersections({0b0111, 0b1100});
  CHECK_FALSE(odd.self_orthogonal);
}

TEST_CASE("Golay octads") {
  auto residue = residue_code(fixtures::lifted_golay());
  auto d = analyze_design(supports_of_weight(residue, 8), 24);
  CHECK(d.blocks.size() == 759);
  CHECK(d.uniform_k == 8);
  CHECK(d.lambda1 == 253);
  CHECK(d.self_orthogonal);
  CHECK(d.intersection_numbers == std::set<int>{0, 2, 4});
  CHECK_FALSE(d.quasi_symmetric());
  CHECK(d.blocks.size() * 8 == 24u * static_cast<unsigned>(*d.lambda1));
}
