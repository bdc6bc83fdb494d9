#include <doctest.h>

#include <string>
#include <vector>

#include "sympgt/errors.hpp"
#include "sympgt/pattern.hpp"
#include "sympgt/weights.hpp"

using namespace sympgt;

TEST_CASE("highest weight labels must be non-positive and weakly decreasing") {
  CHECK(HighestWeight::validate({0, -1}).rank() == 2);
  CHECK(HighestWeight::validate({0, 0, 0}).entries() ==
        std::vector<Entry>{0, 0, 0});
  CHECK(HighestWeight::validate({-2, -2}).at(1) == -2);

  CHECK_THROWS_WITH_AS(HighestWeight::validate({1, -1}),
                       doctest::Contains("entry 1 positive"), ValidationError);
  CHECK_THROWS_WITH_AS(HighestWeight::validate({-1, 0}),
                       doctest::Contains("entry 2 increases"), ValidationError);
  CHECK_THROWS_AS(HighestWeight::validate({}), ValidationError);
  CHECK_THROWS_AS(HighestWeight::validate({0, -1, -1, 2}), ValidationError);
}

TEST_CASE("positive-label convention reverses and negates") {
  CHECK(HighestWeight::from_nonnegative({1, 0}) ==
        HighestWeight::validate({0, -1}));
  CHECK(HighestWeight::from_nonnegative({2, 2, 1}) ==
        HighestWeight::validate({-1, -2, -2}));
  // Labels that are not weakly increasing flip into an invalid weight.
  CHECK_THROWS_AS(HighestWeight::from_nonnegative({0, 1}), ValidationError);
  CHECK_THROWS_AS(HighestWeight::from_nonnegative({-1, 0}), ValidationError);
}

TEST_CASE("weight rendering") {
  CHECK(HighestWeight::validate({0, -1}).to_string() == "(0,-1)");
  CHECK(HighestWeight::validate({-2}).to_string() == "(-2)");
  CHECK(weight_to_string({1, 0, -1}) == "(1,0,-1)");
}

namespace {

Pattern rank2_pattern(Entry l21, Entry l22, Entry p21, Entry p22, Entry l11,
                      Entry p11) {
  return Pattern({{l11}, {l21, l22}}, {{p11}, {p21, p22}});
}

}  // namespace

TEST_CASE("pattern accessors are one-based and rows level-indexed") {
  const Pattern p = rank2_pattern(0, -1, 0, -1, 0, 0);
  CHECK(p.rank() == 2);
  CHECK(p.unprimed(2, 2) == -1);
  CHECK(p.primed(2, 1) == 0);
  CHECK(p.unprimed(1, 1) == 0);
  CHECK(p.shifted_unprimed(2, 2) == -3);
  CHECK(p.shifted_primed(2, 1) == -1);
  CHECK(p.top_row() == std::vector<Entry>{0, -1});
}

TEST_CASE("pattern constructor rejects bad shapes") {
  CHECK_THROWS_AS(Pattern({{0}}, {}), StructuralError);
  CHECK_THROWS_AS(Pattern({{0, 0}, {0, 0}}, {{0}, {0, 0}}), StructuralError);
  CHECK_THROWS_AS(Pattern({{0}, {0}}, {{0}, {0, 0}}), StructuralError);
}

TEST_CASE("pattern ordering follows the flattened key") {
  const Pattern a = rank2_pattern(0, -1, 0, -1, -1, -1);
  const Pattern b = rank2_pattern(0, -1, 0, -1, -1, 0);
  const Pattern c = rank2_pattern(0, -1, 0, -1, 0, 0);
  const Pattern d = rank2_pattern(0, -1, 0, 0, 0, 0);
  CHECK(a < b);
  CHECK(b < c);
  CHECK(c < d);
  CHECK(a == a);
  // The key lists the top primed row first, then lower levels.
  CHECK(a.flatten_key() == std::vector<Entry>{0, -1, -1, -1});
  CHECK(d.flatten_key() == std::vector<Entry>{0, 0, 0, 0});
}

TEST_CASE("pattern rendering goes top row down") {
  const Pattern p = rank2_pattern(0, -1, 0, -1, -1, 0);
  CHECK(p.to_string() == "0 -1 / 0 -1 / -1 / 0");
}

TEST_CASE("canonical_order sorts and rejects mixed top rows") {
  const Pattern a = rank2_pattern(0, -1, 0, -1, -1, -1);
  const Pattern d = rank2_pattern(0, -1, 0, 0, 0, 0);
  const auto sorted = canonical_order({d, a});
  REQUIRE(sorted.size() == 2);
  CHECK(sorted[0] == a);
  CHECK(sorted[1] == d);

  const Pattern other = rank2_pattern(0, -2, 0, -2, -2, -2);
  CHECK_THROWS_AS(canonical_order({a, other}), StructuralError);
}
