#include <doctest.h>

#include <stdexcept>

#include "foldcx/presentation.hpp"

using namespace foldcx;

TEST_CASE("parse the target presentation") {
  const Presentation p = parse_presentation("a,b|b,baBAA");
  CHECK(p == kp_presentation());
  CHECK(p.generator_count() == 2);
  CHECK(p.relator_count() == 2);
  CHECK(p.relator(1).size() == 5);
  CHECK(p.relator(1)[2] == Letter{1, -1});
  CHECK(p.to_text() == "a,b|b,baBAA");
  CHECK(p.word_text(p.relator(1)) == "baBAA");
  CHECK(p.generator_index("b") == 1);
  CHECK(p.generator_index("c") == -1);
}

TEST_CASE("target presentations reject degenerate relators") {
  CHECK_THROWS_AS(parse_presentation("a|aa"), std::invalid_argument);      // proper power
  CHECK_THROWS_AS(parse_presentation("a,b|abab"), std::invalid_argument);  // proper power
  CHECK_THROWS_AS(parse_presentation("a,b|aAb"), std::invalid_argument);   // not reduced
  CHECK_THROWS_AS(parse_presentation("a|ab"), std::invalid_argument);      // unknown symbol
  CHECK_THROWS_AS(parse_presentation("a,b|b,,a"), std::invalid_argument);  // empty relator
  CHECK(parse_presentation("a|").relator_count() == 0);
  CHECK_THROWS_AS(parse_presentation("ab"), std::invalid_argument);        // no bar
  CHECK_NOTHROW(parse_presentation("a,b|abAB"));
  CHECK_NOTHROW(parse_presentation("a,b|aab"));
}

TEST_CASE("group presentations reduce and drop trivial relators") {
  const Presentation p = parse_group_presentation("a,b|aA,aaa,abBa");
  REQUIRE(p.relator_count() == 2);
  CHECK(p.relator(0).size() == 3);
  CHECK(p.relator(1).size() == 2);
}

TEST_CASE("free reduction and proper powers") {
  const Word w{{0, 1}, {1, 1}, {1, -1}, {0, -1}, {0, 1}};
  CHECK(free_reduce(w) == Word{{0, 1}});
  CHECK(free_reduce(Word{{0, 1}, {0, -1}}).empty());
  CHECK(is_proper_power(Word{{0, 1}, {1, 1}, {0, 1}, {1, 1}}));
  CHECK(is_proper_power(Word{{0, 1}, {0, 1}, {0, 1}}));
  CHECK_FALSE(is_proper_power(Word{{0, 1}, {0, 1}, {1, 1}}));
  CHECK_FALSE(is_proper_power(Word{{0, 1}}));
}
