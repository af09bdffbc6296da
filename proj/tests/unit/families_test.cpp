#include <doctest.h>

#include <algorithm>
#include <set>

#include "foldcx/canonical.hpp"
#include "foldcx/families.hpp"

using namespace foldcx;

namespace {

std::set<std::string> free_ids(const Morphism& f) {
  std::set<std::string> out;
  for (std::size_t e : free_faces(f.domain)) out.insert(f.domain.edges[e].id);
  return out;
}

// Type-2 sides per edge, counted with multiplicity.
std::vector<std::size_t> type2_sides(const Morphism& f) {
  std::vector<std::size_t> n(f.domain.edge_count(), 0);
  for (std::size_t i = 0; i < f.domain.face_count(); ++i) {
    if (f.face_type[i] != 1) continue;
    for (const auto& s : f.domain.faces[i].boundary) ++n[s.edge];
  }
  return n;
}

}  // namespace

TEST_CASE("D_i skeleton") {
  for (int i = 0; i <= 99; ++i) {
    for (Variant v : {Variant::standard, Variant::tilde}) {
      const Morphism d = build_D(i, v);
      CAPTURE(i);
      REQUIRE(validate(d).empty());
      CHECK(d.domain.vertex_count() == static_cast<std::size_t>(2 * i + 1));
      CHECK(d.domain.edge_count() == static_cast<std::size_t>(3 * i + 1));
      CHECK(d.domain.face_count() == static_cast<std::size_t>(i + 1));
      CHECK(euler_characteristic(d.domain) == 1);
      CHECK(is_immersion(d).immersion);
      CHECK(free_ids(d).count("b" + std::to_string(i)) == 1);
    }
  }
}

TEST_CASE("free faces of D_i are b_i and the outer a-edges") {
  CHECK(free_ids(build_D(0)) == std::set<std::string>{"b0"});
  CHECK(free_ids(build_D(1)) == std::set<std::string>{"a2", "b1"});
  CHECK(free_ids(build_D(3)) == std::set<std::string>{"a4", "a5", "a6", "b3"});
}

TEST_CASE("C_i skeleton") {
  for (int i = 1; i <= 99; i += 2) {
    for (Variant v : {Variant::standard, Variant::tilde}) {
      const Morphism c = build_C(i, v);
      CAPTURE(i);
      REQUIRE(validate(c).empty());
      CHECK(c.domain.vertex_count() == static_cast<std::size_t>(i));
      CHECK(c.domain.edge_count() == static_cast<std::size_t>(2 * i));
      CHECK(c.domain.face_count() == static_cast<std::size_t>(i + 1));
      CHECK(euler_characteristic(c.domain) == 1);
      CHECK(is_immersion(c).immersion);
      CHECK(free_faces(c.domain).empty());
      const auto deg = vertex_degrees(c.domain);
      CHECK(std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 4; }));
      const auto sides = type2_sides(c);
      for (std::size_t e = 0; e < c.domain.edge_count(); ++e) CHECK(sides[e] == (c.edge_label[e] == 0 ? 3u : 2u));
    }
  }
}

TEST_CASE("even members reduce to the odd part") {
  CHECK(odd_part(1) == 1);
  CHECK(odd_part(12) == 3);
  CHECK(odd_part(64) == 1);
  CHECK_THROWS_AS(odd_part(0), std::invalid_argument);
  for (int i = 1; i <= 60; ++i) CHECK(isomorphic(build_C(i), build_C(odd_part(i))).has_value());
  CHECK(isomorphic(build_C(1), presentation_complex(kp_presentation())).has_value());
}

TEST_CASE("the tilde C family coincides with C") {
  for (int i = 1; i <= 15; i += 2) CHECK(isomorphic(build_C(i), build_C(i, Variant::tilde)).has_value());
}

TEST_CASE("family tags") {
  CHECK(parse_family_tag("Dt:3") == FamilyTag{Family::D, 3, Variant::tilde});
  CHECK(parse_family_tag("C:5") == FamilyTag{Family::C, 5, Variant::standard});
  CHECK(to_string(FamilyTag{Family::C, 7, Variant::tilde}) == "Ct:7");
  for (const char* bad : {"", "C", "C:", "X:1", "C:-1", "C:0", "D:x", "Dt:1:2", "c:1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_family_tag(bad), std::invalid_argument);
  }
  CHECK_NOTHROW(parse_family_tag("D:0"));
}

TEST_CASE("classify") {
  CHECK(to_string(*classify(build_C(5))) == "C:5");
  CHECK(to_string(*classify(build_C(6))) == "C:3");
  CHECK(to_string(*classify(presentation_complex(kp_presentation()))) == "C:1");
  CHECK(to_string(*classify(build_D(2))) == "D:2");
  CHECK(to_string(*classify(build_D(2, Variant::tilde))) == "Dt:2");
  CHECK(to_string(*classify(build_C(5, Variant::tilde))) == "C:5");
  Morphism other = build_C(3);
  other.domain.faces.pop_back();
  other.face_type.pop_back();
  CHECK_FALSE(classify(other).has_value());
  CHECK_THROWS_AS(classify(presentation_complex(parse_presentation("a,b|abAB"))), std::invalid_argument);
}
