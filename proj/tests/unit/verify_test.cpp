#include <doctest.h>

#include <set>

#include "foldcx/canonical.hpp"
#include "foldcx/verify.hpp"

using namespace foldcx;

namespace {

std::vector<std::string> tags(const EnumerationResult& r) {
  std::vector<std::string> out;
  for (const auto& m : r.classes) {
    const auto t = classify(m);
    out.push_back(t ? to_string(*t) : "Other");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("enumeration at small sizes") {
  EnumerationFilter filter;
  filter.max_vertices = 1;
  const auto one = enumerate_immersions(filter);
  REQUIRE(one.classes.size() == 1);
  CHECK(isomorphic(one.classes[0], build_C(1)).has_value());

  filter.max_vertices = 3;
  CHECK(tags(enumerate_immersions(filter)) == std::vector<std::string>{"C:1", "C:3"});

  filter.max_vertices = 5;
  CHECK(tags(enumerate_immersions(filter)) == std::vector<std::string>{"C:1", "C:3", "C:5"});
}

TEST_CASE("type-2-only immersions have chi <= 0 at small sizes") {
  EnumerationFilter filter;
  filter.max_vertices = 4;
  filter.required_types = {1};
  const auto r = enumerate_immersions(filter);
  CHECK_FALSE(r.classes.empty());
  for (const auto& m : r.classes) CHECK(euler_characteristic(m.domain) <= 0);
  filter.required_types = {0};
  CHECK(enumerate_immersions(filter).classes.empty());
}

TEST_CASE("every enumerated class is a distinct immersion") {
  EnumerationFilter filter;
  filter.max_vertices = 3;
  filter.require_no_free_faces = false;
  const auto r = enumerate_immersions(filter);
  std::set<std::string> forms;
  for (const auto& m : r.classes) {
    CHECK(is_immersion(m).immersion);
    CHECK(is_connected(m.domain));
    forms.insert(canonical_form(m));
  }
  CHECK(forms.size() == r.classes.size());
  CHECK(std::is_sorted(r.forms.begin(), r.forms.end()));
}

TEST_CASE("enumeration does not depend on the number of workers") {
  EnumerationFilter filter;
  filter.max_vertices = 4;
  filter.require_no_free_faces = false;
  SearchOptions one, three;
  three.jobs = 3;
  CHECK(enumerate_immersions(filter, one).forms == enumerate_immersions(filter, three).forms);
}

TEST_CASE("enumeration budget is a hard failure") {
  EnumerationFilter filter;
  filter.max_vertices = 4;
  SearchOptions tiny;
  tiny.budget = 20;
  CHECK_THROWS_AS(enumerate_immersions(filter, tiny), BudgetExceeded);
  filter.required_types = {2};
  CHECK_THROWS_AS(enumerate_immersions(filter), std::invalid_argument);
}

TEST_CASE("closure search from small discs") {
  const auto from_d0 = closure_search(build_D(0), 3);
  std::set<std::string> found;
  for (const auto& hit : from_d0.results) found.insert(to_string(*classify(hit.result)));
  CHECK(found == std::set<std::string>{"C:1"});

  const auto from_d1 = closure_search(build_D(1), 4);
  REQUIRE_FALSE(from_d1.results.empty());
  for (const auto& hit : from_d1.results) {
    CHECK(free_faces(hit.result.domain).empty());
    CHECK_FALSE(hit.moves.empty());
  }
  CHECK_THROWS_AS(closure_search(build_C(3), 6), std::invalid_argument);
  SearchOptions tiny;
  tiny.budget = 3;
  CHECK_THROWS_AS(closure_search(build_D(1), 6, tiny), BudgetExceeded);
}

TEST_CASE("maps between immersions") {
  const Morphism kp = presentation_complex(kp_presentation());
  for (int i = 1; i <= 9; i += 2) CHECK(find_map_into(build_C(i), kp).has_value());
  CHECK_FALSE(find_map_into(kp, build_C(3)).has_value());
  CHECK(find_map_into(build_C(9), build_C(3)).has_value());
  CHECK_FALSE(find_map_into(build_C(3), build_C(5)).has_value());
  CHECK(find_map_into(build_D(3), build_C(3)).has_value());
}

TEST_CASE("an immersion receiving some C_i is itself a C_k") {
  EnumerationFilter filter;
  filter.max_vertices = 4;
  filter.require_no_free_faces = false;
  for (const auto& types : std::vector<std::vector<int>>{{0, 1}, {1}}) {
    filter.required_types = types;
    for (const auto& x : enumerate_immersions(filter).classes) {
      for (int i = 1; i <= 9; i += 2) {
        if (!find_map_into(build_C(i), x)) continue;
        const auto tag = classify(x);
        REQUIRE(tag.has_value());
        CHECK(tag->family == Family::C);
      }
    }
  }
}

TEST_CASE("lemma checkers") {
  CHECK(check_lemma_vertex_identification(1).rows.empty());
  CHECK(check_lemma_vertex_identification(1).pass());
  const auto v = check_lemma_vertex_identification(7);
  CHECK(v.rows.size() == 3 + 10 + 21);
  CHECK(v.pass());
  const auto e = check_lemma_edge_identification(6);
  CHECK(e.rows.size() == 2 * (6 * 7 / 2));
  CHECK(e.pass());
  const auto c = check_lemma_coupling(6);
  CHECK(c.rows.size() == 2 * 7 * 3);
  CHECK(c.pass());
}

TEST_CASE("reports are deterministic") {
  CHECK(report_to_json(check_lemma_coupling(4)) == report_to_json(check_lemma_coupling(4)));
  const auto a = verify_main_theorem(3);
  const auto b = verify_main_theorem(3);
  CHECK(report_to_json(a) == report_to_json(b));
  CHECK(report_to_json(a).find("wall_clock_ms") == std::string::npos);
  CHECK(report_to_json(a, true).find("wall_clock_ms") != std::string::npos);
  CHECK(report_to_table(a).find("verdict: pass") != std::string::npos);
}

TEST_CASE("main theorem at one vertex") {
  const auto r = verify_main_theorem(1);
  CHECK(r.pass());
  std::size_t both = 0;
  for (const auto& row : r.rows) both += row.input.rfind("both", 0) == 0;
  CHECK(both == 1);
}
