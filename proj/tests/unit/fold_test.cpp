#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "foldcx/canonical.hpp"
#include "foldcx/families.hpp"
#include "foldcx/fold.hpp"

using namespace foldcx;

TEST_CASE("folding an immersion changes nothing") {
  for (const char* tag : {"D:3", "Ct:5", "C:1"}) {
    const Morphism f = build_family(parse_family_tag(tag));
    const FoldResult r = fold(f);
    CHECK(r.trace.events.empty());
    CHECK(canonical_form(r.morphism) == canonical_form(f));
  }
}

TEST_CASE("two b-loops at one vertex fold to one") {
  Morphism kp = presentation_complex(kp_presentation());
  kp.domain.edges.push_back({"b9", 0, 0});
  kp.edge_label.push_back(1);
  kp.domain.faces.push_back({"f9", {{2, 1}}});
  kp.face_type.push_back(0);
  const FoldResult r = fold(kp);
  REQUIRE(r.trace.events.size() == 2);
  CHECK(r.trace.events[0] == MergeEvent{MergeKind::edge, "b", "b9"});
  CHECK(r.trace.events[1] == MergeEvent{MergeKind::face, "f0", "f9"});
  CHECK(isomorphic(r.morphism, presentation_complex(kp_presentation())).has_value());
}

TEST_CASE("fold output is an immersion, idempotent and replayable") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const Morphism x = testing::random_prefold(rng);
    REQUIRE(validate(x).empty());
    const FoldResult r = fold(x);
    CHECK(is_immersion(r.morphism).immersion);
    CHECK(fold(r.morphism).trace.events.empty());
    CHECK(canonical_form(replay_trace(x, r.trace)) == canonical_form(r.morphism));
    CHECK(trace_from_jsonl(trace_to_jsonl(r.trace)).events == r.trace.events);
    // survivors are class minima, so output ids are a subset of input ids
    for (const auto& e : r.morphism.domain.edges) CHECK(x.domain.edge_index(e.id).has_value());
  }
}

TEST_CASE("fold is confluent") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 40; ++k) {
    const Morphism x = testing::random_prefold(rng);
    const std::string expected = canonical_form(fold(x).morphism);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      FoldOptions options;
      options.shuffle_seed = seed * 1000 + static_cast<std::uint64_t>(k);
      CHECK(canonical_form(fold(x, options).morphism) == expected);
    }
  }
}

TEST_CASE("coupling onto D_0") {
  const Morphism d0 = build_D(0);
  const auto b0 = *d0.domain.edge_index("b0");
  CHECK(isomorphic(couple(d0, 1, 2, b0), build_D(1)).has_value());
  CHECK(isomorphic(couple(d0, 1, 0, b0), build_D(1, Variant::tilde)).has_value());
  CHECK(isomorphic(couple(d0, 0, 0, b0), d0).has_value());
  CHECK_THROWS_AS(couple(d0, 1, 1, b0), std::invalid_argument);  // position 1 carries a
  CHECK_THROWS_AS(couple(d0, 2, 0, b0), std::invalid_argument);
}

TEST_CASE("closing D_i along b_i = b_0 gives C_i") {
  for (int i = 1; i <= 12; ++i) {
    for (Variant v : {Variant::standard, Variant::tilde}) {
      const Morphism d = build_D(i, v);
      const Morphism c = identify_edges(d, *d.domain.edge_index("b" + std::to_string(i)), *d.domain.edge_index("b0"));
      CHECK(isomorphic(c, build_C(i, v)).has_value());
    }
  }
}

TEST_CASE("identification moves validate their arguments") {
  const Morphism d = build_D(2);
  CHECK_THROWS_AS(identify_edges(d, *d.domain.edge_index("a1"), *d.domain.edge_index("b1")), std::invalid_argument);
  CHECK_THROWS_AS(identify_vertices(d, 0, 99), std::invalid_argument);
  CHECK_THROWS_AS(identify_vertices(d, 1, 1), std::invalid_argument);
}

TEST_CASE("malformed traces are rejected") {
  CHECK_THROWS_AS(trace_from_jsonl("{\"kind\":\"bogus\",\"survivor\":\"a\",\"absorbed\":\"b\"}\n"),
                  std::invalid_argument);
  CHECK_THROWS(trace_from_jsonl("not json\n"));
  FoldTrace t;
  t.events.push_back({MergeKind::edge, "a1", "zz"});
  CHECK_THROWS_AS(replay_trace(build_D(1), t), std::invalid_argument);
}
