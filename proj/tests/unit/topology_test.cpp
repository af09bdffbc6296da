#include <doctest.h>

#include <cstdlib>
#include <random>

#include "../support.hpp"
#include "foldcx/families.hpp"
#include "foldcx/fold.hpp"
#include "foldcx/topology.hpp"

using namespace foldcx;

namespace {

// One vertex, one loop a, and faces given as powers of a.
TwoComplex loop_with_faces(std::vector<int> exponents) {
  TwoComplex x;
  x.vertices = {"v"};
  x.edges = {{"a", 0, 0}};
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    Face f{"f" + std::to_string(k), {}};
    const int n = exponents[k];
    for (int i = 0; i < std::abs(n); ++i) f.boundary.push_back({0, n > 0 ? 1 : -1});
    x.faces.push_back(std::move(f));
  }
  return x;
}

}  // namespace

TEST_CASE("homology of small complexes") {
  CHECK(homology(presentation_complex(kp_presentation()).domain).is_point());

  const auto torus = homology(presentation_complex(parse_presentation("a,b|abAB")).domain);
  CHECK(torus.betti_0 == 1);
  CHECK(torus.betti_1 == 2);
  CHECK(torus.betti_2 == 1);
  CHECK(torus.torsion_1.empty());

  const auto circle = homology(loop_with_faces({}));
  CHECK(circle.betti_1 == 1);
  CHECK(circle.betti_2 == 0);

  const auto sphere = homology(loop_with_faces({1, 1}));
  CHECK(sphere.betti_1 == 0);
  CHECK(sphere.betti_2 == 1);

  const auto rp2 = homology(loop_with_faces({2}));
  CHECK(rp2.betti_1 == 0);
  CHECK(rp2.betti_2 == 0);
  CHECK(rp2.torsion_1 == std::vector<BigInt>{2});

  // Z/6 from a^6 and a^4 together gives Z/2
  CHECK(homology(loop_with_faces({6, 4})).torsion_1 == std::vector<BigInt>{2});

  TwoComplex two_points;
  two_points.vertices = {"u", "v"};
  CHECK(homology(two_points).betti_0 == 2);
}

TEST_CASE("Smith normal form") {
  CHECK(smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<BigInt>{2, 6, 12});
  CHECK(smith_diagonal({{0, 0}, {0, 0}}).empty());
  CHECK(smith_diagonal({{4}, {6}}) == std::vector<BigInt>{2});
}

TEST_CASE("coset enumeration on known groups") {
  CHECK(coset_enumeration(kp_presentation()).order == 1);
  const auto cyclic = coset_enumeration(parse_group_presentation("a|aaa"));
  CHECK(cyclic.finished);
  CHECK(cyclic.order == 3);
  CHECK(coset_enumeration(parse_group_presentation("a|aaaaaaa")).order == 7);
  CHECK(coset_enumeration(parse_group_presentation("a,b|aa,bbb,abab")).order == 6);
  CHECK(coset_enumeration(parse_group_presentation("a,b|aa,bb,abAB")).order == 4);
  CHECK(coset_enumeration(parse_group_presentation("a,b|aa,bbb,ababab")).order == 12);
  CHECK(coset_enumeration(parse_group_presentation("a,b|aa,bbb,abababab")).order == 24);
  CHECK(coset_enumeration(parse_group_presentation("a,b|aa,bbb,ababababab")).order == 60);
  CHECK(coset_enumeration(parse_group_presentation("a,b|ab,aB")).order == 2);
}

TEST_CASE("coset enumeration reports overflow instead of guessing") {
  const auto z = coset_enumeration(parse_group_presentation("a|"), 500);
  CHECK_FALSE(z.finished);
  CHECK(z.cosets_defined >= 500);
  CHECK_FALSE(coset_enumeration(parse_group_presentation("a,b|abAB"), 1000).finished);
}

TEST_CASE("spanning-tree presentation of pi_1") {
  // one generator per edge off a spanning tree: E - V + 1
  const Presentation p = pi1_presentation(build_D(2).domain);
  CHECK(p.generator_count() == 3);
  CHECK(coset_enumeration(p).order == 1);
  const Presentation kp = pi1_presentation(build_C(1).domain);
  CHECK(kp.generator_count() == 2);
  CHECK(coset_enumeration(kp).order == 1);
  for (int i = 3; i <= 9; i += 2) {
    const Presentation c = pi1_presentation(build_C(i).domain);
    CHECK(c.generator_count() == static_cast<std::size_t>(i + 1));
    CHECK(coset_enumeration(c).order == 1);
  }
  TwoComplex disconnected;
  disconnected.vertices = {"u", "v"};
  CHECK_THROWS_AS(pi1_presentation(disconnected), std::invalid_argument);
}

TEST_CASE("D_i collapses to a point") {
  for (int i = 0; i <= 20; ++i) {
    for (Variant v : {Variant::standard, Variant::tilde}) {
      const TwoComplex d = build_D(i, v).domain;
      const auto r = collapsibility_search(d);
      REQUIRE(r.sequence.has_value());
      const auto end = replay_collapse(d, *r.sequence);
      REQUIRE(end.has_value());
      CHECK(end->vertex_count() == 1);
      CHECK(end->edge_count() == 0);
      CHECK(end->face_count() == 0);
    }
  }
}

TEST_CASE("illegal collapse sequences do not replay") {
  const TwoComplex d = build_D(1).domain;
  CHECK_FALSE(replay_collapse(d, {{CollapseStep::Kind::face, "b0", "f0"}}).has_value());
  CHECK_FALSE(replay_collapse(d, {{CollapseStep::Kind::edge, "a1", "v0"}}).has_value());
}

TEST_CASE("collapse search respects its budget") {
  const auto r = collapsibility_search(build_C(5).domain, 10);
  CHECK_FALSE(r.sequence.has_value());
}

TEST_CASE("certificates") {
  for (int i = 1; i <= 9; i += 2) {
    for (Variant v : {Variant::standard, Variant::tilde}) {
      const Certificate c = certify_contractible(build_C(i, v).domain);
      CHECK(c.contractible());
      CHECK(c.kind == Certificate::Kind::simply_connected_acyclic);
      CHECK(c.group_order == 1);
      CHECK(c.euler == 1);
    }
  }
  CHECK(certify_contractible(build_D(3).domain).kind == Certificate::Kind::collapsible);
  const Certificate torus = certify_contractible(presentation_complex(parse_presentation("a,b|abAB")).domain);
  CHECK(torus.kind == Certificate::Kind::not_contractible);
  CHECK_FALSE(torus.justification.empty());

  // <s,t | (st)^2 = s^3 = t^5> is perfect of order 120: homology cannot
  // tell it from a point, coset enumeration can once it has room.
  const auto poincare = presentation_complex(parse_presentation("a,b|babAA,aaaBBBBB")).domain;
  CHECK(homology(poincare).is_point());
  CHECK(euler_characteristic(poincare) == 1);
  Budgets tight;
  tight.collapse_nodes = 50;
  tight.max_cosets = 10;
  CHECK(certify_contractible(poincare, tight).kind == Certificate::Kind::unknown);
  const Certificate big = certify_contractible(poincare);
  CHECK(big.kind == Certificate::Kind::not_contractible);
  CHECK(big.group_order == 120);
  TwoComplex two;
  two.vertices = {"u", "v"};
  CHECK_THROWS_AS(certify_contractible(two), std::invalid_argument);
}

TEST_CASE("certification is sound on random complexes") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int k = 0; k < 600; ++k) {
    const Morphism x = fold(testing::random_prefold(rng)).morphism;
    if (!is_connected(x.domain)) continue;
    ++checked;
    const auto h = homology(x.domain);
    CHECK(h.betti_0 - h.betti_1 + h.betti_2 == euler_characteristic(x.domain));
    const Certificate c = certify_contractible(x.domain);
    if (c.contractible()) {
      CHECK(h.is_point());
      CHECK(euler_characteristic(x.domain) == 1);
    }
    if (!h.is_point()) CHECK(c.kind == Certificate::Kind::not_contractible);
  }
  CHECK(checked > 100);
}

TEST_CASE("homology is invariant under elementary collapse") {
  for (int i = 1; i <= 6; ++i) {
    const TwoComplex d = build_D(i).domain;
    const auto before = homology(d);
    for (std::size_t e : free_faces(d)) CHECK(homology(collapse_free_face(d, e)) == before);
  }
}

TEST_CASE("FOLDCX_BUDGET overrides every cap") {
  ::setenv("FOLDCX_BUDGET", "77", 1);
  CHECK(default_budgets().collapse_nodes == 77);
  CHECK(default_budgets().max_cosets == 77);
  ::setenv("FOLDCX_BUDGET", "junk", 1);
  CHECK(default_budgets().max_cosets == Budgets{}.max_cosets);
  ::unsetenv("FOLDCX_BUDGET");
  CHECK_FALSE(env_budget_override().has_value());
}
