#include <doctest.h>

#include <algorithm>
#include <random>

#include "foldcx/canonical.hpp"
#include "foldcx/families.hpp"

using namespace foldcx;

namespace {

// Same complex with cells stored in a random order and renamed.
Morphism scrambled(const Morphism& f, std::mt19937_64& rng) {
  const TwoComplex& x = f.domain;
  auto perm = [&rng](std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  };
  const auto pv = perm(x.vertex_count()), pe = perm(x.edge_count()), pf = perm(x.face_count());
  Morphism g;
  g.target = f.target;
  g.domain.vertices.resize(x.vertex_count());
  g.domain.edges.resize(x.edge_count());
  g.domain.faces.resize(x.face_count());
  g.edge_label.resize(x.edge_count());
  g.face_type.resize(x.face_count());
  for (std::size_t v = 0; v < pv.size(); ++v) g.domain.vertices[pv[v]] = "w" + std::to_string(pv[v]);
  for (std::size_t e = 0; e < pe.size(); ++e) {
    g.domain.edges[pe[e]] = {"e" + std::to_string(pe[e]), pv[x.edges[e].tail], pv[x.edges[e].head]};
    g.edge_label[pe[e]] = f.edge_label[e];
  }
  for (std::size_t i = 0; i < pf.size(); ++i) {
    Face face{"g" + std::to_string(pf[i]), {}};
    for (const auto& s : x.faces[i].boundary) face.boundary.push_back({pe[s.edge], s.sign});
    g.domain.faces[pf[i]] = std::move(face);
    g.face_type[pf[i]] = f.face_type[i];
  }
  return g;
}

}  // namespace

TEST_CASE("canonical form ignores storage order and names") {
  std::mt19937_64 rng(11);
  for (const char* tag : {"D:0", "D:3", "Dt:4", "C:1", "C:5", "Ct:7", "C:9"}) {
    const Morphism f = build_family(parse_family_tag(tag));
    const std::string form = canonical_form(f);
    for (int k = 0; k < 5; ++k) {
      const Morphism g = scrambled(f, rng);
      CHECK(canonical_form(g) == form);
      const auto iso = isomorphic(f, g);
      REQUIRE(iso.has_value());
      CHECK(check_isomorphism(f, g, *iso));
    }
  }
}

TEST_CASE("documented isomorphism examples") {
  const Morphism kp = presentation_complex(kp_presentation());
  CHECK(isomorphic(build_C(1), kp).has_value());
  CHECK(isomorphic(build_C(4), build_C(1)).has_value());
  CHECK_FALSE(isomorphic(build_C(3), build_C(5)).has_value());
  CHECK_FALSE(isomorphic(build_D(2), build_D(2, Variant::tilde)).has_value());
}

TEST_CASE("isomorphism respects labels") {
  // K_P with the two relator faces swapped in storage order is the same
  // morphism; relabeling which loop is "a" is not.
  const Morphism kp = presentation_complex(kp_presentation());
  Morphism swapped = kp;
  std::swap(swapped.domain.faces[0], swapped.domain.faces[1]);
  std::swap(swapped.face_type[0], swapped.face_type[1]);
  CHECK(canonical_form(swapped) == canonical_form(kp));
  CHECK(canonical_form(build_D(1)) != canonical_form(build_D(1, Variant::tilde)));
}

TEST_CASE("a wrong bijection is rejected") {
  const Morphism c = build_C(3);
  const auto iso = isomorphic(c, c);
  REQUIRE(iso.has_value());
  Isomorphism bad = *iso;
  std::swap(bad.edge_map[0], bad.edge_map[1]);
  CHECK_FALSE(check_isomorphism(c, c, bad));
}

TEST_CASE("different targets cannot be compared") {
  const Morphism torus = presentation_complex(parse_presentation("a,b|abAB"));
  CHECK_THROWS_AS(isomorphic(torus, build_C(1)), std::invalid_argument);
}
