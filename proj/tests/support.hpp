#pragma once

#include <numeric>
#include <random>

#include "foldcx/complex.hpp"

namespace foldcx::testing {

// Disjoint relator polygons over K_P glued by random same-label edge
// identifications and random vertex identifications. Always a valid
// morphism, almost never an immersion.
inline Morphism random_prefold(std::mt19937_64& rng, int max_faces = 6, int max_glues = 8) {
  const Presentation& kp = kp_presentation();
  Morphism f;
  f.target = kp;
  std::uniform_int_distribution<int> nfaces(1, max_faces), type(0, 1);
  const int faces = nfaces(rng);
  for (int k = 0; k < faces; ++k) {
    const int t = type(rng);
    const Word& rel = kp.relator(static_cast<std::size_t>(t));
    const std::size_t first = f.domain.vertex_count();
    for (std::size_t p = 0; p < rel.size(); ++p) f.domain.vertices.push_back("v" + std::to_string(first + p));
    Face face{"f" + std::to_string(k), {}};
    for (std::size_t p = 0; p < rel.size(); ++p) {
      const std::size_t from = first + p, to = first + (p + 1) % rel.size();
      const std::size_t e = f.domain.edge_count();
      const std::string id = kp.generators()[static_cast<std::size_t>(rel[p].generator)] + std::to_string(e);
      if (rel[p].sign > 0) {
        f.domain.edges.push_back({id, from, to});
      } else {
        f.domain.edges.push_back({id, to, from});
      }
      f.edge_label.push_back(rel[p].generator);
      face.boundary.push_back({e, rel[p].sign});
    }
    f.domain.faces.push_back(std::move(face));
    f.face_type.push_back(t);
  }

  const std::size_t nv = f.domain.vertex_count(), ne = f.domain.edge_count();
  std::vector<std::size_t> vpar(nv), epar(ne);
  std::iota(vpar.begin(), vpar.end(), std::size_t{0});
  std::iota(epar.begin(), epar.end(), std::size_t{0});
  auto find = [](std::vector<std::size_t>& p, std::size_t i) {
    while (p[i] != i) i = p[i] = p[p[i]];
    return i;
  };
  auto join = [&](std::vector<std::size_t>& p, std::size_t a, std::size_t b) {
    a = find(p, a);
    b = find(p, b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  };
  std::uniform_int_distribution<int> nglue(0, max_glues);
  std::uniform_int_distribution<std::size_t> pick_e(0, ne - 1), pick_v(0, nv - 1);
  const int glues = nglue(rng);
  for (int k = 0; k < glues; ++k) {
    if (rng() % 3 == 0) {
      join(vpar, pick_v(rng), pick_v(rng));
      continue;
    }
    const std::size_t a = pick_e(rng), b = pick_e(rng);
    if (f.edge_label[a] != f.edge_label[b]) continue;
    join(epar, a, b);
    join(vpar, f.domain.edges[a].tail, f.domain.edges[b].tail);
    join(vpar, f.domain.edges[a].head, f.domain.edges[b].head);
  }
  // Endpoints of merged edges must agree; propagate until stable.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t e = 0; e < ne; ++e) {
      const std::size_t r = find(epar, e);
      for (auto [x, y] : {std::pair{f.domain.edges[e].tail, f.domain.edges[r].tail},
                          std::pair{f.domain.edges[e].head, f.domain.edges[r].head}}) {
        if (find(vpar, x) != find(vpar, y)) {
          join(vpar, x, y);
          changed = true;
        }
      }
    }
  }

  Morphism out;
  out.target = kp;
  std::vector<std::size_t> vnew(nv), enew(ne);
  for (std::size_t v = 0; v < nv; ++v) {
    if (find(vpar, v) != v) continue;
    vnew[v] = out.domain.vertex_count();
    out.domain.vertices.push_back(f.domain.vertices[v]);
  }
  for (std::size_t e = 0; e < ne; ++e) {
    if (find(epar, e) != e) continue;
    enew[e] = out.domain.edge_count();
    out.domain.edges.push_back(
        {f.domain.edges[e].id, vnew[find(vpar, f.domain.edges[e].tail)], vnew[find(vpar, f.domain.edges[e].head)]});
    out.edge_label.push_back(f.edge_label[e]);
  }
  for (std::size_t i = 0; i < f.domain.face_count(); ++i) {
    Face face{f.domain.faces[i].id, {}};
    for (const auto& s : f.domain.faces[i].boundary) face.boundary.push_back({enew[find(epar, s.edge)], s.sign});
    out.domain.faces.push_back(std::move(face));
    out.face_type.push_back(f.face_type[i]);
  }
  return out;
}

}  // namespace foldcx::testing
