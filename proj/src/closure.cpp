#include <deque>
#include <map>
#include <set>

#include "foldcx/canonical.hpp"
#include "foldcx/fold.hpp"
#include "foldcx/verify.hpp"

namespace foldcx {

std::string Move::describe() const {
  if (kind == Kind::identify_edges) return "identify " + edge + " ~ " + other_edge;
  return "couple type " + std::to_string(face_type) + " pos " + std::to_string(position) + " at " + edge;
}

ClosureResult closure_search(const Morphism& f, std::size_t max_faces, const SearchOptions& options) {
  if (free_faces(f.domain).empty()) throw std::invalid_argument("closure search needs a free face to start from");
  if (!is_immersion(f).immersion) throw std::invalid_argument("closure search needs an immersion");

  struct State {
    Morphism m;
    std::vector<Move> moves;
  };
  std::deque<State> queue;
  std::set<std::string> seen{canonical_form(f)};
  queue.push_back({f, {}});
  std::map<std::string, ClosureHit> hits;
  ClosureResult out;

  auto offer = [&](Morphism next, std::vector<Move> moves) {
    if (next.domain.face_count() > max_faces) return;
    auto form = canonical_form(next);
    if (!seen.insert(form).second) return;
    if (free_faces(next.domain).empty()) {
      out.max_depth = std::max(out.max_depth, moves.size());
      hits.try_emplace(form, ClosureHit{std::move(next), form, std::move(moves)});
      return;
    }
    queue.push_back({std::move(next), std::move(moves)});
  };

  while (!queue.empty()) {
    if (++out.states > options.budget) {
      throw BudgetExceeded("closure search budget of " + std::to_string(options.budget) +
                           " states exhausted with frontier " + std::to_string(queue.size()));
    }
    State s = std::move(queue.front());
    queue.pop_front();
    const TwoComplex& x = s.m.domain;
    for (std::size_t e : free_faces(x)) {
      const int label = s.m.edge_label[e];
      for (std::size_t other = 0; other < x.edge_count(); ++other) {
        if (other == e || s.m.edge_label[other] != label) continue;
        auto moves = s.moves;
        moves.push_back({Move::Kind::identify_edges, x.edges[e].id, x.edges[other].id, 0, 0});
        offer(identify_edges(s.m, e, other), std::move(moves));
      }
      for (const SideSlot& slot : side_slots(s.m.target, label)) {
        auto moves = s.moves;
        moves.push_back({Move::Kind::couple, x.edges[e].id, "", slot.relator, slot.position});
        offer(couple(s.m, slot.relator, slot.position, e), std::move(moves));
      }
    }
  }
  for (auto& [form, hit] : hits) out.results.push_back(std::move(hit));
  return out;
}

std::optional<CellMap> find_map_into(const Morphism& from, const Morphism& to) {
  if (!(from.target == to.target)) throw std::invalid_argument("maps need a common target");
  const TwoComplex& x = from.domain;
  const TwoComplex& y = to.domain;
  if (x.vertices.empty()) return CellMap{};
  if (!is_connected(x)) throw std::invalid_argument("find_map_into needs a connected source");
  const std::size_t gens = from.target.generator_count();

  // In an immersion every (vertex, label, direction) has at most one edge.
  std::vector<std::optional<std::size_t>> out_of(y.vertex_count() * gens), into(y.vertex_count() * gens);
  for (std::size_t e = 0; e < y.edge_count(); ++e) {
    const auto g = static_cast<std::size_t>(to.edge_label[e]);
    out_of[y.edges[e].tail * gens + g] = e;
    into[y.edges[e].head * gens + g] = e;
  }
  std::map<std::pair<int, std::size_t>, std::size_t> face_by_first_edge;
  for (std::size_t i = 0; i < y.face_count(); ++i) {
    face_by_first_edge[{to.face_type[i], y.faces[i].boundary[0].edge}] = i;
  }

  for (std::size_t root = 0; root < y.vertex_count(); ++root) {
    std::vector<std::optional<std::size_t>> vmap(x.vertex_count()), emap(x.edge_count());
    vmap[0] = root;
    bool ok = true;
    bool grew = true;
    while (ok && grew) {
      grew = false;
      for (std::size_t e = 0; e < x.edge_count() && ok; ++e) {
        if (emap[e]) continue;
        const auto g = static_cast<std::size_t>(from.edge_label[e]);
        const Edge& edge = x.edges[e];
        std::optional<std::size_t> image;
        if (vmap[edge.tail]) {
          image = out_of[*vmap[edge.tail] * gens + g];
        } else if (vmap[edge.head]) {
          image = into[*vmap[edge.head] * gens + g];
        } else {
          continue;
        }
        if (!image) {
          ok = false;
          break;
        }
        emap[e] = image;
        grew = true;
        for (auto [v, w] : {std::pair{edge.tail, y.edges[*image].tail}, std::pair{edge.head, y.edges[*image].head}}) {
          if (vmap[v] && *vmap[v] != w) ok = false;
          vmap[v] = w;
        }
      }
    }
    if (!ok) continue;
    CellMap map;
    for (const auto& v : vmap) map.vertex_map.push_back(*v);
    for (const auto& e : emap) map.edge_map.push_back(*e);
    for (std::size_t i = 0; i < x.face_count() && ok; ++i) {
      const auto& b = x.faces[i].boundary;
      auto it = face_by_first_edge.find({from.face_type[i], map.edge_map[b[0].edge]});
      if (it == face_by_first_edge.end()) {
        ok = false;
        break;
      }
      const auto& target_boundary = y.faces[it->second].boundary;
      for (std::size_t p = 0; p < b.size() && ok; ++p) {
        ok = target_boundary[p].edge == map.edge_map[b[p].edge];
      }
      map.face_map.push_back(it->second);
    }
    if (ok) return map;
  }
  return std::nullopt;
}

}  // namespace foldcx
