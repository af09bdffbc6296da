#include "foldcx/fold.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace foldcx {

std::string_view to_string(MergeKind k) {
  switch (k) {
    case MergeKind::vertex:
      return "vertex";
    case MergeKind::edge:
      return "edge";
    case MergeKind::face:
      return "face";
  }
  return "?";
}

namespace {

/// Union-find whose root is always the member with the least id.
class MinIdUnion {
 public:
  explicit MinIdUnion(std::vector<std::string> ids) : ids_(std::move(ids)), parent_(ids_.size()) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  /// Returns (survivor, absorbed) roots, or nullopt if already merged.
  std::optional<std::pair<std::size_t, std::size_t>> unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return std::nullopt;
    if (id_less(ids_[b], ids_[a])) std::swap(a, b);
    parent_[b] = a;
    return std::make_pair(a, b);
  }

  const std::string& id(std::size_t i) const { return ids_[i]; }
  std::size_t size() const { return ids_.size(); }

 private:
  std::vector<std::string> ids_;
  std::vector<std::size_t> parent_;
};

std::vector<std::string> edge_ids(const TwoComplex& x) {
  std::vector<std::string> ids;
  for (const auto& e : x.edges) ids.push_back(e.id);
  return ids;
}

std::vector<std::string> face_ids(const TwoComplex& x) {
  std::vector<std::string> ids;
  for (const auto& f : x.faces) ids.push_back(f.id);
  return ids;
}

/// Quotient state over a (possibly not yet closed) morphism.
class Quotient {
 public:
  explicit Quotient(const Morphism& f)
      : f_(f),
        vertices_(f.domain.vertices),
        edges_(edge_ids(f.domain)),
        faces_(face_ids(f.domain)),
        edge_rank_(ranks(edge_ids(f.domain))),
        face_rank_(ranks(face_ids(f.domain))) {
    for (const auto& r : f.target.relators()) {
      type_offset_.push_back(slot_stride_);
      slot_stride_ += r.size();
    }
  }

  void merge_vertices(std::size_t a, std::size_t b) {
    if (auto r = vertices_.unite(a, b)) record(MergeKind::vertex, vertices_, *r);
  }

  void merge_edges(std::size_t a, std::size_t b) {
    const std::size_t ra = edges_.find(a);
    const std::size_t rb = edges_.find(b);
    if (ra == rb) return;
    if (f_.edge_label[ra] != f_.edge_label[rb]) {
      throw std::logic_error("fold tried to merge edges '" + edges_.id(ra) + "' and '" + edges_.id(rb) +
                             "' with different labels");
    }
    const auto r = edges_.unite(ra, rb);
    record(MergeKind::edge, edges_, *r);
    const auto& es = f_.domain.edges;
    merge_vertices(es[ra].tail, es[rb].tail);
    merge_vertices(es[ra].head, es[rb].head);
  }

  void merge_faces(std::size_t a, std::size_t b) {
    const std::size_t ra = faces_.find(a);
    const std::size_t rb = faces_.find(b);
    if (ra == rb) return;
    const auto& ba = f_.domain.faces[ra].boundary;
    const auto& bb = f_.domain.faces[rb].boundary;
    if (f_.face_type[ra] != f_.face_type[rb] || ba.size() != bb.size()) {
      throw std::logic_error("fold tried to merge faces of different types");
    }
    const auto r = faces_.unite(ra, rb);
    record(MergeKind::face, faces_, *r);
    for (std::size_t p = 0; p < ba.size(); ++p) {
      if (ba[p].sign != bb[p].sign) throw std::logic_error("aligned face boundaries disagree in sign");
      merge_edges(ba[p].edge, bb[p].edge);
    }
  }

  void apply(const MergeEvent& ev) {
    const TwoComplex& x = f_.domain;
    auto need = [](std::optional<std::size_t> i, const std::string& id) {
      if (!i) throw std::invalid_argument("trace names unknown cell '" + id + "'");
      return *i;
    };
    switch (ev.kind) {
      case MergeKind::vertex: {
        const auto a = need(x.vertex_index(ev.survivor), ev.survivor);
        const auto b = need(x.vertex_index(ev.absorbed), ev.absorbed);
        if (auto r = vertices_.unite(a, b)) record(MergeKind::vertex, vertices_, *r);
        break;
      }
      case MergeKind::edge: {
        const auto a = need(x.edge_index(ev.survivor), ev.survivor);
        const auto b = need(x.edge_index(ev.absorbed), ev.absorbed);
        if (auto r = edges_.unite(a, b)) record(MergeKind::edge, edges_, *r);
        break;
      }
      case MergeKind::face: {
        const auto a = need(x.face_index(ev.survivor), ev.survivor);
        const auto b = need(x.face_index(ev.absorbed), ev.absorbed);
        if (auto r = faces_.unite(a, b)) record(MergeKind::face, faces_, *r);
        break;
      }
    }
  }

  struct Conflict {
    MergeKind kind;  // edge (graph fold) or face (face fold)
    std::size_t first;
    std::size_t second;
  };

  /// Pending folds, graph folds first, each kind in ascending id order. With
  /// `all_pairs` unset only the smallest conflict is returned.
  std::vector<Conflict> conflicts(bool all_pairs) {
    const TwoComplex& x = f_.domain;
    const std::size_t gens = f_.target.generator_count();
    reset_buckets(x.vertex_count() * gens * 2);
    for (std::size_t e = 0; e < x.edge_count(); ++e) {
      if (edges_.find(e) != e) continue;
      const auto g = static_cast<std::size_t>(f_.edge_label[e]);
      bucket(vertices_.find(x.edges[e].tail) * gens * 2 + g * 2).push_back(e);
      bucket(vertices_.find(x.edges[e].head) * gens * 2 + g * 2 + 1).push_back(e);
    }
    std::vector<Conflict> out;
    collect(MergeKind::edge, edge_rank_, all_pairs, out);
    if (!out.empty() && !all_pairs) return out;

    reset_buckets(x.edge_count() * slot_stride_);
    for (std::size_t i = 0; i < x.face_count(); ++i) {
      if (faces_.find(i) != i) continue;
      const auto& boundary = x.faces[i].boundary;
      const std::size_t offset = type_offset_[static_cast<std::size_t>(f_.face_type[i])];
      for (std::size_t p = 0; p < boundary.size(); ++p) {
        bucket(edges_.find(boundary[p].edge) * slot_stride_ + offset + p).push_back(i);
      }
    }
    collect(MergeKind::face, face_rank_, all_pairs, out);
    return out;
  }

  void resolve(const Conflict& c) {
    if (c.kind == MergeKind::edge) {
      merge_edges(c.first, c.second);
    } else {
      merge_faces(c.first, c.second);
    }
  }

  Morphism result() {
    const TwoComplex& x = f_.domain;
    Morphism out;
    out.target = f_.target;
    std::vector<std::size_t> vmap(x.vertex_count()), emap(x.edge_count());
    for (std::size_t v = 0; v < x.vertex_count(); ++v) {
      if (vertices_.find(v) != v) continue;
      vmap[v] = out.domain.vertices.size();
      out.domain.vertices.push_back(x.vertices[v]);
    }
    for (std::size_t e = 0; e < x.edge_count(); ++e) {
      if (edges_.find(e) != e) continue;
      emap[e] = out.domain.edges.size();
      out.domain.edges.push_back(
          {x.edges[e].id, vmap[vertices_.find(x.edges[e].tail)], vmap[vertices_.find(x.edges[e].head)]});
      out.edge_label.push_back(f_.edge_label[e]);
    }
    for (std::size_t i = 0; i < x.face_count(); ++i) {
      if (faces_.find(i) != i) continue;
      Face face{x.faces[i].id, {}};
      for (const auto& s : x.faces[i].boundary) face.boundary.push_back({emap[edges_.find(s.edge)], s.sign});
      out.domain.faces.push_back(std::move(face));
      out.face_type.push_back(f_.face_type[i]);
    }
    return out;
  }

  FoldTrace take_trace() { return std::move(trace_); }

 private:
  void record(MergeKind kind, const MinIdUnion& u, std::pair<std::size_t, std::size_t> r) {
    trace_.events.push_back({kind, u.id(r.first), u.id(r.second)});
  }

  static std::vector<std::size_t> ranks(const std::vector<std::string>& ids) {
    std::vector<std::size_t> order(ids.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&ids](std::size_t a, std::size_t b) { return id_less(ids[a], ids[b]); });
    std::vector<std::size_t> rank(ids.size());
    for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
    return rank;
  }

  void reset_buckets(std::size_t n) {
    for (std::size_t k : touched_) buckets_[k].clear();
    touched_.clear();
    if (buckets_.size() < n) buckets_.resize(n);
  }

  std::vector<std::size_t>& bucket(std::size_t k) {
    if (buckets_[k].empty()) touched_.push_back(k);
    return buckets_[k];
  }

  void collect(MergeKind kind, const std::vector<std::size_t>& rank, bool all_pairs, std::vector<Conflict>& out) {
    auto less = [&rank](std::size_t a, std::size_t b) { return rank[a] < rank[b]; };
    auto pair_less = [&rank](const Conflict& a, const Conflict& b) {
      return std::pair(rank[a.first], rank[a.second]) < std::pair(rank[b.first], rank[b.second]);
    };
    const std::size_t before = out.size();
    for (std::size_t k : touched_) {
      auto& group = buckets_[k];
      if (group.size() < 2) continue;
      if (!all_pairs) {
        std::partial_sort(group.begin(), group.begin() + 2, group.end(), less);
        const Conflict c{kind, group[0], group[1]};
        if (out.size() == before) {
          out.push_back(c);
        } else if (pair_less(c, out.back())) {
          out.back() = c;
        }
        continue;
      }
      std::sort(group.begin(), group.end(), less);
      for (std::size_t i = 0; i < group.size(); ++i) {
        for (std::size_t j = i + 1; j < group.size(); ++j) out.push_back({kind, group[i], group[j]});
      }
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(before), out.end(), pair_less);
  }

  const Morphism& f_;
  MinIdUnion vertices_;
  MinIdUnion edges_;
  MinIdUnion faces_;
  std::vector<std::size_t> edge_rank_;
  std::vector<std::size_t> face_rank_;
  std::vector<std::size_t> type_offset_;
  std::size_t slot_stride_ = 0;
  std::vector<std::vector<std::size_t>> buckets_;
  std::vector<std::size_t> touched_;
  FoldTrace trace_;
};

void run_to_fixpoint(Quotient& q, const FoldOptions& options) {
  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);
  while (true) {
    auto pending = q.conflicts(rng.has_value());
    if (pending.empty()) return;
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
      q.resolve(pending[pick(*rng)]);
    } else {
      q.resolve(pending.front());
    }
  }
}

std::string fresh_id(const std::string& prefix, const std::vector<std::string>& taken) {
  long next = 0;
  for (const auto& id : taken) {
    std::size_t cut = id.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(id[cut - 1]))) --cut;
    if (cut < id.size() && id.size() - cut < 12) next = std::max(next, std::stol(id.substr(cut)) + 1);
  }
  while (true) {
    std::string candidate = prefix + std::to_string(next++);
    if (std::find(taken.begin(), taken.end(), candidate) == taken.end()) return candidate;
  }
}

void require_immersion(const Morphism& f) {
  const auto check = is_immersion(f);
  if (!check.immersion) throw std::invalid_argument("input is not an immersion: " + check.witness);
}

}  // namespace

FoldResult fold(const Morphism& f, const FoldOptions& options) {
  require_valid(f);
  Quotient q(f);
  run_to_fixpoint(q, options);
  return {q.result(), q.take_trace()};
}

Morphism couple(const Morphism& f, int face_type, int position, std::size_t edge) {
  require_immersion(f);
  if (face_type < 0 || static_cast<std::size_t>(face_type) >= f.target.relator_count()) {
    throw std::invalid_argument("unknown face type " + std::to_string(face_type));
  }
  const Word& rel = f.target.relator(static_cast<std::size_t>(face_type));
  if (position < 0 || static_cast<std::size_t>(position) >= rel.size()) {
    throw std::invalid_argument("position " + std::to_string(position) + " outside the relator");
  }
  if (edge >= f.domain.edge_count()) throw std::invalid_argument("edge index out of range");
  const Letter glued = rel[static_cast<std::size_t>(position)];
  if (f.edge_label[edge] != glued.generator) {
    throw std::invalid_argument("edge '" + f.domain.edges[edge].id + "' label does not match relator position " +
                                std::to_string(position));
  }

  Morphism g = f;
  TwoComplex& x = g.domain;
  const std::size_t n = rel.size();
  const std::size_t base = x.vertex_count();
  for (std::size_t k = 0; k < n; ++k) x.vertices.push_back(fresh_id("v", x.vertices));
  std::vector<std::string> taken = edge_ids(x);
  Face face{fresh_id("f", face_ids(x)), {}};
  for (std::size_t p = 0; p < n; ++p) {
    if (p == static_cast<std::size_t>(position)) {
      face.boundary.push_back({edge, rel[p].sign});
      continue;
    }
    const std::size_t from = base + p;
    const std::size_t to = base + (p + 1) % n;
    const std::string id = fresh_id(f.target.generators()[static_cast<std::size_t>(rel[p].generator)], taken);
    taken.push_back(id);
    if (rel[p].sign > 0) {
      x.edges.push_back({id, from, to});
    } else {
      x.edges.push_back({id, to, from});
    }
    g.edge_label.push_back(rel[p].generator);
    face.boundary.push_back({x.edge_count() - 1, rel[p].sign});
  }
  x.faces.push_back(std::move(face));
  g.face_type.push_back(face_type);

  Quotient q(g);
  const Edge& e = f.domain.edges[edge];
  const std::size_t from = base + static_cast<std::size_t>(position);
  const std::size_t to = base + (static_cast<std::size_t>(position) + 1) % n;
  q.merge_vertices(from, glued.sign > 0 ? e.tail : e.head);
  q.merge_vertices(to, glued.sign > 0 ? e.head : e.tail);
  run_to_fixpoint(q, {});
  return q.result();
}

Morphism identify_vertices(const Morphism& f, std::size_t u, std::size_t v) {
  require_immersion(f);
  if (u >= f.domain.vertex_count() || v >= f.domain.vertex_count()) {
    throw std::invalid_argument("vertex index out of range");
  }
  if (u == v) throw std::invalid_argument("identify_vertices needs two distinct vertices");
  Quotient q(f);
  q.merge_vertices(u, v);
  run_to_fixpoint(q, {});
  return q.result();
}

Morphism identify_edges(const Morphism& f, std::size_t e1, std::size_t e2) {
  require_immersion(f);
  if (e1 >= f.domain.edge_count() || e2 >= f.domain.edge_count()) {
    throw std::invalid_argument("edge index out of range");
  }
  if (f.edge_label[e1] != f.edge_label[e2]) {
    throw std::invalid_argument("edges '" + f.domain.edges[e1].id + "' and '" + f.domain.edges[e2].id +
                                "' carry different labels");
  }
  Quotient q(f);
  q.merge_edges(e1, e2);
  run_to_fixpoint(q, {});
  return q.result();
}

Morphism replay_trace(const Morphism& f, const FoldTrace& trace) {
  Quotient q(f);
  for (const auto& ev : trace.events) q.apply(ev);
  return q.result();
}

std::string trace_to_jsonl(const FoldTrace& trace) {
  std::string out;
  for (const auto& ev : trace.events) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(ev.kind));
    j["survivor"] = ev.survivor;
    j["absorbed"] = ev.absorbed;
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

FoldTrace trace_from_jsonl(std::string_view text) {
  FoldTrace trace;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = text.substr(start, nl - start);
    start = nl + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      const auto kind = j.at("kind").get<std::string>();
      MergeEvent ev;
      if (kind == "vertex") {
        ev.kind = MergeKind::vertex;
      } else if (kind == "edge") {
        ev.kind = MergeKind::edge;
      } else if (kind == "face") {
        ev.kind = MergeKind::face;
      } else {
        throw std::invalid_argument("unknown merge kind '" + kind + "'");
      }
      ev.survivor = j.at("survivor").get<std::string>();
      ev.absorbed = j.at("absorbed").get<std::string>();
      trace.events.push_back(std::move(ev));
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("bad trace line: ") + e.what());
    }
  }
  return trace;
}

}  // namespace foldcx
