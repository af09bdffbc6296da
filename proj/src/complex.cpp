#include "foldcx/complex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace foldcx {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

struct SplitId {
  std::string_view prefix;
  std::string_view digits;
};

SplitId split_id(std::string_view id) {
  std::size_t cut = id.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(id[cut - 1]))) --cut;
  return {id.substr(0, cut), id.substr(cut)};
}

// Compares two digit strings as nonnegative integers of arbitrary length.
int compare_digits(std::string_view a, std::string_view b) {
  while (a.size() > 1 && a.front() == '0') a.remove_prefix(1);
  while (b.size() > 1 && b.front() == '0') b.remove_prefix(1);
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
}

template <typename Range, typename Key>
std::optional<std::size_t> find_index(const Range& r, std::string_view id, Key key) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (key(r[i]) == id) return i;
  }
  return std::nullopt;
}

}  // namespace

bool id_less(std::string_view a, std::string_view b) {
  const SplitId sa = split_id(a);
  const SplitId sb = split_id(b);
  if (sa.prefix != sb.prefix) return sa.prefix < sb.prefix;
  if (sa.digits.empty() != sb.digits.empty()) return sa.digits.empty();
  if (!sa.digits.empty()) {
    const int c = compare_digits(sa.digits, sb.digits);
    if (c != 0) return c < 0;
  }
  return a < b;
}

std::optional<std::size_t> TwoComplex::vertex_index(std::string_view id) const {
  return find_index(vertices, id, [](const std::string& v) -> std::string_view { return v; });
}

std::optional<std::size_t> TwoComplex::edge_index(std::string_view id) const {
  return find_index(edges, id, [](const Edge& e) -> std::string_view { return e.id; });
}

std::optional<std::size_t> TwoComplex::face_index(std::string_view id) const {
  return find_index(faces, id, [](const Face& f) -> std::string_view { return f.id; });
}

std::vector<SideSlot> side_slots(const Presentation& p, int g) {
  std::vector<SideSlot> slots;
  for (std::size_t r = 0; r < p.relator_count(); ++r) {
    const Word& w = p.relator(r);
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (w[pos].generator == g) slots.push_back({static_cast<int>(r), static_cast<int>(pos)});
    }
  }
  return slots;
}

Morphism presentation_complex(const Presentation& p) {
  Morphism f;
  f.target = p;
  f.domain.vertices = {"v0"};
  for (std::size_t g = 0; g < p.generator_count(); ++g) {
    f.domain.edges.push_back({p.generators()[g], 0, 0});
    f.edge_label.push_back(static_cast<int>(g));
  }
  for (std::size_t r = 0; r < p.relator_count(); ++r) {
    Face face{"f" + std::to_string(r), {}};
    for (const Letter& l : p.relator(r)) face.boundary.push_back({static_cast<std::size_t>(l.generator), l.sign});
    f.domain.faces.push_back(std::move(face));
    f.face_type.push_back(static_cast<int>(r));
  }
  return f;
}

long euler_characteristic(const TwoComplex& x) {
  return static_cast<long>(x.vertex_count()) - static_cast<long>(x.edge_count()) +
         static_cast<long>(x.face_count());
}

Rational average_curvature(const TwoComplex& x) {
  if (x.faces.empty()) throw std::invalid_argument("average curvature needs at least one face");
  return Rational(euler_characteristic(x), static_cast<std::int64_t>(x.face_count()));
}

std::vector<std::string> validate_complex(const TwoComplex& x) {
  std::vector<std::string> out;
  auto check_unique = [&out](const std::vector<std::string>& ids, const char* sort) {
    std::set<std::string> seen;
    for (const auto& id : ids) {
      if (id.empty()) out.push_back(std::string("empty ") + sort + " id");
      if (!seen.insert(id).second) out.push_back(std::string("duplicate ") + sort + " id '" + id + "'");
    }
  };
  check_unique(x.vertices, "vertex");
  std::vector<std::string> ids;
  for (const auto& e : x.edges) ids.push_back(e.id);
  check_unique(ids, "edge");
  ids.clear();
  for (const auto& f : x.faces) ids.push_back(f.id);
  check_unique(ids, "face");

  bool indices_ok = true;
  for (const auto& e : x.edges) {
    if (e.tail >= x.vertex_count() || e.head >= x.vertex_count()) {
      out.push_back("edge '" + e.id + "' refers to a missing vertex");
      indices_ok = false;
    }
  }
  for (const auto& f : x.faces) {
    if (f.boundary.empty()) out.push_back("face '" + f.id + "' has an empty boundary");
    for (const auto& s : f.boundary) {
      if (s.edge >= x.edge_count()) {
        out.push_back("face '" + f.id + "' refers to a missing edge");
        indices_ok = false;
      }
      if (s.sign != 1 && s.sign != -1) out.push_back("face '" + f.id + "' has a boundary sign other than +-1");
    }
  }
  if (!indices_ok) return out;
  for (const auto& f : x.faces) {
    const std::size_t n = f.boundary.size();
    for (std::size_t p = 0; p < n; ++p) {
      if (x.end_of(f.boundary[p]) != x.start_of(f.boundary[(p + 1) % n])) {
        out.push_back("face '" + f.id + "' boundary is not a closed path at position " + std::to_string(p));
        break;
      }
    }
  }
  return out;
}

std::vector<std::string> validate(const Morphism& f) {
  std::vector<std::string> out = validate_complex(f.domain);
  const TwoComplex& x = f.domain;
  if (f.edge_label.size() != x.edge_count()) out.push_back("edge label count differs from edge count");
  if (f.face_type.size() != x.face_count()) out.push_back("face type count differs from face count");
  if (!out.empty()) return out;

  const int gens = static_cast<int>(f.target.generator_count());
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    if (f.edge_label[e] < 0 || f.edge_label[e] >= gens) {
      out.push_back("edge '" + x.edges[e].id + "' is labeled with an undeclared generator");
    }
  }
  const int rels = static_cast<int>(f.target.relator_count());
  for (std::size_t i = 0; i < x.face_count(); ++i) {
    const Face& face = x.faces[i];
    const int t = f.face_type[i];
    if (t < 0 || t >= rels) {
      out.push_back("face '" + face.id + "' has an undeclared relator type");
      continue;
    }
    const Word& rel = f.target.relator(static_cast<std::size_t>(t));
    if (rel.size() != face.boundary.size()) {
      out.push_back("face '" + face.id + "': boundary/relator length mismatch");
      continue;
    }
    for (std::size_t p = 0; p < rel.size(); ++p) {
      const SignedEdge& s = face.boundary[p];
      if (f.edge_label[s.edge] != rel[p].generator || s.sign != rel[p].sign) {
        out.push_back("face '" + face.id + "' does not spell its relator at position " + std::to_string(p));
        break;
      }
    }
  }
  return out;
}

void require_valid(const Morphism& f) {
  const auto violations = validate(f);
  if (violations.empty()) return;
  std::string msg = "invalid morphism:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw std::invalid_argument(msg);
}

ImmersionCheck is_immersion(const Morphism& f) {
  require_valid(f);
  const TwoComplex& x = f.domain;
  const std::size_t gens = f.target.generator_count();

  // Vertex links: slot (vertex, label, direction) holds at most one edge-end.
  std::vector<std::optional<std::size_t>> out_edge(x.vertex_count() * gens);
  std::vector<std::optional<std::size_t>> in_edge(x.vertex_count() * gens);
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    const auto g = static_cast<std::size_t>(f.edge_label[e]);
    const Edge& edge = x.edges[e];
    auto& o = out_edge[edge.tail * gens + g];
    if (o) {
      return {false, "vertex '" + x.vertices[edge.tail] + "': edges '" + x.edges[*o].id + "' and '" + edge.id +
                         "' both leave with label " + f.target.generators()[g]};
    }
    o = e;
    auto& in = in_edge[edge.head * gens + g];
    if (in) {
      return {false, "vertex '" + x.vertices[edge.head] + "': edges '" + x.edges[*in].id + "' and '" + edge.id +
                         "' both enter with label " + f.target.generators()[g]};
    }
    in = e;
  }

  // Edge links: each (edge, SideSlot) carries at most one face side.
  std::map<std::pair<std::size_t, SideSlot>, std::size_t> taken;
  for (std::size_t i = 0; i < x.face_count(); ++i) {
    const Face& face = x.faces[i];
    for (std::size_t p = 0; p < face.boundary.size(); ++p) {
      const SideSlot slot{f.face_type[i], static_cast<int>(p)};
      auto [it, fresh] = taken.emplace(std::make_pair(face.boundary[p].edge, slot), i);
      if (!fresh) {
        std::ostringstream w;
        w << "edge '" << x.edges[face.boundary[p].edge].id << "': faces '" << x.faces[it->second].id << "' and '"
          << face.id << "' both occupy slot (r" << slot.relator << "," << slot.position << ")";
        return {false, w.str()};
      }
    }
  }
  return {};
}

std::vector<std::size_t> edge_occurrences(const TwoComplex& x) {
  std::vector<std::size_t> count(x.edge_count(), 0);
  for (const auto& face : x.faces) {
    for (const auto& s : face.boundary) ++count[s.edge];
  }
  return count;
}

std::vector<std::size_t> free_faces(const TwoComplex& x) {
  const auto count = edge_occurrences(x);
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < count.size(); ++e) {
    if (count[e] == 1) out.push_back(e);
  }
  return out;
}

std::vector<std::size_t> vertex_degrees(const TwoComplex& x) {
  std::vector<std::size_t> deg(x.vertex_count(), 0);
  for (const auto& e : x.edges) {
    ++deg[e.tail];
    ++deg[e.head];
  }
  return deg;
}

TwoComplex remove_cells(const TwoComplex& x, const std::vector<std::size_t>& vertices_to_drop,
                        const std::vector<std::size_t>& edges_to_drop,
                        const std::vector<std::size_t>& faces_to_drop) {
  auto keep_map = [](std::size_t n, const std::vector<std::size_t>& drop) {
    std::vector<std::optional<std::size_t>> map(n);
    std::vector<bool> dropped(n, false);
    for (auto d : drop) {
      if (d >= n) throw std::out_of_range("cell index out of range");
      dropped[d] = true;
    }
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!dropped[i]) map[i] = next++;
    }
    return map;
  };
  const auto vmap = keep_map(x.vertex_count(), vertices_to_drop);
  const auto emap = keep_map(x.edge_count(), edges_to_drop);
  const auto fmap = keep_map(x.face_count(), faces_to_drop);

  TwoComplex out;
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    if (vmap[v]) out.vertices.push_back(x.vertices[v]);
  }
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    if (!emap[e]) continue;
    const Edge& edge = x.edges[e];
    if (!vmap[edge.tail] || !vmap[edge.head]) {
      throw std::invalid_argument("edge '" + edge.id + "' survives but one of its endpoints is removed");
    }
    out.edges.push_back({edge.id, *vmap[edge.tail], *vmap[edge.head]});
  }
  for (std::size_t i = 0; i < x.face_count(); ++i) {
    if (!fmap[i]) continue;
    Face face{x.faces[i].id, {}};
    for (const auto& s : x.faces[i].boundary) {
      if (!emap[s.edge]) {
        throw std::invalid_argument("face '" + face.id + "' survives but uses a removed edge");
      }
      face.boundary.push_back({*emap[s.edge], s.sign});
    }
    out.faces.push_back(std::move(face));
  }
  return out;
}

namespace {

std::size_t only_face_on(const TwoComplex& x, std::size_t e) {
  if (e >= x.edge_count()) throw std::out_of_range("edge index out of range");
  const auto count = edge_occurrences(x);
  if (count[e] != 1) throw std::invalid_argument("edge '" + x.edges[e].id + "' is not a free face");
  for (std::size_t i = 0; i < x.face_count(); ++i) {
    for (const auto& s : x.faces[i].boundary) {
      if (s.edge == e) return i;
    }
  }
  throw std::logic_error("unreachable: free edge without face");
}

}  // namespace

TwoComplex collapse_free_face(const TwoComplex& x, std::size_t e) {
  const std::size_t face = only_face_on(x, e);
  return remove_cells(x, {}, {e}, {face});
}

Morphism collapse_free_face(const Morphism& f, std::size_t e) {
  const std::size_t face = only_face_on(f.domain, e);
  Morphism out;
  out.target = f.target;
  out.domain = remove_cells(f.domain, {}, {e}, {face});
  for (std::size_t i = 0; i < f.edge_label.size(); ++i) {
    if (i != e) out.edge_label.push_back(f.edge_label[i]);
  }
  for (std::size_t i = 0; i < f.face_type.size(); ++i) {
    if (i != face) out.face_type.push_back(f.face_type[i]);
  }
  return out;
}

bool is_connected(const TwoComplex& x) {
  if (x.vertices.empty()) return true;
  std::vector<std::size_t> parent(x.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = x.vertex_count();
  for (const auto& e : x.edges) {
    const auto a = find(e.tail);
    const auto b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace foldcx
