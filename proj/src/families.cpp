#include "foldcx/families.hpp"

#include <charconv>
#include <stdexcept>

#include "foldcx/canonical.hpp"

namespace foldcx {

namespace {

constexpr int kA = 0;
constexpr int kB = 1;
constexpr int kTypeOne = 0;
constexpr int kTypeTwo = 1;

struct Skeleton {
  Morphism m;

  void vertex(int k) { m.domain.vertices.push_back("v" + std::to_string(k)); }
  void edge(const std::string& id, int tail, int head, int label) {
    m.domain.edges.push_back({id, static_cast<std::size_t>(tail), static_cast<std::size_t>(head)});
    m.edge_label.push_back(label);
  }
};

// Follows `rel` through the skeleton starting with edge `start` at position
// 0. Returns the boundary if every letter is available and the path closes.
std::optional<std::vector<SignedEdge>> trace_relator(const Morphism& m, const Word& rel, std::size_t start) {
  const TwoComplex& x = m.domain;
  if (m.edge_label[start] != rel[0].generator) return std::nullopt;
  std::vector<SignedEdge> boundary{{start, rel[0].sign}};
  std::size_t at = x.end_of(boundary.back());
  for (std::size_t p = 1; p < rel.size(); ++p) {
    std::optional<std::size_t> next;
    for (std::size_t e = 0; e < x.edge_count(); ++e) {
      if (m.edge_label[e] != rel[p].generator) continue;
      if ((rel[p].sign > 0 ? x.edges[e].tail : x.edges[e].head) == at) {
        next = e;
        break;
      }
    }
    if (!next) return std::nullopt;
    boundary.push_back({*next, rel[p].sign});
    at = x.end_of(boundary.back());
  }
  if (at != x.start_of(boundary.front())) return std::nullopt;
  return boundary;
}

// One type-1 face on b0, then every closed type-2 trace starting at a b-edge.
void attach_faces(Skeleton& s, const std::vector<std::size_t>& b_edges) {
  const Presentation& kp = kp_presentation();
  s.m.target = kp;
  s.m.domain.faces.push_back({"f0", {{b_edges.front(), 1}}});
  s.m.face_type.push_back(kTypeOne);
  int next = 1;
  for (std::size_t b : b_edges) {
    if (auto boundary = trace_relator(s.m, kp.relator(kTypeTwo), b)) {
      s.m.domain.faces.push_back({"f" + std::to_string(next++), std::move(*boundary)});
      s.m.face_type.push_back(kTypeTwo);
    }
  }
}

}  // namespace

std::string to_string(const FamilyTag& tag) {
  std::string s = tag.family == Family::D ? "D" : "C";
  if (tag.variant == Variant::tilde) s += "t";
  return s + ":" + std::to_string(tag.index);
}

FamilyTag parse_family_tag(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("family spec needs the form C:5 or Dt:3");
  const auto head = text.substr(0, colon);
  const auto num = text.substr(colon + 1);
  FamilyTag tag;
  if (head == "D" || head == "Dt") {
    tag.family = Family::D;
  } else if (head == "C" || head == "Ct") {
    tag.family = Family::C;
  } else {
    throw std::invalid_argument("unknown family '" + std::string(head) + "'");
  }
  tag.variant = head.size() == 2 ? Variant::tilde : Variant::standard;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty()) {
    throw std::invalid_argument("bad family index '" + std::string(num) + "'");
  }
  tag.index = value;
  if (tag.index < 0 || (tag.family == Family::C && tag.index < 1)) {
    throw std::invalid_argument("family index out of range in '" + std::string(text) + "'");
  }
  return tag;
}

int odd_part(int i) {
  if (i <= 0) throw std::invalid_argument("odd_part needs a positive integer");
  while (i % 2 == 0) i /= 2;
  return i;
}

Morphism build_D(int i, Variant variant) {
  if (i < 0) throw std::invalid_argument("D_i needs i >= 0");
  Skeleton s;
  for (int k = 0; k <= 2 * i; ++k) s.vertex(k);
  for (int j = 1; j <= 2 * i; ++j) {
    if (variant == Variant::standard) {
      s.edge("a" + std::to_string(j), j, j - 1, kA);
    } else {
      s.edge("a" + std::to_string(j), j - 1, j, kA);
    }
  }
  std::vector<std::size_t> b_edges;
  for (int j = 0; j <= i; ++j) {
    b_edges.push_back(s.m.domain.edge_count());
    s.edge("b" + std::to_string(j), 2 * j, j, kB);
  }
  attach_faces(s, b_edges);
  return std::move(s.m);
}

Morphism build_C(int i, Variant variant) {
  if (i < 1) throw std::invalid_argument("C_i needs i >= 1");
  if (i % 2 == 0) return build_C(odd_part(i), variant);
  Skeleton s;
  for (int k = 0; k < i; ++k) s.vertex(k);
  for (int j = 1; j <= i; ++j) {
    const int from = j % i;
    if (variant == Variant::standard) {
      s.edge("a" + std::to_string(j), from, j - 1, kA);
    } else {
      s.edge("a" + std::to_string(j), j - 1, from, kA);
    }
  }
  std::vector<std::size_t> b_edges;
  for (int j = 0; j < i; ++j) {
    b_edges.push_back(s.m.domain.edge_count());
    s.edge("b" + std::to_string(j), (2 * j) % i, j, kB);
  }
  attach_faces(s, b_edges);
  return std::move(s.m);
}

Morphism build_family(const FamilyTag& tag) {
  return tag.family == Family::D ? build_D(tag.index, tag.variant) : build_C(tag.index, tag.variant);
}

std::optional<FamilyTag> classify(const Morphism& f) {
  if (!(f.target == kp_presentation())) throw std::invalid_argument("classify needs a morphism to K_P");
  const auto v = static_cast<long>(f.domain.vertex_count());
  const auto e = static_cast<long>(f.domain.edge_count());
  const auto n = static_cast<long>(f.domain.face_count());

  std::vector<FamilyTag> candidates;
  if (v % 2 == 1 && e == 3 * ((v - 1) / 2) + 1 && n == (v - 1) / 2 + 1) {
    const int i = static_cast<int>((v - 1) / 2);
    candidates.push_back({Family::D, i, Variant::standard});
    candidates.push_back({Family::D, i, Variant::tilde});
  }
  if (v % 2 == 1 && e == 2 * v && n == v + 1) {
    const int i = static_cast<int>(v);
    candidates.push_back({Family::C, i, Variant::standard});
    candidates.push_back({Family::C, i, Variant::tilde});
  }
  if (candidates.empty()) return std::nullopt;
  const std::string form = canonical_form(f);
  for (const auto& tag : candidates) {
    if (canonical_form(build_family(tag)) == form) return tag;
  }
  return std::nullopt;
}

}  // namespace foldcx
