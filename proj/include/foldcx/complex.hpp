#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "foldcx/presentation.hpp"

namespace foldcx {

using Rational = boost::rational<std::int64_t>;

/// "1/2", or "1" when the denominator is one.
std::string to_string(const Rational& q);

/// Natural ordering on cell ids: compares the non-digit prefix, then the
/// trailing number numerically ("a2" < "a10"), then the raw string.
bool id_less(std::string_view a, std::string_view b);

/// One traversal of an edge inside a face boundary.
struct SignedEdge {
  std::size_t edge = 0;
  int sign = 1;  // +1 traverses tail -> head

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

struct Edge {
  std::string id;
  std::size_t tail = 0;
  std::size_t head = 0;
};

struct Face {
  std::string id;
  std::vector<SignedEdge> boundary;  // cyclic
};

/// Combinatorial 2-complex. Cells refer to each other by index into the
/// vectors; ids are the stable external names.
struct TwoComplex {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;

  std::optional<std::size_t> vertex_index(std::string_view id) const;
  std::optional<std::size_t> edge_index(std::string_view id) const;
  std::optional<std::size_t> face_index(std::string_view id) const;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }
  std::size_t face_count() const { return faces.size(); }

  /// Vertex where a signed traversal starts / ends.
  std::size_t start_of(const SignedEdge& s) const { return s.sign > 0 ? edges[s.edge].tail : edges[s.edge].head; }
  std::size_t end_of(const SignedEdge& s) const { return s.sign > 0 ? edges[s.edge].head : edges[s.edge].tail; }
};

/// Combinatorial map from a 2-complex to the presentation complex of
/// `target`. Edge labels are generator indices (orientation normalized so the
/// label sign is +1); each face boundary is aligned so boundary position p
/// carries relator letter p.
struct Morphism {
  TwoComplex domain;
  Presentation target;
  std::vector<int> edge_label;
  std::vector<int> face_type;
};

/// An occurrence position of a target edge inside a relator.
struct SideSlot {
  int relator = 0;
  int position = 0;

  friend bool operator==(const SideSlot&, const SideSlot&) = default;
  friend auto operator<=>(const SideSlot&, const SideSlot&) = default;
};

enum class End { tail, head };

struct EdgeEnd {
  std::size_t edge = 0;
  End end = End::tail;
};

/// Every SideSlot whose relator letter uses generator `g`.
std::vector<SideSlot> side_slots(const Presentation& p, int g);

/// One vertex, one loop per generator, one face per relator.
Morphism presentation_complex(const Presentation& p);

long euler_characteristic(const TwoComplex& x);

/// chi / number of faces. Throws std::invalid_argument on a face-free complex.
Rational average_curvature(const TwoComplex& x);

/// Structural checks on the bare complex: unique ids, indices in range,
/// closed face boundaries.
std::vector<std::string> validate_complex(const TwoComplex& x);

/// All type invariants of a morphism. Never throws; empty means valid.
std::vector<std::string> validate(const Morphism& f);

/// Throws std::invalid_argument listing the violations, if any.
void require_valid(const Morphism& f);

struct ImmersionCheck {
  bool immersion = true;
  std::string witness;  // empty when immersion
};

/// Local injectivity on vertex links (edge-ends by label and direction) and
/// on edge links (face sides by SideSlot).
ImmersionCheck is_immersion(const Morphism& f);

/// Number of face sides on every edge, with multiplicity.
std::vector<std::size_t> edge_occurrences(const TwoComplex& x);

/// Edges occurring exactly once among all face boundaries, by index.
std::vector<std::size_t> free_faces(const TwoComplex& x);

/// Vertex degree counting edge-ends (a loop contributes two).
std::vector<std::size_t> vertex_degrees(const TwoComplex& x);

/// Removes free edge `e` together with its only incident face.
TwoComplex collapse_free_face(const TwoComplex& x, std::size_t e);
Morphism collapse_free_face(const Morphism& f, std::size_t e);

bool is_connected(const TwoComplex& x);

/// Drops the listed cells and reindexes what remains. Throws if a surviving
/// cell still refers to a dropped one.
TwoComplex remove_cells(const TwoComplex& x, const std::vector<std::size_t>& vertices_to_drop,
                        const std::vector<std::size_t>& edges_to_drop,
                        const std::vector<std::size_t>& faces_to_drop);

}  // namespace foldcx
