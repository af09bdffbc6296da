#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "foldcx/complex.hpp"

namespace foldcx {

/// Cell bijection between two morphisms: index in the first -> index in the
/// second, for each sort.
struct Isomorphism {
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> edge_map;
  std::vector<std::size_t> face_map;
};

/// Canonical cell order of a morphism together with its encoding.
struct CanonicalLabeling {
  std::string encoding;
  std::vector<std::size_t> vertex_order;  // canonical position -> index
  std::vector<std::size_t> edge_order;
  std::vector<std::size_t> face_order;
};

/// Individualization-refinement over the colored incidence structure
/// (vertices, edges, faces; colors from labels, face types and boundary
/// positions). Returns the lexicographically least leaf encoding.
CanonicalLabeling canonical_labeling(const Morphism& f);

/// Byte string equal for two morphisms iff they are isomorphic.
std::string canonical_form(const Morphism& f);

/// Label-, orientation- and face-type-preserving bijection commuting with
/// boundaries, or nullopt. Throws std::invalid_argument if targets differ.
std::optional<Isomorphism> isomorphic(const Morphism& f, const Morphism& g);

/// True if `iso` really is an isomorphism f -> g.
bool check_isomorphism(const Morphism& f, const Morphism& g, const Isomorphism& iso);

}  // namespace foldcx
