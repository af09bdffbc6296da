#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "foldcx/complex.hpp"

namespace foldcx {

enum class Family { D, C };
enum class Variant { standard, tilde };

struct FamilyTag {
  Family family = Family::D;
  int index = 0;
  Variant variant = Variant::standard;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// "D:3", "C:5", "Dt:3", "Ct:5".
std::string to_string(const FamilyTag& tag);
FamilyTag parse_family_tag(std::string_view text);

/// Largest odd divisor. Throws std::invalid_argument for 0.
int odd_part(int i);

/// The disc D_i over K_P: vertices v0..v{2i}, a_j : v_j -> v_{j-1},
/// b_j : v_{2j} -> v_j, one type-1 face on b0 and i type-2 faces. The tilde
/// variant reverses every a-edge.
Morphism build_D(int i, Variant variant = Variant::standard);

/// C_i over K_P. For odd i: vertices v0..v{i-1}, a_j : v_{j mod i} -> v_{j-1},
/// b_j : v_{2j mod i} -> v_j, one type-1 face on b0 and i type-2 faces. Even
/// i delegates to odd_part(i).
Morphism build_C(int i, Variant variant = Variant::standard);

Morphism build_family(const FamilyTag& tag);

/// Matches f against the members of both families with the same cell
/// counts. Standard variants are preferred when a tilde member is
/// isomorphic to one. nullopt means "Other". Throws if the target is not K_P.
std::optional<FamilyTag> classify(const Morphism& f);

}  // namespace foldcx
