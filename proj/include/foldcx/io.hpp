#pragma once

#include <string>
#include <string_view>

#include "foldcx/complex.hpp"
#include "foldcx/topology.hpp"

namespace foldcx {

/// Reads the JSON complex format. Edge labels may be given as an inverse
/// ("A"); such edges are stored reversed and boundary signs flipped.
/// Throws std::invalid_argument on malformed input or invalid morphisms.
Morphism morphism_from_json(std::string_view text);

/// Writes the JSON complex format (two-space indent, trailing newline).
std::string morphism_to_json(const Morphism& f);

/// 1-skeleton as a DOT digraph; edges carry their label and id.
std::string morphism_to_dot(const Morphism& f);

/// Certificate with its replayable collapse sequence and coset statistics.
std::string certificate_to_json(const Certificate& c);

std::string homology_to_json(const HomologyProfile& h);

Morphism read_morphism_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace foldcx
