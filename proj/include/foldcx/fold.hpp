#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foldcx/complex.hpp"

namespace foldcx {

enum class MergeKind { vertex, edge, face };

std::string_view to_string(MergeKind k);

struct MergeEvent {
  MergeKind kind = MergeKind::vertex;
  std::string survivor;
  std::string absorbed;

  friend bool operator==(const MergeEvent&, const MergeEvent&) = default;
};

/// Ordered merge events; replaying them on the input reproduces the output.
struct FoldTrace {
  std::vector<MergeEvent> events;
};

struct FoldResult {
  Morphism morphism;
  FoldTrace trace;
};

struct FoldOptions {
  /// When set, conflicts are resolved in a pseudo-random order drawn from
  /// this seed instead of the smallest-pair-first order.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Folds a valid morphism to an immersion. Graph folds (two equally labeled
/// edges leaving or entering one vertex) are resolved before face folds (two
/// faces occupying one SideSlot of an edge). Surviving ids are the minimum
/// id of each merged class.
FoldResult fold(const Morphism& f, const FoldOptions& options = {});

/// Glues a fresh face of relator `face_type` along edge `edge` at relator
/// position `position`, then folds.
Morphism couple(const Morphism& f, int face_type, int position, std::size_t edge);

/// Quotient u = v, then fold.
Morphism identify_vertices(const Morphism& f, std::size_t u, std::size_t v);

/// Quotient e1 = e2 (with their endpoints), then fold.
Morphism identify_edges(const Morphism& f, std::size_t e1, std::size_t e2);

/// Applies the trace's merges (no folding) to `f`.
Morphism replay_trace(const Morphism& f, const FoldTrace& trace);

/// One JSON object per line: {"kind":"edge","survivor":"a1","absorbed":"a3"}.
std::string trace_to_jsonl(const FoldTrace& trace);
FoldTrace trace_from_jsonl(std::string_view text);

}  // namespace foldcx
