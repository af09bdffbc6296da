#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "foldcx/complex.hpp"
#include "foldcx/families.hpp"
#include "foldcx/topology.hpp"

namespace foldcx {

/// Thrown when an explicit search budget runs out. A truncated search is
/// never reported as a result.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationFilter {
  int max_vertices = 1;
  bool require_connected = true;
  bool require_no_free_faces = true;
  /// Relator indices that must appear; every other face type must be absent.
  std::vector<int> required_types{0, 1};
};

struct SearchOptions {
  std::size_t budget = 50'000'000;  // candidate complexes / search states
  unsigned jobs = 1;
};

/// Options with FOLDCX_BUDGET applied.
SearchOptions default_search_options();

struct EnumerationResult {
  std::vector<Morphism> classes;    // one representative per class
  std::vector<std::string> forms;   // canonical forms, ascending
  std::size_t skeletons = 0;        // non-isomorphic 1-skeleta visited
  std::size_t candidates = 0;       // face subsets examined
};

/// Every immersion over K_P passing the filter, up to isomorphism. The
/// 1-skeleton of such an immersion is a pair of partial injections (one per
/// generator) on the vertex set; faces are closed relator traces. Skeleta are
/// generated orderly (lexicographically least under vertex permutations) and
/// face sets are deduplicated by canonical form.
EnumerationResult enumerate_immersions(const EnumerationFilter& filter, const SearchOptions& options = {});

struct Move {
  enum class Kind { identify_edges, couple };
  Kind kind = Kind::couple;
  std::string edge;        // free edge acted on
  std::string other_edge;  // identify_edges partner
  int face_type = 0;       // couple
  int position = 0;        // couple

  std::string describe() const;
};

struct ClosureHit {
  Morphism result;
  std::string form;
  std::vector<Move> moves;
};

struct ClosureResult {
  std::vector<ClosureHit> results;  // sorted by canonical form
  std::size_t states = 0;
  std::size_t max_depth = 0;        // longest move sequence among results
};

/// Breadth-first search over identify-edges and couple moves applied at
/// every free face, collecting each reachable immersion without free faces
/// whose face count stays within `max_faces`. Throws std::invalid_argument
/// when f has no free face and BudgetExceeded when the state cap is hit.
ClosureResult closure_search(const Morphism& f, std::size_t max_faces, const SearchOptions& options = {});

/// Label- and type-preserving combinatorial map from a connected `from` into
/// an immersion `to`, as (vertex map, edge map, face map) or nullopt.
struct CellMap {
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> edge_map;
  std::vector<std::size_t> face_map;
};
std::optional<CellMap> find_map_into(const Morphism& from, const Morphism& to);

struct ReportRow {
  std::string input;
  std::string classification;
  long euler = 0;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;
  double wall_clock_ms = 0.0;

  bool pass() const;
};

/// JSON report. Wall-clock time is included only when asked for, so that
/// reports of identical runs are byte-identical by default.
std::string report_to_json(const VerificationReport& report, bool include_timing = false);
std::string report_to_table(const VerificationReport& report);

/// Identify every vertex pair of C_i (odd i <= max_i), fold, classify; each
/// row passes iff the result is C_k with k < i.
VerificationReport check_lemma_vertex_identification(int max_i);

/// identify_edges(D_i, b_i, b_j) for i <= max_i, j < i, both variants; each
/// row passes iff the result is some C_k.
VerificationReport check_lemma_edge_identification(int max_i);

/// Couple every face type at every b-position to b_i in D_i, both variants;
/// each row passes iff the result is D_i, D_{i+1} or C_i of that variant
/// (for i = 0 both one-cell extensions D_1 and Dt_1 are accepted).
VerificationReport check_lemma_coupling(int max_i);

/// Enumeration at the given size: both-types classes must be C_k with
/// chi = 1 and a contractibility certificate; single-type classes must have
/// chi <= 0 or a certificate.
VerificationReport verify_main_theorem(int max_vertices, const SearchOptions& options = {},
                                       const Budgets& budgets = {});

/// Library version embedded in reports.
std::string version();

}  // namespace foldcx
