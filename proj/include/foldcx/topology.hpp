#pragma once

#include <cstddef>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "foldcx/complex.hpp"

namespace foldcx {

using BigInt = boost::multiprecision::cpp_int;

struct HomologyProfile {
  long betti_0 = 0;
  long betti_1 = 0;
  long betti_2 = 0;
  std::vector<BigInt> torsion_1;  // invariant factors > 1 of H_1, ascending

  bool is_point() const { return betti_0 == 1 && betti_1 == 0 && betti_2 == 0 && torsion_1.empty(); }
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Diagonal of the Smith normal form (nonzero entries only, each dividing
/// the next). Pivots on the entry of least absolute value.
std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> matrix);

/// Integer homology from the cellular boundary maps.
HomologyProfile homology(const TwoComplex& x);

/// Spanning-tree presentation of pi_1(x, basepoint): one generator per
/// non-tree edge (named by the edge id), one relator per face with empty
/// relators dropped. Throws std::invalid_argument if x is disconnected.
Presentation pi1_presentation(const TwoComplex& x, std::size_t basepoint = 0);

struct CosetResult {
  bool finished = false;
  std::size_t order = 0;        // index of the trivial subgroup when finished
  std::size_t cosets_defined = 0;
  bool cancelled = false;
};

/// HLT-style Todd-Coxeter enumeration of the cosets of the trivial subgroup.
/// Reports overflow (finished = false) once `max_cosets` cosets have been
/// defined; a finished answer is always exact.
CosetResult coset_enumeration(const Presentation& p, std::size_t max_cosets = 100000, std::stop_token stop = {});

struct CollapseStep {
  enum class Kind { face, edge };
  Kind kind = Kind::face;
  std::string edge;   // the free edge (face step) or the removed edge (edge step)
  std::string other;  // the removed face (face step) or the leaf vertex (edge step)

  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

struct CollapseResult {
  std::optional<std::vector<CollapseStep>> sequence;
  bool budget_exhausted = false;
  bool cancelled = false;
  std::size_t nodes = 0;
};

/// Backtracking search over free-face collapses. Once the faces are gone,
/// leaves are collapsed with their edges down to a single vertex.
CollapseResult collapsibility_search(const TwoComplex& x, std::size_t budget = 100000, std::stop_token stop = {});

/// Applies a collapse sequence, checking each step. Returns the final
/// complex, or nullopt if some step is illegal.
std::optional<TwoComplex> replay_collapse(const TwoComplex& x, const std::vector<CollapseStep>& steps);

struct Budgets {
  std::size_t collapse_nodes = 100000;
  std::size_t max_cosets = 100000;
};

struct Certificate {
  enum class Kind { collapsible, simply_connected_acyclic, not_contractible, unknown };
  Kind kind = Kind::unknown;
  HomologyProfile homology;
  long euler = 0;
  std::vector<CollapseStep> collapse_sequence;
  std::size_t cosets_defined = 0;
  std::size_t group_order = 0;
  std::string justification;

  bool contractible() const { return kind == Kind::collapsible || kind == Kind::simply_connected_acyclic; }
};

std::string to_string(Certificate::Kind k);

/// Homology screen, then collapse search, then coset enumeration on pi_1.
/// Throws std::invalid_argument for disconnected input.
Certificate certify_contractible(const TwoComplex& x, const Budgets& budgets = {});

/// Value of FOLDCX_BUDGET, if set to a positive integer.
std::optional<std::size_t> env_budget_override();

/// Defaults, with every cap replaced by FOLDCX_BUDGET when it is set.
Budgets default_budgets();

}  // namespace foldcx
