#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "foldcx/topology.hpp"

namespace foldcx {

namespace {

std::string state_key(const TwoComplex& x) {
  std::vector<std::string> ids;
  for (const auto& f : x.faces) ids.push_back("f:" + f.id);
  for (const auto& e : x.edges) ids.push_back("e:" + e.id);
  std::sort(ids.begin(), ids.end());
  std::string key;
  for (const auto& id : ids) key += id + "\x1f";
  return key;
}

// Once no faces remain: if the graph is a tree, strip leaves until one
// vertex is left.
std::optional<std::vector<CollapseStep>> collapse_tree(TwoComplex x) {
  if (x.vertex_count() == 0) return std::nullopt;
  if (x.edge_count() + 1 != x.vertex_count() || !is_connected(x)) return std::nullopt;
  std::vector<CollapseStep> steps;
  while (x.edge_count() > 0) {
    const auto deg = vertex_degrees(x);
    bool progressed = false;
    for (std::size_t e = 0; e < x.edge_count() && !progressed; ++e) {
      const Edge& edge = x.edges[e];
      if (edge.tail == edge.head) continue;
      for (std::size_t v : {edge.head, edge.tail}) {
        if (deg[v] != 1) continue;
        steps.push_back({CollapseStep::Kind::edge, edge.id, x.vertices[v]});
        x = remove_cells(x, {v}, {e}, {});
        progressed = true;
        break;
      }
    }
    if (!progressed) return std::nullopt;
  }
  return steps;
}

class CollapseSearch {
 public:
  CollapseSearch(std::size_t budget, std::stop_token stop) : budget_(budget), stop_(std::move(stop)) {}

  CollapseResult run(const TwoComplex& x) {
    CollapseResult result;
    std::vector<CollapseStep> path;
    if (dfs(x, path)) result.sequence = std::move(found_);
    result.budget_exhausted = exhausted_;
    result.cancelled = cancelled_;
    result.nodes = nodes_;
    return result;
  }

 private:
  bool dfs(const TwoComplex& x, std::vector<CollapseStep>& path) {
    if (stop_.stop_requested()) {
      cancelled_ = true;
      return false;
    }
    if (nodes_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    if (x.faces.empty()) {
      auto tail = collapse_tree(x);
      if (!tail) return false;
      found_ = path;
      found_.insert(found_.end(), tail->begin(), tail->end());
      return true;
    }
    if (!visited_.insert(state_key(x)).second) return false;
    const auto count = edge_occurrences(x);
    for (std::size_t e = 0; e < x.edge_count(); ++e) {
      if (count[e] != 1) continue;
      std::size_t face = 0;
      for (std::size_t i = 0; i < x.face_count(); ++i) {
        for (const auto& s : x.faces[i].boundary) {
          if (s.edge == e) face = i;
        }
      }
      path.push_back({CollapseStep::Kind::face, x.edges[e].id, x.faces[face].id});
      if (dfs(collapse_free_face(x, e), path)) return true;
      path.pop_back();
      if (exhausted_ || cancelled_) return false;
    }
    return false;
  }

  std::size_t budget_;
  std::stop_token stop_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  bool cancelled_ = false;
  std::set<std::string> visited_;
  std::vector<CollapseStep> found_;
};

}  // namespace

CollapseResult collapsibility_search(const TwoComplex& x, std::size_t budget, std::stop_token stop) {
  return CollapseSearch(budget, std::move(stop)).run(x);
}

std::optional<TwoComplex> replay_collapse(const TwoComplex& x, const std::vector<CollapseStep>& steps) {
  TwoComplex cur = x;
  for (const auto& step : steps) {
    const auto e = cur.edge_index(step.edge);
    if (!e) return std::nullopt;
    if (step.kind == CollapseStep::Kind::face) {
      const auto f = cur.face_index(step.other);
      if (!f || edge_occurrences(cur)[*e] != 1) return std::nullopt;
      const auto& b = cur.faces[*f].boundary;
      if (std::none_of(b.begin(), b.end(), [&](const SignedEdge& s) { return s.edge == *e; })) return std::nullopt;
      cur = collapse_free_face(cur, *e);
    } else {
      const auto v = cur.vertex_index(step.other);
      if (!v || edge_occurrences(cur)[*e] != 0) return std::nullopt;
      const Edge& edge = cur.edges[*e];
      if (edge.tail == edge.head || (edge.tail != *v && edge.head != *v)) return std::nullopt;
      if (vertex_degrees(cur)[*v] != 1) return std::nullopt;
      cur = remove_cells(cur, {*v}, {*e}, {});
    }
  }
  return cur;
}

std::string to_string(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::collapsible:
      return "Collapsible";
    case Certificate::Kind::simply_connected_acyclic:
      return "SimplyConnectedAcyclic";
    case Certificate::Kind::not_contractible:
      return "NotContractible";
    case Certificate::Kind::unknown:
      return "Unknown";
  }
  return "?";
}

Certificate certify_contractible(const TwoComplex& x, const Budgets& budgets) {
  if (x.vertices.empty() || !is_connected(x)) throw std::invalid_argument("certify_contractible needs a connected complex");
  Certificate cert;
  cert.homology = homology(x);
  cert.euler = euler_characteristic(x);
  if (!cert.homology.is_point() || cert.euler != 1) {
    cert.kind = Certificate::Kind::not_contractible;
    if (cert.homology.betti_1 > 0) {
      cert.justification = "betti_1 = " + std::to_string(cert.homology.betti_1);
    } else if (cert.homology.betti_2 > 0) {
      cert.justification = "betti_2 = " + std::to_string(cert.homology.betti_2);
    } else if (!cert.homology.torsion_1.empty()) {
      cert.justification = "H_1 has torsion";
    } else {
      cert.justification = "euler characteristic " + std::to_string(cert.euler);
    }
    return cert;
  }

  auto collapse = collapsibility_search(x, budgets.collapse_nodes);
  if (collapse.sequence) {
    cert.kind = Certificate::Kind::collapsible;
    cert.collapse_sequence = std::move(*collapse.sequence);
    cert.justification = "collapses to a vertex";
    return cert;
  }

  const auto coset = coset_enumeration(pi1_presentation(x), budgets.max_cosets);
  cert.cosets_defined = coset.cosets_defined;
  if (coset.finished) {
    cert.group_order = coset.order;
    if (coset.order == 1) {
      cert.kind = Certificate::Kind::simply_connected_acyclic;
      cert.justification =
          "pi_1 trivial (coset enumeration closed with 1 coset) and H_2 = 0; a connected, simply connected "
          "2-complex with trivial H_2 is contractible by the Hurewicz and Whitehead theorems";
      return cert;
    }
    cert.kind = Certificate::Kind::not_contractible;
    cert.justification = "pi_1 has order " + std::to_string(coset.order);
    return cert;
  }
  cert.kind = Certificate::Kind::unknown;
  cert.justification = "collapse search " + std::string(collapse.budget_exhausted ? "hit its budget" : "found no sequence") +
                       "; coset enumeration overflowed at " + std::to_string(coset.cosets_defined) + " cosets";
  return cert;
}

std::optional<std::size_t> env_budget_override() {
  const char* raw = std::getenv("FOLDCX_BUDGET");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

Budgets default_budgets() {
  Budgets b;
  if (const auto n = env_budget_override()) {
    b.collapse_nodes = *n;
    b.max_cosets = *n;
  }
  return b;
}

}  // namespace foldcx
