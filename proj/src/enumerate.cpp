#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include "foldcx/canonical.hpp"
#include "foldcx/verify.hpp"

namespace foldcx {

namespace {

using Injection = std::vector<int>;  // -1 where undefined

void partial_injections(int n, int v, Injection& cur, std::vector<bool>& used, std::vector<Injection>& out) {
  if (v == n) {
    out.push_back(cur);
    return;
  }
  cur[static_cast<std::size_t>(v)] = -1;
  partial_injections(n, v + 1, cur, used, out);
  for (int w = 0; w < n; ++w) {
    if (used[static_cast<std::size_t>(w)]) continue;
    used[static_cast<std::size_t>(w)] = true;
    cur[static_cast<std::size_t>(v)] = w;
    partial_injections(n, v + 1, cur, used, out);
    used[static_cast<std::size_t>(w)] = false;
  }
  cur[static_cast<std::size_t>(v)] = -1;
}

std::vector<Injection> all_partial_injections(int n) {
  std::vector<Injection> out;
  Injection cur(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  partial_injections(n, 0, cur, used, out);
  return out;
}

struct Permutations {
  std::vector<std::vector<int>> forward;  // pi
  std::vector<std::vector<int>> inverse;  // pi^-1
};

Permutations non_identity_permutations(int n) {
  Permutations p;
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  while (std::next_permutation(pi.begin(), pi.end())) {
    std::vector<int> inv(pi.size());
    for (std::size_t k = 0; k < pi.size(); ++k) inv[static_cast<std::size_t>(pi[k])] = static_cast<int>(k);
    p.forward.push_back(pi);
    p.inverse.push_back(std::move(inv));
  }
  return p;
}

// Skeleton given by one partial injection per generator.
using Skeleton = std::vector<const Injection*>;

bool connected(const Skeleton& s, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    }
    return v;
  };
  int components = n;
  for (const Injection* sigma : s) {
    for (int v = 0; v < n; ++v) {
      const int w = (*sigma)[static_cast<std::size_t>(v)];
      if (w < 0) continue;
      const int a = find(v), b = find(w);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
  }
  return components == 1;
}

// True if no vertex relabeling yields a lexicographically smaller
// concatenation of the injections.
bool is_least_labeling(const Skeleton& s, int n, const Permutations& perms) {
  for (std::size_t k = 0; k < perms.forward.size(); ++k) {
    const auto& pi = perms.forward[k];
    const auto& inv = perms.inverse[k];
    int verdict = 0;  // -1 permuted smaller, +1 permuted larger
    for (const Injection* sigma : s) {
      for (int pos = 0; pos < n && verdict == 0; ++pos) {
        const int pre = (*sigma)[static_cast<std::size_t>(inv[static_cast<std::size_t>(pos)])];
        const int permuted = pre < 0 ? -1 : pi[static_cast<std::size_t>(pre)];
        const int original = (*sigma)[static_cast<std::size_t>(pos)];
        if (permuted != original) verdict = permuted < original ? -1 : 1;
      }
      if (verdict != 0) break;
    }
    if (verdict < 0) return false;
  }
  return true;
}

struct CandidateFace {
  int type;
  std::vector<SignedEdge> boundary;
};

struct Worker {
  const EnumerationFilter& filter;
  const SearchOptions& options;
  const Presentation& target;
  std::atomic<std::size_t>& candidates;
  std::atomic<bool>& over_budget;
  std::map<std::string, Morphism> found;
  std::size_t skeletons = 0;

  void visit(const Skeleton& s, int n) {
    ++skeletons;
    const std::size_t gens = s.size();
    // Edge index per (generator, tail).
    std::vector<std::vector<int>> edge_at(gens, std::vector<int>(static_cast<std::size_t>(n), -1));
    Morphism base;
    base.target = target;
    for (int v = 0; v < n; ++v) base.domain.vertices.push_back("v" + std::to_string(v));
    for (std::size_t g = 0; g < gens; ++g) {
      for (int v = 0; v < n; ++v) {
        const int w = (*s[g])[static_cast<std::size_t>(v)];
        if (w < 0) continue;
        edge_at[g][static_cast<std::size_t>(v)] = static_cast<int>(base.domain.edge_count());
        base.domain.edges.push_back({target.generators()[g] + std::to_string(v), static_cast<std::size_t>(v),
                                     static_cast<std::size_t>(w)});
        base.edge_label.push_back(static_cast<int>(g));
      }
    }
    std::vector<std::vector<int>> inverse(gens, std::vector<int>(static_cast<std::size_t>(n), -1));
    for (std::size_t g = 0; g < gens; ++g) {
      for (int v = 0; v < n; ++v) {
        const int w = (*s[g])[static_cast<std::size_t>(v)];
        if (w >= 0) inverse[g][static_cast<std::size_t>(w)] = v;
      }
    }

    // Closed relator traces, one per (relator, start vertex).
    std::vector<CandidateFace> faces;
    for (std::size_t r = 0; r < target.relator_count(); ++r) {
      const Word& rel = target.relator(r);
      for (int start = 0; start < n; ++start) {
        int at = start;
        std::vector<SignedEdge> boundary;
        for (const Letter& l : rel) {
          const auto g = static_cast<std::size_t>(l.generator);
          if (l.sign > 0) {
            const int next = (*s[g])[static_cast<std::size_t>(at)];
            if (next < 0) break;
            boundary.push_back({static_cast<std::size_t>(edge_at[g][static_cast<std::size_t>(at)]), 1});
            at = next;
          } else {
            const int prev = inverse[g][static_cast<std::size_t>(at)];
            if (prev < 0) break;
            boundary.push_back({static_cast<std::size_t>(edge_at[g][static_cast<std::size_t>(prev)]), -1});
            at = prev;
          }
        }
        if (boundary.size() == rel.size() && at == start) faces.push_back({static_cast<int>(r), std::move(boundary)});
      }
    }

    std::vector<bool> wanted(target.relator_count(), false);
    for (int t : filter.required_types) wanted[static_cast<std::size_t>(t)] = true;
    const std::size_t m = faces.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      if (candidates.fetch_add(1) >= options.budget) {
        over_budget = true;
        return;
      }
      std::vector<bool> used(target.relator_count(), false);
      std::vector<std::size_t> sides(base.domain.edge_count(), 0);
      for (std::size_t k = 0; k < m; ++k) {
        if (!(mask >> k & 1)) continue;
        used[static_cast<std::size_t>(faces[k].type)] = true;
        for (const auto& side : faces[k].boundary) ++sides[side.edge];
      }
      if (used != wanted) continue;
      if (filter.require_no_free_faces && std::find(sides.begin(), sides.end(), 1) != sides.end()) continue;

      Morphism f = base;
      for (std::size_t k = 0; k < m; ++k) {
        if (!(mask >> k & 1)) continue;
        f.domain.faces.push_back({"f" + std::to_string(f.domain.face_count()), faces[k].boundary});
        f.face_type.push_back(faces[k].type);
      }
      auto form = canonical_form(f);
      found.try_emplace(std::move(form), std::move(f));
    }
  }
};

}  // namespace

SearchOptions default_search_options() {
  SearchOptions o;
  if (const auto n = env_budget_override()) o.budget = *n;
  return o;
}

EnumerationResult enumerate_immersions(const EnumerationFilter& filter, const SearchOptions& options) {
  if (filter.max_vertices < 1) throw std::invalid_argument("max_vertices must be at least 1");
  const Presentation& target = kp_presentation();
  for (int t : filter.required_types) {
    if (t < 0 || static_cast<std::size_t>(t) >= target.relator_count()) {
      throw std::invalid_argument("unknown face type in filter");
    }
  }
  const std::size_t gens = target.generator_count();
  const unsigned jobs = std::max(1u, options.jobs);

  std::atomic<std::size_t> candidates{0};
  std::atomic<bool> over_budget{false};
  std::vector<Worker> workers;
  for (unsigned t = 0; t < jobs; ++t) workers.push_back({filter, options, target, candidates, over_budget, {}, 0});

  for (int n = 1; n <= filter.max_vertices && !over_budget; ++n) {
    const auto injections = all_partial_injections(n);
    const auto perms = non_identity_permutations(n);
    auto run = [&](unsigned t) {
      Worker& w = workers[t];
      Skeleton s(gens, nullptr);
      // Odometer over one injection per generator; the first generator's
      // choice is split across workers.
      std::vector<std::size_t> pick(gens, 0);
      for (std::size_t first = t; first < injections.size() && !over_budget; first += jobs) {
        pick.assign(gens, 0);
        pick[0] = first;
        while (!over_budget) {
          for (std::size_t g = 0; g < gens; ++g) s[g] = &injections[pick[g]];
          if ((!filter.require_connected || connected(s, n)) && is_least_labeling(s, n, perms)) w.visit(s, n);
          std::size_t g = 1;
          while (g < gens && ++pick[g] == injections.size()) pick[g++] = 0;
          if (g == gens) break;
        }
      }
    };
    if (jobs == 1) {
      run(0);
    } else {
      std::vector<std::jthread> threads;
      for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(run, t);
    }
  }
  if (over_budget) {
    throw BudgetExceeded("enumeration budget of " + std::to_string(options.budget) + " candidates exhausted");
  }

  std::map<std::string, Morphism> merged;
  EnumerationResult result;
  for (auto& w : workers) {
    result.skeletons += w.skeletons;
    merged.merge(w.found);
  }
  result.candidates = candidates.load();
  for (auto& [form, f] : merged) {
    result.forms.push_back(form);
    result.classes.push_back(std::move(f));
  }
  return result;
}

}  // namespace foldcx
