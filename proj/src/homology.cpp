#include <algorithm>
#include <deque>
#include <stdexcept>

#include "foldcx/topology.hpp"

namespace foldcx {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

BigInt abs_value(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Position of the nonzero entry of least absolute value in the lower-right
// block starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> least_entry(const Matrix& m, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs;
  for (std::size_t i = t; i < m.size(); ++i) {
    for (std::size_t j = t; j < m[i].size(); ++j) {
      if (m[i][j] == 0) continue;
      BigInt a = abs_value(m[i][j]);
      if (!best || a < best_abs) {
        best = std::make_pair(i, j);
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<BigInt> smith_diagonal(Matrix m) {
  std::vector<BigInt> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    auto pivot = least_entry(m, t);
    if (!pivot) break;
    swap_rows(m, t, pivot->first);
    swap_cols(m, t, pivot->second);
    while (true) {
      bool clean = true;
      // Clear column t below the pivot.
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      // Clear row t right of the pivot.
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (clean) {
        // The pivot must divide the remaining block.
        std::optional<std::size_t> bad_row;
        for (std::size_t i = t + 1; i < rows && !bad_row; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[i][j] % m[t][t] != 0) {
              bad_row = i;
              break;
            }
          }
        }
        if (!bad_row) break;
        for (std::size_t j = t; j < cols; ++j) m[t][j] += m[*bad_row][j];
      }
      // Remainders left behind: move the smallest entry of row/column t to
      // the pivot and go again.
      std::size_t bi = t, bj = t;
      BigInt best = abs_value(m[t][t]);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] != 0 && abs_value(m[i][t]) < best) {
          best = abs_value(m[i][t]);
          bi = i;
          bj = t;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] != 0 && abs_value(m[t][j]) < best) {
          best = abs_value(m[t][j]);
          bi = t;
          bj = j;
        }
      }
      swap_rows(m, t, bi);
      swap_cols(m, t, bj);
    }
    diag.push_back(abs_value(m[t][t]));
  }
  return diag;
}

HomologyProfile homology(const TwoComplex& x) {
  const std::size_t nv = x.vertex_count();
  const std::size_t ne = x.edge_count();
  const std::size_t nf = x.face_count();

  // d1: edges -> vertices (rows = vertices).
  Matrix d1(nv, std::vector<BigInt>(ne, 0));
  for (std::size_t e = 0; e < ne; ++e) {
    d1[x.edges[e].head][e] += 1;
    d1[x.edges[e].tail][e] -= 1;
  }
  // d2: faces -> edges (rows = edges).
  Matrix d2(ne, std::vector<BigInt>(nf, 0));
  for (std::size_t i = 0; i < nf; ++i) {
    for (const auto& s : x.faces[i].boundary) d2[s.edge][i] += s.sign;
  }

  const auto diag1 = smith_diagonal(std::move(d1));
  const auto diag2 = smith_diagonal(std::move(d2));
  const auto rank1 = static_cast<long>(diag1.size());
  const auto rank2 = static_cast<long>(diag2.size());

  HomologyProfile h;
  h.betti_0 = static_cast<long>(nv) - rank1;
  h.betti_1 = static_cast<long>(ne) - rank1 - rank2;
  h.betti_2 = static_cast<long>(nf) - rank2;
  for (const auto& d : diag2) {
    if (d > 1) h.torsion_1.push_back(d);
  }
  std::sort(h.torsion_1.begin(), h.torsion_1.end());
  return h;
}

Presentation pi1_presentation(const TwoComplex& x, std::size_t basepoint) {
  if (x.vertices.empty()) throw std::invalid_argument("empty complex has no fundamental group");
  if (basepoint >= x.vertex_count()) throw std::invalid_argument("basepoint out of range");

  // Breadth-first spanning tree; edges scanned in index order.
  std::vector<std::vector<std::size_t>> incident(x.vertex_count());
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    incident[x.edges[e].tail].push_back(e);
    if (x.edges[e].head != x.edges[e].tail) incident[x.edges[e].head].push_back(e);
  }
  std::vector<bool> seen(x.vertex_count(), false), in_tree(x.edge_count(), false);
  std::deque<std::size_t> queue{basepoint};
  seen[basepoint] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : incident[v]) {
      const std::size_t w = x.edges[e].tail == v ? x.edges[e].head : x.edges[e].tail;
      if (seen[w]) continue;
      seen[w] = true;
      in_tree[e] = true;
      queue.push_back(w);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("pi_1 presentation needs a connected complex");
  }

  std::vector<std::string> generators;
  std::vector<int> gen_of(x.edge_count(), -1);
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    if (in_tree[e]) continue;
    gen_of[e] = static_cast<int>(generators.size());
    generators.push_back(x.edges[e].id);
  }
  std::vector<Word> relators;
  for (const auto& face : x.faces) {
    Word w;
    for (const auto& s : face.boundary) {
      if (gen_of[s.edge] >= 0) w.push_back({gen_of[s.edge], s.sign});
    }
    relators.push_back(std::move(w));
  }
  return Presentation::make_group(std::move(generators), std::move(relators));
}

}  // namespace foldcx
