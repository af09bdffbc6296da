#include "foldcx/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace foldcx {

namespace {

// Relation tags on the incidence graph.
constexpr int kLeaves = 0;  // vertex <- edge whose tail it is
constexpr int kEnters = 1;  // vertex <- edge whose head it is
constexpr int kTail = 2;    // edge -> tail vertex
constexpr int kHead = 3;    // edge -> head vertex
constexpr int kSide = 4;    // edge <-> face, plus boundary position

class Refiner {
 public:
  explicit Refiner(const Morphism& f) : f_(f) {
    const TwoComplex& x = f.domain;
    nv_ = x.vertex_count();
    ne_ = x.edge_count();
    nf_ = x.face_count();
    adj_.resize(nv_ + ne_ + nf_);
    for (std::size_t e = 0; e < ne_; ++e) {
      const Edge& edge = x.edges[e];
      adj_[edge.tail].push_back({kLeaves, nv_ + e});
      adj_[edge.head].push_back({kEnters, nv_ + e});
      adj_[nv_ + e].push_back({kTail, edge.tail});
      adj_[nv_ + e].push_back({kHead, edge.head});
    }
    for (std::size_t i = 0; i < nf_; ++i) {
      const auto& boundary = x.faces[i].boundary;
      for (std::size_t p = 0; p < boundary.size(); ++p) {
        const int tag = kSide + static_cast<int>(p);
        adj_[nv_ + boundary[p].edge].push_back({tag, nv_ + ne_ + i});
        adj_[nv_ + ne_ + i].push_back({tag, nv_ + boundary[p].edge});
      }
    }
  }

  CanonicalLabeling run() {
    // Initial colors keep the sorts apart (vertices < edges < faces) and
    // order edges by label, faces by type.
    const std::size_t gens = f_.target.generator_count();
    std::vector<long> colors(node_count());
    for (std::size_t e = 0; e < ne_; ++e) colors[nv_ + e] = 1 + f_.edge_label[e];
    for (std::size_t i = 0; i < nf_; ++i) colors[nv_ + ne_ + i] = 1 + static_cast<long>(gens) + f_.face_type[i];
    search(std::move(colors));

    CanonicalLabeling out;
    std::string enc = header();
    for (long v : best_code_) {
      enc += std::to_string(v);
      enc.push_back(',');
    }
    out.encoding = std::move(enc);
    out.vertex_order.assign(nv_, 0);
    out.edge_order.assign(ne_, 0);
    out.face_order.assign(nf_, 0);
    for (std::size_t n = 0; n < node_count(); ++n) {
      const auto c = static_cast<std::size_t>(best_colors_[n]);
      if (n < nv_) {
        out.vertex_order[c] = n;
      } else if (n < nv_ + ne_) {
        out.edge_order[c - nv_] = n - nv_;
      } else {
        out.face_order[c - nv_ - ne_] = n - nv_ - ne_;
      }
    }
    return out;
  }

 private:
  struct Link {
    int tag;
    std::size_t node;
  };

  std::size_t node_count() const { return nv_ + ne_ + nf_; }

  std::string header() const {
    std::string h = "foldcx1;";
    for (const auto& g : f_.target.generators()) h += g + ",";
    h += "|";
    for (const auto& r : f_.target.relators()) {
      for (const auto& l : r) h += std::to_string(l.generator) + (l.sign > 0 ? "+" : "-");
      h += ",";
    }
    h += ";";
    return h;
  }

  // Re-ranks colors by (color, sorted neighbor multiset) until stable. The
  // result always has colors 0..k-1 and preserves the order of old colors.
  std::vector<long> refine(std::vector<long> colors) const {
    const std::size_t n = node_count();
    std::vector<std::vector<long>> sig(n);
    std::vector<std::size_t> order(n);
    std::size_t classes = 0;
    while (true) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::pair<long, long>> nb;
        nb.reserve(adj_[i].size());
        for (const Link& l : adj_[i]) nb.emplace_back(l.tag, colors[l.node]);
        std::sort(nb.begin(), nb.end());
        auto& s = sig[i];
        s.clear();
        s.push_back(colors[i]);
        for (const auto& [t, c] : nb) {
          s.push_back(t);
          s.push_back(c);
        }
      }
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&sig](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
      std::vector<long> next(n);
      long rank = -1;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == 0 || sig[order[k]] != sig[order[k - 1]]) ++rank;
        next[order[k]] = rank;
      }
      const auto now = static_cast<std::size_t>(rank + 1);
      colors = std::move(next);
      if (now == classes) break;
      classes = now;
    }
    return colors;
  }

  std::vector<long> encode(const std::vector<long>& colors) const {
    const TwoComplex& x = f_.domain;
    std::vector<long> code{static_cast<long>(nv_), static_cast<long>(ne_), static_cast<long>(nf_)};
    std::vector<std::size_t> edge_at(ne_), face_at(nf_);
    for (std::size_t e = 0; e < ne_; ++e) edge_at[static_cast<std::size_t>(colors[nv_ + e]) - nv_] = e;
    for (std::size_t i = 0; i < nf_; ++i) face_at[static_cast<std::size_t>(colors[nv_ + ne_ + i]) - nv_ - ne_] = i;
    for (std::size_t k = 0; k < ne_; ++k) {
      const std::size_t e = edge_at[k];
      code.push_back(f_.edge_label[e]);
      code.push_back(colors[x.edges[e].tail]);
      code.push_back(colors[x.edges[e].head]);
    }
    for (std::size_t k = 0; k < nf_; ++k) {
      const std::size_t i = face_at[k];
      code.push_back(f_.face_type[i]);
      code.push_back(static_cast<long>(x.faces[i].boundary.size()));
      for (const auto& s : x.faces[i].boundary) {
        code.push_back((colors[nv_ + s.edge] - static_cast<long>(nv_)) * 2 + (s.sign > 0 ? 0 : 1));
      }
    }
    return code;
  }

  void search(std::vector<long> colors) {
    colors = refine(std::move(colors));
    const std::size_t n = node_count();
    std::vector<std::size_t> size(n, 0);
    for (long c : colors) ++size[static_cast<std::size_t>(c)];
    long target = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (size[c] > 1) {
        target = static_cast<long>(c);
        break;
      }
    }
    if (target < 0) {
      auto code = encode(colors);
      if (!have_best_ || code < best_code_) {
        best_code_ = std::move(code);
        best_colors_ = colors;
        have_best_ = true;
      }
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      std::vector<long> split(n);
      for (std::size_t i = 0; i < n; ++i) split[i] = 2 * colors[i] + 1;
      split[v] = 2 * target;
      search(std::move(split));
    }
  }

  const Morphism& f_;
  std::size_t nv_ = 0, ne_ = 0, nf_ = 0;
  std::vector<std::vector<Link>> adj_;
  bool have_best_ = false;
  std::vector<long> best_code_;
  std::vector<long> best_colors_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Morphism& f) {
  require_valid(f);
  return Refiner(f).run();
}

std::string canonical_form(const Morphism& f) { return canonical_labeling(f).encoding; }

std::optional<Isomorphism> isomorphic(const Morphism& f, const Morphism& g) {
  if (!(f.target == g.target)) throw std::invalid_argument("morphisms have different target presentations");
  const auto lf = canonical_labeling(f);
  const auto lg = canonical_labeling(g);
  if (lf.encoding != lg.encoding) return std::nullopt;
  Isomorphism iso;
  iso.vertex_map.resize(lf.vertex_order.size());
  iso.edge_map.resize(lf.edge_order.size());
  iso.face_map.resize(lf.face_order.size());
  for (std::size_t k = 0; k < lf.vertex_order.size(); ++k) iso.vertex_map[lf.vertex_order[k]] = lg.vertex_order[k];
  for (std::size_t k = 0; k < lf.edge_order.size(); ++k) iso.edge_map[lf.edge_order[k]] = lg.edge_order[k];
  for (std::size_t k = 0; k < lf.face_order.size(); ++k) iso.face_map[lf.face_order[k]] = lg.face_order[k];
  if (!check_isomorphism(f, g, iso)) throw std::logic_error("canonical labelings agree but bijection fails");
  return iso;
}

bool check_isomorphism(const Morphism& f, const Morphism& g, const Isomorphism& iso) {
  const TwoComplex& x = f.domain;
  const TwoComplex& y = g.domain;
  if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count() || x.face_count() != y.face_count()) {
    return false;
  }
  if (iso.vertex_map.size() != x.vertex_count() || iso.edge_map.size() != x.edge_count() ||
      iso.face_map.size() != x.face_count()) {
    return false;
  }
  auto bijective = [](const std::vector<std::size_t>& m) {
    std::vector<bool> hit(m.size(), false);
    for (auto v : m) {
      if (v >= m.size() || hit[v]) return false;
      hit[v] = true;
    }
    return true;
  };
  if (!bijective(iso.vertex_map) || !bijective(iso.edge_map) || !bijective(iso.face_map)) return false;
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    const Edge& a = x.edges[e];
    const Edge& b = y.edges[iso.edge_map[e]];
    if (f.edge_label[e] != g.edge_label[iso.edge_map[e]]) return false;
    if (iso.vertex_map[a.tail] != b.tail || iso.vertex_map[a.head] != b.head) return false;
  }
  for (std::size_t i = 0; i < x.face_count(); ++i) {
    const std::size_t j = iso.face_map[i];
    if (f.face_type[i] != g.face_type[j]) return false;
    const auto& bf = x.faces[i].boundary;
    const auto& bg = y.faces[j].boundary;
    if (bf.size() != bg.size()) return false;
    for (std::size_t p = 0; p < bf.size(); ++p) {
      if (iso.edge_map[bf[p].edge] != bg[p].edge || bf[p].sign != bg[p].sign) return false;
    }
  }
  return true;
}

}  // namespace foldcx
