#include <deque>
#include <numeric>

#include "foldcx/topology.hpp"

namespace foldcx {

namespace {

constexpr long kUndefined = -1;

// Columns: 2g for generator g, 2g+1 for its inverse.
int column(const Letter& l) { return 2 * l.generator + (l.sign > 0 ? 0 : 1); }
int inverse_column(int c) { return c ^ 1; }

class CosetTable {
 public:
  CosetTable(const Presentation& p, std::size_t max_cosets, std::stop_token stop)
      : columns_(static_cast<int>(2 * p.generator_count())), max_cosets_(max_cosets), stop_(std::move(stop)) {
    for (const Word& w : p.relators()) {
      std::vector<int> cols;
      for (const Letter& l : w) cols.push_back(column(l));
      relators_.push_back(std::move(cols));
    }
    new_coset();
  }

  CosetResult run() {
    CosetResult result;
    for (std::size_t c = 0; c < rows_.size() && !overflow_; ++c) {
      if (stop_.stop_requested()) {
        result.cancelled = true;
        break;
      }
      for (const auto& rel : relators_) {
        if (!live(c) || overflow_) break;
        scan_and_fill(static_cast<long>(c), rel);
      }
      for (int x = 0; x < columns_ && live(c) && !overflow_; ++x) {
        if (rows_[c][static_cast<std::size_t>(x)] == kUndefined) define(static_cast<long>(c), x);
      }
    }
    result.cosets_defined = rows_.size();
    if (overflow_ || result.cancelled) return result;
    result.finished = true;
    for (std::size_t c = 0; c < rows_.size(); ++c) {
      if (live(c)) ++result.order;
    }
    return result;
  }

 private:
  bool live(std::size_t c) const { return parent_[c] == static_cast<long>(c); }

  long rep(long c) {
    long r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const long next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  long& entry(long c, int x) { return rows_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]; }

  long new_coset() {
    rows_.emplace_back(static_cast<std::size_t>(columns_), kUndefined);
    parent_.push_back(static_cast<long>(parent_.size()));
    return static_cast<long>(rows_.size()) - 1;
  }

  void define(long c, int x) {
    if (rows_.size() >= max_cosets_) {
      overflow_ = true;
      return;
    }
    const long d = new_coset();
    entry(c, x) = d;
    entry(d, inverse_column(x)) = c;
  }

  void scan_and_fill(long c, const std::vector<int>& rel) {
    if (rel.empty()) return;
    long f = c, b = c;
    long i = 0, j = static_cast<long>(rel.size()) - 1;
    while (true) {
      while (i <= j && entry(f, rel[static_cast<std::size_t>(i)]) != kUndefined) {
        f = entry(f, rel[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inverse_column(rel[static_cast<std::size_t>(j)])) != kUndefined) {
        b = entry(b, inverse_column(rel[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, rel[static_cast<std::size_t>(i)]) = b;
        entry(b, inverse_column(rel[static_cast<std::size_t>(i)])) = f;
        return;
      }
      define(f, rel[static_cast<std::size_t>(i)]);
      if (overflow_) return;
    }
  }

  void merge(long k, long l, std::deque<long>& queue) {
    const long a = rep(k), b = rep(l);
    if (a == b) return;
    const long lo = std::min(a, b), hi = std::max(a, b);
    parent_[static_cast<std::size_t>(hi)] = lo;
    queue.push_back(hi);
  }

  void coincidence(long a, long b) {
    std::deque<long> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const long g = queue.front();
      queue.pop_front();
      for (int x = 0; x < columns_; ++x) {
        const long d = entry(g, x);
        if (d == kUndefined) continue;
        entry(d, inverse_column(x)) = kUndefined;
        const long mu = rep(g), nu = rep(d);
        if (entry(mu, x) != kUndefined) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, inverse_column(x)) != kUndefined) {
          merge(mu, entry(nu, inverse_column(x)), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, inverse_column(x)) = mu;
        }
      }
    }
  }

  int columns_;
  std::size_t max_cosets_;
  std::stop_token stop_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<long>> rows_;
  std::vector<long> parent_;
  bool overflow_ = false;
};

}  // namespace

CosetResult coset_enumeration(const Presentation& p, std::size_t max_cosets, std::stop_token stop) {
  if (max_cosets == 0) return {};
  return CosetTable(p, max_cosets, std::move(stop)).run();
}

}  // namespace foldcx
