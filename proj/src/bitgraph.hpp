#ifndef HEDGEHOG_SRC_BITGRAPH_HPP
#define HEDGEHOG_SRC_BITGRAPH_HPP

#include "hedgehog/core.hpp"

#include <atomic>
#include <bit>
#include <mutex>
#include <thread>
#include <vector>

namespace hedgehog::detail {

class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return words_[i >> 6] >> (i & 63) & 1u; }
  bool none() const noexcept {
    for (auto w : words_)
      if (w)
        return false;
    return true;
  }
  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  void intersect(const Bitset &other, Bitset &out) const noexcept {
    out.words_.resize(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i)
      out.words_[i] = words_[i] & other.words_[i];
  }
  void subtract(const Bitset &other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~other.words_[i];
  }
  /// Index of the lowest set bit, or npos.
  std::size_t first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i])
        return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
  }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::vector<std::uint64_t> words_;
};

class BitGraph {
public:
  explicit BitGraph(Vertex n) : n_(n), rows_(n, Bitset(n)) {}
  Vertex size() const noexcept { return n_; }
  void add_edge(Vertex u, Vertex v) {
    rows_[u].set(v);
    rows_[v].set(u);
  }
  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
  const Bitset &neighbours(Vertex v) const noexcept { return rows_[v]; }

private:
  Vertex n_;
  std::vector<Bitset> rows_;
};

/// Colour-bounded branch and bound for maximum clique (greedy sequential
/// colouring as the bound). Stops early once `target` is reached.
class MaxCliqueSolver {
public:
  MaxCliqueSolver(const BitGraph &g, std::size_t target) : g_(g), target_(target) {}

  std::vector<Vertex> solve(unsigned threads = 1) {
    const Vertex n = g_.size();
    if (n == 0)
      return {};
    Bitset all(n);
    for (Vertex v = 0; v < n; ++v)
      all.set(v);
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    colour_sort(all, order, bound);

    // Branch i takes order[i] with candidates order[0..i) adjacent to it.
    std::atomic<std::ptrdiff_t> next{static_cast<std::ptrdiff_t>(order.size()) - 1};
    auto work = [&] {
      std::vector<Vertex> current;
      for (;;) {
        const std::ptrdiff_t i = next.fetch_sub(1);
        if (i < 0 || done())
          return;
        if (bound[i] <= best_size_.load())
          return;
        Bitset prefix(n);
        for (std::ptrdiff_t j = 0; j < i; ++j)
          prefix.set(order[j]);
        Bitset cand;
        prefix.intersect(g_.neighbours(order[i]), cand);
        current.assign(1, order[i]);
        expand(current, cand);
      }
    };
    if (threads <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < threads; ++i)
        pool.emplace_back(work);
    }
    return best_;
  }

private:
  bool done() const noexcept { return target_ > 0 && best_size_.load() >= target_; }

  void record(const std::vector<Vertex> &clique) {
    std::lock_guard lock(mutex_);
    if (clique.size() > best_.size()) {
      best_ = clique;
      best_size_ = clique.size();
    }
  }

  void colour_sort(const Bitset &p, std::vector<Vertex> &order, std::vector<std::size_t> &bound) const {
    order.clear();
    bound.clear();
    Bitset uncoloured = p;
    std::size_t colour = 0;
    while (!uncoloured.none()) {
      ++colour;
      Bitset q = uncoloured;
      for (std::size_t v = q.first(); v != Bitset::npos; v = q.first()) {
        q.reset(v);
        uncoloured.reset(v);
        q.subtract(g_.neighbours(static_cast<Vertex>(v)));
        order.push_back(static_cast<Vertex>(v));
        bound.push_back(colour);
      }
    }
  }

  void expand(std::vector<Vertex> &current, Bitset p) {
    if (p.none()) {
      if (current.size() > best_size_.load())
        record(current);
      return;
    }
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    colour_sort(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (done() || current.size() + bound[i] <= best_size_.load())
        return;
      const Vertex v = order[i];
      current.push_back(v);
      Bitset next;
      p.intersect(g_.neighbours(v), next);
      expand(current, std::move(next));
      current.pop_back();
      p.reset(v);
    }
  }

  const BitGraph &g_;
  std::size_t target_;
  std::atomic<std::size_t> best_size_{0};
  std::mutex mutex_;
  std::vector<Vertex> best_;
};

} // namespace hedgehog::detail

#endif // HEDGEHOG_SRC_BITGRAPH_HPP
