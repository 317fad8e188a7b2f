#ifndef HEDGEHOG_TESTS_ORACLES_HPP
#define HEDGEHOG_TESTS_ORACLES_HPP

// Deliberately naive reference implementations used only by the tests.

#include "hedgehog/core.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace oracle {

using hedgehog::Colour;
using hedgehog::CompleteColouring;
using hedgehog::Vertex;

inline std::vector<Vertex> bits_to_set(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1)
      out.push_back(v);
  return out;
}

/// All k-subsets of [n] in colex order, by sorting bitmasks.
inline std::vector<std::vector<Vertex>> colex_subsets(Vertex n, unsigned k) {
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (static_cast<unsigned>(__builtin_popcountll(m)) == k)
      masks.push_back(m);
  // Colex order on k-sets coincides with numeric order of their bitmasks.
  std::sort(masks.begin(), masks.end());
  std::vector<std::vector<Vertex>> out;
  for (auto m : masks)
    out.push_back(bits_to_set(m));
  return out;
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n)
    return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

/// Combinadic rank of a k-subset: sum of C(s_i, i + 1).
inline Colour colour_of(const CompleteColouring &c, std::vector<Vertex> s) {
  std::sort(s.begin(), s.end());
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    r += choose(s[i], i + 1);
  return c.at(r);
}

/// Every body, every injective spine assignment, by plain backtracking.
inline bool has_hedgehog(const CompleteColouring &c, unsigned t, Colour colour) {
  const Vertex n = c.n();
  if (n > 20)
    return false;
  auto triple = [&](Vertex a, Vertex b, Vertex w) {
    Vertex s[3] = {a, b, w};
    std::sort(s, s + 3);
    return c.at(std::uint64_t{s[0]} + std::uint64_t{s[1]} * (s[1] - 1) / 2 +
                std::uint64_t{s[2]} * (s[2] - 1) * (s[2] - 2) / 6) == colour;
  };
  for (std::uint64_t body = 0; body < (std::uint64_t{1} << n); ++body) {
    if (static_cast<unsigned>(__builtin_popcountll(body)) != t)
      continue;
    const auto b = bits_to_set(body);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        pairs.emplace_back(b[i], b[j]);
    std::vector<bool> used(n, false);
    for (Vertex v : b)
      used[v] = true;
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
      if (i == pairs.size())
        return true;
      for (Vertex w = 0; w < n; ++w)
        if (!used[w] && triple(pairs[i].first, pairs[i].second, w)) {
          used[w] = true;
          if (go(i + 1))
            return true;
          used[w] = false;
        }
      return false;
    };
    if (go(0))
      return true;
  }
  return false;
}

inline bool independent(const hedgehog::Hypergraph &h, std::uint64_t mask) {
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    bool inside = true;
    for (Vertex v : h.edge(i))
      inside = inside && (mask >> v & 1);
    if (inside)
      return false;
  }
  return true;
}

inline bool independent(const hedgehog::Hypergraph &h, const std::vector<Vertex> &set) {
  std::vector<bool> in(h.n(), false);
  for (Vertex v : set)
    in[v] = true;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    bool inside = true;
    for (Vertex v : h.edge(i))
      inside = inside && in[v];
    if (inside)
      return false;
  }
  return true;
}

inline std::size_t max_independent_set(const hedgehog::Hypergraph &h) {
  std::size_t best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << h.n()); ++m)
    if (independent(h, m))
      best = std::max<std::size_t>(best, __builtin_popcountll(m));
  return best;
}

/// Bron–Kerbosch with pivoting on an adjacency predicate.
inline std::size_t max_clique(Vertex n, const std::function<bool(Vertex, Vertex)> &edge) {
  auto adj = [&](Vertex a, Vertex b) { return a != b && edge(a, b); };
  std::size_t best = 0;
  std::function<void(std::vector<Vertex>, std::vector<Vertex>, std::vector<Vertex>)> bk =
      [&](std::vector<Vertex> r, std::vector<Vertex> p, std::vector<Vertex> x) {
        if (p.empty() && x.empty()) {
          best = std::max(best, r.size());
          return;
        }
        const Vertex pivot = !p.empty() ? p[0] : x[0];
        const auto candidates = p;
        for (Vertex v : candidates) {
          if (adj(pivot, v))
            continue;
          std::vector<Vertex> p2, x2;
          for (Vertex w : p)
            if (w != v && adj(v, w))
              p2.push_back(w);
          for (Vertex w : x)
            if (adj(v, w))
              x2.push_back(w);
          auto r2 = r;
          r2.push_back(v);
          bk(r2, p2, x2);
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v)
    all[v] = v;
  bk({}, all, {});
  return best;
}

inline std::uint64_t edge_colour_mask(const CompleteColouring &g, const std::vector<Vertex> &s) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      m |= std::uint64_t{1} << g.edge(s[i], s[j]);
  return m;
}

/// Some s-subset whose internal edges use at most `colours` colours.
inline bool clique_with_few_colours(const CompleteColouring &g, unsigned s, unsigned colours) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n()); ++m)
    if (static_cast<unsigned>(__builtin_popcountll(m)) == s &&
        static_cast<unsigned>(__builtin_popcountll(edge_colour_mask(g, bits_to_set(m)))) <= colours)
      return true;
  return false;
}

/// Some t-subset missing one of the q colours.
inline bool deficient_clique_exists(const CompleteColouring &g, unsigned t, unsigned q) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n()); ++m)
    if (static_cast<unsigned>(__builtin_popcountll(m)) == t &&
        static_cast<unsigned>(__builtin_popcountll(edge_colour_mask(g, bits_to_set(m)))) < q)
      return true;
  return false;
}

inline bool rbg_rainbow(const CompleteColouring &g) {
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b)
      for (Vertex c = b + 1; c < g.n(); ++c)
        if (edge_colour_mask(g, {a, b, c}) == 0b0111)
          return true;
  return false;
}

/// Whether any 4-colouring of K_n is an F-witness, by full enumeration.
inline bool f_witness_exists(unsigned t, Vertex n) {
  const std::uint64_t pairs = std::uint64_t{n} * (n - 1) / 2;
  std::vector<Colour> cols(pairs, 0);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * pairs)); ++code) {
    for (std::uint64_t i = 0; i < pairs; ++i)
      cols[i] = static_cast<Colour>(code >> (2 * i) & 3);
    CompleteColouring g(n, 2, 4, cols);
    if (!rbg_rainbow(g) && !clique_with_few_colours(g, t, 3))
      return true;
  }
  return false;
}

/// Definition check of a hedgehog certificate, written independently of the
/// library verifier.
inline bool embedding_valid(const hedgehog::HedgehogEmbedding &emb, const CompleteColouring &host) {
  const Vertex n = host.n();
  const unsigned m = host.k() - 1;
  std::vector<Vertex> body = emb.body;
  std::sort(body.begin(), body.end());
  if (std::adjacent_find(body.begin(), body.end()) != body.end() || body.empty() || body.back() >= n)
    return false;
  if (emb.colour >= host.q())
    return false;
  std::vector<std::vector<Vertex>> want;
  std::function<void(std::size_t, std::vector<Vertex> &)> subsets = [&](std::size_t i, std::vector<Vertex> &cur) {
    if (cur.size() == m) {
      want.push_back(cur);
      return;
    }
    for (std::size_t j = i; j < body.size(); ++j) {
      cur.push_back(body[j]);
      subsets(j + 1, cur);
      cur.pop_back();
    }
  };
  std::vector<Vertex> cur;
  subsets(0, cur);
  std::vector<std::vector<Vertex>> got;
  std::vector<Vertex> apexes;
  for (const auto &s : emb.spines) {
    got.push_back(s.base);
    apexes.push_back(s.apex);
  }
  std::sort(want.begin(), want.end());
  auto sorted_got = got;
  std::sort(sorted_got.begin(), sorted_got.end());
  if (sorted_got != want)
    return false;
  for (const auto &b : got)
    if (!std::is_sorted(b.begin(), b.end()))
      return false;
  std::sort(apexes.begin(), apexes.end());
  if (std::adjacent_find(apexes.begin(), apexes.end()) != apexes.end())
    return false;
  for (Vertex a : apexes)
    if (a >= n || std::binary_search(body.begin(), body.end(), a))
      return false;
  for (const auto &s : emb.spines) {
    auto e = s.base;
    e.push_back(s.apex);
    if (colour_of(host, e) != emb.colour)
      return false;
  }
  return true;
}

} // namespace oracle

#endif // HEDGEHOG_TESTS_ORACLES_HPP
