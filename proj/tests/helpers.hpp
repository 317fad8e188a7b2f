#ifndef HEDGEHOG_TESTS_HELPERS_HPP
#define HEDGEHOG_TESTS_HELPERS_HPP

#include "hedgehog/constructions.hpp"
#include "hedgehog/core.hpp"

#include <random>

namespace helpers {

using namespace hedgehog;

inline constexpr unsigned kAdversarialVariants = 5;

/// Structured 2-colourings of K_n^(3) built from graph colourings and vertex
/// partitions; `seed % kAdversarialVariants` picks the construction.
inline CompleteColouring adversarial_colouring(Vertex n, std::uint64_t seed) {
  const unsigned variant = seed % kAdversarialVariants;
  CompleteColouring out(n, 3, 2);
  std::mt19937_64 rng(constructions::derive_seed(seed, 77));
  switch (variant) {
  case 0: { // complement lift of a random 4-colouring, colours {0,1} and {2,3} merged
    const auto g = constructions::random_colouring(n, 2, 4, seed);
    const std::vector<Colour> palette{0, 1, 2, 3};
    const auto lifted = constructions::complement_lift(g, palette);
    for (std::uint64_t i = 0; i < lifted.size(); ++i)
      out.set(i, lifted.at(i) >= 2);
    break;
  }
  case 1: { // majority edge colour of a random 2-coloured graph
    const auto g = constructions::random_colouring(n, 2, 2, seed);
    std::uint64_t i = 0;
    for (SubsetCursor cur(n, 3); cur.valid(); cur.next(), ++i) {
      const auto s = cur.current();
      out.set(i, g.edge(s[0], s[1]) + g.edge(s[0], s[2]) + g.edge(s[1], s[2]) >= 2);
    }
    break;
  }
  case 2: { // red exactly on red triangles of a random graph
    const auto g = constructions::random_colouring(n, 2, 2, seed);
    std::uint64_t i = 0;
    for (SubsetCursor cur(n, 3); cur.valid(); cur.next(), ++i) {
      const auto s = cur.current();
      out.set(i, !(g.edge(s[0], s[1]) == 0 && g.edge(s[0], s[2]) == 0 && g.edge(s[1], s[2]) == 0));
    }
    break;
  }
  case 3: { // random bipartition: red iff at least two vertices on side A
    std::vector<bool> side(n);
    for (Vertex v = 0; v < n; ++v)
      side[v] = rng() & 1;
    std::uint64_t i = 0;
    for (SubsetCursor cur(n, 3); cur.valid(); cur.next(), ++i) {
      const auto s = cur.current();
      out.set(i, side[s[0]] + side[s[1]] + side[s[2]] < 2);
    }
    break;
  }
  default: { // heavily biased random colouring
    std::bernoulli_distribution blue(0.08);
    for (std::uint64_t i = 0; i < out.size(); ++i)
      out.set(i, blue(rng));
    break;
  }
  }
  return out;
}

/// Flips one field of a valid embedding; the result is always invalid for a
/// host in which the original was valid, unless the flip is a no-op (never).
inline HedgehogEmbedding mutate(const HedgehogEmbedding &emb, Vertex n, std::mt19937_64 &rng) {
  HedgehogEmbedding m = emb;
  for (;;) {
    const unsigned field = std::uniform_int_distribution<unsigned>(0, 3)(rng);
    auto pick = [&](std::size_t size) { return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng); };
    auto other_vertex = [&](Vertex old) {
      Vertex v;
      do
        v = std::uniform_int_distribution<Vertex>(0, n)(rng);
      while (v == old);
      return v;
    };
    switch (field) {
    case 0:
      m.colour = static_cast<Colour>(m.colour ^ 1);
      return m;
    case 1: {
      auto &b = m.body[pick(m.body.size())];
      b = other_vertex(b);
      return m;
    }
    case 2: {
      auto &s = m.spines[pick(m.spines.size())];
      s.apex = other_vertex(s.apex);
      return m;
    }
    default: {
      auto &s = m.spines[pick(m.spines.size())];
      auto &b = s.base[pick(s.base.size())];
      b = other_vertex(b);
      return m;
    }
    }
  }
}

} // namespace helpers

#endif // HEDGEHOG_TESTS_HELPERS_HPP
