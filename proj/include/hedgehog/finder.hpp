#ifndef HEDGEHOG_FINDER_HPP
#define HEDGEHOG_FINDER_HPP

// Monochromatic hedgehog extraction from a 2-colouring of K_n^(3), n >= 4t^3.
//
// Pipeline: count, for every pair uv, the triples of each colour through it;
// label uv with colour c when fewer than C(t,2)+t of those triples have colour
// c; tag vertices by their labelled degree against 2t^2; peel an unlabelled
// set of t vertices inside the majority class; attach spines greedily.

#include "hedgehog/core.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hedgehog::finder {

/// Per-pair triple counts and threshold labels. Works for any q; labels are
/// bit c set iff fewer than `threshold` triples through the pair have colour c.
struct AuxiliaryGraphColouring {
  Vertex n = 0;
  unsigned t = 0;
  unsigned q = 0;
  std::uint64_t threshold = 0;       // C(t,2) + t
  std::vector<std::uint32_t> counts; // q entries per pair, pair-rank major
  std::vector<std::uint8_t> labels;  // bitmask per pair rank

  std::uint8_t label(Vertex u, Vertex v) const noexcept { return labels[pair_rank(u, v)]; }
  bool has_label(Vertex u, Vertex v, Colour c) const noexcept { return label(u, v) >> c & 1u; }
  std::uint32_t count(Vertex u, Vertex v, Colour c) const noexcept {
    return counts[pair_rank(u, v) * q + c];
  }
};

std::uint64_t pair_threshold(unsigned t);

/// Threshold labels for a q-coloured K_n^(3) (q <= 8). One pass over the
/// triples; `threads` > 1 shards the pass by largest vertex.
AuxiliaryGraphColouring label_pairs(const CompleteColouring &colouring, unsigned t,
                                    unsigned threads = 1);

/// label_pairs restricted to 2-colourings.
AuxiliaryGraphColouring pair_profile(const CompleteColouring &colouring, unsigned t,
                                     unsigned threads = 1);

struct VertexClass {
  std::vector<Colour> tag; // kRed or kBlue
  std::vector<std::uint32_t> red_degree;
  std::vector<std::uint32_t> blue_degree;
  std::uint64_t degree_threshold = 0; // 2t^2
  /// A vertex with >= 2t^2 red-labelled and >= 2t^2 blue-labelled edges.
  std::optional<Vertex> claim_violation;
};

VertexClass classify_vertices(const AuxiliaryGraphColouring &aux);

struct BodyChoice {
  Colour colour; // the body spans no edge labelled with this colour
  std::vector<Vertex> body;
};

/// Greedy independent set, in the `colour`-labelled graph, among vertices
/// tagged `colour`; colour defaults to the majority tag (ties go to red).
BodyChoice low_degree_body(const AuxiliaryGraphColouring &aux, const VertexClass &cls, unsigned t,
                           std::optional<Colour> colour = {});

/// Pairs of `body` in colex order, each given the smallest unused outside
/// vertex completing a triple of `colour`.
HedgehogEmbedding embed_spines(const CompleteColouring &colouring, std::span<const Vertex> body,
                               Colour colour);

struct FinderOptions {
  std::optional<Colour> colour; // force the body class instead of the majority
  unsigned threads = 1;
};

/// Full pipeline; the result is checked with the independent verifier before
/// it is returned. Failures raise hedgehog::Error naming the stage.
HedgehogEmbedding find_monochromatic_hedgehog(const CompleteColouring &colouring, unsigned t,
                                              const FinderOptions &options = {});

} // namespace hedgehog::finder

#endif // HEDGEHOG_FINDER_HPP
