#ifndef HEDGEHOG_VERIFIERS_HPP
#define HEDGEHOG_VERIFIERS_HPP

// Exact checkers for every certificate the toolkit emits. Nothing here calls
// into the producers (constructions, finder, extractors).

#include "hedgehog/core.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>

namespace hedgehog::verifiers {

enum class ViolationKind {
  shape,
  vertex_range,
  body_duplicate,
  base_not_in_body,
  base_duplicate,
  spine_duplicate,
  spine_in_body,
  wrong_colour,
};

const char *to_string(ViolationKind kind);

struct EmbeddingViolation {
  ViolationKind kind;
  std::string detail;
  std::vector<Vertex> base; // the failing (k-1)-subset, when there is one
};

std::optional<EmbeddingViolation> verify_embedding(const HedgehogEmbedding &emb,
                                                   const CompleteColouring &host);

/// Exact decision: is there a copy of H_t^(k) (k = 3 or 4) all of whose edges
/// have `colour`? Bodies are enumerated with pruning; spines are assigned by
/// maximum bipartite matching between body (k-1)-subsets and outside vertices.
std::optional<HedgehogEmbedding> has_monochromatic_hedgehog(const CompleteColouring &host,
                                                            unsigned t, Colour colour);

using Triangle = std::array<Vertex, 3>;

/// First triangle (colex order) whose edge colours are exactly `palette`.
std::optional<Triangle> find_rainbow_triangle(const CompleteColouring &graph,
                                              std::array<Colour, 3> palette);
inline bool rainbow_triangle_free(const CompleteColouring &graph, std::array<Colour, 3> palette) {
  return !find_rainbow_triangle(graph, palette);
}

/// A t-clique missing at least one of the q colours, if any exists.
std::optional<CliqueWitness> find_deficient_clique(const CompleteColouring &graph, unsigned t,
                                                   unsigned q);
inline bool every_clique_all_colours(const CompleteColouring &graph, unsigned t, unsigned q) {
  return !find_deficient_clique(graph, t, q);
}

// The remaining checkers return a description of the first problem found.

std::optional<std::string> verify_independent_set(const Hypergraph &h,
                                                  std::span<const Vertex> set);

/// Checks the vertex list is a clique of distinct in-range vertices whose
/// internal colours are exactly `witness.colour_mask` and number at most
/// `max_colours`.
std::optional<std::string> verify_clique_witness(const CompleteColouring &graph,
                                                 const CliqueWitness &witness,
                                                 unsigned max_colours);

/// 4-coloured K_n with no {R,B,G} rainbow triangle and no t-clique using at
/// most three colours.
std::optional<std::string> verify_f_witness(const CompleteColouring &graph, unsigned t);

/// Every triple of `lifted` carries a palette colour absent from the three
/// edge colours beneath it in `base`; lifted index i is the i-th smallest
/// palette colour.
std::optional<std::string> verify_complement_lift(const CompleteColouring &base,
                                                  const CompleteColouring &lifted,
                                                  std::span<const Colour> palette);

struct RamseyVerdict {
  enum class Outcome { holds, counterexample, refused };
  Outcome outcome = Outcome::refused;
  std::optional<CompleteColouring> counterexample;
  std::uint64_t colourings_checked = 0;
  std::uint64_t raw_space = 0; // q^C(n,3), saturated at UINT64_MAX
  std::string note;
};

const char *to_string(RamseyVerdict::Outcome outcome);

inline constexpr std::uint64_t kDefaultExhaustiveLimit = std::uint64_t{1} << 27;

/// Decides whether every q-colouring of K_n^(3) contains a monochromatic H_t,
/// enumerating colourings up to permutation of the colours.
RamseyVerdict exhaustive_ramsey_check(unsigned t, unsigned q, Vertex n, unsigned threads = 1,
                                      std::uint64_t limit = kDefaultExhaustiveLimit);

} // namespace hedgehog::verifiers

#endif // HEDGEHOG_VERIFIERS_HPP
