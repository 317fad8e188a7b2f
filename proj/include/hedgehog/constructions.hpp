#ifndef HEDGEHOG_CONSTRUCTIONS_HPP
#define HEDGEHOG_CONSTRUCTIONS_HPP

// Lower-bound colouring generators: random and scattered graph colourings,
// and the lifts from graph / triple colourings to higher uniformity.

#include "hedgehog/core.hpp"
#include "hedgehog/report.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace hedgehog::constructions {

/// splitmix64 mix of (seed, stream); used to derive per-restart seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Each edge colour i.i.d. uniform on [0, q).
CompleteColouring random_colouring(Vertex n, unsigned k, unsigned q, std::uint64_t seed);

enum class SearchMode { rejection, local_search };

struct ScatteredColouringSpec {
  Vertex n = 0;
  unsigned t = 0;
  unsigned q = 4;
  std::uint64_t seed = 0;
  std::uint64_t max_tries = 100;
  SearchMode mode = SearchMode::local_search;
  std::uint64_t max_steps = 20000; // per local-search restart
  unsigned threads = 1;
};

struct ScatteredResult {
  std::optional<CompleteColouring> colouring; // empty when exhausted
  SearchReport report;
};

/// Searches for a k = 2 colouring of K_n in which every t-clique shows all
/// q colours. The result depends only on (spec, winning try), never on the
/// thread count.
ScatteredResult find_scattered_colouring(const ScatteredColouringSpec &spec);

/// Colours each triple by the smallest palette colour missing from its three
/// edges. Output colour i means palette colour sorted(palette)[i], so a
/// palette {0, .., p-1} keeps its indices.
CompleteColouring complement_lift(const CompleteColouring &graph, std::span<const Colour> palette);

/// 4-sets with a red triangle become red, else blue if they hold a blue
/// triangle, else red.
CompleteColouring kr_quad_lift(const CompleteColouring &graph);

/// Number of nonempty colour subsets of size <= 4 drawn from [q].
unsigned quad_set_colour_count(unsigned q);
/// Canonical index of a colour subset: by size, then colex rank.
Colour colour_subset_index(std::uint32_t mask, unsigned q);
std::uint32_t colour_subset_from_index(Colour index, unsigned q);

/// Colours each 4-set by the set of colours on its four triples.
CompleteColouring quad_set_lift(const CompleteColouring &triples);

/// Vertex (a, i) of the product is a * p + i for outer vertex a and inner
/// vertex i.
CompleteColouring lex_product(const CompleteColouring &outer, const CompleteColouring &inner);

struct GallaiWitness {
  CompleteColouring colouring;
  unsigned base_size = 0;
  double clique_bound = 0;  // 4 ln t: union of two palette colours stays below it
  unsigned achieved_t = 0;  // every achieved_t-clique uses all four colours
  SearchReport report;
};

/// Base size used for a given t: floor(t / (16 ln^2 t)) clamped to >= 2.
unsigned gallai_base_size(unsigned t);

/// Lex product of three 3-colourings over palettes {R,B,Y}, {R,G,Y}, {B,G,Y}.
/// Empty when the base search is exhausted (see the report).
std::optional<GallaiWitness> gallai_lower_bound_witness(unsigned t, std::uint64_t seed,
                                                        std::optional<unsigned> base_size = {},
                                                        std::uint64_t max_tries = 1000,
                                                        SearchReport *report = nullptr);

} // namespace hedgehog::constructions

#endif // HEDGEHOG_CONSTRUCTIONS_HPP
