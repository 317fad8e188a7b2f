#ifndef HEDGEHOG_CORE_HPP
#define HEDGEHOG_CORE_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hedgehog {

using Vertex = std::uint32_t;
using Colour = std::uint8_t;

// Global palette order. Yellow is the "unlabelled" colour of the auxiliary
// 4-colourings built by the three-colour pipeline.
inline constexpr Colour kRed = 0;
inline constexpr Colour kBlue = 1;
inline constexpr Colour kGreen = 2;
inline constexpr Colour kYellow = 3;

enum class ErrorKind {
  invalid_argument,
  infeasible_spec,
  precondition_violated,
  unsupported,
  embedding_failed,
  no_body,
  guarantee_violated,
  staged_failure,
  parse_error,
  refused,
};

const char *to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message);
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Exact binomial coefficient. Throws `invalid_argument` on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Colex (combinadic) ranking: rank({s_0 < ... < s_{k-1}}) = sum_i C(s_i, i+1).
// Values of C(n, i) for n < kBinomialTableSize and i <= 4 are tabulated.
inline constexpr std::size_t kBinomialTableSize = 1024;

std::uint64_t rank(std::span<const Vertex> subset, Vertex n);
std::uint64_t rank_unchecked(std::span<const Vertex> subset) noexcept;
std::vector<Vertex> unrank(std::uint64_t index, unsigned k);
void unrank_into(std::uint64_t index, std::span<Vertex> out);

/// Colex rank of the pair {u, v}, u != v, either order.
inline std::uint64_t pair_rank(Vertex u, Vertex v) noexcept {
  if (u > v)
    std::swap(u, v);
  return std::uint64_t{v} * (v - 1) / 2 + u;
}

std::uint64_t triple_rank(Vertex u, Vertex v, Vertex w) noexcept;

/// Steps through all k-subsets of [n] in colex order; `current()` has rank
/// equal to the number of preceding `next()` calls.
class SubsetCursor {
public:
  SubsetCursor(Vertex n, unsigned k);
  bool valid() const noexcept { return valid_; }
  std::span<const Vertex> current() const noexcept { return subset_; }
  void next() noexcept;

private:
  Vertex n_;
  std::vector<Vertex> subset_;
  bool valid_;
};

/// A q-colouring of every k-subset of [n], stored one byte per edge at the
/// colex rank of the edge. k = 2 instances are graph colourings.
class CompleteColouring {
public:
  CompleteColouring(Vertex n, unsigned k, unsigned q, Colour fill = 0);
  CompleteColouring(Vertex n, unsigned k, unsigned q, std::vector<Colour> colours);

  Vertex n() const noexcept { return n_; }
  unsigned k() const noexcept { return k_; }
  unsigned q() const noexcept { return q_; }
  std::uint64_t size() const noexcept { return colours_.size(); }
  std::span<const Colour> colours() const noexcept { return colours_; }

  Colour at(std::uint64_t index) const noexcept { return colours_[index]; }
  void set(std::uint64_t index, Colour c);

  /// Colour of an arbitrary k-subset given in any order.
  Colour of(std::span<const Vertex> subset) const;
  Colour edge(Vertex u, Vertex v) const noexcept { return colours_[pair_rank(u, v)]; }
  Colour triple(Vertex u, Vertex v, Vertex w) const noexcept {
    return colours_[triple_rank(u, v, w)];
  }

  /// Bitmask of colours actually used.
  std::uint64_t census() const noexcept;

  friend bool operator==(const CompleteColouring &, const CompleteColouring &) = default;

private:
  Vertex n_;
  unsigned k_;
  unsigned q_;
  std::vector<Colour> colours_;
};

struct HedgehogShape {
  unsigned t;
  unsigned k;
  std::uint64_t vertex_count;
  std::uint64_t edge_count;
};

HedgehogShape hedgehog_shape(unsigned t, unsigned k);

/// One hedgehog edge: a (k-1)-subset of the body (sorted) plus its apex.
struct Spine {
  std::vector<Vertex> base;
  Vertex apex;
  friend bool operator==(const Spine &, const Spine &) = default;
};

/// Certificate of a monochromatic hedgehog in some host colouring.
struct HedgehogEmbedding {
  Colour colour = 0;
  std::vector<Vertex> body;
  std::vector<Spine> spines;
  friend bool operator==(const HedgehogEmbedding &, const HedgehogEmbedding &) = default;
};

/// Vertex set together with the colours on its internal edges.
struct CliqueWitness {
  std::vector<Vertex> vertices;
  std::uint64_t colour_mask = 0;
  friend bool operator==(const CliqueWitness &, const CliqueWitness &) = default;
};

/// k-uniform hypergraph on [n], edges stored flat and sorted within each edge.
class Hypergraph {
public:
  Hypergraph(Vertex n, unsigned k) : n_(n), k_(k) {}

  Vertex n() const noexcept { return n_; }
  unsigned k() const noexcept { return k_; }
  std::size_t edge_count() const noexcept { return k_ == 0 ? 0 : flat_.size() / k_; }
  std::span<const Vertex> edge(std::size_t i) const noexcept {
    return {flat_.data() + i * k_, k_};
  }
  void add_edge(std::span<const Vertex> e);

private:
  Vertex n_;
  unsigned k_;
  std::vector<Vertex> flat_;
};

/// Edge set of H_t^(k): body [0, t), spines t, t+1, ... in colex order of
/// their bases.
Hypergraph hedgehog_hypergraph(unsigned t, unsigned k);

/// Exact degeneracy via min-degree peeling.
unsigned degeneracy(const Hypergraph &h);

// HCOL v1 text format.
void write_hcol(std::ostream &out, const CompleteColouring &c);
CompleteColouring read_hcol(std::istream &in);
std::string to_hcol(const CompleteColouring &c);
CompleteColouring from_hcol(const std::string &text);

} // namespace hedgehog

#endif // HEDGEHOG_CORE_HPP
