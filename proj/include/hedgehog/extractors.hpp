#ifndef HEDGEHOG_EXTRACTORS_HPP
#define HEDGEHOG_EXTRACTORS_HPP

// Independent sets in sparse 3-graphs, two-coloured cliques in Gallai
// colourings, the F(t) oracle and the three-colour hedgehog pipeline.

#include "hedgehog/core.hpp"
#include "hedgehog/finder.hpp"
#include "hedgehog/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hedgehog::extractors {

/// Triangles of the auxiliary colouring whose edge labels together contain
/// red, blue and green (one edge may carry two of them).
Hypergraph rbg_triangle_hypergraph(const finder::AuxiliaryGraphColouring &aux);
std::uint64_t count_rbg_triangles(const finder::AuxiliaryGraphColouring &aux);

struct IndependentSetResult {
  std::vector<Vertex> vertices;
  std::uint64_t guarantee = 0; // n - e when n >= 3e, else max(n - e, floor(2/(3 sqrt 3) n^1.5 / sqrt e))
  std::uint64_t trials = 0;
};

std::uint64_t spencer_guarantee(std::uint64_t n, std::uint64_t e);

/// Deletion method with keep probability min(1, sqrt(n / 3e)), best of the
/// seeded trials, then greedy augmentation. Keeps sampling (up to 64x the
/// requested trials) until the guarantee is met.
IndependentSetResult spencer_independent_set(const Hypergraph &h, std::uint64_t seed,
                                             unsigned trials = 32);

/// A 3-coloured K_n with no triangle using three distinct colours.
class GallaiColouring {
public:
  /// Throws invalid_argument if the colouring is not k = 2, q = 3 or has a
  /// rainbow triangle.
  static GallaiColouring verify(CompleteColouring colouring);
  const CompleteColouring &colouring() const noexcept { return colouring_; }

private:
  explicit GallaiColouring(CompleteColouring c) : colouring_(std::move(c)) {}
  CompleteColouring colouring_;
};

/// Smallest s with s^3 >= n.
unsigned cube_root_ceil(std::uint64_t n);

/// Largest clique over the three two-colour union graphs; throws
/// guarantee_violated if it is smaller than ceil(n^(1/3)).
CliqueWitness gallai_two_coloured_clique(const GallaiColouring &g, unsigned threads = 1);

/// Maximum clique in the graph whose edges have a colour in `mask`
/// (exact branch and bound). Exposed for cross-checking.
std::vector<Vertex> max_clique_in_colours(const CompleteColouring &graph, std::uint64_t mask,
                                          unsigned threads = 1);

/// An s-clique using at most three colours, or none (exhaustive).
std::optional<CliqueWitness> three_colour_clique_search(const CompleteColouring &graph, unsigned s);

enum class FDecision { witness, none, undecided };
const char *to_string(FDecision d);

struct FSearchOutcome {
  FDecision decision = FDecision::undecided;
  std::optional<CompleteColouring> witness;
  std::uint64_t nodes = 0;
};

/// Backtracking over edge colourings of K_n modulo permutations of {R,B,G}:
/// decides whether some 4-colouring has no RBG rainbow triangle and no
/// t-clique with at most three colours.
FSearchOutcome f_witness_exhaustive(unsigned t, Vertex n, std::uint64_t node_budget);

/// Min-conflicts search for the same object; can only ever find witnesses.
FSearchOutcome f_witness_local_search(unsigned t, Vertex n, std::uint64_t seed,
                                      std::uint64_t restarts, std::uint64_t max_steps);

struct FOracleOptions {
  Vertex exhaustive_cap = 8;
  std::uint64_t node_budget = std::uint64_t{1} << 32;
  std::uint64_t seed = 1;
  std::uint64_t restarts = 32;
  std::uint64_t max_steps = 20000;
  /// Also run the local search where the exhaustive search applies.
  bool cross_check = true;
};

struct FOracleStep {
  Vertex n = 0;
  FDecision exhaustive = FDecision::undecided; // undecided also when not run
  bool exhaustive_run = false;
  FDecision witness_mode = FDecision::undecided;
  bool witness_run = false;
  std::optional<CompleteColouring> witness;
  std::uint64_t nodes = 0;
};

struct FOracleResult {
  unsigned t = 0;
  std::optional<unsigned> value; // F(t) when determined
  unsigned lower_bound = 0;      // F(t) >= lower_bound always
  std::vector<FOracleStep> steps;
  bool modes_agree = true;
};

FOracleResult f_oracle(unsigned t, Vertex n_cap, const FOracleOptions &options = {});

struct ScaleOverrides {
  std::optional<unsigned> clique_target; // stage 6 clique order; default t^3
  unsigned spencer_trials = 32;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct PipelineStage {
  int index;
  std::string name;
  std::string summary;
};

struct PipelineResult {
  HedgehogEmbedding embedding;
  std::vector<PipelineStage> stages;
  int final_stage = 0;
};

/// Raised when a stage cannot proceed at the given scale.
class StagedFailure : public Error {
public:
  StagedFailure(int stage, std::string stage_name, const std::string &message,
                std::string counterexample, std::vector<PipelineStage> completed);
  int stage() const noexcept { return stage_; }
  const std::string &stage_name() const noexcept { return stage_name_; }
  const std::string &counterexample() const noexcept { return counterexample_; }
  const std::vector<PipelineStage> &completed() const noexcept { return completed_; }

private:
  int stage_;
  std::string stage_name_;
  std::string counterexample_;
  std::vector<PipelineStage> completed_;
};

PipelineResult three_colour_pipeline(const CompleteColouring &colouring, unsigned t,
                                     const ScaleOverrides &scale = {});

} // namespace hedgehog::extractors

#endif // HEDGEHOG_EXTRACTORS_HPP
