#include "hedgehog/extractors.hpp"

#include "bitgraph.hpp"
#include "hedgehog/constructions.hpp"
#include "hedgehog/verifiers.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <random>
#include <sstream>

namespace hedgehog::extractors {

namespace {

std::string join(std::span<const Vertex> vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    out << (i ? " " : "") << vs[i];
  return out.str();
}

constexpr std::uint8_t kAllRbg = 0b111;

} // namespace

Hypergraph rbg_triangle_hypergraph(const finder::AuxiliaryGraphColouring &aux) {
  Hypergraph h(aux.n, 3);
  for (Vertex w = 2; w < aux.n; ++w)
    for (Vertex v = 1; v < w; ++v) {
      const std::uint8_t vw = aux.label(v, w);
      for (Vertex u = 0; u < v; ++u)
        if (((vw | aux.label(u, v) | aux.label(u, w)) & kAllRbg) == kAllRbg) {
          const std::array<Vertex, 3> e{u, v, w};
          h.add_edge(e);
        }
    }
  return h;
}

std::uint64_t count_rbg_triangles(const finder::AuxiliaryGraphColouring &aux) {
  std::uint64_t count = 0;
  for (Vertex w = 2; w < aux.n; ++w)
    for (Vertex v = 1; v < w; ++v) {
      const std::uint8_t vw = aux.label(v, w);
      for (Vertex u = 0; u < v; ++u)
        count += ((vw | aux.label(u, v) | aux.label(u, w)) & kAllRbg) == kAllRbg;
    }
  return count;
}

std::uint64_t spencer_guarantee(std::uint64_t n, std::uint64_t e) {
  if (e == 0)
    return n;
  const double probabilistic = 2.0 / (3.0 * std::sqrt(3.0)) * std::pow(static_cast<double>(n), 1.5) /
                               std::sqrt(static_cast<double>(e));
  const std::uint64_t floor_prob = static_cast<std::uint64_t>(std::floor(probabilistic));
  const std::uint64_t trivial = n > e ? n - e : 0;
  // Keep probability 1 once n >= 3e: the deletion method yields n - e.
  if (n >= 3 * e)
    return trivial;
  return std::max(trivial, floor_prob);
}

namespace {

class IndependentSetBuilder {
public:
  explicit IndependentSetBuilder(const Hypergraph &h) : h_(h), incident_(h.n()) {
    for (std::size_t i = 0; i < h.edge_count(); ++i)
      for (Vertex v : h.edge(i))
        incident_[v].push_back(i);
  }

  // Removes the largest vertex of every edge left inside `in`.
  void delete_edges(std::vector<bool> &in) const {
    for (std::size_t i = 0; i < h_.edge_count(); ++i) {
      const auto e = h_.edge(i);
      if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[v]; }))
        in[e.back()] = false;
    }
  }

  void augment(std::vector<bool> &in) const {
    for (Vertex v = 0; v < h_.n(); ++v) {
      if (in[v])
        continue;
      bool blocked = false;
      for (std::size_t i : incident_[v]) {
        const auto e = h_.edge(i);
        if (std::all_of(e.begin(), e.end(), [&](Vertex w) { return w == v || in[w]; })) {
          blocked = true;
          break;
        }
      }
      if (!blocked)
        in[v] = true;
    }
  }

private:
  const Hypergraph &h_;
  std::vector<std::vector<std::size_t>> incident_;
};

std::vector<Vertex> members(const std::vector<bool> &in) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < in.size(); ++v)
    if (in[v])
      out.push_back(v);
  return out;
}

} // namespace

IndependentSetResult spencer_independent_set(const Hypergraph &h, std::uint64_t seed, unsigned trials) {
  if (h.k() != 3)
    throw Error(ErrorKind::invalid_argument, "independent set extraction needs a 3-uniform hypergraph");
  const Vertex n = h.n();
  const std::uint64_t e = h.edge_count();
  IndependentSetResult result;
  result.guarantee = spencer_guarantee(n, e);
  if (e == 0) {
    result.vertices.resize(n);
    for (Vertex v = 0; v < n; ++v)
      result.vertices[v] = v;
    return result;
  }

  IndependentSetBuilder builder(h);
  // Deterministic candidate: one deletion per edge, size >= n - e.
  std::vector<bool> in(n, true);
  builder.delete_edges(in);
  builder.augment(in);
  result.vertices = members(in);

  const double p = std::min(1.0, std::sqrt(static_cast<double>(n) / (3.0 * static_cast<double>(e))));
  const std::uint64_t cap = std::uint64_t{trials} * 64;
  for (std::uint64_t trial = 0; trial < cap; ++trial) {
    if (trial >= trials && result.vertices.size() >= result.guarantee)
      break;
    ++result.trials;
    std::mt19937_64 rng(constructions::derive_seed(seed, trial));
    std::bernoulli_distribution keep(p);
    for (Vertex v = 0; v < n; ++v)
      in[v] = keep(rng);
    builder.delete_edges(in);
    builder.augment(in);
    auto candidate = members(in);
    if (candidate.size() > result.vertices.size())
      result.vertices = std::move(candidate);
  }
  return result;
}

GallaiColouring GallaiColouring::verify(CompleteColouring colouring) {
  if (colouring.k() != 2 || colouring.q() != 3)
    throw Error(ErrorKind::invalid_argument, "Gallai colouring must be a 3-coloured graph");
  if (auto tri = verifiers::find_rainbow_triangle(colouring, {kRed, kBlue, kGreen}))
    throw Error(ErrorKind::invalid_argument, "rainbow triangle " + join(*tri));
  return GallaiColouring(std::move(colouring));
}

unsigned cube_root_ceil(std::uint64_t n) {
  unsigned s = 0;
  while (std::uint64_t{s} * s * s < n)
    ++s;
  return s;
}

std::vector<Vertex> max_clique_in_colours(const CompleteColouring &graph, std::uint64_t mask,
                                          unsigned threads) {
  if (graph.k() != 2)
    throw Error(ErrorKind::invalid_argument, "clique search needs a graph colouring");
  detail::BitGraph g(graph.n());
  for (Vertex v = 1; v < graph.n(); ++v)
    for (Vertex u = 0; u < v; ++u)
      if (mask >> graph.edge(u, v) & 1u)
        g.add_edge(u, v);
  auto clique = detail::MaxCliqueSolver(g, 0).solve(threads);
  std::sort(clique.begin(), clique.end());
  return clique;
}

namespace {

std::uint64_t colours_of(const CompleteColouring &graph, std::span<const Vertex> vs) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      mask |= std::uint64_t{1} << graph.edge(vs[i], vs[j]);
  return mask;
}

} // namespace

CliqueWitness gallai_two_coloured_clique(const GallaiColouring &g, unsigned threads) {
  const CompleteColouring &c = g.colouring();
  std::vector<Vertex> best;
  for (std::uint64_t mask : {0b011u, 0b101u, 0b110u}) {
    auto clique = max_clique_in_colours(c, mask, threads);
    if (clique.size() > best.size())
      best = std::move(clique);
  }
  const unsigned needed = cube_root_ceil(c.n());
  if (best.size() < needed)
    throw Error(ErrorKind::guarantee_violated,
                "largest two-coloured clique has " + std::to_string(best.size()) + " vertices, below ceil(n^(1/3)) = " +
                    std::to_string(needed) + " on a verified Gallai colouring of K_" + std::to_string(c.n()) +
                    "\n" + to_hcol(c));
  return {best, colours_of(c, best)};
}

std::optional<CliqueWitness> three_colour_clique_search(const CompleteColouring &graph, unsigned s) {
  if (graph.k() != 2)
    throw Error(ErrorKind::invalid_argument, "clique search needs a graph colouring");
  if (graph.q() > 64)
    throw Error(ErrorKind::unsupported, "at most 64 colours");
  const Vertex n = graph.n();
  if (s > n)
    return std::nullopt;
  if (s <= 1) {
    std::vector<Vertex> vs(s);
    for (unsigned i = 0; i < s; ++i)
      vs[i] = i;
    return CliqueWitness{vs, 0};
  }
  if (graph.q() <= 3) {
    std::vector<Vertex> vs(s);
    for (unsigned i = 0; i < s; ++i)
      vs[i] = i;
    return CliqueWitness{vs, colours_of(graph, vs)};
  }
  const std::uint64_t all = graph.q() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << graph.q()) - 1;
  for (unsigned excluded = 0; excluded < graph.q(); ++excluded) {
    const std::uint64_t mask = all & ~(std::uint64_t{1} << excluded);
    // Only exclusions that leave at most three colours matter.
    if (std::popcount(mask) > 3)
      continue;
    detail::BitGraph g(n);
    for (Vertex v = 1; v < n; ++v)
      for (Vertex u = 0; u < v; ++u)
        if (mask >> graph.edge(u, v) & 1u)
          g.add_edge(u, v);
    auto clique = detail::MaxCliqueSolver(g, s).solve();
    if (clique.size() >= s) {
      clique.resize(s);
      std::sort(clique.begin(), clique.end());
      return CliqueWitness{clique, colours_of(graph, clique)};
    }
  }
  return std::nullopt;
}

const char *to_string(FDecision d) {
  switch (d) {
  case FDecision::witness:
    return "witness";
  case FDecision::none:
    return "none";
  case FDecision::undecided:
    return "undecided";
  }
  return "unknown";
}

namespace {

// Edges are assigned in colex order: (u, v) with v major. A triangle or
// t-clique is checked when its last edge (second-largest, largest) is set.
class FExhaustiveSearch {
public:
  FExhaustiveSearch(unsigned t, Vertex n, std::uint64_t budget)
      : t_(t), n_(n), budget_(budget), colouring_(n, 2, 4), pairs_(binomial(n, 2)) {
    for (Vertex v = 1; v < n; ++v)
      for (Vertex u = 0; u < v; ++u)
        endpoints_.emplace_back(u, v);
  }

  FSearchOutcome run() {
    FSearchOutcome out;
    const int r = assign(0, 0);
    out.nodes = nodes_;
    if (r == kFound) {
      out.decision = FDecision::witness;
      out.witness = colouring_;
    } else if (r == kBudget) {
      out.decision = FDecision::undecided;
    } else {
      out.decision = FDecision::none;
    }
    return out;
  }

private:
  static constexpr int kFound = 1, kExhausted = 0, kBudget = -1;

  int assign(std::uint64_t idx, unsigned rbg_used) {
    if (idx == pairs_)
      return kFound;
    const auto [u, v] = endpoints_[idx];
    for (unsigned c = 0; c < 4; ++c) {
      // Symmetry: red, blue, green are introduced in that order.
      if (c < 3 && c > rbg_used)
        continue;
      if (++nodes_ > budget_)
        return kBudget;
      colouring_.set(idx, static_cast<Colour>(c));
      if (!consistent(u, v))
        continue;
      const int r = assign(idx + 1, c < 3 && c == rbg_used ? rbg_used + 1 : rbg_used);
      if (r != kExhausted)
        return r;
    }
    return kExhausted;
  }

  bool consistent(Vertex u, Vertex v) const {
    const Colour uv = colouring_.edge(u, v);
    for (Vertex w = 0; w < u; ++w) {
      const unsigned m = 1u << uv | 1u << colouring_.edge(w, u) | 1u << colouring_.edge(w, v);
      if (m == 0b0111)
        return false;
    }
    if (t_ < 2 || u + 2 < t_)
      return true;
    // Every t-clique {S, u, v}, S a (t-2)-subset of [0, u), must use all 4 colours.
    std::vector<Vertex> chosen;
    return cliques_ok(0, u, v, chosen, 1u << uv);
  }

  bool cliques_ok(Vertex start, Vertex u, Vertex v, std::vector<Vertex> &chosen, unsigned mask) const {
    if (mask == 0b1111)
      return true;
    if (chosen.size() + 2 == t_)
      return false;
    for (Vertex x = start; x + (t_ - 2 - chosen.size()) <= u; ++x) {
      unsigned m = mask | 1u << colouring_.edge(x, u) | 1u << colouring_.edge(x, v);
      for (Vertex y : chosen)
        m |= 1u << colouring_.edge(x, y);
      chosen.push_back(x);
      const bool ok = cliques_ok(x + 1, u, v, chosen, m);
      chosen.pop_back();
      if (!ok)
        return false;
    }
    return true;
  }

  unsigned t_;
  Vertex n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  CompleteColouring colouring_;
  std::uint64_t pairs_;
  std::vector<std::pair<Vertex, Vertex>> endpoints_;
};

} // namespace

FSearchOutcome f_witness_exhaustive(unsigned t, Vertex n, std::uint64_t node_budget) {
  if (t < 2)
    throw Error(ErrorKind::invalid_argument, "t must be at least 2");
  auto out = FExhaustiveSearch(t, n, node_budget).run();
  if (out.witness)
    if (auto bad = verifiers::verify_f_witness(*out.witness, t))
      throw Error(ErrorKind::guarantee_violated, "exhaustive F search produced a bad witness: " + *bad);
  return out;
}

namespace {

// Objective: RBG rainbow triangles plus t-cliques with at most three colours.
class FLocalSearch {
public:
  FLocalSearch(unsigned t, Vertex n) : t_(t), n_(n) {}

  bool run(CompleteColouring &c, std::mt19937_64 &rng, std::uint64_t max_steps, std::uint64_t &steps) {
    std::vector<Vertex> bad;
    for (steps = 0; steps < max_steps; ++steps) {
      if (!pick_violation(c, rng, bad))
        return true;
      std::vector<std::pair<std::uint64_t, Colour>> moves;
      for (std::size_t j = 1; j < bad.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
          for (unsigned col = 0; col < 4; ++col)
            if (col != c.edge(bad[i], bad[j]))
              moves.emplace_back(pair_rank(bad[i], bad[j]), static_cast<Colour>(col));
      auto chosen = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
      if (std::uniform_int_distribution<int>(0, 99)(rng) >= 10) {
        long best = LONG_MAX;
        for (const auto &mv : moves) {
          const long d = delta(c, mv.first, mv.second);
          if (d < best || (d == best && std::uniform_int_distribution<int>(0, 1)(rng))) {
            best = d;
            chosen = mv;
          }
        }
      }
      c.set(chosen.first, chosen.second);
    }
    return !pick_violation(c, rng, bad);
  }

private:
  bool clique_bad(const CompleteColouring &c, std::span<const Vertex> s) const {
    unsigned m = 0;
    for (std::size_t j = 1; j < s.size(); ++j)
      for (std::size_t i = 0; i < j; ++i)
        m |= 1u << c.edge(s[i], s[j]);
    return m != 0b1111;
  }
  static bool rainbow(const CompleteColouring &c, Vertex a, Vertex b, Vertex d) {
    return (1u << c.edge(a, b) | 1u << c.edge(a, d) | 1u << c.edge(b, d)) == 0b0111;
  }

  // Uniformly random violated structure (reservoir sampling).
  bool pick_violation(const CompleteColouring &c, std::mt19937_64 &rng, std::vector<Vertex> &out) const {
    std::uint64_t seen = 0;
    for (SubsetCursor cur(n_, 3); cur.valid(); cur.next()) {
      const auto s = cur.current();
      if (rainbow(c, s[0], s[1], s[2]) && std::uniform_int_distribution<std::uint64_t>(0, seen++)(rng) == 0)
        out.assign(s.begin(), s.end());
    }
    for (SubsetCursor cur(n_, t_); cur.valid(); cur.next())
      if (clique_bad(c, cur.current()) && std::uniform_int_distribution<std::uint64_t>(0, seen++)(rng) == 0)
        out.assign(cur.current().begin(), cur.current().end());
    return seen > 0;
  }

  long violations_through(const CompleteColouring &c, Vertex u, Vertex v) const {
    long total = 0;
    for (Vertex w = 0; w < n_; ++w)
      if (w != u && w != v)
        total += rainbow(c, u, v, w);
    if (t_ >= 2 && n_ >= t_) {
      std::vector<Vertex> rest;
      for (Vertex w = 0; w < n_; ++w)
        if (w != u && w != v)
          rest.push_back(w);
      std::vector<Vertex> s(t_);
      for (SubsetCursor cur(static_cast<Vertex>(rest.size()), t_ - 2); cur.valid(); cur.next()) {
        for (unsigned i = 0; i + 2 < t_; ++i)
          s[i] = rest[cur.current()[i]];
        s[t_ - 2] = u;
        s[t_ - 1] = v;
        total += clique_bad(c, s);
      }
    }
    return total;
  }

  long delta(CompleteColouring &c, std::uint64_t p, Colour to) const {
    const auto uv = unrank(p, 2);
    const Colour from = c.at(p);
    const long before = violations_through(c, uv[0], uv[1]);
    c.set(p, to);
    const long after = violations_through(c, uv[0], uv[1]);
    c.set(p, from);
    return after - before;
  }

  unsigned t_;
  Vertex n_;
};

} // namespace

FSearchOutcome f_witness_local_search(unsigned t, Vertex n, std::uint64_t seed, std::uint64_t restarts,
                                      std::uint64_t max_steps) {
  if (t < 2)
    throw Error(ErrorKind::invalid_argument, "t must be at least 2");
  FSearchOutcome out;
  FLocalSearch search(t, n);
  for (std::uint64_t r = 0; r < restarts; ++r) {
    const std::uint64_t s = constructions::derive_seed(seed, r);
    CompleteColouring c = constructions::random_colouring(n, 2, 4, s);
    std::mt19937_64 rng(constructions::derive_seed(s, 1));
    std::uint64_t steps = 0;
    const bool ok = search.run(c, rng, max_steps, steps);
    out.nodes += steps;
    if (ok && !verifiers::verify_f_witness(c, t)) {
      out.decision = FDecision::witness;
      out.witness = std::move(c);
      return out;
    }
  }
  out.decision = FDecision::undecided;
  return out;
}

FOracleResult f_oracle(unsigned t, Vertex n_cap, const FOracleOptions &options) {
  if (t < 2)
    throw Error(ErrorKind::invalid_argument, "t must be at least 2");
  FOracleResult result;
  result.t = t;
  result.lower_bound = 1;
  for (Vertex n = 1; n <= n_cap; ++n) {
    FOracleStep step;
    step.n = n;
    const bool exhaustive = n <= options.exhaustive_cap;
    if (exhaustive) {
      auto ex = f_witness_exhaustive(t, n, options.node_budget);
      step.exhaustive_run = true;
      step.exhaustive = ex.decision;
      step.nodes = ex.nodes;
      step.witness = std::move(ex.witness);
    }
    if (!exhaustive || options.cross_check) {
      auto ls = f_witness_local_search(t, n, constructions::derive_seed(options.seed, n), options.restarts,
                                       options.max_steps);
      step.witness_run = true;
      step.witness_mode = ls.decision;
      if (!step.witness)
        step.witness = std::move(ls.witness);
      // A found witness contradicts an exhaustive "none".
      if (exhaustive && step.exhaustive == FDecision::none && ls.decision == FDecision::witness)
        result.modes_agree = false;
      if (exhaustive && step.exhaustive == FDecision::witness && ls.decision != FDecision::witness)
        result.modes_agree = false;
    }
    const bool has_witness = step.witness.has_value();
    const bool proven_none = step.exhaustive_run && step.exhaustive == FDecision::none;
    result.steps.push_back(std::move(step));
    if (has_witness) {
      result.lower_bound = n + 1;
      continue;
    }
    if (proven_none)
      result.value = n;
    else
      result.lower_bound = n;
    return result;
  }
  return result;
}

StagedFailure::StagedFailure(int stage, std::string stage_name, const std::string &message,
                             std::string counterexample, std::vector<PipelineStage> completed)
    : Error(ErrorKind::staged_failure, "stage " + std::to_string(stage) + " (" + stage_name + "): " + message),
      stage_(stage), stage_name_(std::move(stage_name)), counterexample_(std::move(counterexample)),
      completed_(std::move(completed)) {}

namespace {

class Pipeline {
public:
  Pipeline(const CompleteColouring &c, unsigned t, const ScaleOverrides &scale)
      : c_(c), t_(t), scale_(scale) {}

  PipelineResult run() {
    // Stage 1: threshold labels, yellow when unlabelled.
    const auto aux = finder::label_pairs(c_, t_, scale_.threads);
    std::uint64_t yellow = 0, doubly = 0;
    for (auto l : aux.labels) {
      yellow += l == 0;
      doubly += std::popcount(l) >= 2;
    }
    done(1, "auxiliary-labels",
         "theta=" + std::to_string(aux.threshold) + " yellow=" + std::to_string(yellow) +
             " multi-labelled=" + std::to_string(doubly));

    // Stage 2: RBG triangles and their count bounds.
    const Hypergraph h = rbg_triangle_hypergraph(aux);
    const std::uint64_t n = c_.n();
    const std::uint64_t e = h.edge_count();
    const std::uint64_t intermediate = 3 * aux.threshold * binomial(n, 2);
    if (e > intermediate || (t_ >= 3 && e > std::uint64_t{t_} * t_ * n * n))
      fail(2, "rbg-triangles", "triangle count " + std::to_string(e) + " exceeds its bound", to_hcol(c_));
    done(2, "rbg-triangles",
         "count=" + std::to_string(e) + " bound=" + std::to_string(std::uint64_t{t_} * t_ * n * n));

    // Stage 3: independent set U.
    const auto is = spencer_independent_set(h, scale_.seed, scale_.spencer_trials);
    const std::vector<Vertex> &U = is.vertices;
    if (auto bad = verifiers::verify_independent_set(h, U))
      fail(3, "independent-set", *bad, join(U));
    done(3, "independent-set", "size=" + std::to_string(U.size()) + " guarantee=" + std::to_string(is.guarantee));

    // Stage 4: doubly-labelled graph G on U; a vertex of G-degree >= t
    // gives a hedgehog in the colour missing from its labels.
    auto in_g = [&](Vertex a, Vertex b) { return std::popcount(aux.label(a, b)) >= 2; };
    for (Vertex u : U) {
      std::vector<Vertex> nbrs;
      for (Vertex w : U)
        if (w != u && in_g(u, w))
          nbrs.push_back(w);
      if (nbrs.size() < t_)
        continue;
      const std::uint8_t common = aux.label(u, nbrs.front());
      for (Vertex w : nbrs)
        if (aux.label(u, w) != common)
          fail(4, "doubly-labelled-graph",
               "edges at vertex " + std::to_string(u) + " carry different label pairs",
               std::to_string(u) + " " + std::to_string(nbrs.front()) + " " + std::to_string(w));
      const auto missing = static_cast<Colour>(std::countr_zero(static_cast<unsigned>(~common & kAllRbg)));
      std::vector<Vertex> body(nbrs.begin(), nbrs.begin() + t_);
      done(4, "doubly-labelled-graph",
           "vertex " + std::to_string(u) + " has G-degree " + std::to_string(nbrs.size()) +
               "; neighbourhood avoids label " + std::to_string(missing));
      return finish(4, body, missing);
    }
    done(4, "doubly-labelled-graph", "max G-degree < t");

    // Stage 5: peel to V with no G-edge.
    std::vector<Vertex> V;
    {
      std::vector<bool> dropped(c_.n(), false);
      for (Vertex u : U) {
        if (dropped[u])
          continue;
        V.push_back(u);
        for (Vertex w : U)
          if (w != u && in_g(u, w))
            dropped[w] = true;
      }
    }
    done(5, "peel", "size=" + std::to_string(V.size()));

    // Stage 6: single-label 4-colouring of V; clique with at most 3 colours.
    CompleteColouring chi(static_cast<Vertex>(V.size()), 2, 4);
    for (Vertex j = 1; j < V.size(); ++j)
      for (Vertex i = 0; i < j; ++i) {
        const auto l = aux.label(V[i], V[j]) & kAllRbg;
        if (std::popcount(static_cast<unsigned>(l)) > 1)
          fail(6, "three-colour-clique", "multi-labelled edge survived peeling", join(V));
        chi.set(pair_rank(i, j), l == 0 ? kYellow : static_cast<Colour>(std::countr_zero(static_cast<unsigned>(l))));
      }
    const unsigned s = scale_.clique_target.value_or(t_ * t_ * t_);
    auto clique = three_colour_clique_search(chi, s);
    if (!clique)
      fail(6, "three-colour-clique",
           "no " + std::to_string(s) + "-clique with at most three colours among " + std::to_string(V.size()) +
               " vertices",
           to_hcol(chi));
    std::vector<Vertex> W;
    for (Vertex i : clique->vertices)
      W.push_back(V[i]);
    for (Colour x : {kRed, kBlue, kGreen})
      if (!(clique->colour_mask >> x & 1u)) {
        done(6, "three-colour-clique", "clique of order " + std::to_string(W.size()) + " misses label " +
                                           std::to_string(x));
        return finish(6, std::vector<Vertex>(W.begin(), W.begin() + t_), x);
      }
    done(6, "three-colour-clique", "clique of order " + std::to_string(W.size()) + " misses yellow");

    // Stage 7: Gallai extraction on the RBG-coloured clique.
    CompleteColouring rbg(static_cast<Vertex>(W.size()), 2, 3);
    for (Vertex j = 1; j < W.size(); ++j)
      for (Vertex i = 0; i < j; ++i)
        rbg.set(pair_rank(i, j), chi.edge(clique->vertices[i], clique->vertices[j]));
    const auto gallai = GallaiColouring::verify(std::move(rbg));
    const CliqueWitness z = gallai_two_coloured_clique(gallai, scale_.threads);
    if (z.vertices.size() < t_)
      fail(7, "gallai-clique",
           "two-coloured clique of order " + std::to_string(z.vertices.size()) + " is smaller than t",
           to_hcol(gallai.colouring()));
    Colour y = kRed;
    while (z.colour_mask >> y & 1u)
      ++y;
    std::vector<Vertex> body;
    for (std::size_t i = 0; i < t_; ++i)
      body.push_back(W[z.vertices[i]]);
    done(7, "gallai-clique", "two-coloured clique of order " + std::to_string(z.vertices.size()) +
                                 " misses label " + std::to_string(y));
    return finish(7, body, y);
  }

private:
  void done(int index, std::string name, std::string summary) {
    stages_.push_back({index, std::move(name), std::move(summary)});
  }

  [[noreturn]] void fail(int index, const std::string &name, const std::string &message, std::string witness) {
    throw StagedFailure(index, name, message, std::move(witness), stages_);
  }

  PipelineResult finish(int stage, const std::vector<Vertex> &body, Colour colour) {
    HedgehogEmbedding emb;
    try {
      emb = finder::embed_spines(c_, body, colour);
    } catch (const Error &err) {
      fail(stage, "embed-spines", err.what(), join(body));
    }
    if (auto v = verifiers::verify_embedding(emb, c_))
      throw Error(ErrorKind::guarantee_violated, std::string("pipeline embedding rejected: ") + v->detail);
    done(8, "embed-spines", "colour " + std::to_string(colour) + " body " + join(body));
    return {std::move(emb), stages_, stage};
  }

  const CompleteColouring &c_;
  unsigned t_;
  ScaleOverrides scale_;
  std::vector<PipelineStage> stages_;
};

} // namespace

PipelineResult three_colour_pipeline(const CompleteColouring &colouring, unsigned t, const ScaleOverrides &scale) {
  if (colouring.k() != 3 || colouring.q() != 3)
    throw Error(ErrorKind::invalid_argument, "pipeline needs a 3-colouring of triples");
  if (t < 2)
    throw Error(ErrorKind::invalid_argument, "t must be at least 2");
  if (scale.clique_target && *scale.clique_target < t)
    throw Error(ErrorKind::invalid_argument, "clique target must be at least t");
  return Pipeline(colouring, t, scale).run();
}

} // namespace hedgehog::extractors
