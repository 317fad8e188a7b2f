#include "hedgehog/constructions.hpp"

#include "hedgehog/verifiers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>

namespace hedgehog::constructions {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Multiply-shift reduction; stable across standard library implementations.
inline unsigned draw(std::mt19937_64 &rng, unsigned bound) {
  return static_cast<unsigned>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

} // namespace

CompleteColouring random_colouring(Vertex n, unsigned k, unsigned q, std::uint64_t seed) {
  if (q < 1)
    throw Error(ErrorKind::invalid_argument, "q must be at least 1");
  CompleteColouring c(n, k, q);
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < c.size(); ++i)
    c.set(i, static_cast<Colour>(draw(rng, q)));
  return c;
}

namespace {

// Min-conflicts search over edge colours. Objective: number of t-cliques
// missing some colour.
class ScatteredLocalSearch {
public:
  ScatteredLocalSearch(Vertex n, unsigned t, unsigned q) : n_(n), t_(t), q_(q) {
    const std::uint64_t cliques = binomial(n, t);
    const std::uint64_t pairs_per = binomial(t, 2);
    if (cliques * pairs_per > (std::uint64_t{1} << 27))
      throw Error(ErrorKind::unsupported, "local search instance too large (C(n,t) * C(t,2) > 2^27)");
    const std::uint64_t pairs = binomial(n, 2);
    offsets_.assign(pairs + 1, 0);
    offsets_[0] = 0;
    // Each pair {u,v} lies in C(n-2, t-2) cliques.
    const std::uint64_t per_pair = binomial(n - 2, t - 2);
    for (std::uint64_t p = 0; p < pairs; ++p)
      offsets_[p + 1] = offsets_[p] + per_pair;
    members_.assign(offsets_[pairs], 0);
    clique_pairs_.reserve(cliques * pairs_per);
    std::vector<std::uint64_t> fill(offsets_.begin(), offsets_.end() - 1);
    std::uint32_t r = 0;
    for (SubsetCursor cur(n, t); cur.valid(); cur.next(), ++r) {
      const auto s = cur.current();
      for (unsigned j = 1; j < t; ++j)
        for (unsigned i = 0; i < j; ++i) {
          const auto p = pair_rank(s[i], s[j]);
          members_[fill[p]++] = r;
          clique_pairs_.push_back(static_cast<std::uint32_t>(p));
        }
    }
    counts_.assign(cliques * q, 0);
    missing_.assign(cliques, 0);
    position_.assign(cliques, -1);
  }

  // Returns true when the colouring reaches zero deficient cliques.
  bool run(CompleteColouring &c, std::mt19937_64 &rng, std::uint64_t max_steps, std::uint64_t &steps) {
    reset(c);
    const unsigned pairs_per = t_ * (t_ - 1) / 2;
    std::vector<std::pair<std::uint32_t, Colour>> moves;
    for (steps = 0; steps < max_steps; ++steps) {
      if (deficient_.empty())
        return true;
      const std::uint32_t clique = deficient_[draw(rng, static_cast<unsigned>(deficient_.size()))];
      moves.clear();
      const Colour *cnt = &counts_[std::uint64_t{clique} * q_];
      for (unsigned i = 0; i < pairs_per; ++i) {
        const std::uint32_t p = clique_pairs_[std::uint64_t{clique} * pairs_per + i];
        for (unsigned b = 0; b < q_; ++b)
          if (cnt[b] == 0)
            moves.emplace_back(p, static_cast<Colour>(b));
      }
      std::pair<std::uint32_t, Colour> chosen = moves[draw(rng, static_cast<unsigned>(moves.size()))];
      if (draw(rng, 100) >= kNoisePercent) {
        long best = LONG_MAX;
        unsigned ties = 0;
        for (const auto &mv : moves) {
          const long d = delta(c, mv.first, mv.second);
          if (d < best) {
            best = d;
            ties = 1;
            chosen = mv;
          } else if (d == best && draw(rng, ++ties) == 0) {
            chosen = mv;
          }
        }
      }
      apply(c, chosen.first, chosen.second);
    }
    return deficient_.empty();
  }

private:
  static constexpr unsigned kNoisePercent = 5;

  void reset(const CompleteColouring &c) {
    std::fill(counts_.begin(), counts_.end(), 0);
    deficient_.clear();
    const unsigned pairs_per = t_ * (t_ - 1) / 2;
    for (std::uint64_t r = 0; r < missing_.size(); ++r) {
      Colour *cnt = &counts_[r * q_];
      for (unsigned i = 0; i < pairs_per; ++i)
        ++cnt[c.at(clique_pairs_[r * pairs_per + i])];
      unsigned miss = 0;
      for (unsigned b = 0; b < q_; ++b)
        miss += cnt[b] == 0;
      missing_[r] = static_cast<Colour>(miss);
      position_[r] = -1;
      if (miss > 0)
        insert(static_cast<std::uint32_t>(r));
    }
  }

  long delta(const CompleteColouring &c, std::uint32_t p, Colour b) const {
    const Colour a = c.at(p);
    long d = 0;
    for (std::uint64_t i = offsets_[p]; i < offsets_[p + 1]; ++i) {
      const std::uint32_t r = members_[i];
      const Colour *cnt = &counts_[std::uint64_t{r} * q_];
      const int after = missing_[r] - (cnt[b] == 0) + (cnt[a] == 1);
      d += (after > 0) - (missing_[r] > 0);
    }
    return d;
  }

  void apply(CompleteColouring &c, std::uint32_t p, Colour b) {
    const Colour a = c.at(p);
    c.set(p, b);
    for (std::uint64_t i = offsets_[p]; i < offsets_[p + 1]; ++i) {
      const std::uint32_t r = members_[i];
      Colour *cnt = &counts_[std::uint64_t{r} * q_];
      int miss = missing_[r];
      if (--cnt[a] == 0)
        ++miss;
      if (cnt[b]++ == 0)
        --miss;
      const bool was = missing_[r] > 0;
      missing_[r] = static_cast<Colour>(miss);
      if (was && miss == 0)
        erase(r);
      else if (!was && miss > 0)
        insert(r);
    }
  }

  void insert(std::uint32_t r) {
    position_[r] = static_cast<std::int64_t>(deficient_.size());
    deficient_.push_back(r);
  }
  void erase(std::uint32_t r) {
    const auto pos = position_[r];
    const std::uint32_t last = deficient_.back();
    deficient_[pos] = last;
    position_[last] = pos;
    deficient_.pop_back();
    position_[r] = -1;
  }

  Vertex n_;
  unsigned t_, q_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> members_;
  std::vector<std::uint32_t> clique_pairs_;
  std::vector<Colour> counts_;
  std::vector<Colour> missing_;
  std::vector<std::int64_t> position_;
  std::vector<std::uint32_t> deficient_;
};

} // namespace

ScatteredResult find_scattered_colouring(const ScatteredColouringSpec &spec) {
  if (spec.q < 1 || spec.q > 64)
    throw Error(ErrorKind::invalid_argument, "q must be in [1, 64]");
  if (spec.t < 2 || binomial(spec.t, 2) < spec.q)
    throw Error(ErrorKind::infeasible_spec, "a " + std::to_string(spec.t) + "-clique has " +
                                                std::to_string(spec.t < 2 ? 0 : binomial(spec.t, 2)) +
                                                " edges, fewer than q = " + std::to_string(spec.q));
  if (spec.t > 255)
    throw Error(ErrorKind::unsupported, "t too large");

  ScatteredResult result;
  SearchReport &rep = result.report;
  rep.operation = "find_scattered_colouring";
  rep.seed = spec.seed;
  rep.param("n", std::to_string(spec.n));
  rep.param("t", std::to_string(spec.t));
  rep.param("q", std::to_string(spec.q));
  rep.param("mode", spec.mode == SearchMode::rejection ? "rejection" : "local-search");
  rep.param("max_tries", std::to_string(spec.max_tries));
  if (spec.mode == SearchMode::local_search)
    rep.param("max_steps", std::to_string(spec.max_steps));

  const unsigned threads = std::max(1u, spec.threads);
  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::atomic<std::uint64_t> tries{0};
  std::mutex mutex;
  std::optional<CompleteColouring> winner;
  std::uint64_t winner_steps = 0;

  auto worker = [&](unsigned id) {
    std::optional<ScatteredLocalSearch> local;
    if (spec.mode == SearchMode::local_search && spec.t <= spec.n)
      local.emplace(spec.n, spec.t, spec.q);
    for (std::uint64_t attempt = id; attempt < spec.max_tries; attempt += threads) {
      if (attempt > best.load())
        break;
      ++tries;
      const std::uint64_t s = derive_seed(spec.seed, attempt);
      CompleteColouring c = random_colouring(spec.n, 2, spec.q, s);
      std::uint64_t steps = 0;
      if (local) {
        std::mt19937_64 rng(derive_seed(s, 1));
        local->run(c, rng, spec.max_steps, steps);
      }
      if (!verifiers::every_clique_all_colours(c, spec.t, spec.q))
        continue;
      std::lock_guard lock(mutex);
      if (attempt < best.load()) {
        best = attempt;
        winner = std::move(c);
        winner_steps = steps;
      }
      break;
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id)
      pool.emplace_back(worker, id);
  }

  rep.tries = tries.load();
  if (winner) {
    rep.outcome = "found";
    rep.winning_try = static_cast<std::int64_t>(best.load());
    rep.detail("winning_seed", std::to_string(derive_seed(spec.seed, best.load())));
    if (spec.mode == SearchMode::local_search)
      rep.detail("steps", std::to_string(winner_steps));
    result.colouring = std::move(winner);
  } else {
    rep.outcome = "exhausted";
  }
  return result;
}

CompleteColouring complement_lift(const CompleteColouring &graph, std::span<const Colour> palette) {
  if (graph.k() != 2)
    throw Error(ErrorKind::invalid_argument, "complement lift needs a graph colouring");
  std::vector<Colour> sorted(palette.begin(), palette.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::invalid_argument, "palette must be nonempty with distinct colours");

  const Vertex n = graph.n();
  CompleteColouring out(n, 3, static_cast<unsigned>(sorted.size()));
  std::uint64_t idx = 0;
  for (Vertex w = 2; w < n; ++w)
    for (Vertex v = 1; v < w; ++v) {
      const Colour vw = graph.edge(v, w);
      for (Vertex u = 0; u < v; ++u, ++idx) {
        const Colour uv = graph.edge(u, v), uw = graph.edge(u, w);
        std::size_t i = 0;
        while (i < sorted.size() && (sorted[i] == uv || sorted[i] == uw || sorted[i] == vw))
          ++i;
        if (i == sorted.size())
          throw Error(ErrorKind::precondition_violated,
                      "triangle " + std::to_string(u) + " " + std::to_string(v) + " " +
                          std::to_string(w) + " contains every palette colour");
        out.set(idx, static_cast<Colour>(i));
      }
    }
  return out;
}

CompleteColouring kr_quad_lift(const CompleteColouring &graph) {
  if (graph.k() != 2 || graph.q() != 2)
    throw Error(ErrorKind::invalid_argument, "KR lift needs a 2-coloured graph");
  const Vertex n = graph.n();
  CompleteColouring out(n, 4, 2);
  auto mono = [&](Vertex a, Vertex b, Vertex c, Colour col) {
    return graph.edge(a, b) == col && graph.edge(a, c) == col && graph.edge(b, c) == col;
  };
  std::uint64_t idx = 0;
  for (SubsetCursor cur(n, 4); cur.valid(); cur.next(), ++idx) {
    const auto s = cur.current();
    const std::array<std::array<Vertex, 3>, 4> tri{{{s[0], s[1], s[2]},
                                                    {s[0], s[1], s[3]},
                                                    {s[0], s[2], s[3]},
                                                    {s[1], s[2], s[3]}}};
    bool red = false, blue = false;
    for (const auto &x : tri) {
      red = red || mono(x[0], x[1], x[2], kRed);
      blue = blue || mono(x[0], x[1], x[2], kBlue);
    }
    out.set(idx, red ? kRed : (blue ? kBlue : kRed));
  }
  return out;
}

unsigned quad_set_colour_count(unsigned q) {
  unsigned total = 0;
  for (unsigned s = 1; s <= std::min(4u, q); ++s)
    total += static_cast<unsigned>(binomial(q, s));
  return total;
}

Colour colour_subset_index(std::uint32_t mask, unsigned q) {
  const auto size = static_cast<unsigned>(std::popcount(mask));
  if (size == 0 || size > 4 || (q < 32 && mask >> q))
    throw Error(ErrorKind::invalid_argument, "colour subset must be a nonempty subset of [q] of size <= 4");
  std::uint64_t index = 0;
  for (unsigned s = 1; s < size; ++s)
    index += binomial(q, s);
  unsigned i = 0;
  for (unsigned c = 0; c < q; ++c)
    if (mask >> c & 1u)
      index += binomial(c, ++i);
  return static_cast<Colour>(index);
}

std::uint32_t colour_subset_from_index(Colour index, unsigned q) {
  std::uint64_t r = index;
  unsigned size = 1;
  while (size <= std::min(4u, q) && r >= binomial(q, size))
    r -= binomial(q, size++);
  if (size > std::min(4u, q))
    throw Error(ErrorKind::invalid_argument, "colour subset index out of range");
  std::uint32_t mask = 0;
  for (Vertex v : unrank(r, size))
    mask |= 1u << v;
  return mask;
}

CompleteColouring quad_set_lift(const CompleteColouring &triples) {
  if (triples.k() != 3)
    throw Error(ErrorKind::invalid_argument, "set lift needs a triple colouring");
  if (triples.q() > 8)
    throw Error(ErrorKind::unsupported, "set lift supports at most 8 input colours");
  const unsigned q = triples.q();
  const Vertex n = triples.n();
  CompleteColouring out(n, 4, quad_set_colour_count(q));
  std::uint64_t idx = 0;
  for (SubsetCursor cur(n, 4); cur.valid(); cur.next(), ++idx) {
    const auto s = cur.current();
    const std::uint32_t mask = (1u << triples.triple(s[0], s[1], s[2])) |
                               (1u << triples.triple(s[1], s[2], s[3])) |
                               (1u << triples.triple(s[0], s[2], s[3])) |
                               (1u << triples.triple(s[0], s[1], s[3]));
    out.set(idx, colour_subset_index(mask, q));
  }
  return out;
}

CompleteColouring lex_product(const CompleteColouring &outer, const CompleteColouring &inner) {
  if (outer.k() != 2 || inner.k() != 2)
    throw Error(ErrorKind::invalid_argument, "lex product needs graph colourings");
  const Vertex p = inner.n();
  const Vertex n = outer.n() * p;
  CompleteColouring out(n, 2, std::max(outer.q(), inner.q()));
  std::uint64_t idx = 0;
  for (Vertex y = 1; y < n; ++y)
    for (Vertex x = 0; x < y; ++x, ++idx) {
      const Vertex a = x / p, b = y / p;
      out.set(idx, a != b ? outer.edge(a, b) : inner.edge(x % p, y % p));
    }
  return out;
}

unsigned gallai_base_size(unsigned t) {
  if (t < 3)
    return 2;
  const double l = std::log(static_cast<double>(t));
  const auto size = static_cast<unsigned>(std::floor(t / (16.0 * l * l)));
  return std::max(2u, size);
}

namespace {

// Clique number of the graph on [n] whose edges are those coloured in `mask`.
unsigned clique_number(const CompleteColouring &g, std::uint64_t mask) {
  const Vertex n = g.n();
  unsigned best = std::min<Vertex>(n, 1);
  std::vector<Vertex> clique;
  auto grow = [&](auto &&self, Vertex start) -> void {
    best = std::max(best, static_cast<unsigned>(clique.size()));
    for (Vertex v = start; v < n; ++v) {
      if (clique.size() + (n - v) <= best)
        return;
      bool ok = true;
      for (Vertex u : clique)
        ok = ok && (mask >> g.edge(u, v) & 1u);
      if (!ok)
        continue;
      clique.push_back(v);
      self(self, v + 1);
      clique.pop_back();
    }
  };
  grow(grow, 0);
  return best;
}

} // namespace

std::optional<GallaiWitness> gallai_lower_bound_witness(unsigned t, std::uint64_t seed,
                                                        std::optional<unsigned> base_size,
                                                        std::uint64_t max_tries, SearchReport *report) {
  if (t < 2)
    throw Error(ErrorKind::invalid_argument, "t must be at least 2");
  const unsigned b = base_size.value_or(gallai_base_size(t));
  if (b < 1 || b > 16)
    throw Error(ErrorKind::unsupported, "base size must be in [1, 16]");
  const double bound = 4.0 * std::log(static_cast<double>(t));

  SearchReport rep;
  rep.operation = "gallai_lower_bound_witness";
  rep.seed = seed;
  rep.param("t", std::to_string(t));
  rep.param("base_size", std::to_string(b));
  rep.param("clique_bound", std::to_string(bound));
  rep.param("max_tries", std::to_string(max_tries));

  const std::array<std::array<Colour, 3>, 3> palettes{{{kRed, kBlue, kYellow},
                                                       {kRed, kGreen, kYellow},
                                                       {kBlue, kGreen, kYellow}}};
  const bool want_surjective = binomial(b, 2) >= 3;
  std::vector<CompleteColouring> factors;
  for (std::size_t f = 0; f < palettes.size(); ++f) {
    const auto &pal = palettes[f];
    std::optional<CompleteColouring> found;
    for (std::uint64_t attempt = 0; attempt < max_tries && !found; ++attempt) {
      ++rep.tries;
      std::mt19937_64 rng(derive_seed(seed, f * max_tries + attempt));
      CompleteColouring c(b, 2, 4);
      std::uint64_t used = 0;
      for (std::uint64_t i = 0; i < c.size(); ++i) {
        const Colour col = pal[draw(rng, 3)];
        c.set(i, col);
        used |= 1u << col;
      }
      if (want_surjective && std::popcount(used) != 3)
        continue;
      bool ok = true;
      for (int x = 0; x < 3 && ok; ++x)
        for (int y = x + 1; y < 3 && ok; ++y)
          ok = clique_number(c, (1u << pal[x]) | (1u << pal[y])) < bound;
      if (ok)
        found = std::move(c);
    }
    if (!found) {
      rep.outcome = "exhausted";
      rep.detail("failed_factor", std::to_string(f));
      if (report)
        *report = rep;
      return std::nullopt;
    }
    factors.push_back(std::move(*found));
  }

  CompleteColouring product = lex_product(lex_product(factors[0], factors[1]), factors[2]);
  if (auto tri = verifiers::find_rainbow_triangle(product, {kRed, kBlue, kGreen}))
    throw Error(ErrorKind::guarantee_violated, "lex product has an RBG rainbow triangle");
  unsigned achieved = product.n() + 1;
  for (unsigned s = 2; s <= product.n(); ++s)
    if (verifiers::every_clique_all_colours(product, s, 4)) {
      achieved = s;
      break;
    }
  rep.outcome = "found";
  rep.detail("n", std::to_string(product.n()));
  rep.detail("achieved_t", std::to_string(achieved));
  if (report)
    *report = rep;
  return GallaiWitness{std::move(product), b, bound, achieved, rep};
}

} // namespace hedgehog::constructions
