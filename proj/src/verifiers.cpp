#include "hedgehog/verifiers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

namespace hedgehog::verifiers {

const char *to_string(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::shape:
    return "shape";
  case ViolationKind::vertex_range:
    return "vertex-range";
  case ViolationKind::body_duplicate:
    return "body-duplicate";
  case ViolationKind::base_not_in_body:
    return "base-not-in-body";
  case ViolationKind::base_duplicate:
    return "base-duplicate";
  case ViolationKind::spine_duplicate:
    return "injectivity";
  case ViolationKind::spine_in_body:
    return "spine-in-body";
  case ViolationKind::wrong_colour:
    return "colour";
  }
  return "unknown";
}

const char *to_string(RamseyVerdict::Outcome outcome) {
  switch (outcome) {
  case RamseyVerdict::Outcome::holds:
    return "holds";
  case RamseyVerdict::Outcome::counterexample:
    return "counterexample";
  case RamseyVerdict::Outcome::refused:
    return "refused";
  }
  return "unknown";
}

namespace {

std::string join(std::span<const Vertex> vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    out << (i ? " " : "") << vs[i];
  return out.str();
}

EmbeddingViolation violation(ViolationKind kind, std::string detail, std::vector<Vertex> base = {}) {
  return {kind, std::move(detail), std::move(base)};
}

} // namespace

std::optional<EmbeddingViolation> verify_embedding(const HedgehogEmbedding &emb,
                                                   const CompleteColouring &host) {
  const unsigned k = host.k();
  const unsigned m = k - 1;
  const Vertex n = host.n();
  const auto t = emb.body.size();

  if (k < 3)
    return violation(ViolationKind::shape, "host colouring must be 3- or 4-uniform");
  if (t < m)
    return violation(ViolationKind::shape, "body smaller than k-1");
  if (emb.colour >= host.q())
    return violation(ViolationKind::shape, "colour out of range");
  if (emb.spines.size() != binomial(t, m))
    return violation(ViolationKind::shape, "expected " + std::to_string(binomial(t, m)) +
                                               " spines, got " + std::to_string(emb.spines.size()));

  std::vector<bool> in_body(n, false);
  for (Vertex v : emb.body) {
    if (v >= n)
      return violation(ViolationKind::vertex_range, "body vertex " + std::to_string(v));
    if (in_body[v])
      return violation(ViolationKind::body_duplicate, "body vertex " + std::to_string(v));
    in_body[v] = true;
  }

  std::set<std::vector<Vertex>> seen_bases;
  std::vector<bool> used_apex(n, false);
  std::vector<Vertex> edge(k);
  for (const Spine &s : emb.spines) {
    if (s.base.size() != m)
      return violation(ViolationKind::shape, "spine base of wrong size", s.base);
    for (std::size_t i = 0; i < m; ++i) {
      if (s.base[i] >= n || !in_body[s.base[i]])
        return violation(ViolationKind::base_not_in_body, "base " + join(s.base), s.base);
      if (i > 0 && s.base[i - 1] >= s.base[i])
        return violation(ViolationKind::shape, "base not strictly increasing: " + join(s.base), s.base);
    }
    if (!seen_bases.insert(s.base).second)
      return violation(ViolationKind::base_duplicate, "base " + join(s.base), s.base);
    if (s.apex >= n)
      return violation(ViolationKind::vertex_range, "apex " + std::to_string(s.apex), s.base);
    if (in_body[s.apex])
      return violation(ViolationKind::spine_in_body, "apex " + std::to_string(s.apex) + " of base " + join(s.base),
                       s.base);
    if (used_apex[s.apex])
      return violation(ViolationKind::spine_duplicate,
                       "apex " + std::to_string(s.apex) + " reused at base " + join(s.base), s.base);
    used_apex[s.apex] = true;
  }
  for (const Spine &s : emb.spines) {
    std::copy(s.base.begin(), s.base.end(), edge.begin());
    edge[m] = s.apex;
    std::sort(edge.begin(), edge.end());
    const Colour c = host.at(rank_unchecked(edge));
    if (c != emb.colour)
      return violation(ViolationKind::wrong_colour,
                       "edge " + join(edge) + " has colour " + std::to_string(c) + ", expected " +
                           std::to_string(emb.colour),
                       s.base);
  }
  return std::nullopt;
}

namespace {

class HedgehogSearch {
public:
  HedgehogSearch(const CompleteColouring &host, unsigned t, Colour colour)
      : host_(host), t_(t), colour_(colour), k_(host.k()), m_(host.k() - 1), n_(host.n()) {
    candidates_.assign(binomial(n_, m_), 0);
    std::vector<Vertex> sub(m_);
    for (SubsetCursor cur(n_, k_); cur.valid(); cur.next()) {
      if (host_.at(rank_unchecked(cur.current())) != colour_)
        continue;
      const auto e = cur.current();
      for (unsigned skip = 0; skip < k_; ++skip) {
        for (unsigned i = 0, j = 0; i < k_; ++i)
          if (i != skip)
            sub[j++] = e[i];
        ++candidates_[rank_unchecked(sub)];
      }
    }
    in_body_.assign(n_, false);
  }

  std::optional<HedgehogEmbedding> run() {
    extend(0);
    return std::move(found_);
  }

private:
  // Adds vertices in increasing order; every new base must have a candidate.
  bool extend(Vertex start) {
    if (body_.size() == t_)
      return try_match();
    const auto need = static_cast<Vertex>(t_ - body_.size());
    for (Vertex v = start; v + need <= n_; ++v) {
      if (!new_bases_viable(v))
        continue;
      body_.push_back(v);
      in_body_[v] = true;
      if (extend(v + 1))
        return true;
      in_body_[v] = false;
      body_.pop_back();
    }
    return false;
  }

  bool new_bases_viable(Vertex v) {
    if (body_.size() + 1 < m_)
      return true;
    std::vector<Vertex> sub(m_);
    for (SubsetCursor cur(static_cast<Vertex>(body_.size()), m_ - 1); cur.valid(); cur.next()) {
      for (unsigned i = 0; i + 1 < m_; ++i)
        sub[i] = body_[cur.current()[i]];
      sub[m_ - 1] = v;
      if (candidates_[rank_unchecked(sub)] == 0)
        return false;
    }
    return true;
  }

  bool try_match() {
    // Left side: bases of the body; right side: vertices outside the body.
    std::vector<std::vector<Vertex>> bases;
    std::vector<std::vector<Vertex>> adj;
    std::vector<Vertex> edge(k_);
    for (SubsetCursor cur(t_, m_); cur.valid(); cur.next()) {
      std::vector<Vertex> base(m_);
      for (unsigned i = 0; i < m_; ++i)
        base[i] = body_[cur.current()[i]];
      std::vector<Vertex> options;
      for (Vertex w = 0; w < n_; ++w) {
        if (in_body_[w])
          continue;
        std::copy(base.begin(), base.end(), edge.begin());
        edge[m_] = w;
        std::sort(edge.begin(), edge.end());
        if (host_.at(rank_unchecked(edge)) == colour_)
          options.push_back(w);
      }
      if (options.empty())
        return false;
      bases.push_back(std::move(base));
      adj.push_back(std::move(options));
    }
    // Fewest options first.
    std::vector<std::size_t> order(bases.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return adj[a].size() < adj[b].size(); });

    constexpr std::size_t kFree = SIZE_MAX;
    std::vector<std::size_t> owner(n_, kFree);
    std::vector<unsigned> stamp(n_, 0);
    unsigned round = 0;
    std::function<bool(std::size_t)> augment = [&](std::size_t left) {
      for (Vertex w : adj[left]) {
        if (stamp[w] == round)
          continue;
        stamp[w] = round;
        if (owner[w] == kFree || augment(owner[w])) {
          owner[w] = left;
          return true;
        }
      }
      return false;
    };
    for (std::size_t left : order) {
      ++round;
      if (!augment(left))
        return false;
    }

    HedgehogEmbedding emb;
    emb.colour = colour_;
    emb.body = body_;
    std::vector<Vertex> apex_of(bases.size());
    for (Vertex w = 0; w < n_; ++w)
      if (owner[w] != kFree)
        apex_of[owner[w]] = w;
    for (std::size_t i = 0; i < bases.size(); ++i)
      emb.spines.push_back({bases[i], apex_of[i]});
    found_ = std::move(emb);
    return true;
  }

  const CompleteColouring &host_;
  unsigned t_;
  Colour colour_;
  unsigned k_, m_;
  Vertex n_;
  std::vector<std::uint32_t> candidates_;
  std::vector<Vertex> body_;
  std::vector<bool> in_body_;
  std::optional<HedgehogEmbedding> found_;
};

} // namespace

std::optional<HedgehogEmbedding> has_monochromatic_hedgehog(const CompleteColouring &host, unsigned t,
                                                            Colour colour) {
  if (host.k() != 3 && host.k() != 4)
    throw Error(ErrorKind::invalid_argument, "hedgehog search needs a 3- or 4-uniform colouring");
  const HedgehogShape shape = hedgehog_shape(t, host.k());
  if (host.n() < shape.vertex_count || colour >= host.q())
    return std::nullopt;
  return HedgehogSearch(host, t, colour).run();
}

std::optional<Triangle> find_rainbow_triangle(const CompleteColouring &graph,
                                              std::array<Colour, 3> palette) {
  if (graph.k() != 2)
    throw Error(ErrorKind::invalid_argument, "rainbow check needs a graph colouring");
  if (palette[0] == palette[1] || palette[0] == palette[2] || palette[1] == palette[2])
    throw Error(ErrorKind::invalid_argument, "palette colours must be distinct");
  auto slot = [&](Colour c) -> unsigned {
    for (unsigned i = 0; i < 3; ++i)
      if (palette[i] == c)
        return 1u << i;
    return 8u;
  };
  const Vertex n = graph.n();
  for (Vertex w = 2; w < n; ++w)
    for (Vertex v = 1; v < w; ++v) {
      const unsigned vw = slot(graph.edge(v, w));
      if (vw == 8u)
        continue;
      for (Vertex u = 0; u < v; ++u)
        if ((vw | slot(graph.edge(u, v)) | slot(graph.edge(u, w))) == 7u)
          return Triangle{u, v, w};
    }
  return std::nullopt;
}

namespace {

struct DeficiencySearch {
  const CompleteColouring &g;
  unsigned t;
  std::uint64_t full;
  std::vector<Vertex> clique;

  bool grow(Vertex start, std::uint64_t mask) {
    if (mask == full)
      return false;
    if (clique.size() == t)
      return true;
    for (Vertex v = start; v + (t - clique.size()) <= g.n(); ++v) {
      std::uint64_t m = mask;
      for (Vertex u : clique)
        m |= std::uint64_t{1} << g.edge(u, v);
      clique.push_back(v);
      if (grow(v + 1, m))
        return true;
      clique.pop_back();
    }
    return false;
  }
};

} // namespace

std::optional<CliqueWitness> find_deficient_clique(const CompleteColouring &graph, unsigned t,
                                                   unsigned q) {
  if (graph.k() != 2)
    throw Error(ErrorKind::invalid_argument, "clique check needs a graph colouring");
  if (q == 0 || q > 64 || graph.q() > 64)
    throw Error(ErrorKind::invalid_argument, "colour count must be in [1, 64]");
  if (t > graph.n())
    return std::nullopt;
  const std::uint64_t full = q == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << q) - 1;
  DeficiencySearch s{graph, t, full, {}};
  if (!s.grow(0, 0))
    return std::nullopt;
  CliqueWitness w;
  w.vertices = s.clique;
  for (std::size_t i = 0; i < w.vertices.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      w.colour_mask |= std::uint64_t{1} << graph.edge(w.vertices[j], w.vertices[i]);
  return w;
}

std::optional<std::string> verify_independent_set(const Hypergraph &h, std::span<const Vertex> set) {
  std::vector<bool> in(h.n(), false);
  for (Vertex v : set) {
    if (v >= h.n())
      return "vertex " + std::to_string(v) + " out of range";
    if (in[v])
      return "vertex " + std::to_string(v) + " repeated";
    in[v] = true;
  }
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto e = h.edge(i);
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[v]; }))
      return "set contains edge " + join(e);
  }
  return std::nullopt;
}

std::optional<std::string> verify_clique_witness(const CompleteColouring &graph,
                                                 const CliqueWitness &witness,
                                                 unsigned max_colours) {
  if (graph.k() != 2)
    return "host is not a graph colouring";
  std::vector<bool> in(graph.n(), false);
  for (Vertex v : witness.vertices) {
    if (v >= graph.n())
      return "vertex " + std::to_string(v) + " out of range";
    if (in[v])
      return "vertex " + std::to_string(v) + " repeated";
    in[v] = true;
  }
  std::uint64_t mask = 0;
  const auto &vs = witness.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      mask |= std::uint64_t{1} << graph.edge(vs[i], vs[j]);
  if (mask != witness.colour_mask)
    return "claimed colour set does not match the clique's edges";
  if (static_cast<unsigned>(std::popcount(mask)) > max_colours)
    return "clique uses " + std::to_string(std::popcount(mask)) + " colours, more than " +
           std::to_string(max_colours);
  return std::nullopt;
}

std::optional<std::string> verify_f_witness(const CompleteColouring &graph, unsigned t) {
  if (graph.k() != 2 || graph.q() != 4)
    return "F-witness must be a 4-coloured graph";
  if (auto tri = find_rainbow_triangle(graph, {kRed, kBlue, kGreen}))
    return "rainbow triangle " + join(*tri);
  if (auto clique = find_deficient_clique(graph, t, 4))
    return "clique " + join(clique->vertices) + " uses at most three colours";
  return std::nullopt;
}

std::optional<std::string> verify_complement_lift(const CompleteColouring &base,
                                                  const CompleteColouring &lifted,
                                                  std::span<const Colour> palette) {
  if (base.k() != 2 || lifted.k() != 3 || base.n() != lifted.n())
    return "shape mismatch between base graph colouring and lifted triple colouring";
  if (lifted.q() != palette.size())
    return "lifted colour count differs from palette size";
  std::vector<Colour> sorted(palette.begin(), palette.end());
  std::sort(sorted.begin(), sorted.end());
  const Vertex n = base.n();
  std::uint64_t idx = 0;
  for (Vertex w = 2; w < n; ++w)
    for (Vertex v = 1; v < w; ++v)
      for (Vertex u = 0; u < v; ++u, ++idx) {
        const Colour c = sorted[lifted.at(idx)];
        if (base.edge(u, v) == c || base.edge(u, w) == c || base.edge(v, w) == c)
          return "triple " + std::to_string(u) + " " + std::to_string(v) + " " + std::to_string(w) +
                 " coloured with a colour present on its edges";
      }
  return std::nullopt;
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / base)
      return UINT64_MAX;
    r *= base;
  }
  return r;
}

// Colourings canonical under colour permutation: colours appear in order of
// first use (a restricted growth string).
bool canonical(std::span<const Colour> colours) {
  unsigned next = 0;
  for (Colour c : colours) {
    if (c > next)
      return false;
    if (c == next)
      ++next;
  }
  return true;
}

} // namespace

RamseyVerdict exhaustive_ramsey_check(unsigned t, unsigned q, Vertex n, unsigned threads,
                                      std::uint64_t limit) {
  if (q < 1 || q > 16)
    throw Error(ErrorKind::invalid_argument, "q must be in [1, 16]");
  hedgehog_shape(t, 3);
  RamseyVerdict verdict;
  const std::uint64_t edges = binomial(n, 3);
  verdict.raw_space = saturating_pow(q, edges);
  if (verdict.raw_space > limit) {
    verdict.outcome = RamseyVerdict::Outcome::refused;
    verdict.note = "space q^C(n,3) = " + std::to_string(q) + "^" + std::to_string(edges) +
                   " exceeds limit " + std::to_string(limit);
    return verdict;
  }

  const std::uint64_t space = verdict.raw_space;
  threads = std::max(1u, threads);
  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::atomic<std::uint64_t> checked{0};

  auto decode = [&](std::uint64_t index, std::vector<Colour> &colours) {
    for (std::uint64_t i = 0; i < edges; ++i) {
      colours[i] = static_cast<Colour>(index % q);
      index /= q;
    }
  };
  auto worker = [&](unsigned id) {
    std::vector<Colour> colours(edges);
    std::uint64_t local = 0;
    for (std::uint64_t index = id; index < space; index += threads) {
      if (index > best.load(std::memory_order_relaxed))
        break;
      decode(index, colours);
      if (!canonical(colours))
        continue;
      ++local;
      CompleteColouring c(n, 3, q, colours);
      bool any = false;
      for (unsigned col = 0; col < q && !any; ++col)
        any = has_monochromatic_hedgehog(c, t, static_cast<Colour>(col)).has_value();
      if (!any) {
        std::uint64_t cur = best.load();
        while (index < cur && !best.compare_exchange_weak(cur, index)) {
        }
        break;
      }
    }
    checked += local;
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id)
      pool.emplace_back(worker, id);
  }

  verdict.colourings_checked = checked.load();
  if (best.load() == UINT64_MAX) {
    verdict.outcome = RamseyVerdict::Outcome::holds;
  } else {
    std::vector<Colour> colours(edges);
    decode(best.load(), colours);
    verdict.outcome = RamseyVerdict::Outcome::counterexample;
    verdict.counterexample = CompleteColouring(n, 3, q, std::move(colours));
  }
  return verdict;
}

} // namespace hedgehog::verifiers
