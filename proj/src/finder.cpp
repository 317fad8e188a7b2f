#include "hedgehog/finder.hpp"

#include "hedgehog/verifiers.hpp"

#include <algorithm>
#include <thread>

namespace hedgehog::finder {

std::uint64_t pair_threshold(unsigned t) { return binomial(t, 2) + t; }

namespace {

void count_range(const CompleteColouring &c, Vertex w_begin, Vertex w_end, unsigned q,
                 std::vector<std::uint32_t> &counts) {
  std::uint64_t idx = binomial(w_begin, 3);
  for (Vertex w = w_begin; w < w_end; ++w) {
    const std::uint64_t row_w = std::uint64_t{w} * (w - 1) / 2;
    for (Vertex v = 1; v < w; ++v) {
      const std::uint64_t row_v = std::uint64_t{v} * (v - 1) / 2;
      std::uint32_t *vw = &counts[(row_w + v) * q];
      for (Vertex u = 0; u < v; ++u, ++idx) {
        const Colour col = c.at(idx);
        ++counts[(row_v + u) * q + col];
        ++counts[(row_w + u) * q + col];
        ++vw[col];
      }
    }
  }
}

} // namespace

AuxiliaryGraphColouring label_pairs(const CompleteColouring &colouring, unsigned t, unsigned threads) {
  if (colouring.k() != 3)
    throw Error(ErrorKind::invalid_argument, "pair labels need a 3-uniform colouring");
  if (colouring.q() > 8)
    throw Error(ErrorKind::unsupported, "pair labels support at most 8 colours");
  if (colouring.n() < 3)
    throw Error(ErrorKind::invalid_argument, "pair labels need n >= 3");
  if (t < 2)
    throw Error(ErrorKind::invalid_argument, "t must be at least 2");

  AuxiliaryGraphColouring aux;
  aux.n = colouring.n();
  aux.t = t;
  aux.q = colouring.q();
  aux.threshold = pair_threshold(t);
  const std::uint64_t pairs = binomial(aux.n, 2);
  aux.counts.assign(pairs * aux.q, 0);

  threads = std::clamp(threads, 1u, std::max<Vertex>(1, aux.n / 8));
  if (threads == 1) {
    count_range(colouring, 2, aux.n, aux.q, aux.counts);
  } else {
    // Balance shards by triple count: triples with largest vertex < w number C(w,3).
    const std::uint64_t total = binomial(aux.n, 3);
    std::vector<Vertex> cuts{2};
    for (unsigned s = 1; s < threads; ++s) {
      Vertex w = cuts.back();
      while (w < aux.n && binomial(w, 3) < total * s / threads)
        ++w;
      cuts.push_back(w);
    }
    cuts.push_back(aux.n);
    std::vector<std::vector<std::uint32_t>> shards(threads, std::vector<std::uint32_t>(aux.counts.size(), 0));
    {
      std::vector<std::jthread> pool;
      for (unsigned s = 0; s < threads; ++s)
        pool.emplace_back([&, s] { count_range(colouring, cuts[s], cuts[s + 1], aux.q, shards[s]); });
    }
    for (const auto &shard : shards)
      for (std::size_t i = 0; i < shard.size(); ++i)
        aux.counts[i] += shard[i];
  }

  aux.labels.assign(pairs, 0);
  for (std::uint64_t p = 0; p < pairs; ++p)
    for (unsigned c = 0; c < aux.q; ++c)
      if (aux.counts[p * aux.q + c] < aux.threshold)
        aux.labels[p] |= static_cast<std::uint8_t>(1u << c);
  return aux;
}

AuxiliaryGraphColouring pair_profile(const CompleteColouring &colouring, unsigned t, unsigned threads) {
  if (colouring.q() != 2)
    throw Error(ErrorKind::invalid_argument, "pair profile needs a 2-colouring");
  return label_pairs(colouring, t, threads);
}

VertexClass classify_vertices(const AuxiliaryGraphColouring &aux) {
  VertexClass cls;
  const Vertex n = aux.n;
  cls.degree_threshold = 2ull * aux.t * aux.t;
  cls.red_degree.assign(n, 0);
  cls.blue_degree.assign(n, 0);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      const auto l = aux.label(u, v);
      if (l & 1u) {
        ++cls.red_degree[u];
        ++cls.red_degree[v];
      }
      if (l & 2u) {
        ++cls.blue_degree[u];
        ++cls.blue_degree[v];
      }
    }
  cls.tag.assign(n, kRed);
  for (Vertex v = 0; v < n; ++v) {
    if (cls.red_degree[v] >= cls.degree_threshold) {
      cls.tag[v] = kBlue;
      if (cls.blue_degree[v] >= cls.degree_threshold && !cls.claim_violation)
        cls.claim_violation = v;
    }
  }
  return cls;
}

BodyChoice low_degree_body(const AuxiliaryGraphColouring &aux, const VertexClass &cls, unsigned t,
                           std::optional<Colour> colour) {
  const Vertex n = aux.n;
  if (colour && *colour > kBlue)
    throw Error(ErrorKind::invalid_argument, "body colour must be red or blue");
  const auto reds = static_cast<Vertex>(std::count(cls.tag.begin(), cls.tag.end(), kRed));
  const Colour m = colour.value_or(reds >= n - reds ? kRed : kBlue);

  std::vector<Vertex> body;
  std::vector<bool> discarded(n, false);
  for (Vertex v = 0; v < n && body.size() < t; ++v) {
    if (cls.tag[v] != m || discarded[v])
      continue;
    body.push_back(v);
    for (Vertex w = v + 1; w < n; ++w)
      if (cls.tag[w] == m && aux.has_label(v, w, m))
        discarded[w] = true;
  }
  if (body.size() < t)
    throw Error(ErrorKind::no_body, "peeling the " + std::string(m == kRed ? "red" : "blue") +
                                        " class yields only " + std::to_string(body.size()) +
                                        " of " + std::to_string(t) + " vertices");
  return {m, std::move(body)};
}

HedgehogEmbedding embed_spines(const CompleteColouring &colouring, std::span<const Vertex> body,
                               Colour colour) {
  if (colouring.k() != 3)
    throw Error(ErrorKind::invalid_argument, "spines are embedded in a 3-uniform colouring");
  const Vertex n = colouring.n();
  std::vector<bool> used(n, false);
  for (Vertex b : body) {
    if (b >= n || used[b])
      throw Error(ErrorKind::invalid_argument, "body vertices must be distinct and in range");
    used[b] = true;
  }
  HedgehogEmbedding emb;
  emb.colour = colour;
  emb.body.assign(body.begin(), body.end());
  for (std::size_t j = 1; j < body.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Vertex a = std::min(body[i], body[j]), b = std::max(body[i], body[j]);
      Vertex w = 0;
      while (w < n && (used[w] || colouring.triple(a, b, w) != colour))
        ++w;
      if (w == n)
        throw Error(ErrorKind::embedding_failed,
                    "no spine available for pair " + std::to_string(a) + " " + std::to_string(b));
      used[w] = true;
      emb.spines.push_back({{a, b}, w});
    }
  return emb;
}

HedgehogEmbedding find_monochromatic_hedgehog(const CompleteColouring &colouring, unsigned t,
                                              const FinderOptions &options) {
  if (colouring.k() != 3 || colouring.q() != 2)
    throw Error(ErrorKind::invalid_argument, "finder needs a 2-colouring of triples");
  if (t < 2)
    throw Error(ErrorKind::invalid_argument, "t must be at least 2");
  const AuxiliaryGraphColouring aux = pair_profile(colouring, t, options.threads);
  const VertexClass cls = classify_vertices(aux);
  const BodyChoice choice = low_degree_body(aux, cls, t, options.colour);
  HedgehogEmbedding emb = embed_spines(colouring, choice.body, choice.colour);
  if (auto v = verifiers::verify_embedding(emb, colouring))
    throw Error(ErrorKind::guarantee_violated, std::string("finder produced an invalid embedding: ") +
                                                   verifiers::to_string(v->kind) + " " + v->detail);
  return emb;
}

} // namespace hedgehog::finder
