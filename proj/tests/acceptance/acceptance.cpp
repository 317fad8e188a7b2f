// Acceptance suite: one PASS/FAIL line per criterion. Run with criterion
// names (AC1 ... AC9) to select a subset.

#include "hedgehog/certificate.hpp"
#include "hedgehog/cli.hpp"
#include "hedgehog/constructions.hpp"
#include "hedgehog/extractors.hpp"
#include "hedgehog/finder.hpp"
#include "hedgehog/verifiers.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace hedgehog;
namespace cons = hedgehog::constructions;
namespace ext = hedgehog::extractors;
namespace ver = hedgehog::verifiers;

namespace {

// Tolerances and sizes.
constexpr double kMaxFinderSeconds = 10.0;
constexpr int kFinderRandomRuns = 1000;
constexpr int kFinderAdversarialRuns = 50;
constexpr Vertex kScatteredMaxN = 40;
constexpr int kSpencerInstances = 100;
constexpr std::uint64_t kSpencerFloor = 24;
constexpr int kGallaiInstances = 50;
constexpr Vertex kGallaiExhaustiveMaxN = 30;
constexpr Vertex kFOracleCap = 8;
constexpr double kExhaustiveMaxSeconds = 600.0;
constexpr double kSlowPathSampleFraction = 0.10;
constexpr int kTriangleInstances = 500;
constexpr int kMutations = 10000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string summary;
};

// AC1
Outcome finder_at_threshold() {
  std::ostringstream msg;
  int failures = 0, runs = 0;
  double worst = 0;
  for (unsigned t : {3u, 4u}) {
    const Vertex n = 4 * t * t * t;
    for (int i = 0; i < kFinderRandomRuns + kFinderAdversarialRuns; ++i) {
      const bool adversarial = i >= kFinderRandomRuns;
      const auto start = Clock::now();
      const auto c = adversarial ? helpers::adversarial_colouring(n, i - kFinderRandomRuns)
                                 : cons::random_colouring(n, 3, 2, static_cast<std::uint64_t>(i));
      ++runs;
      try {
        const auto emb = finder::find_monochromatic_hedgehog(c, t);
        if (ver::verify_embedding(emb, c))
          ++failures;
      } catch (const Error &e) {
        ++failures;
        std::cerr << "AC1 t=" << t << " run " << i << ": " << e.what() << '\n';
      }
      worst = std::max(worst, seconds_since(start));
    }
  }
  msg << runs << " runs (t=3 n=108, t=4 n=256), failures " << failures << ", slowest " << worst << " s";
  return {failures == 0 && worst < kMaxFinderSeconds, msg.str()};
}

// AC2
Outcome scattered_lift_soundness() {
  int found = 0, nonvacuous = 0, violations = 0;
  std::map<unsigned, Vertex> largest;
  const std::vector<Colour> palette{0, 1, 2, 3};
  for (unsigned t : {4u, 5u}) {
    int misses = 0;
    for (Vertex n = t; n <= kScatteredMaxN; ++n) {
      // The search keeps going until several consecutive sizes come back empty.
      if (misses >= 3)
        break;
      cons::ScatteredColouringSpec spec{.n = n, .t = t, .q = 4, .seed = 1000u + n, .max_tries = 4,
                                        .max_steps = 200000};
      const auto r = cons::find_scattered_colouring(spec);
      if (!r.colouring) {
        ++misses;
        continue;
      }
      misses = 0;
      ++found;
      largest[t] = n;
      if (!ver::every_clique_all_colours(*r.colouring, t, 4))
        ++violations;
      const auto lifted = cons::complement_lift(*r.colouring, palette);
      nonvacuous += n >= hedgehog_shape(t, 3).vertex_count;
      for (Colour c = 0; c < 4; ++c)
        if (ver::has_monochromatic_hedgehog(lifted, t, c))
          ++violations;
    }
  }
  std::ostringstream msg;
  msg << found << " scattered colourings (largest n: t=4 " << largest[4] << ", t=5 " << largest[5] << "), "
      << nonvacuous << " with n >= |H_t|, violations " << violations;
  return {violations == 0 && found > 0, msg.str()};
}

// AC3
Outcome gallai_lift_soundness() {
  const unsigned t = 4;
  int witnesses = 0, violations = 0;
  const std::vector<Colour> rbg{kRed, kBlue, kGreen};
  auto check = [&](const CompleteColouring &w) {
    ++witnesses;
    if (ver::verify_f_witness(w, t)) {
      ++violations;
      return;
    }
    const auto lifted = cons::complement_lift(w, rbg);
    for (Colour c = 0; c < 3; ++c)
      if (ver::has_monochromatic_hedgehog(lifted, t, c))
        ++violations;
  };
  Vertex largest = 0;
  for (Vertex n = 2; n <= kFOracleCap; ++n) {
    const auto ex = ext::f_witness_exhaustive(t, n, std::uint64_t{1} << 32);
    if (ex.witness) {
      check(*ex.witness);
      largest = n;
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto ls = ext::f_witness_local_search(t, n, seed, 4, 5000);
      if (ls.witness) {
        check(*ls.witness);
        largest = std::max(largest, n);
      }
    }
  }
  std::ostringstream msg;
  msg << witnesses << " F-witnesses for t=4 (n <= " << largest << "; |H_4| = 10 so hedgehog-freeness is vacuous), "
      << "violations " << violations;
  return {violations == 0 && witnesses > 0, msg.str()};
}

Hypergraph random_triples(Vertex n, std::uint64_t e, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> ranks(binomial(n, 3));
  for (std::uint64_t i = 0; i < ranks.size(); ++i)
    ranks[i] = i;
  std::shuffle(ranks.begin(), ranks.end(), rng);
  Hypergraph h(n, 3);
  for (std::uint64_t i = 0; i < std::min<std::uint64_t>(e, ranks.size()); ++i)
    h.add_edge(unrank(ranks[i], 3));
  return h;
}

// AC4
Outcome spencer() {
  int bad = 0;
  std::size_t smallest = SIZE_MAX;
  if (ext::spencer_guarantee(200, 2000) != kSpencerFloor)
    ++bad;
  for (int i = 0; i < kSpencerInstances; ++i) {
    const auto h = random_triples(200, 2000, 9000 + i);
    const auto r = ext::spencer_independent_set(h, i);
    smallest = std::min(smallest, r.vertices.size());
    if (r.vertices.size() < kSpencerFloor || ver::verify_independent_set(h, r.vertices) ||
        !oracle::independent(h, r.vertices))
      ++bad;
  }
  int small = 0, exceed = 0;
  for (Vertex n = 3; n <= 12; ++n)
    for (std::uint64_t e : {1ull, 2ull, 4ull, 8ull, 16ull, 40ull, 100ull}) {
      if (e > binomial(n, 3))
        continue;
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto h = random_triples(n, e, seed * 31 + n);
        const auto r = ext::spencer_independent_set(h, seed);
        ++small;
        if (ver::verify_independent_set(h, r.vertices) || r.vertices.size() > oracle::max_independent_set(h) ||
            r.vertices.size() < ext::spencer_guarantee(n, e))
          ++exceed;
      }
    }
  std::ostringstream msg;
  msg << kSpencerInstances << " instances n=200 e=2000, smallest set " << smallest << " (floor " << kSpencerFloor
      << "); " << small << " instances n <= 12 against brute force; failures " << bad + exceed;
  return {bad == 0 && exceed == 0, msg.str()};
}

void random_gallai_fill(CompleteColouring &c, const std::vector<Vertex> &vs, std::mt19937_64 &rng) {
  if (vs.size() < 2)
    return;
  const unsigned parts = 2 + rng() % std::min<std::size_t>(vs.size() - 1, 3);
  std::vector<std::vector<Vertex>> part(parts);
  for (std::size_t i = 0; i < vs.size(); ++i)
    part[i < parts ? i : rng() % parts].push_back(vs[i]);
  const Colour a = static_cast<Colour>(rng() % 3);
  const Colour b = static_cast<Colour>((a + 1 + rng() % 2) % 3);
  for (unsigned i = 0; i < parts; ++i)
    for (unsigned j = i + 1; j < parts; ++j) {
      const Colour col = rng() & 1 ? a : b;
      for (Vertex x : part[i])
        for (Vertex y : part[j])
          c.set(pair_rank(x, y), col);
    }
  for (const auto &p : part)
    random_gallai_fill(c, p, rng);
}

// AC5
Outcome fgp() {
  std::vector<CompleteColouring> inputs;
  std::mt19937_64 rng(5);
  const std::array<std::array<Colour, 2>, 3> pals{{{kRed, kBlue}, {kRed, kGreen}, {kBlue, kGreen}}};
  for (int i = 0; i < 20; ++i) {
    std::vector<CompleteColouring> f;
    for (const auto &p : pals) {
      CompleteColouring c(3, 2, 3);
      for (std::uint64_t e = 0; e < 3; ++e)
        c.set(e, p[rng() & 1]);
      f.push_back(c);
    }
    inputs.push_back(cons::lex_product(cons::lex_product(f[0], f[1]), f[2]));
  }
  for (int i = 0; static_cast<int>(inputs.size()) < kGallaiInstances; ++i) {
    const Vertex n = i < 25 ? 5 + static_cast<Vertex>(rng() % 26) : 31 + static_cast<Vertex>(rng() % 90);
    CompleteColouring c(n, 2, 3);
    std::vector<Vertex> vs(n);
    for (Vertex v = 0; v < n; ++v)
      vs[v] = v;
    std::shuffle(vs.begin(), vs.end(), rng);
    random_gallai_fill(c, vs, rng);
    inputs.push_back(std::move(c));
  }
  int failures = 0, exhaustive = 0, lex27 = 0;
  for (const auto &c : inputs) {
    lex27 += c.n() == 27 && &c < &inputs[20];
    if (oracle::rbg_rainbow(c)) {
      ++failures;
      continue;
    }
    try {
      const auto g = ext::GallaiColouring::verify(c);
      const auto w = ext::gallai_two_coloured_clique(g);
      if (w.vertices.size() < ext::cube_root_ceil(c.n()) || ver::verify_clique_witness(c, w, 2))
        ++failures;
      if (c.n() <= kGallaiExhaustiveMaxN) {
        ++exhaustive;
        std::size_t best = 0;
        for (std::uint64_t mask : {3u, 5u, 6u})
          best = std::max(best, oracle::max_clique(c.n(), [&](Vertex a, Vertex b) {
                            return (mask >> c.edge(a, b) & 1u) != 0;
                          }));
        if (best != w.vertices.size())
          ++failures;
      }
    } catch (const Error &e) {
      ++failures;
      std::cerr << "AC5: " << e.what() << '\n';
    }
  }
  std::ostringstream msg;
  msg << inputs.size() << " Gallai colourings (" << lex27 << " lex products on 27 vertices), " << exhaustive
      << " confirmed maximum by Bron-Kerbosch, failures " << failures;
  return {failures == 0 && static_cast<int>(inputs.size()) == kGallaiInstances, msg.str()};
}

std::string results_file(const std::string &name) { return std::string(HEDGEHOG_RESULTS_DIR) + "/" + name; }

// AC6
Outcome f_oracle() {
  ext::FOracleOptions o;
  o.exhaustive_cap = kFOracleCap;
  const auto f2 = ext::f_oracle(2, kFOracleCap, o);
  const auto f3 = ext::f_oracle(3, kFOracleCap, o);
  const auto f4 = ext::f_oracle(4, kFOracleCap, o);
  bool agree = f2.modes_agree && f3.modes_agree && f4.modes_agree;
  bool witnesses_ok = true;
  for (const auto *r : {&f2, &f3, &f4})
    for (const auto &s : r->steps)
      if (s.witness && ver::verify_f_witness(*s.witness, r->t))
        witnesses_ok = false;
  const bool exact = f2.value == 2u && f3.value == 3u;
  const bool f4_done = f4.value.has_value() || f4.lower_bound > 0;
  const unsigned f4_value = f4.value.value_or(0);
  const bool monotone = f4.value ? f4_value >= 3 : f4.lower_bound >= 3;
  std::ostringstream recorded;
  recorded << "F(4) " << (f4.value ? "= " + std::to_string(f4_value) : ">= " + std::to_string(f4.lower_bound))
           << '\n';
  bool matches_record = false;
  try {
    matches_record = read_file(results_file("f_oracle_t4.txt")).find(recorded.str()) != std::string::npos;
  } catch (const Error &) {
  }
  std::ostringstream msg;
  msg << "F(2)=" << (f2.value ? std::to_string(*f2.value) : "?") << " F(3)="
      << (f3.value ? std::to_string(*f3.value) : "?") << " " << recorded.str().substr(0, recorded.str().size() - 1)
      << ", modes agree " << (agree ? "yes" : "no") << ", recorded result " << (matches_record ? "matches" : "differs");
  return {exact && f4_done && agree && witnesses_ok && monotone && matches_record, msg.str()};
}

// AC7
Outcome triangle_bound() {
  int violations = 0;
  std::uint64_t worst_ratio_num = 0, worst_ratio_den = 1;
  std::mt19937_64 rng(7);
  for (int i = 0; i < kTriangleInstances; ++i) {
    const unsigned t = 3 + i % 3;
    const Vertex n = 3 + static_cast<Vertex>(rng() % 198);
    // Skew the colour distribution so that labels are common.
    CompleteColouring c(n, 3, 3);
    const double p0 = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const double p1 = std::uniform_real_distribution<double>(0.0, 1.0 - p0)(rng);
    std::discrete_distribution<int> pick{p0, p1, 1.0 - p0 - p1};
    for (std::uint64_t e = 0; e < c.size(); ++e)
      c.set(e, static_cast<Colour>(pick(rng)));
    const auto aux = finder::label_pairs(c, t);
    const auto count = ext::count_rbg_triangles(aux);
    const std::uint64_t intermediate = 3 * aux.threshold * binomial(n, 2);
    const std::uint64_t final_bound = std::uint64_t{t} * t * n * n;
    if (count > intermediate || count > final_bound)
      ++violations;
    if (count * worst_ratio_den > worst_ratio_num * final_bound) {
      worst_ratio_num = count;
      worst_ratio_den = final_bound;
    }
  }
  std::ostringstream msg;
  msg << kTriangleInstances << " auxiliary colourings, t in {3,4,5}, n <= 200; max count/(t^2 n^2) = "
      << static_cast<double>(worst_ratio_num) / static_cast<double>(worst_ratio_den) << ", violations "
      << violations;
  return {violations == 0, msg.str()};
}

// AC8
Outcome exhaustive_small_ramsey() {
  const auto start = Clock::now();
  const auto v = ver::exhaustive_ramsey_check(3, 2, 6);
  const double elapsed = seconds_since(start);
  const bool definite = v.outcome != ver::RamseyVerdict::Outcome::refused;

  // Slow path: naive hedgehog search over a random sample of all 2^20 colourings.
  const std::uint64_t total = std::uint64_t{1} << 20;
  const auto sample = static_cast<std::uint64_t>(kSlowPathSampleFraction * static_cast<double>(total));
  std::mt19937_64 rng(8);
  std::set<std::uint64_t> chosen;
  while (chosen.size() < sample)
    chosen.insert(rng() % total);
  std::uint64_t disagreements = 0, free_in_sample = 0;
  for (auto code : chosen) {
    std::vector<Colour> cols(20);
    for (unsigned i = 0; i < 20; ++i)
      cols[i] = code >> i & 1;
    const CompleteColouring c(6, 3, 2, cols);
    bool slow = false, fast = false;
    for (Colour col = 0; col < 2; ++col) {
      slow = slow || oracle::has_hedgehog(c, 3, col);
      fast = fast || ver::has_monochromatic_hedgehog(c, 3, col).has_value();
    }
    disagreements += slow != fast;
    free_in_sample += !slow;
  }
  bool consistent;
  std::string verdict = ver::to_string(v.outcome);
  if (v.outcome == ver::RamseyVerdict::Outcome::counterexample) {
    consistent = v.counterexample && !oracle::has_hedgehog(*v.counterexample, 3, 0) &&
                 !oracle::has_hedgehog(*v.counterexample, 3, 1);
  } else {
    consistent = free_in_sample == 0;
  }
  std::ostringstream text;
  text << "verdict " << verdict << " t=3 q=2 n=6 checked=" << v.colourings_checked << '\n';
  if (v.counterexample)
    text << to_hcol(*v.counterexample);
  bool matches_record = false;
  try {
    matches_record = read_file(results_file("exhaustive_t3_q2_n6.txt")) == text.str();
  } catch (const Error &) {
  }
  std::ostringstream msg;
  msg << "verdict " << verdict << " in " << elapsed << " s; slow path on " << sample
      << " sampled colourings: disagreements " << disagreements << ", hedgehog-free " << free_in_sample
      << "; recorded result " << (matches_record ? "matches" : "differs");
  return {definite && elapsed < kExhaustiveMaxSeconds && disagreements == 0 && consistent && matches_record,
          msg.str()};
}

// AC9: each mutant is classified by an independent definition check; mutants
// that are still valid certificates are redrawn and counted separately.
Outcome mutation_robustness() {
  std::mt19937_64 rng(9);
  int invalid = 0, accepted_invalid = 0, redrawn = 0;
  std::map<std::string, int> per_kind;

  std::vector<std::pair<HedgehogEmbedding, CompleteColouring>> embeddings;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto host = cons::random_colouring(14, 3, 2, s);
    if (auto e = ver::has_monochromatic_hedgehog(host, 3 + s % 2, static_cast<Colour>(s & 1)))
      embeddings.emplace_back(*e, host);
    const auto quad = cons::random_colouring(12, 4, 2, s + 50);
    if (auto e = ver::has_monochromatic_hedgehog(quad, 4, kRed))
      embeddings.emplace_back(*e, quad);
  }
  const auto big = cons::random_colouring(108, 3, 2, 1);
  embeddings.emplace_back(finder::find_monochromatic_hedgehog(big, 3), big);

  cons::ScatteredColouringSpec spec{.n = 9, .t = 4, .q = 4, .seed = 2, .max_tries = 50};
  const auto scattered = *cons::find_scattered_colouring(spec).colouring;
  const std::vector<Colour> palette{0, 1, 2, 3};
  const auto lifted = cons::complement_lift(scattered, palette);
  const auto fwit = *ext::f_witness_exhaustive(4, 6, std::uint64_t{1} << 32).witness;
  const auto gallai = cons::lex_product(CompleteColouring(4, 2, 3, {0, 1, 0, 0, 1, 0}),
                                        CompleteColouring(3, 2, 3, {2, 2, 0}));
  const auto clique = ext::gallai_two_coloured_clique(ext::GallaiColouring::verify(gallai));
  const auto hyper = random_triples(40, 300, 3);
  const auto indep = ext::spencer_independent_set(hyper, 3).vertices;

  auto any_vertex = [&](Vertex n) { return std::uniform_int_distribution<Vertex>(0, n)(rng); };
  auto draw = [&](std::size_t size) { return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng); };
  auto other_colour = [&](Colour c, unsigned q) {
    return static_cast<Colour>((c + 1 + std::uniform_int_distribution<unsigned>(0, q - 2)(rng)) % q);
  };
  auto record = [&](const char *kind, bool truly_valid, bool rejected) {
    if (truly_valid) {
      ++redrawn;
      return;
    }
    ++invalid;
    ++per_kind[kind];
    accepted_invalid += !rejected;
  };

  while (invalid < kMutations) {
    switch (rng() % 6) {
    case 0: {
      const auto &[emb, host] = embeddings[draw(embeddings.size())];
      auto m = emb;
      switch (rng() % 4) {
      case 0:
        m.colour = other_colour(m.colour, host.q());
        break;
      case 1:
        m.body[draw(m.body.size())] = any_vertex(host.n());
        break;
      case 2:
        m.spines[draw(m.spines.size())].apex = any_vertex(host.n());
        break;
      default: {
        auto &s = m.spines[draw(m.spines.size())];
        s.base[draw(s.base.size())] = any_vertex(host.n());
      }
      }
      if (m == emb)
        break;
      // Round trip through the text format as the CLI would.
      const auto parsed = embedding_from_certificate(to_certificate(m));
      const bool truly = m.body.back() < host.n() + 1 && oracle::embedding_valid(parsed, host);
      record("embedding", truly, ver::verify_embedding(parsed, host).has_value());
      break;
    }
    case 1: {
      auto m = lifted;
      const auto i = draw(m.size());
      m.set(i, other_colour(m.at(i), 4));
      const auto tri = unrank(i, 3);
      const std::uint64_t below = oracle::edge_colour_mask(scattered, tri);
      record("lift", !(below >> m.at(i) & 1u), ver::verify_complement_lift(scattered, m, palette).has_value());
      break;
    }
    case 2: {
      auto m = scattered;
      const auto i = draw(m.size());
      m.set(i, other_colour(m.at(i), 4));
      record("scattered", !oracle::deficient_clique_exists(m, 4, 4), !ver::every_clique_all_colours(m, 4, 4));
      break;
    }
    case 3: {
      auto m = fwit;
      const auto i = draw(m.size());
      m.set(i, other_colour(m.at(i), 4));
      const bool truly = !oracle::rbg_rainbow(m) && !oracle::clique_with_few_colours(m, 4, 3);
      record("f-witness", truly, ver::verify_f_witness(m, 4).has_value());
      break;
    }
    case 4: {
      auto m = clique;
      if (rng() & 1)
        m.vertices[draw(m.vertices.size())] = any_vertex(gallai.n());
      else
        m.colour_mask ^= std::uint64_t{1} << (rng() % 4);
      if (m == clique)
        break;
      const auto parsed = clique_from_certificate(to_certificate(m));
      auto vs = parsed.vertices;
      std::sort(vs.begin(), vs.end());
      const bool distinct = std::adjacent_find(vs.begin(), vs.end()) == vs.end() && vs.back() < gallai.n();
      const bool truly = distinct && oracle::edge_colour_mask(gallai, vs) == parsed.colour_mask &&
                         std::popcount(parsed.colour_mask) <= 2;
      record("clique", truly, ver::verify_clique_witness(gallai, parsed, 2).has_value());
      break;
    }
    default: {
      auto m = indep;
      m[draw(m.size())] = any_vertex(hyper.n());
      if (m == indep)
        break;
      const auto parsed = independent_set_from_certificate(independent_set_certificate(m));
      auto vs = parsed;
      std::sort(vs.begin(), vs.end());
      bool truly = std::adjacent_find(vs.begin(), vs.end()) == vs.end() && vs.back() < hyper.n();
      if (truly) {
        std::uint64_t mask = 0;
        for (Vertex v : vs)
          mask |= std::uint64_t{1} << v;
        truly = oracle::independent(hyper, mask);
      }
      record("independent-set", truly, ver::verify_independent_set(hyper, parsed).has_value());
      break;
    }
    }
  }
  std::ostringstream msg;
  msg << invalid << " invalid mutants (";
  for (auto it = per_kind.begin(); it != per_kind.end(); ++it)
    msg << (it == per_kind.begin() ? "" : ", ") << it->first << " " << it->second;
  msg << "), accepted " << accepted_invalid << "; " << redrawn << " mutants were still valid and redrawn";
  return {accepted_invalid == 0, msg.str()};
}

} // namespace

int main(int argc, char **argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1", finder_at_threshold},   {"AC2", scattered_lift_soundness}, {"AC3", gallai_lift_soundness},
      {"AC4", spencer},               {"AC5", fgp},                      {"AC6", f_oracle},
      {"AC7", triangle_bound},        {"AC8", exhaustive_small_ramsey},  {"AC9", mutation_robustness},
  };
  std::set<std::string> wanted(argv + 1, argv + argc);
  int failed = 0;
  for (const auto &[name, fn] : criteria) {
    if (!wanted.empty() && !wanted.count(name))
      continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s (%.1f s) %s\n", name.c_str(), o.pass ? "PASS" : "FAIL", seconds_since(start),
                o.summary.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
