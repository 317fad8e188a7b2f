#include "hedgehog/core.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace hedgehog {

namespace {

constexpr unsigned kMaxTabulatedK = 4;

struct BinomialTable {
  std::vector<std::array<std::uint64_t, kMaxTabulatedK + 1>> rows;
  BinomialTable() : rows(kBinomialTableSize) {
    for (std::size_t n = 0; n < kBinomialTableSize; ++n) {
      rows[n][0] = 1;
      for (unsigned k = 1; k <= kMaxTabulatedK; ++k)
        rows[n][k] = n == 0 ? 0 : rows[n - 1][k - 1] + rows[n - 1][k];
    }
  }
};

const BinomialTable &table() {
  static const BinomialTable t;
  return t;
}

inline std::uint64_t choose(std::uint64_t n, unsigned k) {
  if (n < kBinomialTableSize && k <= kMaxTabulatedK)
    return table().rows[n][k];
  return binomial(n, k);
}

} // namespace

const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::invalid_argument:
    return "invalid-argument";
  case ErrorKind::infeasible_spec:
    return "infeasible-spec";
  case ErrorKind::precondition_violated:
    return "precondition-violated";
  case ErrorKind::unsupported:
    return "unsupported";
  case ErrorKind::embedding_failed:
    return "embedding-failed";
  case ErrorKind::no_body:
    return "no-body";
  case ErrorKind::guarantee_violated:
    return "guarantee-violated";
  case ErrorKind::staged_failure:
    return "staged-failure";
  case ErrorKind::parse_error:
    return "parse-error";
  case ErrorKind::refused:
    return "refused";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
    if (result > UINT64_MAX)
      throw Error(ErrorKind::invalid_argument, "binomial overflow for C(" + std::to_string(n) +
                                                   ", " + std::to_string(k) + ")");
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t rank_unchecked(std::span<const Vertex> subset) noexcept {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < subset.size(); ++i)
    r += choose(subset[i], static_cast<unsigned>(i + 1));
  return r;
}

std::uint64_t rank(std::span<const Vertex> subset, Vertex n) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= n)
      throw Error(ErrorKind::invalid_argument,
                  "subset entry " + std::to_string(subset[i]) + " out of range [0, " +
                      std::to_string(n) + ")");
    if (i > 0 && subset[i - 1] >= subset[i])
      throw Error(ErrorKind::invalid_argument, "subset is not strictly increasing");
  }
  return rank_unchecked(subset);
}

void unrank_into(std::uint64_t index, std::span<Vertex> out) {
  std::uint64_t r = index;
  for (std::size_t i = out.size(); i >= 1; --i) {
    const auto k = static_cast<unsigned>(i);
    // Largest c with C(c, k) <= r.
    std::uint64_t lo = k - 1, hi = k;
    while (choose(hi, k) <= r)
      hi *= 2;
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      (choose(mid, k) <= r ? lo : hi) = mid;
    }
    out[i - 1] = static_cast<Vertex>(lo);
    r -= choose(lo, k);
  }
}

std::vector<Vertex> unrank(std::uint64_t index, unsigned k) {
  std::vector<Vertex> out(k);
  unrank_into(index, out);
  return out;
}

std::uint64_t triple_rank(Vertex u, Vertex v, Vertex w) noexcept {
  if (u > v)
    std::swap(u, v);
  if (v > w)
    std::swap(v, w);
  if (u > v)
    std::swap(u, v);
  return choose(w, 3) + choose(v, 2) + u;
}

SubsetCursor::SubsetCursor(Vertex n, unsigned k) : n_(n), subset_(k), valid_(k <= n) {
  for (unsigned i = 0; i < k; ++i)
    subset_[i] = i;
}

void SubsetCursor::next() noexcept {
  // Colex successor: bump the lowest entry that can move, reset those below.
  const std::size_t k = subset_.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex limit = i + 1 < k ? subset_[i + 1] : n_;
    if (subset_[i] + 1 < limit) {
      ++subset_[i];
      for (std::size_t j = 0; j < i; ++j)
        subset_[j] = static_cast<Vertex>(j);
      return;
    }
  }
  valid_ = false;
}

namespace {

void check_shape(Vertex, unsigned k, unsigned q) {
  if (k < 2 || k > 4)
    throw Error(ErrorKind::invalid_argument, "uniformity must be 2, 3 or 4, got " + std::to_string(k));
  if (q < 1 || q > 256)
    throw Error(ErrorKind::invalid_argument, "colour count must be in [1, 256], got " + std::to_string(q));
}

} // namespace

CompleteColouring::CompleteColouring(Vertex n, unsigned k, unsigned q, Colour fill)
    : n_(n), k_(k), q_(q) {
  check_shape(n, k, q);
  if (fill >= q)
    throw Error(ErrorKind::invalid_argument, "fill colour out of range");
  colours_.assign(binomial(n, k), fill);
}

CompleteColouring::CompleteColouring(Vertex n, unsigned k, unsigned q, std::vector<Colour> colours)
    : n_(n), k_(k), q_(q), colours_(std::move(colours)) {
  check_shape(n, k, q);
  if (colours_.size() != binomial(n, k))
    throw Error(ErrorKind::invalid_argument,
                "colour array has length " + std::to_string(colours_.size()) + ", expected C(" +
                    std::to_string(n) + ", " + std::to_string(k) + ") = " +
                    std::to_string(binomial(n, k)));
  for (Colour c : colours_)
    if (c >= q)
      throw Error(ErrorKind::invalid_argument, "colour " + std::to_string(c) + " out of range");
}

void CompleteColouring::set(std::uint64_t index, Colour c) {
  if (c >= q_)
    throw Error(ErrorKind::invalid_argument, "colour " + std::to_string(c) + " out of range");
  colours_.at(index) = c;
}

Colour CompleteColouring::of(std::span<const Vertex> subset) const {
  if (subset.size() != k_)
    throw Error(ErrorKind::invalid_argument, "subset size does not match uniformity");
  std::array<Vertex, 4> sorted{};
  std::copy(subset.begin(), subset.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + k_);
  return colours_[rank(std::span<const Vertex>(sorted.data(), k_), n_)];
}

std::uint64_t CompleteColouring::census() const noexcept {
  // q may exceed 64 only for the decimal HCOL form; cap the mask.
  std::uint64_t mask = 0;
  for (Colour c : colours_)
    if (c < 64)
      mask |= std::uint64_t{1} << c;
  return mask;
}

HedgehogShape hedgehog_shape(unsigned t, unsigned k) {
  if (k < 2 || t < k - 1)
    throw Error(ErrorKind::invalid_argument,
                "hedgehog needs t >= k-1 >= 1, got t=" + std::to_string(t) + " k=" + std::to_string(k));
  const std::uint64_t edges = binomial(t, k - 1);
  return {t, k, t + edges, edges};
}

void Hypergraph::add_edge(std::span<const Vertex> e) {
  if (e.size() != k_)
    throw Error(ErrorKind::invalid_argument, "edge size does not match uniformity");
  std::vector<Vertex> sorted(e.begin(), e.end());
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.back() >= n_)
    throw Error(ErrorKind::invalid_argument, "edge vertex out of range");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::invalid_argument, "edge has repeated vertex");
  flat_.insert(flat_.end(), sorted.begin(), sorted.end());
}

Hypergraph hedgehog_hypergraph(unsigned t, unsigned k) {
  const HedgehogShape shape = hedgehog_shape(t, k);
  Hypergraph h(static_cast<Vertex>(shape.vertex_count), k);
  Vertex apex = t;
  std::vector<Vertex> e(k);
  for (SubsetCursor cur(t, k - 1); cur.valid(); cur.next()) {
    std::copy(cur.current().begin(), cur.current().end(), e.begin());
    e[k - 1] = apex++;
    h.add_edge(e);
  }
  return h;
}

unsigned degeneracy(const Hypergraph &h) {
  const Vertex n = h.n();
  std::vector<std::vector<std::size_t>> incident(n);
  std::vector<unsigned> degree(n, 0);
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (Vertex v : h.edge(i)) {
      incident[v].push_back(i);
      ++degree[v];
    }
  std::vector<bool> removed(n, false), dead(h.edge_count(), false);
  unsigned result = 0;
  for (Vertex step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (best == n || degree[v] < degree[best]))
        best = v;
    result = std::max(result, degree[best]);
    removed[best] = true;
    for (std::size_t e : incident[best]) {
      if (dead[e])
        continue;
      dead[e] = true;
      for (Vertex w : h.edge(e))
        if (w != best)
          --degree[w];
    }
  }
  return result;
}

void write_hcol(std::ostream &out, const CompleteColouring &c) {
  out << "HCOL v1 n=" << c.n() << " k=" << c.k() << " q=" << c.q() << '\n';
  if (c.q() <= 16) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string body(c.size(), '0');
    for (std::uint64_t i = 0; i < c.size(); ++i)
      body[i] = kHex[c.at(i)];
    out << body;
  } else {
    for (std::uint64_t i = 0; i < c.size(); ++i) {
      if (i > 0)
        out << ' ';
      out << static_cast<unsigned>(c.at(i));
    }
  }
  out << '\n';
}

namespace {

[[noreturn]] void parse_fail(const std::string &what) { throw Error(ErrorKind::parse_error, what); }

unsigned long long header_field(std::istringstream &in, const std::string &key) {
  std::string token;
  if (!(in >> token) || token.rfind(key + "=", 0) != 0)
    parse_fail("HCOL header: expected " + key + "=<value>");
  const std::string value = token.substr(key.size() + 1);
  if (value.empty() || !std::all_of(value.begin(), value.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    parse_fail("HCOL header: bad value for " + key);
  return std::stoull(value);
}

} // namespace

CompleteColouring read_hcol(std::istream &in) {
  std::string header;
  if (!std::getline(in, header))
    parse_fail("empty input");
  std::istringstream hs(header);
  std::string magic, version;
  if (!(hs >> magic >> version) || magic != "HCOL" || version != "v1")
    parse_fail("missing 'HCOL v1' header");
  const auto n = header_field(hs, "n");
  const auto k = header_field(hs, "k");
  const auto q = header_field(hs, "q");
  std::string extra;
  if (hs >> extra)
    parse_fail("trailing header token '" + extra + "'");
  if (k < 2 || k > 4 || q < 1 || q > 256 || n > 1u << 20)
    parse_fail("HCOL header values out of range");
  const std::uint64_t expected = binomial(n, k);

  std::vector<Colour> colours;
  colours.reserve(expected);
  if (q <= 16) {
    std::string body;
    std::getline(in, body);
    for (char ch : body) {
      int d;
      if (ch >= '0' && ch <= '9')
        d = ch - '0';
      else if (ch >= 'a' && ch <= 'f')
        d = ch - 'a' + 10;
      else if (ch >= 'A' && ch <= 'F')
        d = ch - 'A' + 10;
      else if (ch == '\r')
        continue;
      else
        parse_fail(std::string("invalid hex digit '") + ch + "'");
      if (static_cast<unsigned>(d) >= q)
        parse_fail("colour " + std::to_string(d) + " out of range for q=" + std::to_string(q));
      colours.push_back(static_cast<Colour>(d));
    }
    std::string rest;
    while (std::getline(in, rest))
      if (rest.find_first_not_of(" \t\r") != std::string::npos)
        parse_fail("unexpected data after colour line");
  } else {
    std::string token;
    while (in >> token) {
      if (!std::all_of(token.begin(), token.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
          token.size() > 3)
        parse_fail("invalid decimal colour '" + token + "'");
      const auto value = std::stoul(token);
      if (value >= q)
        parse_fail("colour " + token + " out of range");
      colours.push_back(static_cast<Colour>(value));
    }
  }
  if (colours.size() != expected)
    parse_fail("length mismatch: read " + std::to_string(colours.size()) + " colours, expected " +
               std::to_string(expected));
  return CompleteColouring(static_cast<Vertex>(n), static_cast<unsigned>(k), static_cast<unsigned>(q),
                           std::move(colours));
}

std::string to_hcol(const CompleteColouring &c) {
  std::ostringstream out;
  write_hcol(out, c);
  return out.str();
}

CompleteColouring from_hcol(const std::string &text) {
  std::istringstream in(text);
  return read_hcol(in);
}

} // namespace hedgehog
