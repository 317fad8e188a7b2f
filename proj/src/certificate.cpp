#include "hedgehog/certificate.hpp"

#include <fstream>
#include <sstream>

namespace hedgehog {

namespace {

[[noreturn]] void bad(const std::string &what) { throw Error(ErrorKind::parse_error, what); }

std::vector<std::string> content_lines(const std::string &text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#')
      continue;
    lines.push_back(line.substr(start));
  }
  return lines;
}

std::uint64_t parse_number(const std::string &token, const std::string &context) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || token.size() > 19)
    bad("expected a number in " + context + ", got '" + token + "'");
  return std::stoull(token);
}

// Reads "key=value" and returns value as a number.
std::uint64_t field(const std::string &token, const std::string &key) {
  if (token.rfind(key + "=", 0) != 0)
    bad("expected " + key + "=..., got '" + token + "'");
  return parse_number(token.substr(key.size() + 1), key);
}

std::vector<std::string> tokens(const std::string &line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;)
    out.push_back(tok);
  return out;
}

Vertex vertex(const std::string &token, const std::string &context) {
  const auto v = parse_number(token, context);
  if (v > UINT32_MAX)
    bad("vertex out of range in " + context);
  return static_cast<Vertex>(v);
}

std::vector<Vertex> vertex_line(const std::string &line, const std::string &keyword) {
  const auto toks = tokens(line);
  if (toks.empty() || toks[0] != keyword)
    bad("expected '" + keyword + "' line, got '" + line + "'");
  std::vector<Vertex> out;
  for (std::size_t i = 1; i < toks.size(); ++i)
    out.push_back(vertex(toks[i], keyword));
  return out;
}

void put_list(std::ostringstream &out, const std::vector<Vertex> &vs) {
  for (Vertex v : vs)
    out << ' ' << v;
}

} // namespace

std::string to_certificate(const HedgehogEmbedding &emb) {
  const std::size_t k = emb.spines.empty() ? 3 : emb.spines.front().base.size() + 1;
  std::ostringstream out;
  out << "HEDGEHOG v1 k=" << k << " t=" << emb.body.size() << " colour=" << unsigned{emb.colour} << '\n';
  out << "body";
  put_list(out, emb.body);
  out << '\n';
  for (const auto &s : emb.spines) {
    out << "spine";
    put_list(out, s.base);
    out << " -> " << s.apex << '\n';
  }
  return out.str();
}

HedgehogEmbedding embedding_from_certificate(const std::string &text) {
  const auto lines = content_lines(text);
  if (lines.empty())
    bad("empty hedgehog certificate");
  const auto head = tokens(lines[0]);
  if (head.size() != 5 || head[0] != "HEDGEHOG" || head[1] != "v1")
    bad("bad hedgehog header '" + lines[0] + "'");
  const auto k = field(head[2], "k");
  const auto t = field(head[3], "t");
  const auto colour = field(head[4], "colour");
  if (k < 2 || k > 4)
    bad("k must be 2, 3 or 4");
  if (colour > 255)
    bad("colour out of range");
  if (lines.size() < 2)
    bad("missing body line");
  HedgehogEmbedding emb;
  emb.colour = static_cast<Colour>(colour);
  emb.body = vertex_line(lines[1], "body");
  if (emb.body.size() != t)
    bad("body has " + std::to_string(emb.body.size()) + " vertices, header says t=" + std::to_string(t));
  for (std::size_t i = 2; i < lines.size(); ++i) {
    auto toks = tokens(lines[i]);
    if (toks.size() != k + 2 || toks[0] != "spine" || toks[k] != "->")
      bad("bad spine line '" + lines[i] + "'");
    Spine s;
    for (std::size_t j = 1; j < k; ++j)
      s.base.push_back(vertex(toks[j], "spine"));
    s.apex = vertex(toks[k + 1], "spine");
    emb.spines.push_back(std::move(s));
  }
  return emb;
}

std::string to_certificate(const CliqueWitness &w) {
  std::ostringstream out;
  out << "CLIQUE v1 colours=" << w.colour_mask << "\nvertices";
  put_list(out, w.vertices);
  out << '\n';
  return out.str();
}

CliqueWitness clique_from_certificate(const std::string &text) {
  const auto lines = content_lines(text);
  if (lines.size() != 2)
    bad("clique certificate needs a header and a vertices line");
  const auto head = tokens(lines[0]);
  if (head.size() != 3 || head[0] != "CLIQUE" || head[1] != "v1")
    bad("bad clique header '" + lines[0] + "'");
  return {vertex_line(lines[1], "vertices"), field(head[2], "colours")};
}

std::string independent_set_certificate(const std::vector<Vertex> &vertices) {
  std::ostringstream out;
  out << "INDEPENDENT v1 size=" << vertices.size() << "\nvertices";
  put_list(out, vertices);
  out << '\n';
  return out.str();
}

std::vector<Vertex> independent_set_from_certificate(const std::string &text) {
  const auto lines = content_lines(text);
  if (lines.size() != 2)
    bad("independent set certificate needs a header and a vertices line");
  const auto head = tokens(lines[0]);
  if (head.size() != 3 || head[0] != "INDEPENDENT" || head[1] != "v1")
    bad("bad independent set header '" + lines[0] + "'");
  auto vs = vertex_line(lines[1], "vertices");
  if (vs.size() != field(head[2], "size"))
    bad("independent set size does not match header");
  return vs;
}

std::string slurp(std::istream &in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    bad("read failure");
  return buf.str();
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    bad("cannot open '" + path + "'");
  return slurp(in);
}

void write_file(const std::string &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
  if (!out)
    throw Error(ErrorKind::invalid_argument, "cannot write '" + path + "'");
}

} // namespace hedgehog
