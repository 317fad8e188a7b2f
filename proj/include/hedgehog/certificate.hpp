#ifndef HEDGEHOG_CERTIFICATE_HPP
#define HEDGEHOG_CERTIFICATE_HPP

// Plain-text certificates.
//
//   HEDGEHOG v1 k=3 t=3 colour=0
//   body 0 1 2
//   spine 0 1 -> 5
//
//   CLIQUE v1 colours=<mask>
//   vertices 0 4 9
//
//   INDEPENDENT v1 size=<s>
//   vertices 1 2 7
//
// Blank lines and lines starting with '#' are ignored by the readers.

#include "hedgehog/core.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hedgehog {

std::string to_certificate(const HedgehogEmbedding &emb);
HedgehogEmbedding embedding_from_certificate(const std::string &text);

std::string to_certificate(const CliqueWitness &w);
CliqueWitness clique_from_certificate(const std::string &text);

std::string independent_set_certificate(const std::vector<Vertex> &vertices);
std::vector<Vertex> independent_set_from_certificate(const std::string &text);

/// Whole stream as a string; throws parse_error on read failure.
std::string slurp(std::istream &in);
std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &contents);

} // namespace hedgehog

#endif // HEDGEHOG_CERTIFICATE_HPP
