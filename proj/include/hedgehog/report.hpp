#ifndef HEDGEHOG_REPORT_HPP
#define HEDGEHOG_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hedgehog {

/// Deterministic record of a randomized or backtracking run.
struct SearchReport {
  std::string operation;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string outcome;
  std::uint64_t tries = 0;
  // Restart / seed index that produced the returned certificate, if any.
  std::int64_t winning_try = -1;
  std::vector<std::pair<std::string, std::string>> details;

  void param(std::string key, std::string value) {
    parameters.emplace_back(std::move(key), std::move(value));
  }
  void detail(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
  }

  /// `key: value` lines, one per field, parameters and details prefixed.
  std::string to_text() const;
};

} // namespace hedgehog

#endif // HEDGEHOG_REPORT_HPP
