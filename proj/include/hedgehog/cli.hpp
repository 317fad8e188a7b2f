#ifndef HEDGEHOG_CLI_HPP
#define HEDGEHOG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hedgehog::cli {

enum ExitCode : int {
  kOk = 0,
  kNotFound = 1,  // search or extraction failed, or a batch entry failed
  kViolation = 2, // a verifier rejected its input; the witness is printed
  kRefused = 3,
  kUsage = 64,
};

/// One invocation; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// A manifest line: `[expect=<code>] <subcommand> <args...>`. Blank lines and
/// '#' comments are skipped; double quotes group a token.
struct BatchEntry {
  std::vector<std::string> args;
  int expected_exit = 0;
  std::size_t line = 0;
};

struct BatchRow {
  BatchEntry entry;
  int exit_code = 0;
  double millis = 0;
  bool passed = false;
  std::string output; // captured stdout then stderr
};

std::vector<BatchEntry> parse_manifest(const std::string &text);
/// Runs entries on up to `threads` workers; rows come back in manifest order.
std::vector<BatchRow> run_batch(const std::vector<BatchEntry> &entries, unsigned threads);
std::string format_batch_table(const std::vector<BatchRow> &rows);

} // namespace hedgehog::cli

#endif // HEDGEHOG_CLI_HPP
