// The dctri command line: triangulate | verify | hstar | dice | flagcheck | corpus.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace dctri::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kInvalidInput = 2, kVerificationFailed = 3, kRetryCapExceeded = 4 };

struct RunConfig {
  std::string command;
  std::string input;
  std::uint64_t seed = 0;
  std::optional<std::string> t_start;
  std::string output;  ///< empty: standard output
  unsigned threads = 1;
  bool emit_certificate = true;
  bool independence = false;
  bool allow_uncertified = false;
  bool timing = true;
  std::size_t max_n = 5;
  unsigned max_retries = 16;
};

int cmd_triangulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_hstar(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_dice(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_flagcheck(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_corpus(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments, dispatches, and writes to the requested output.
int run(int argc, char** argv);

}  // namespace dctri::cli
