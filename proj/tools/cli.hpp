#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zagreb/report.hpp"
#include "zagreb/verifier.hpp"

namespace zagreb::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Command { kIndices, kConstruct, kBridges, kEnumerate, kVerify, kLemmas, kExtremal,
                     kG6Encode, kG6Decode };

struct RunConfig {
  Command command = Command::kIndices;
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::size_t n_max = 8;
  IndexKind index = IndexKind::kPi1;
  Direction direction = Direction::kMin;
  std::string family;
  std::vector<std::string> records;  // graph6 records or edge lists given inline
  std::string input;                 // empty: read standard input
  OutputFormat format = OutputFormat::kText;
  std::size_t workers = 1;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  bool with_indices = false;
  bool with_ln = false;
};

// Each command writes its result to `out` and diagnostics to `err`, and
// returns an exit code. Library errors propagate as zagreb::Error.
int cmd_indices(const RunConfig& cfg, std::istream& in, std::ostream& out);
int cmd_construct(const RunConfig& cfg, std::ostream& out);
int cmd_bridges(const RunConfig& cfg, std::istream& in, std::ostream& out);
int cmd_enumerate(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_lemmas(const RunConfig& cfg, std::ostream& out);
int cmd_extremal(const RunConfig& cfg, std::ostream& out);
int cmd_g6_encode(const RunConfig& cfg, std::istream& in, std::ostream& out);
int cmd_g6_decode(const RunConfig& cfg, std::istream& in, std::ostream& out);

// Parses argv-style arguments (without the program name), dispatches, and
// maps errors to exit codes. `--output FILE` redirects `out` to FILE.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace zagreb::cli
