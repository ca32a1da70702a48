// Command-line front end: argument parsing, dispatch, and the text, CSV and
// JSON renderers. Kept as a library so the commands can be driven in-process.

#ifndef ARCWORDS_TOOLS_CLI_HPP_
#define ARCWORDS_TOOLS_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arcwords/digraph.hpp"
#include "arcwords/experiments.hpp"

namespace arcwords::cli {

  enum ExitCode : int {
    kOk          = 0,
    kFailed      = 1,  // not a member, or a verification suite failed
    kBadInput    = 2,  // parse errors, bad flags, violated preconditions
    kSizeLimit   = 3,
    kInternal    = 4,
  };

  enum class Format { text, csv, json };

  struct Config {
    std::string                command;
    std::optional<std::string> digraph_path;
    std::optional<std::string> family;
    std::optional<std::string> hex;
    std::optional<std::string> alpha;
    bool                       word = false;
    std::optional<std::string> class_name;
    std::size_t                n            = 0;
    Connectivity               connectivity = Connectivity::unilateral;
    bool                       labelled     = false;
    Format                     format       = Format::text;
    std::size_t                jobs         = 1;
    bool                       long_run     = false;
    std::optional<std::string> cache_dir;
    std::optional<std::string> suite;
    std::optional<std::string> from;
  };

  // Parses argv and runs the command. Everything is written to `out`,
  // diagnostics to `err`; the return value is an ExitCode.
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

  // The digraph named by exactly one of --digraph, --family, --hex.
  Digraph load_digraph(Config const& config);

  // Tournaments in pair order (1,2), (1,3), ..., (n-1,n), one per line, '1'
  // meaning i -> j. Blank lines and lines starting with '#' are skipped; all
  // tournaments must have the same order.
  std::vector<Digraph> read_tournaments(std::istream& in);
  Digraph              tournament_from_bits(std::string_view bits);

  // 64-bit FNV-1a over the cache key fields.
  std::uint64_t cache_key(std::string_view text);

  inline constexpr int kCacheFormatVersion = 1;

}  // namespace arcwords::cli

#endif  // ARCWORDS_TOOLS_CLI_HPP_
