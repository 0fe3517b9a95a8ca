#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "lscoinv/label.hpp"

namespace lscoinv {

enum class OutputFormat { Json, Csv, Markdown };

/// Throws std::invalid_argument on anything other than json, csv or md.
OutputFormat parse_format(const std::string& s);

struct Config {
    WeylType type;
    OutputFormat out = OutputFormat::Json;
    std::optional<std::filesystem::path> cache_dir;  ///< unset or no_cache: uncached
    bool no_cache = false;
    std::uint64_t seed = 7;
    std::size_t refinements = 3;
    int truncate = 0;  ///< > 0: also print D as power series up to this order
};

/// Verification suites of cmd_verify.
enum class Suite { Example05, OracleA, GatesB, All };
Suite parse_suite(const std::string& s);

// Each command writes data to `out` and diagnostics to `diag`, and returns the
// process exit status.

/// Fake-degree vector and [P:L].
int cmd_fake_degrees(const Config& cfg, std::ostream& out, std::ostream& diag);
/// K, D and the normalized Kostka matrix.
int cmd_kostka(const Config& cfg, std::ostream& out, std::ostream& diag);
/// Character table of W.
int cmd_char_table(const Config& cfg, std::ostream& out, std::ostream& diag);
/// Orbit poset: labels, d and closure order.
int cmd_poset(const Config& cfg, std::ostream& out, std::ostream& diag);
/// Runs a suite. `rank` restricts oracle-a / gates-b to one rank; otherwise
/// oracle-a covers ranks 1..5 and gates-b ranks 1..3. Exit 0 iff every check
/// passes.
int cmd_verify(const Config& cfg, Suite suite, std::optional<int> rank, std::ostream& out, std::ostream& diag);

}  // namespace lscoinv
