#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "lscoinv/springer.hpp"
#include "lscoinv/weyl.hpp"

namespace lscoinv {

/// Bumped whenever the on-disk layout of cached tables changes; entries of
/// other versions are ignored.
inline constexpr int kCacheSchemaVersion = 1;

/// Disk cache of character tables and orbit posets, one JSON file per
/// (kind, family, rank, schema version). Warnings go to `diag`.
class TableCache {
public:
    /// A disabled cache computes everything and touches no files.
    static TableCache disabled(std::ostream& diag);
    /// Creates `dir` if needed. An unusable directory gives a warning and a
    /// disabled cache.
    TableCache(std::filesystem::path dir, std::ostream& diag);

    bool enabled() const { return dir_.has_value(); }
    const std::optional<std::filesystem::path>& dir() const { return dir_; }

    std::filesystem::path entry_path(const std::string& kind, const WeylType& wt) const;

    CharTable char_table(const WeylType& wt);
    OrbitPoset poset(const WeylType& wt);

private:
    TableCache(std::ostream& diag) : diag_(&diag) {}

    std::optional<std::string> read_entry(const std::filesystem::path& path);
    void write_entry(const std::filesystem::path& path, const std::string& text);
    void warn(const std::string& msg);

    std::optional<std::filesystem::path> dir_;
    std::ostream* diag_;
};

}  // namespace lscoinv
