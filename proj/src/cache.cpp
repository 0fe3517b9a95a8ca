#include "lscoinv/cache.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <system_error>

#include "lscoinv/io.hpp"

namespace lscoinv {

namespace fs = std::filesystem;

TableCache TableCache::disabled(std::ostream& diag) { return TableCache(diag); }

TableCache::TableCache(fs::path dir, std::ostream& diag) : diag_(&diag) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        warn("cache directory " + dir.string() + " is unusable, continuing uncached");
        return;
    }
    // Probe writability up front so a read-only directory is reported once.
    const fs::path probe = dir / (".probe-" + std::to_string(std::random_device{}()));
    {
        std::ofstream out(probe);
        if (!out) {
            warn("cache directory " + dir.string() + " is not writable, continuing uncached");
            return;
        }
    }
    fs::remove(probe, ec);
    dir_ = std::move(dir);
}

fs::path TableCache::entry_path(const std::string& kind, const WeylType& wt) const {
    const std::string name = kind + "-" + std::string(1, family_char(wt.family)) + "-" + std::to_string(wt.rank) +
                             "-v" + std::to_string(kCacheSchemaVersion) + ".json";
    return dir_ ? *dir_ / name : fs::path(name);
}

void TableCache::warn(const std::string& msg) { *diag_ << "warning: " << msg << '\n'; }

std::optional<std::string> TableCache::read_entry(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void TableCache::write_entry(const fs::path& path, const std::string& text) {
    fs::path tmp = path;
    tmp += ".tmp-" + std::to_string(std::random_device{}());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << text;
        if (!out.flush()) {
            warn("could not write cache entry " + path.string());
            std::error_code ec;
            fs::remove(tmp, ec);
            return;
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        warn("could not install cache entry " + path.string() + ": " + ec.message());
        fs::remove(tmp, ec);
    }
}

CharTable TableCache::char_table(const WeylType& wt) {
    if (!enabled()) return lscoinv::char_table(wt);
    const fs::path path = entry_path("chartable", wt);
    if (auto text = read_entry(path)) {
        try {
            CharTable t = char_table_from_json(json::parse(*text));
            if (t.type == wt && t.labels == enumerate_labels(wt)) return t;
            warn("cache entry " + path.string() + " describes a different table, recomputing");
        } catch (const std::exception& e) {
            warn("discarding corrupt cache entry " + path.string() + " (" + e.what() + ")");
        }
    }
    CharTable t = lscoinv::char_table(wt);
    write_entry(path, char_table_to_json(t).dump(1) + "\n");
    return t;
}

OrbitPoset TableCache::poset(const WeylType& wt) {
    if (!enabled()) return build_poset(wt);
    const fs::path path = entry_path("poset", wt);
    if (auto text = read_entry(path)) {
        try {
            OrbitPoset p = poset_from_json(json::parse(*text));
            validate_poset(p);
            if (p.type == wt) return p;
            warn("cache entry " + path.string() + " describes a different poset, recomputing");
        } catch (const std::exception& e) {
            warn("discarding corrupt cache entry " + path.string() + " (" + e.what() + ")");
        }
    }
    OrbitPoset p = build_poset(wt);
    write_entry(path, poset_to_json(p).dump(1) + "\n");
    return p;
}

}  // namespace lscoinv
