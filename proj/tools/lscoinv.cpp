// lscoinv: graded multiplicities, Lusztig-Shoji factorization and checks for
// type A and type B/C Springer-type data.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lscoinv/commands.hpp"

namespace {

constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded character matrices, Lusztig-Shoji factorization and modified Kostka polynomials"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string family;
    std::optional<int> rank;
    std::string format = "json";
    std::string cache_dir;
    if (const char* env = std::getenv("LSCOINV_CACHE")) cache_dir = env;
    bool no_cache = false;
    std::uint64_t seed = 7;
    std::size_t refinements = 3;
    int truncate = 0;

    app.add_option("--family", family, "Root system family: A or B (C accepted as B)");
    app.add_option("--rank", rank, "Rank n")->check(CLI::Range(1, lscoinv::kMaxRank));
    app.add_option("--out", format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
    app.add_option("--cache-dir", cache_dir, "Table cache directory (default: $LSCOINV_CACHE)");
    app.add_flag("--no-cache", no_cache, "Disable the table cache");
    app.add_option("--seed", seed, "Seed for sampling refinements of the closure order");
    app.add_option("--refinements", refinements, "Number of refinements checked by verify");
    app.add_option("--truncate", truncate, "Also print D as power series up to this order")
        ->check(CLI::NonNegativeNumber);

    auto* fake = app.add_subcommand("fake-degrees", "Fake degrees and the [P:L] matrix");
    auto* kostka = app.add_subcommand("kostka", "K, D and normalized Kostka polynomials");
    auto* table = app.add_subcommand("char-table", "Character table");
    auto* poset = app.add_subcommand("poset", "Orbit labels, d-values and closure order");
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite_name = "all";
    verify->add_option("suite", suite_name, "example05 | oracle-a | gates-b | all")
        ->check(CLI::IsMember({"example05", "oracle-a", "gates-b", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    lscoinv::Config cfg;
    cfg.out = lscoinv::parse_format(format);
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
    cfg.no_cache = no_cache;
    cfg.seed = seed;
    cfg.refinements = refinements;
    cfg.truncate = truncate;

    if (verify->parsed())
        return lscoinv::cmd_verify(cfg, lscoinv::parse_suite(suite_name), rank, std::cout, std::cerr);

    if (family.empty() || !rank) {
        std::cerr << "error: --family and --rank are required\n";
        return kUsageError;
    }
    try {
        cfg.type = lscoinv::WeylType{lscoinv::parse_family(family), *rank};
    } catch (const std::invalid_argument&) {
        std::cerr << "error: unknown family '" << family << "' (expected A or B)\n";
        return kUsageError;
    }

    if (fake->parsed()) return lscoinv::cmd_fake_degrees(cfg, std::cout, std::cerr);
    if (kostka->parsed()) return lscoinv::cmd_kostka(cfg, std::cout, std::cerr);
    if (table->parsed()) return lscoinv::cmd_char_table(cfg, std::cout, std::cerr);
    if (poset->parsed()) return lscoinv::cmd_poset(cfg, std::cout, std::cerr);
    return kUsageError;
}
