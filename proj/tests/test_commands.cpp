#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "lscoinv/commands.hpp"
#include "lscoinv/io.hpp"

using namespace lscoinv;
namespace fs = std::filesystem;

namespace {

Config config(Family f, int n, OutputFormat out = OutputFormat::Json) {
    Config cfg;
    cfg.type = {f, n};
    cfg.out = out;
    cfg.no_cache = true;
    return cfg;
}

}  // namespace

TEST_CASE("fake-degrees output") {
    std::ostringstream out, diag;
    REQUIRE(cmd_fake_degrees(config(Family::A, 1), out, diag) == 0);
    json j = json::parse(out.str());
    CHECK(j["P"].size() == 1);
    CHECK(j["P"][0][0].get<RatFunc>() == RatFunc(1));

    out.str("");
    REQUIRE(cmd_fake_degrees(config(Family::B, 2), out, diag) == 0);
    j = json::parse(out.str());
    CHECK(j["labels"].size() == 5);
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b) CHECK(j["P"][a][b] == j["P"][b][a]);

    out.str("");
    REQUIRE(cmd_fake_degrees(config(Family::A, 3, OutputFormat::Markdown), out, diag) == 0);
    CHECK(out.str().find("| (2,1) | t^2 + t^4 |") != std::string::npos);
    CHECK(diag.str().empty());
}

TEST_CASE("kostka output is deterministic") {
    std::ostringstream a, b, diag;
    REQUIRE(cmd_kostka(config(Family::B, 3), a, diag) == 0);
    REQUIRE(cmd_kostka(config(Family::B, 3), b, diag) == 0);
    CHECK(a.str() == b.str());
    const json j = json::parse(a.str());
    CHECK(j["labels"].size() == 10);
    CHECK(ls_result_from_json(j).K.size() == 10);

    std::ostringstream csv;
    Config cfg = config(Family::A, 3, OutputFormat::Csv);
    cfg.truncate = 4;
    REQUIRE(cmd_kostka(cfg, csv, diag) == 0);
    CHECK(csv.str().find("\"(1,1,1)\",0,0,t^3\n") != std::string::npos);
    CHECK(csv.str().find("1 + t^2 + t^4 + O(t^5)") != std::string::npos);
}

TEST_CASE("cached and uncached runs agree byte for byte") {
    const fs::path dir = fs::temp_directory_path() / ("lscoinv-cmd-" + std::to_string(std::random_device{}()));
    Config cfg = config(Family::B, 3);
    std::ostringstream plain, cold, warm, diag;
    REQUIRE(cmd_kostka(cfg, plain, diag) == 0);
    cfg.no_cache = false;
    cfg.cache_dir = dir;
    REQUIRE(cmd_kostka(cfg, cold, diag) == 0);
    REQUIRE(cmd_kostka(cfg, warm, diag) == 0);
    CHECK(cold.str() == plain.str());
    CHECK(warm.str() == plain.str());
    CHECK(fs::exists(dir / "poset-B-3-v1.json"));
    fs::remove_all(dir);
}

TEST_CASE("verify suites") {
    std::ostringstream out, diag;
    Config cfg = config(Family::A, 1);
    CHECK(cmd_verify(cfg, Suite::Example05, std::nullopt, out, diag) == 0);
    CHECK(json::parse(out.str())["status"] == "pass");
    out.str("");
    CHECK(cmd_verify(cfg, Suite::OracleA, 4, out, diag) == 0);
    CHECK(json::parse(out.str())["reports"].size() == 1);
    out.str("");
    CHECK(cmd_verify(cfg, Suite::GatesB, 2, out, diag) == 0);
    CHECK(json::parse(out.str())["reports"][0]["family"] == "B");
}

TEST_CASE("usage errors") {
    std::ostringstream out, diag;
    CHECK(cmd_kostka(config(Family::A, 0), out, diag) != 0);
    CHECK(cmd_fake_degrees(config(Family::B, kMaxRank + 1), out, diag) != 0);
    CHECK(diag.str().find("error:") != std::string::npos);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
    CHECK_THROWS_AS(parse_suite("everything"), std::invalid_argument);
    CHECK(parse_suite("gates-b") == Suite::GatesB);
}
