#include "lscoinv/commands.hpp"

#include <ostream>
#include <stdexcept>

#include "lscoinv/cache.hpp"
#include "lscoinv/io.hpp"
#include "lscoinv/lsalgo.hpp"
#include "lscoinv/verify.hpp"

namespace lscoinv {

namespace {

constexpr int kUsageError = 2;

TableCache open_cache(const Config& cfg, std::ostream& diag) {
    if (cfg.no_cache || !cfg.cache_dir) return TableCache::disabled(diag);
    return TableCache(*cfg.cache_dir, diag);
}

json header(const WeylType& wt) { return json{{"family", std::string(1, family_char(wt.family))}, {"rank", wt.rank}}; }

std::string vector_to_csv(const std::vector<Label>& labels, const std::string& column,
                          const std::vector<std::string>& values) {
    std::string s = "label," + column + "\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const std::string l = labels[i].to_string();
        const bool quote = l.find(',') != std::string::npos;
        s += (quote ? "\"" + l + "\"" : l) + "," + values[i] + "\n";
    }
    return s;
}

std::string vector_to_markdown(const std::vector<Label>& labels, const std::string& column,
                               const std::vector<std::string>& values) {
    std::string s = "| label | " + column + " |\n|---|---|";
    for (char c : column)
        if (c == '|') s += "---|";
    s += '\n';
    for (std::size_t i = 0; i < labels.size(); ++i) s += "| " + labels[i].to_string() + " | " + values[i] + " |\n";
    return s;
}

template <typename F>
int guarded(std::ostream& diag, F&& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        diag << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << '\n';
        return 1;
    }
}

std::vector<std::string> series_strings(const std::vector<RatFunc>& D, int order) {
    std::vector<std::string> out;
    for (const auto& d : D) out.push_back(d.series_expand(order).to_string() + " + O(t^" + std::to_string(order + 1) + ")");
    return out;
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "md") return OutputFormat::Markdown;
    throw std::invalid_argument("unknown output format '" + s + "' (expected json, csv or md)");
}

Suite parse_suite(const std::string& s) {
    if (s == "example05") return Suite::Example05;
    if (s == "oracle-a") return Suite::OracleA;
    if (s == "gates-b") return Suite::GatesB;
    if (s == "all") return Suite::All;
    throw std::invalid_argument("unknown suite '" + s + "' (expected example05, oracle-a, gates-b or all)");
}

int cmd_fake_degrees(const Config& cfg, std::ostream& out, std::ostream& diag) {
    return guarded(diag, [&] {
        cfg.type.validate();
        TableCache cache = open_cache(cfg, diag);
        const MolienData molien(cache.char_table(cfg.type));
        const auto& labels = molien.table().labels;
        std::vector<LaurentPoly> fakes;
        for (std::size_t m = 0; m < labels.size(); ++m) fakes.push_back(molien.fake_degree(m));
        const GradedMatrix P = molien.pl_matrix();
        switch (cfg.out) {
            case OutputFormat::Json: {
                json j = header(cfg.type);
                j["labels"] = labels;
                j["fake_degrees"] = fakes;
                j["P"] = matrix_to_json(P);
                out << j.dump(2) << '\n';
                break;
            }
            case OutputFormat::Csv: {
                std::vector<std::string> cells;
                for (const auto& f : fakes) cells.push_back(f.to_string());
                out << vector_to_csv(labels, "fake_degree", cells) << '\n' << matrix_to_csv(P);
                break;
            }
            case OutputFormat::Markdown: {
                std::vector<std::string> cells;
                for (const auto& f : fakes) cells.push_back(f.to_string());
                out << "## Fake degrees " << cfg.type.name() << "\n\n"
                    << vector_to_markdown(labels, "fake degree", cells) << "\n## [P:L]\n\n"
                    << matrix_to_markdown(P);
                break;
            }
        }
        return 0;
    });
}

int cmd_kostka(const Config& cfg, std::ostream& out, std::ostream& diag) {
    return guarded(diag, [&] {
        cfg.type.validate();
        TableCache cache = open_cache(cfg, diag);
        const MolienData molien(cache.char_table(cfg.type));
        const OrbitPoset poset = cache.poset(cfg.type);
        const LSResult res = lusztig_shoji(molien.pl_matrix(), poset);
        switch (cfg.out) {
            case OutputFormat::Json: {
                json j = header(cfg.type);
                j.update(ls_result_to_json(res));
                j["d"] = poset.d;
                if (cfg.truncate > 0) j["D_series"] = series_strings(res.D, cfg.truncate);
                out << j.dump(2) << '\n';
                break;
            }
            case OutputFormat::Csv:
                out << matrix_to_csv(res.kostka);
                if (cfg.truncate > 0) out << '\n' << vector_to_csv(res.labels(), "D_series", series_strings(res.D, cfg.truncate));
                break;
            case OutputFormat::Markdown: {
                std::vector<std::string> dcells;
                for (const auto& d : res.D) dcells.push_back(d.to_string());
                out << "## [K:L] " << cfg.type.name() << "\n\n"
                    << matrix_to_markdown(res.K) << "\n## D\n\n"
                    << vector_to_markdown(res.labels(), "D", dcells);
                if (cfg.truncate > 0)
                    out << "\n## D series\n\n"
                        << vector_to_markdown(res.labels(), "D", series_strings(res.D, cfg.truncate));
                out << "\n## Kostka (row mu, column lambda)\n\n" << matrix_to_markdown(res.kostka);
                break;
            }
        }
        return 0;
    });
}

int cmd_char_table(const Config& cfg, std::ostream& out, std::ostream& diag) {
    return guarded(diag, [&] {
        cfg.type.validate();
        TableCache cache = open_cache(cfg, diag);
        const CharTable t = cache.char_table(cfg.type);
        if (cfg.out == OutputFormat::Json) {
            out << char_table_to_json(t).dump(2) << '\n';
            return 0;
        }
        const auto class_name = [&](const ConjClass& c) {
            std::string s = partition_to_string(c.positive);
            if (t.type.family == Family::B) s = "(" + s + "," + partition_to_string(c.negative) + ")";
            return s;
        };
        const bool csv = cfg.out == OutputFormat::Csv;
        out << (csv ? "label" : "| |");
        for (const auto& c : t.classes) out << (csv ? ",\"" : " ") << class_name(c) << (csv ? "\"" : " |");
        out << '\n';
        if (!csv) {
            out << "|---|";
            for (std::size_t c = 0; c < t.classes.size(); ++c) out << "---|";
            out << '\n';
        }
        for (std::size_t l = 0; l < t.labels.size(); ++l) {
            out << (csv ? "\"" + t.labels[l].to_string() + "\"" : "| " + t.labels[l].to_string() + " |");
            for (auto v : t.values[l]) out << (csv ? "," : " ") << v << (csv ? "" : " |");
            out << '\n';
        }
        return 0;
    });
}

int cmd_poset(const Config& cfg, std::ostream& out, std::ostream& diag) {
    return guarded(diag, [&] {
        cfg.type.validate();
        TableCache cache = open_cache(cfg, diag);
        const OrbitPoset p = cache.poset(cfg.type);
        if (cfg.out == OutputFormat::Json) {
            out << poset_to_json(p).dump(2) << '\n';
            return 0;
        }
        std::vector<std::string> cells;
        for (std::size_t i = 0; i < p.size(); ++i) {
            std::string above;
            for (std::size_t j = 0; j < p.size(); ++j)
                if (p.strictly_below(i, j)) {
                    bool covered = true;
                    for (std::size_t k = 0; k < p.size(); ++k)
                        if (p.strictly_below(i, k) && p.strictly_below(k, j)) covered = false;
                    if (covered) above += (above.empty() ? "" : " ") + p.labels[j].to_string();
                }
            cells.push_back(std::to_string(p.d[i]) + (cfg.out == OutputFormat::Csv ? ",\"" : " | ") + above +
                            (cfg.out == OutputFormat::Csv ? "\"" : ""));
        }
        out << (cfg.out == OutputFormat::Csv ? vector_to_csv(p.labels, "d,covered_by", cells)
                                             : vector_to_markdown(p.labels, "d | covered by", cells));
        return 0;
    });
}

int cmd_verify(const Config& cfg, Suite suite, std::optional<int> rank, std::ostream& out, std::ostream& diag) {
    return guarded(diag, [&] {
        const VerifyOptions opts{cfg.refinements, cfg.seed, VerifyOptions{}.series_order};
        TableCache cache = open_cache(cfg, diag);
        std::vector<Report> reports;
        const auto run = [&](Family f, int lo, int hi) {
            for (int n = lo; n <= hi; ++n) {
                const WeylType wt{f, n};
                wt.validate();
                Report r;
                try {
                    r = verify_all(Pipeline{wt, cache.char_table(wt), cache.poset(wt)}, opts);
                } catch (const std::exception& e) {
                    r.family = std::string(1, family_char(f));
                    r.rank = n;
                    r.add("pipeline", {}, false, e.what());
                }
                reports.push_back(std::move(r));
            }
        };
        const auto range = [&](int lo, int hi) { return rank ? std::pair{*rank, *rank} : std::pair{lo, hi}; };
        std::string name;
        switch (suite) {
            case Suite::Example05:
                name = "example05";
                reports.push_back(verify_example05());
                run(Family::A, 3, 3);
                break;
            case Suite::OracleA: {
                name = "oracle-a";
                const auto [lo, hi] = range(1, 5);
                run(Family::A, lo, hi);
                break;
            }
            case Suite::GatesB: {
                name = "gates-b";
                const auto [lo, hi] = range(1, 3);
                run(Family::B, lo, hi);
                break;
            }
            case Suite::All:
                name = "all";
                reports.push_back(verify_example05());
                run(Family::A, 1, 5);
                run(Family::B, 1, 3);
                break;
        }

        std::size_t total = 0;
        std::size_t failed = 0;
        for (const auto& r : reports) {
            total += r.checks.size();
            failed += r.failures();
        }
        switch (cfg.out) {
            case OutputFormat::Json: {
                json j = {{"suite", name}, {"status", failed == 0 ? "pass" : "fail"}, {"reports", json::array()}};
                for (const auto& r : reports) j["reports"].push_back(report_to_json(r));
                out << j.dump(2) << '\n';
                break;
            }
            case OutputFormat::Csv:
                out << "family,rank,name,subject,status,detail\n";
                for (const auto& r : reports)
                    for (const auto& c : r.checks) {
                        std::string subject;
                        for (const auto& s : c.subject) subject += (subject.empty() ? "" : " ") + s;
                        std::string detail;
                        for (char ch : c.detail) detail += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                        out << r.family << ',' << r.rank << ',' << c.name << ",\"" << subject << "\","
                            << (c.pass ? "pass" : "fail") << ",\"" << detail << "\"\n";
                    }
                break;
            case OutputFormat::Markdown:
                out << "| family | rank | checks | failures |\n|---|---|---|---|\n";
                for (const auto& r : reports)
                    out << "| " << r.family << " | " << r.rank << " | " << r.checks.size() << " | " << r.failures()
                        << " |\n";
                if (failed > 0) {
                    out << "\n| family | rank | check | subject | detail |\n|---|---|---|---|---|\n";
                    for (const auto& r : reports)
                        for (const auto& c : r.checks)
                            if (!c.pass) {
                                std::string subject;
                                for (const auto& s : c.subject) subject += (subject.empty() ? "" : " ") + s;
                                out << "| " << r.family << " | " << r.rank << " | " << c.name << " | " << subject
                                    << " | " << c.detail << " |\n";
                            }
                }
                break;
        }
        diag << "verify " << name << ": " << total << " checks, " << failed << " failed\n";
        return failed == 0 ? 0 : 1;
    });
}

}  // namespace lscoinv
