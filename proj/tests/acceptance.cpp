// Prints one [PASS]/[FAIL] line per acceptance criterion; exit status 0 iff
// all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "lscoinv/charge.hpp"
#include "lscoinv/commands.hpp"
#include "lscoinv/io.hpp"
#include "lscoinv/verify.hpp"

using namespace lscoinv;

namespace {

const LaurentPoly t = LaurentPoly::t();

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
    void require(const Report& r, const std::string& what) {
        if (r.all_pass()) return;
        for (const auto& c : r.checks)
            if (!c.pass) {
                std::string subject;
                for (const auto& s : c.subject) subject += " " + s;
                require(false, what + ": " + c.name + subject + " " + c.detail);
                return;
            }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds)
        o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
    if (!o.pass) ++failures;
    std::printf("[%s] AC%d %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
}

GradedMatrix from_rows(const std::vector<Label>& labels, const std::vector<std::vector<RatFunc>>& rows) {
    GradedMatrix m(labels);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace

int main() {
    criterion(1, "A3 fake-degree matrix [P:L] matches the worked example", 1.0, [] {
        Outcome o;
        Config cfg;
        cfg.type = {Family::A, 3};
        cfg.no_cache = true;
        std::ostringstream out, diag;
        o.require(cmd_fake_degrees(cfg, out, diag) == 0, "command failed: " + diag.str());
        const json j = json::parse(out.str());
        const LaurentPoly t2 = pow(t, 2), t4 = pow(t, 4), t6 = pow(t, 6);
        const RatFunc c(1, (1 - t4) * (1 - t6));
        const std::vector<std::vector<LaurentPoly>> want = {
            {1, t2 + t4, t6}, {t2 + t4, 1 + t2 + t4 + t6, t2 + t4}, {t6, t2 + t4, 1}};
        o.require(j["labels"].size() == 3, "expected 3 labels");
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                o.require(j["P"][a][b].get<RatFunc>() == c * RatFunc(want[a][b]), "entry mismatch");
        o.require(j["fake_degrees"][1].get<LaurentPoly>() == t2 + t4, "fake degree of (2,1)");
        return o;
    });

    criterion(2, "A3 factorization K, D and standard characters", 0, [] {
        Outcome o;
        const WeylType wt{Family::A, 3};
        const LSResult res = ls_factorize(pl_matrix(wt), build_poset(wt));
        const auto& L = res.labels();
        o.require(L == std::vector<Label>{Label::partition({3}), Label::partition({2, 1}), Label::partition({1, 1, 1})},
                  "label order");
        const GradedMatrix K = from_rows(L, {{1, 0, 0}, {pow(t, 2), 1, 0}, {pow(t, 6), pow(t, 2) + pow(t, 4), 1}});
        o.require(res.K == K, "K differs");
        o.require(res.D == std::vector<RatFunc>{1, RatFunc(1, 1 - pow(t, 2)),
                                                 RatFunc(1, (1 - pow(t, 4)) * (1 - pow(t, 6)))},
                  "D differs");
        // gch K_ref = [ref] + t^2 [triv]; gch K_sgn = [sgn] + (t^2 + t^4) [ref] + t^6 [triv]
        o.require(res.K(1, 1).is_one() && res.K(1, 0) == RatFunc(pow(t, 2)) && res.K(1, 2).is_zero(), "gch K_ref");
        o.require(res.K(2, 2).is_one() && res.K(2, 1) == RatFunc(pow(t, 2) + pow(t, 4)) &&
                      res.K(2, 0) == RatFunc(pow(t, 6)),
                  "gch K_sgn");
        return o;
    });

    criterion(3, "type A normalized Kostka equals the cocharge oracle, n <= 5", 30.0, [] {
        Outcome o;
        std::size_t pairs_at_5 = 0;
        for (int n = 1; n <= 5; ++n) {
            const WeylType wt{Family::A, n};
            const LSResult res = lusztig_shoji(pl_matrix(wt), build_poset(wt));
            for (std::size_t i = 0; i < res.labels().size(); ++i)
                for (std::size_t j = 0; j < res.labels().size(); ++j) {
                    const auto want = cocharge_kostka(res.labels()[i].alpha, res.labels()[j].alpha);
                    o.require(res.kostka(i, j) == want, wt.name() + " (" + res.labels()[i].to_string() + ", " +
                                                            res.labels()[j].to_string() + ")");
                    if (n == 5) ++pairs_at_5;
                }
        }
        o.require(pairs_at_5 == 49, "expected 49 pairs at n = 5");
        return o;
    });

    criterion(4, "type B property gates, n <= 3", 60.0, [] {
        Outcome o;
        for (int n = 1; n <= 3; ++n) {
            const WeylType wt{Family::B, n};
            const OrbitPoset poset = build_poset(wt);
            const MolienData molien(char_table(wt));
            const GradedMatrix P = molien.pl_matrix();
            const LSResult res = lusztig_shoji(P, poset);
            std::vector<LaurentPoly> fakes;
            for (std::size_t m = 0; m < poset.size(); ++m) fakes.push_back(molien.fake_degree(m));
            o.require(check_positivity(res.K, poset), wt.name() + " (a) positivity");
            o.require(check_parity_typeB(res.K), wt.name() + " (b) parity");
            o.require(check_kostka_diagonal(res.kostka, poset), wt.name() + " (c) diagonal");
            o.require(check_support(res.K, poset), wt.name() + " (d) support");
            o.require(check_minimum_row(res.K, poset, fakes), wt.name() + " (e) minimum row");
            o.require(check_cartan(P, res.D), wt.name() + " (f) Cartan determinant");
            // p(0)p(3) + p(1)p(2) + p(2)p(1) + p(3)p(0) bipartitions
            if (n == 3) o.require(poset.size() == 10, "expected 10 labels at n = 3");
        }
        return o;
    });

    criterion(5, "B3 factorization independent of the refinement", 0, [] {
        Outcome o;
        const WeylType wt{Family::B, 3};
        const OrbitPoset poset = build_poset(wt);
        const auto orders = refinements(poset, 3, 7);
        o.require(std::set(orders.begin(), orders.end()).size() >= 3, "fewer than 3 distinct extensions");
        const GradedMatrix P = pl_matrix(wt);
        const LSResult ref = lusztig_shoji(P, poset);
        o.require(check_refinement_independence(P, poset, ref, 3, 7), "refinement");
        o.require(check_refinement_independence(P, poset, ref, 8, 2026), "refinement");
        return o;
    });

    criterion(6, "character tables and fake-degree sums", 0, [] {
        Outcome o;
        for (int n = 1; n <= 6; ++n) o.require(check_char_table(char_table({Family::A, n})), "S" + std::to_string(n));
        for (int n = 1; n <= 4; ++n) o.require(check_char_table(char_table({Family::B, n})), "W" + std::to_string(n));
        for (const Family f : {Family::A, Family::B})
            for (int n = 1; n <= kMaxRank; ++n) {
                const WeylType wt{f, n};
                const MolienData molien(char_table(wt));
                LaurentPoly sum;
                for (std::size_t m = 0; m < molien.table().labels.size(); ++m) {
                    LaurentPoly term = molien.fake_degree(m);
                    term *= Integer(static_cast<long>(molien.table().dimension(m)));
                    sum += term;
                }
                LaurentPoly want(1);
                for (int d : wt.fundamental_degrees()) want *= exact_divide(1 - pow(t, 2 * d), 1 - pow(t, 2));
                o.require(sum == want, wt.name() + " coinvariant Poincare polynomial");
            }
        return o;
    });

    criterion(7, "Euler pairing, basis expansion and reciprocity on all computed families", 0, [] {
        Outcome o;
        std::vector<WeylType> types;
        for (int n = 1; n <= 5; ++n) types.push_back({Family::A, n});
        for (int n = 1; n <= 3; ++n) types.push_back({Family::B, n});
        for (const auto& wt : types) {
            const GradedMatrix P = pl_matrix(wt);
            const LSResult res = lusztig_shoji(P, build_poset(wt));
            o.require(euler_pairing(res.K, res.D) == identity_matrix(res.labels()), wt.name() + " Euler pairing");
            o.require(check_reciprocity(P, res.K, res.D), wt.name());
        }
        return o;
    });

    return failures == 0 ? 0 : 1;
}
