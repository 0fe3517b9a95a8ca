#include "lscoinv/verify.hpp"

#include <algorithm>
#include <exception>
#include <tuple>

#include "lscoinv/charge.hpp"
#include "lscoinv/io.hpp"

namespace lscoinv {

namespace {

std::vector<std::string> pair_subject(const std::vector<Label>& labels, std::size_t i, std::size_t j) {
    return {labels[i].to_string(), labels[j].to_string()};
}

std::string mismatch(const std::string& got, const std::string& want) { return "got " + got + ", expected " + want; }

Label trivial_label(const WeylType& wt) {
    return wt.family == Family::A ? Label::partition({wt.rank}) : Label::bipartition({wt.rank}, {});
}

}  // namespace

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

void Report::add(std::string name, std::vector<std::string> subject, bool pass, std::string detail) {
    checks.push_back({std::move(name), std::move(subject), pass, std::move(detail)});
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

void Report::sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
        return std::tie(a.name, a.subject) < std::tie(b.name, b.subject);
    });
}

std::vector<const CheckRecord*> Report::named(const std::string& name) const {
    std::vector<const CheckRecord*> out;
    for (const auto& c : checks)
        if (c.name == name) out.push_back(&c);
    return out;
}

Report check_reciprocity(const GradedMatrix& P, const GradedMatrix& K, const std::vector<RatFunc>& D) {
    Report r;
    const auto& labels = P.labels();
    const GradedMatrix product = K.transposed() * diagonal_matrix(labels, D) * K;
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = 0; j < P.size(); ++j) {
            const bool ok = product(i, j) == P(i, j);
            r.add("reciprocity_product", pair_subject(labels, i, j), ok,
                  ok ? "" : mismatch(product(i, j).to_string(), P(i, j).to_string()));
        }

    // gch K~_mu = D_mu * (row mu of K); expand gch P_lambda in that basis.
    const GradedMatrix standard = diagonal_matrix(labels, D) * K;
    for (std::size_t i = 0; i < P.size(); ++i) {
        std::vector<RatFunc> row(P.size());
        for (std::size_t j = 0; j < P.size(); ++j) row[j] = P(i, j);
        std::vector<RatFunc> coords;
        try {
            coords = expand_in_basis(row, standard);
        } catch (const SingularMatrix& e) {
            r.add("reciprocity_basis", {labels[i].to_string()}, false, e.what());
            continue;
        }
        for (std::size_t m = 0; m < P.size(); ++m) {
            // [P_lambda : K~_mu] must equal [K_mu : L_lambda].
            const bool ok = coords[m] == K(m, i);
            r.add("reciprocity_basis", pair_subject(labels, i, m), ok,
                  ok ? "" : mismatch(coords[m].to_string(), K(m, i).to_string()));
        }
    }
    return r;
}

RatFunc cartan_determinant(const GradedMatrix& P) { return determinant_bareiss(P); }

Report check_cartan(const GradedMatrix& P, const std::vector<RatFunc>& D) {
    Report r;
    RatFunc prod(1);
    for (const auto& d : D) prod *= d;
    const RatFunc det = cartan_determinant(P);
    const bool ok = det == prod;
    r.add("cartan_determinant", {}, ok, ok ? det.to_string() : mismatch(det.to_string(), prod.to_string()));
    return r;
}

bool has_t4_parity(const LaurentPoly& p) {
    if (p.is_zero()) return true;
    if (!p.is_polynomial() || !p.has_nonnegative_coeffs()) return false;
    const auto k = p.min_exponent();
    for (const auto& [e, c] : p.terms())
        if ((e - k) % 4 != 0) return false;
    return true;
}

Report check_parity_typeB(const GradedMatrix& K) {
    Report r;
    for (std::size_t i = 0; i < K.size(); ++i)
        for (std::size_t j = 0; j < K.size(); ++j) {
            const RatFunc& e = K(i, j);
            const bool ok = e.is_laurent() && has_t4_parity(e.as_laurent());
            r.add("parity_t4", pair_subject(K.labels(), i, j), ok, ok ? "" : "entry " + e.to_string());
        }
    return r;
}

Report check_minimum_row(const GradedMatrix& K, const OrbitPoset& poset,
                         const std::vector<LaurentPoly>& fake_degrees) {
    Report r;
    std::size_t bottom = 0;
    try {
        bottom = poset.minimum();
    } catch (const ConfigurationError& e) {
        r.add("minimum_row", {}, true, std::string("skipped: ") + e.what());
        return r;
    }
    const Label& lowest = poset.labels[bottom];
    const std::size_t row = K.index_of(lowest);
    const int d = poset.d[bottom];
    for (std::size_t m = 0; m < K.size(); ++m) {
        const RatFunc want(fake_degrees[m].bar().shift(d));
        const bool ok = K(row, m) == want;
        r.add("minimum_row", pair_subject(K.labels(), row, m), ok,
              ok ? "" : mismatch(K(row, m).to_string(), want.to_string()));
    }
    return r;
}

std::vector<RatFunc> expand_in_basis(const std::vector<RatFunc>& v, const GradedMatrix& basis) {
    // v = sum_mu c_mu basis(mu, .)  <=>  basis^t c = v
    return solve(basis.transposed(), v);
}

GradedMatrix euler_pairing(const GradedMatrix& K, const std::vector<RatFunc>& /*D*/) {
    const auto& labels = K.labels();
    const GradedMatrix standard_in_p = inverse(K.transposed());  // row lambda: K~_lambda in P-coordinates
    const GradedMatrix dual_in_l = bar(K);                       // row mu: K*_mu in L-coordinates
    GradedMatrix pairing(labels);
    for (std::size_t l = 0; l < K.size(); ++l)
        for (std::size_t m = 0; m < K.size(); ++m) {
            RatFunc s;
            for (std::size_t g = 0; g < K.size(); ++g)
                if (!standard_in_p(l, g).is_zero() && !dual_in_l(m, g).is_zero())
                    s += standard_in_p(l, g).bar() * dual_in_l(m, g);
            pairing(l, m) = s;
        }
    return pairing;
}

Report euler_orthogonality(const GradedMatrix& K, const std::vector<RatFunc>& D) {
    Report r;
    const GradedMatrix pairing = euler_pairing(K, D);
    for (std::size_t i = 0; i < K.size(); ++i)
        for (std::size_t j = 0; j < K.size(); ++j) {
            const RatFunc want(i == j ? 1 : 0);
            const bool ok = pairing(i, j) == want;
            r.add("euler_pairing", pair_subject(K.labels(), i, j), ok,
                  ok ? "" : mismatch(pairing(i, j).to_string(), want.to_string()));
        }
    return r;
}

Report check_support(const GradedMatrix& K, const OrbitPoset& poset) {
    Report r;
    for (std::size_t i = 0; i < K.size(); ++i) {
        const std::size_t pi = poset.index_of(K.labels()[i]);
        for (std::size_t j = 0; j < K.size(); ++j) {
            const std::size_t pj = poset.index_of(K.labels()[j]);
            const bool ok = K(i, j).is_zero() || poset.leq[pi][pj];
            r.add("support", pair_subject(K.labels(), i, j), ok,
                  ok ? "" : "nonzero entry " + K(i, j).to_string() + " outside the closure order");
        }
    }
    return r;
}

Report check_positivity(const GradedMatrix& K, const OrbitPoset& poset) {
    Report r;
    const Label triv = trivial_label(poset.type);
    for (std::size_t i = 0; i < K.size(); ++i) {
        const int d = poset.d[poset.index_of(K.labels()[i])];
        for (std::size_t j = 0; j < K.size(); ++j) {
            const RatFunc& e = K(i, j);
            const bool poly = e.is_laurent() && e.as_laurent().is_polynomial();
            const bool ok = poly && e.as_laurent().has_nonnegative_coeffs();
            r.add("positivity", pair_subject(K.labels(), i, j), ok, ok ? "" : "entry " + e.to_string());
            if (!poly) continue;
            const LaurentPoly& p = e.as_laurent();
            const bool at_triv = K.labels()[j] == triv;
            bool degree_ok;
            if (p.is_zero())
                degree_ok = !at_triv;
            else
                degree_ok = p.max_exponent() <= d && ((p.max_exponent() == d) == at_triv);
            r.add("degree_bound", pair_subject(K.labels(), i, j), degree_ok,
                  degree_ok ? "" : "entry " + p.to_string() + " against d = " + std::to_string(d));
        }
    }
    return r;
}

Report check_kostka_diagonal(const PolyMatrix& kostka, const OrbitPoset& poset) {
    Report r;
    for (std::size_t i = 0; i < kostka.size(); ++i) {
        const int d = poset.d[poset.index_of(kostka.labels()[i])];
        const LaurentPoly want = LaurentPoly::t(d / 2);
        const bool ok = kostka(i, i) == want;
        r.add("kostka_diagonal", {kostka.labels()[i].to_string()}, ok,
              ok ? "" : mismatch(kostka(i, i).to_string(), want.to_string()));
        for (std::size_t j = 0; j < kostka.size(); ++j) {
            const LaurentPoly& p = kostka(i, j);
            const bool nat = p.is_polynomial() && p.has_nonnegative_coeffs();
            r.add("kostka_polynomial", pair_subject(kostka.labels(), i, j), nat, nat ? "" : "entry " + p.to_string());
        }
    }
    return r;
}

Report check_d_series(const std::vector<Label>& labels, const std::vector<RatFunc>& D, int order) {
    Report r;
    for (std::size_t i = 0; i < D.size(); ++i) {
        bool ok = false;
        std::string detail;
        try {
            const LaurentPoly s = D[i].series_expand(order);
            ok = s.is_polynomial() && s.has_nonnegative_coeffs() && s.coeff(0) == 1;
            detail = s.to_string();
        } catch (const std::domain_error& e) {
            detail = e.what();
        }
        r.add("d_series_positive", {labels[i].to_string()}, ok, ok ? "" : detail);
    }
    return r;
}

Report check_refinement_independence(const GradedMatrix& P, const OrbitPoset& poset, const LSResult& reference,
                                     std::size_t count, std::uint64_t seed) {
    Report r;
    const auto orders = refinements(poset, count, seed);
    std::vector<std::size_t> in_p;
    for (const auto& l : poset.labels) in_p.push_back(P.index_of(l));
    for (std::size_t k = 0; k < orders.size(); ++k) {
        std::vector<std::size_t> perm;
        for (auto idx : orders[k]) perm.push_back(in_p[idx]);
        const std::string tag = "refinement#" + std::to_string(k);
        bool ok = poset.is_linear_extension(orders[k]);
        std::string detail;
        if (!ok) {
            detail = "not a linear extension";
        } else {
            try {
                const LSResult alt = reorder(lusztig_shoji(P.permuted(perm), poset), reference.labels());
                ok = alt.K == reference.K && alt.D == reference.D && alt.kostka == reference.kostka;
                if (!ok) detail = "factorization differs from the reference order";
            } catch (const std::exception& e) {
                ok = false;
                detail = e.what();
            }
        }
        r.add("refinement_independence", {tag}, ok, detail);
    }
    return r;
}

Report check_cocharge_oracle(const PolyMatrix& kostka) {
    Report r;
    for (std::size_t i = 0; i < kostka.size(); ++i)
        for (std::size_t j = 0; j < kostka.size(); ++j) {
            const LaurentPoly want = cocharge_kostka(kostka.labels()[i].alpha, kostka.labels()[j].alpha);
            const bool ok = kostka(i, j) == want;
            r.add("cocharge_oracle", pair_subject(kostka.labels(), i, j), ok,
                  ok ? "" : mismatch(kostka(i, j).to_string(), want.to_string()));
        }
    return r;
}

Report check_char_table(const CharTable& table) {
    Report r;
    const std::int64_t order = table.type.order();
    const std::size_t nl = table.labels.size();
    const std::size_t nc = table.classes.size();
    std::int64_t total = 0;
    for (const auto& c : table.classes) total += c.size;
    r.add("class_sizes", {}, total == order && nl == nc,
          "sum " + std::to_string(total) + ", |W| " + std::to_string(order));
    for (std::size_t a = 0; a < nl; ++a)
        for (std::size_t b = a; b < nl; ++b) {
            Integer s = 0;
            for (std::size_t c = 0; c < nc; ++c)
                s += Integer(static_cast<long>(table.classes[c].size)) *
                     Integer(static_cast<long>(table.values[a][c])) * Integer(static_cast<long>(table.values[b][c]));
            const Integer want = a == b ? Integer(static_cast<long>(order)) : Integer(0);
            r.add("char_row_orthogonality", pair_subject(table.labels, a, b), s == want,
                  s == want ? "" : mismatch(s.get_str(), want.get_str()));
        }
    for (std::size_t c1 = 0; c1 < nc; ++c1)
        for (std::size_t c2 = c1; c2 < nc; ++c2) {
            Integer s = 0;
            for (std::size_t a = 0; a < nl; ++a)
                s += Integer(static_cast<long>(table.values[a][c1])) * Integer(static_cast<long>(table.values[a][c2]));
            // sum_chi chi(c1) chi(c2) = |W| / |c1| if c1 == c2, else 0
            const Integer want = c1 == c2 ? Integer(static_cast<long>(order / table.classes[c1].size)) : Integer(0);
            r.add("char_column_orthogonality", {std::to_string(c1), std::to_string(c2)}, s == want,
                  s == want ? "" : mismatch(s.get_str(), want.get_str()));
        }
    const std::size_t id = table.identity_class();
    for (std::size_t a = 0; a < nl; ++a)
        r.add("char_dimension_positive", {table.labels[a].to_string()}, table.values[a][id] > 0,
              std::to_string(table.values[a][id]));
    return r;
}

Report check_fake_degrees(const MolienData& molien) {
    Report r;
    const CharTable& table = molien.table();
    LaurentPoly weighted;
    for (std::size_t m = 0; m < table.labels.size(); ++m) {
        const LaurentPoly f = molien.fake_degree(m);
        bool shape_ok = f.is_polynomial() && f.has_nonnegative_coeffs();
        for (const auto& [e, c] : f.terms()) shape_ok = shape_ok && e % 2 == 0;
        r.add("fake_degree_shape", {table.labels[m].to_string()}, shape_ok, f.to_string());
        const Integer dim(static_cast<long>(table.dimension(m)));
        r.add("fake_degree_dimension", {table.labels[m].to_string()}, f.eval_at_one() == dim,
              mismatch(f.eval_at_one().get_str(), dim.get_str()));
        LaurentPoly term = f;
        term *= dim;
        weighted += term;
    }
    const LaurentPoly want = coinvariant_poincare(table.type);
    r.add("coinvariant_poincare", {}, weighted == want,
          weighted == want ? want.to_string() : mismatch(weighted.to_string(), want.to_string()));
    const LaurentPoly triv = molien.fake_degree(trivial_label(table.type));
    r.add("fake_degree_trivial", {}, triv.is_one(), triv.to_string());
    return r;
}

Pipeline build_pipeline(const WeylType& wt) { return {wt, char_table(wt), build_poset(wt)}; }

Report verify_all(const Pipeline& pipeline, const VerifyOptions& opts) {
    Report r;
    r.family = std::string(1, family_char(pipeline.type.family));
    r.rank = pipeline.type.rank;
    try {
        validate_poset(pipeline.poset);
        r.add("poset_valid", {}, true);
        if (pipeline.table.labels != pipeline.poset.labels)
            throw ConfigurationError("character table and poset disagree on the label order");
        r.append(check_char_table(pipeline.table));
        const MolienData molien(pipeline.table);
        r.append(check_fake_degrees(molien));

        const GradedMatrix P = molien.pl_matrix();
        r.add("pl_symmetric", {}, P.is_symmetric());
        const LSResult res = lusztig_shoji(P, pipeline.poset);
        r.add("pipeline", {}, true, "factorization succeeded");

        r.append(check_reciprocity(P, res.K, res.D));
        r.append(check_cartan(P, res.D));
        r.append(check_support(res.K, pipeline.poset));
        r.append(check_positivity(res.K, pipeline.poset));
        r.append(check_kostka_diagonal(res.kostka, pipeline.poset));
        r.append(check_d_series(res.labels(), res.D, opts.series_order));
        std::vector<LaurentPoly> fakes;
        for (std::size_t m = 0; m < pipeline.table.labels.size(); ++m) fakes.push_back(molien.fake_degree(m));
        r.append(check_minimum_row(res.K, pipeline.poset, fakes));
        r.append(euler_orthogonality(res.K, res.D));
        r.append(check_refinement_independence(P, pipeline.poset, res, opts.refinements, opts.seed));
        if (pipeline.type.family == Family::A)
            r.append(check_cocharge_oracle(res.kostka));
        else
            r.append(check_parity_typeB(res.K));
    } catch (const std::exception& e) {
        r.add("pipeline", {}, false, e.what());
    }
    r.sort();
    return r;
}

Report verify_all(const WeylType& wt, const VerifyOptions& opts) {
    try {
        return verify_all(build_pipeline(wt), opts);
    } catch (const std::exception& e) {
        Report r;
        r.family = std::string(1, family_char(wt.family));
        r.rank = wt.rank;
        r.add("pipeline", {}, false, e.what());
        return r;
    }
}

const char* example05_golden_json() {
    // PGL(3) acting on the nilpotent cone of sl_3: labels triv, ref, sgn.
    // [P:L] as printed (common factor 1/((1-t^4)(1-t^6)) folded into each
    // entry, not reduced), [K:L], diag [K~:K], fake degrees, d, and the
    // normalized Kostka matrix kostka(mu, lambda).
    return R"json({
  "family": "A",
  "rank": 3,
  "labels": [{"partition": [3]}, {"partition": [2, 1]}, {"partition": [1, 1, 1]}],
  "d": [0, 2, 6],
  "P": [
    [{"num": {"coeffs": {"0": 1}}, "den": {"coeffs": {"0": 1, "4": -1, "6": -1, "10": 1}}},
     {"num": {"coeffs": {"2": 1, "4": 1}}, "den": {"coeffs": {"0": 1, "4": -1, "6": -1, "10": 1}}},
     {"num": {"coeffs": {"6": 1}}, "den": {"coeffs": {"0": 1, "4": -1, "6": -1, "10": 1}}}],
    [{"num": {"coeffs": {"2": 1, "4": 1}}, "den": {"coeffs": {"0": 1, "4": -1, "6": -1, "10": 1}}},
     {"num": {"coeffs": {"0": 1, "2": 1, "4": 1, "6": 1}}, "den": {"coeffs": {"0": 1, "4": -1, "6": -1, "10": 1}}},
     {"num": {"coeffs": {"2": 1, "4": 1}}, "den": {"coeffs": {"0": 1, "4": -1, "6": -1, "10": 1}}}],
    [{"num": {"coeffs": {"6": 1}}, "den": {"coeffs": {"0": 1, "4": -1, "6": -1, "10": 1}}},
     {"num": {"coeffs": {"2": 1, "4": 1}}, "den": {"coeffs": {"0": 1, "4": -1, "6": -1, "10": 1}}},
     {"num": {"coeffs": {"0": 1}}, "den": {"coeffs": {"0": 1, "4": -1, "6": -1, "10": 1}}}]
  ],
  "K": [
    [{"num": {"coeffs": {"0": 1}}, "den": {"coeffs": {"0": 1}}},
     {"num": {"coeffs": {}}, "den": {"coeffs": {"0": 1}}},
     {"num": {"coeffs": {}}, "den": {"coeffs": {"0": 1}}}],
    [{"num": {"coeffs": {"2": 1}}, "den": {"coeffs": {"0": 1}}},
     {"num": {"coeffs": {"0": 1}}, "den": {"coeffs": {"0": 1}}},
     {"num": {"coeffs": {}}, "den": {"coeffs": {"0": 1}}}],
    [{"num": {"coeffs": {"6": 1}}, "den": {"coeffs": {"0": 1}}},
     {"num": {"coeffs": {"2": 1, "4": 1}}, "den": {"coeffs": {"0": 1}}},
     {"num": {"coeffs": {"0": 1}}, "den": {"coeffs": {"0": 1}}}]
  ],
  "D": [
    {"num": {"coeffs": {"0": 1}}, "den": {"coeffs": {"0": 1}}},
    {"num": {"coeffs": {"0": 1}}, "den": {"coeffs": {"0": 1, "2": -1}}},
    {"num": {"coeffs": {"0": 1}}, "den": {"coeffs": {"0": 1, "4": -1, "6": -1, "10": 1}}}
  ],
  "fake_degrees": [{"coeffs": {"0": 1}}, {"coeffs": {"2": 1, "4": 1}}, {"coeffs": {"6": 1}}],
  "kostka": [
    [{"coeffs": {"0": 1}}, {"coeffs": {"0": 1}}, {"coeffs": {"0": 1}}],
    [{"coeffs": {}}, {"coeffs": {"1": 1}}, {"coeffs": {"1": 1, "2": 1}}],
    [{"coeffs": {}}, {"coeffs": {}}, {"coeffs": {"3": 1}}]
  ]
})json";
}

Report verify_example05() {
    Report r;
    r.family = "A";
    r.rank = 3;
    try {
        const json golden = json::parse(example05_golden_json());
        std::vector<Label> labels;
        for (const auto& l : golden.at("labels")) labels.push_back(l.get<Label>());

        const WeylType wt{Family::A, 3};
        const OrbitPoset poset = build_poset(wt);
        r.add("example05_labels", {}, poset.labels == labels);
        r.add("example05_d", {}, poset.d == golden.at("d").get<std::vector<int>>());

        const MolienData molien(char_table(wt));
        const GradedMatrix P = molien.pl_matrix();
        const LSResult res = lusztig_shoji(P, poset);
        const auto matrix_field = [&](const char* name, auto get) {
            const auto& rows = golden.at(name);
            for (std::size_t i = 0; i < labels.size(); ++i)
                for (std::size_t j = 0; j < labels.size(); ++j) {
                    const auto [got, want] = get(rows[i][j], i, j);
                    r.add(std::string("example05_") + name, pair_subject(labels, i, j), got == want,
                          got == want ? "" : mismatch(got, want));
                }
        };
        matrix_field("P", [&](const json& e, std::size_t i, std::size_t j) {
            return std::pair{P(i, j).to_string(), e.get<RatFunc>().to_string()};
        });
        matrix_field("K", [&](const json& e, std::size_t i, std::size_t j) {
            return std::pair{res.K(i, j).to_string(), e.get<RatFunc>().to_string()};
        });
        matrix_field("kostka", [&](const json& e, std::size_t i, std::size_t j) {
            return std::pair{res.kostka(i, j).to_string(), e.get<LaurentPoly>().to_string()};
        });
        const auto D = golden.at("D").get<std::vector<RatFunc>>();
        const auto fakes = golden.at("fake_degrees").get<std::vector<LaurentPoly>>();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            r.add("example05_D", {labels[i].to_string()}, res.D[i] == D[i],
                  res.D[i] == D[i] ? "" : mismatch(res.D[i].to_string(), D[i].to_string()));
            const LaurentPoly f = molien.fake_degree(i);
            r.add("example05_fake_degree", {labels[i].to_string()}, f == fakes[i],
                  f == fakes[i] ? "" : mismatch(f.to_string(), fakes[i].to_string()));
        }
    } catch (const std::exception& e) {
        r.add("pipeline", {}, false, e.what());
    }
    r.sort();
    return r;
}

}  // namespace lscoinv
