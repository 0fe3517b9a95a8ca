#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "lscoinv/weyl.hpp"

using namespace lscoinv;

namespace {

const LaurentPoly t = LaurentPoly::t();

// A signed permutation: w e_i = sign[i] e_{perm[i]}. Type A elements have all
// signs +1.
struct Element {
    std::vector<int> perm;
    std::vector<int> sign;
};

std::vector<Element> group_elements(const WeylType& wt) {
    std::vector<Element> out;
    std::vector<int> perm(wt.rank);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const int masks = wt.family == Family::A ? 1 : 1 << wt.rank;
        for (int m = 0; m < masks; ++m) {
            std::vector<int> sign(wt.rank);
            for (int i = 0; i < wt.rank; ++i) sign[i] = (m >> i) & 1 ? -1 : 1;
            out.push_back({perm, sign});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

ConjClass class_of(const Element& w) {
    const std::size_t n = w.perm.size();
    std::vector<bool> seen(n, false);
    ConjClass c;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, s = 1;
        for (std::size_t j = i; !seen[j]; j = w.perm[j]) {
            seen[j] = true;
            ++len;
            s *= w.sign[j];
        }
        (s > 0 ? c.positive : c.negative).push_back(len);
    }
    std::sort(c.positive.rbegin(), c.positive.rend());
    std::sort(c.negative.rbegin(), c.negative.rend());
    return c;
}

int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

// det(1 - t^2 w) on the natural n-dimensional representation, by the Leibniz
// formula.
LaurentPoly natural_det(const Element& w) {
    const int n = static_cast<int>(w.perm.size());
    // matrix M = 1 - t^2 w, M[row][col]; w has entry sign[i] at (perm[i], i)
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (int i = 0; i < n; ++i) m[w.perm[i]][i] -= LaurentPoly(w.sign[i]) * pow(t, 2);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    LaurentPoly det;
    do {
        LaurentPoly term(perm_sign(sigma));
        for (int i = 0; i < n && !term.is_zero(); ++i) term *= m[i][sigma[i]];
        det += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return det;
}

LaurentPoly reflection_det(const WeylType& wt, const Element& w) {
    const LaurentPoly d = natural_det(w);
    return wt.family == Family::A ? exact_divide(d, 1 - pow(t, 2)) : d;
}

// [m]_q! / prod over hooks (1 - q^h) style products, q = t^2 (type A) or
// t^4 where noted.
LaurentPoly hook_product(const Partition& p, int step) {
    LaurentPoly out(1);
    const Partition c = conjugate(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            const int hook = p[i] - j + c[j] - static_cast<int>(i) - 1;
            out *= 1 - pow(t, step * hook);
        }
    return out;
}

int n_of(const Partition& p) {
    int s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
    return s;
}

// Known closed forms for fake degrees (t^2 = q).
LaurentPoly fake_degree_formula(const Label& l) {
    if (l.family == Family::A) {
        const int n = partition_size(l.alpha);
        LaurentPoly num = pow(t, 2 * n_of(l.alpha));
        for (int i = 1; i <= n; ++i) num *= 1 - pow(t, 2 * i);
        return exact_divide(num, hook_product(l.alpha, 2));
    }
    const int n = l.size();
    LaurentPoly num = pow(t, 2 * (2 * n_of(l.alpha) + 2 * n_of(l.beta) + partition_size(l.beta)));
    for (int i = 1; i <= n; ++i) num *= 1 - pow(t, 4 * i);
    return exact_divide(num, hook_product(l.alpha, 4) * hook_product(l.beta, 4));
}

}  // namespace

TEST_CASE("group orders and degrees") {
    CHECK(WeylType{Family::A, 4}.order() == 24);
    CHECK(WeylType{Family::B, 3}.order() == 48);
    CHECK(WeylType{Family::A, 4}.fundamental_degrees() == std::vector<int>{2, 3, 4});
    CHECK(WeylType{Family::B, 3}.fundamental_degrees() == std::vector<int>{2, 4, 6});
    CHECK(WeylType{Family::A, 1}.reflection_dim() == 0);
    CHECK_THROWS_AS(WeylType({Family::A, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(WeylType({Family::B, kMaxRank + 1}).validate(), std::invalid_argument);
}

TEST_CASE("labels") {
    CHECK(enumerate_labels({Family::A, 5}).size() == 7);
    CHECK(enumerate_labels({Family::B, 3}).size() == 10);
    CHECK(enumerate_labels({Family::B, 4}).size() == 20);
    const auto a3 = enumerate_labels({Family::A, 3});
    CHECK(a3 == std::vector<Label>{Label::partition({3}), Label::partition({2, 1}), Label::partition({1, 1, 1})});
    const auto b1 = enumerate_labels({Family::B, 1});
    CHECK(b1 == std::vector<Label>{Label::bipartition({1}, {}), Label::bipartition({}, {1})});
}

TEST_CASE("class sizes and reflection determinants match brute-force enumeration") {
    for (const WeylType wt : {WeylType{Family::A, 1}, WeylType{Family::A, 3}, WeylType{Family::A, 5},
                              WeylType{Family::A, 6}, WeylType{Family::B, 1}, WeylType{Family::B, 2},
                              WeylType{Family::B, 3}, WeylType{Family::B, 4}}) {
        CAPTURE(wt.name());
        const auto classes = enumerate_classes(wt);
        std::map<std::pair<Partition, Partition>, std::int64_t> counts;
        std::map<std::pair<Partition, Partition>, LaurentPoly> dets;
        for (const auto& w : group_elements(wt)) {
            const ConjClass c = class_of(w);
            ++counts[{c.positive, c.negative}];
            if (wt.rank <= 4) dets[{c.positive, c.negative}] = reflection_det(wt, w);
        }
        REQUIRE(counts.size() == classes.size());
        for (const auto& c : classes) {
            CHECK(counts.at({c.positive, c.negative}) == c.size);
            if (wt.rank <= 4) CHECK(dets.at({c.positive, c.negative}) == reflection_char_poly(wt, c));
        }
    }
}

TEST_CASE("one-dimensional and reflection characters") {
    for (const WeylType wt : {WeylType{Family::A, 4}, WeylType{Family::A, 5}, WeylType{Family::B, 2},
                              WeylType{Family::B, 3}, WeylType{Family::B, 4}}) {
        CAPTURE(wt.name());
        const int n = wt.rank;
        const Partition row{n}, column(n, 1);
        Partition hook{n - 1};
        if (n > 1) hook = {n - 1, 1};
        for (const auto& w : group_elements(wt)) {
            const ConjClass c = class_of(w);
            int fixed = 0, trace = 0, signs = 1;
            for (int i = 0; i < n; ++i) {
                signs *= w.sign[i];
                if (w.perm[i] == i) {
                    ++fixed;
                    trace += w.sign[i];
                }
            }
            const int sgn = perm_sign(w.perm);
            if (wt.family == Family::A) {
                CHECK(character_value(wt, Label::partition(row), c) == 1);
                CHECK(character_value(wt, Label::partition(column), c) == sgn);
                CHECK(character_value(wt, Label::partition(hook), c) == fixed - 1);
            } else {
                CHECK(character_value(wt, Label::bipartition(row, {}), c) == 1);
                CHECK(character_value(wt, Label::bipartition({}, column), c) == sgn * signs);
                CHECK(character_value(wt, Label::bipartition(column, {}), c) == sgn);
                CHECK(character_value(wt, Label::bipartition({}, row), c) == signs);
                CHECK(character_value(wt, Label::bipartition({n - 1}, {1}), c) == trace);
            }
        }
    }
}

TEST_CASE("character orthogonality") {
    const auto check = [](const WeylType& wt) {
        CAPTURE(wt.name());
        const CharTable table = char_table(wt);
        const std::size_t k = table.labels.size();
        REQUIRE(table.classes.size() == k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                std::int64_t s = 0;
                for (std::size_t c = 0; c < k; ++c) s += table.classes[c].size * table.values[a][c] * table.values[b][c];
                CHECK(s == (a == b ? wt.order() : 0));
            }
    };
    for (int n = 1; n <= 6; ++n) check({Family::A, n});
    for (int n = 1; n <= 4; ++n) check({Family::B, n});
}

TEST_CASE("graded multiplicities equal element-wise Molien sums") {
    for (const WeylType wt : {WeylType{Family::A, 3}, WeylType{Family::A, 4}, WeylType{Family::B, 2}}) {
        CAPTURE(wt.name());
        const MolienData molien(char_table(wt));
        const auto& table = molien.table();
        const auto elements = group_elements(wt);
        for (std::size_t a = 0; a < table.labels.size(); ++a)
            for (std::size_t b = 0; b < table.labels.size(); ++b) {
                RatFunc sum;
                for (const auto& w : elements) {
                    const ConjClass c = class_of(w);
                    std::int64_t chi = 1;
                    for (std::size_t k : {a, b}) chi *= character_value(wt, table.labels[k], c);
                    sum += RatFunc(LaurentPoly(chi), reflection_det(wt, w));
                }
                sum *= RatFunc(1, LaurentPoly(wt.order()));
                CHECK(molien.graded_mult(a, b) == sum);
            }
    }
}

TEST_CASE("fake degrees match the hook formulas") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : enumerate_labels({Family::A, n})) {
            CAPTURE(l.to_string());
            CHECK(fake_degree({Family::A, n}, l) == fake_degree_formula(l));
        }
    for (int n = 1; n <= 3; ++n)
        for (const auto& l : enumerate_labels({Family::B, n})) {
            CAPTURE(l.to_string());
            CHECK(fake_degree({Family::B, n}, l) == fake_degree_formula(l));
        }
}

TEST_CASE("example: [P:L] for A3") {
    const GradedMatrix P = pl_matrix({Family::A, 3});
    const LaurentPoly den = (1 - pow(t, 4)) * (1 - pow(t, 6));
    const std::vector<std::vector<LaurentPoly>> num = {{1, pow(t, 2) + pow(t, 4), pow(t, 6)},
                                                       {pow(t, 2) + pow(t, 4), 1 + pow(t, 2) + pow(t, 4) + pow(t, 6),
                                                        pow(t, 2) + pow(t, 4)},
                                                       {pow(t, 6), pow(t, 2) + pow(t, 4), 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(P(i, j) == RatFunc(num[i][j], den));
    CHECK(pl_matrix({Family::A, 1})(0, 0) == RatFunc(1));
}

TEST_CASE("B2 [P:L] is symmetric and the coinvariant algebra is recovered") {
    const GradedMatrix P = pl_matrix({Family::B, 2});
    CHECK(P.size() == 5);
    CHECK(P.is_symmetric());
    CHECK(coinvariant_poincare({Family::A, 3}) == (1 + pow(t, 2)) * (1 + pow(t, 2) + pow(t, 4)));
    CHECK(coinvariant_poincare({Family::B, 2}) == (1 + pow(t, 2)) * (1 + pow(t, 2) + pow(t, 4) + pow(t, 6)));
}
