#include "lscoinv/springer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "lscoinv/weyl.hpp"

namespace lscoinv {

int n_invariant(const Partition& p) {
    int n = 0;
    for (std::size_t i = 0; i < p.size(); ++i) n += static_cast<int>(i) * p[i];
    return n;
}

int d_value(const Label& label) {
    if (label.family == Family::A) return 2 * n_invariant(label.alpha);
    const int b = 2 * n_invariant(label.alpha) + 2 * n_invariant(label.beta) + partition_size(label.beta);
    return 2 * b;
}

std::vector<int> flattened(const Label& label, std::size_t length) {
    std::vector<int> out;
    if (label.family == Family::A) {
        out = label.alpha;
    } else {
        const std::size_t rows = std::max(label.alpha.size(), label.beta.size());
        for (std::size_t i = 0; i < rows; ++i) {
            out.push_back(i < label.alpha.size() ? label.alpha[i] : 0);
            out.push_back(i < label.beta.size() ? label.beta[i] : 0);
        }
    }
    if (out.size() < length) out.resize(length, 0);
    return out;
}

bool closure_leq(const Label& lambda, const Label& mu) {
    if (lambda.family != mu.family) throw std::invalid_argument("closure_leq: family mismatch");
    if (lambda.size() != mu.size())
        throw std::invalid_argument("closure_leq: size mismatch between " + lambda.to_string() + " and " +
                                    mu.to_string());
    const auto a = flattened(lambda);
    const auto b = flattened(mu);
    const std::size_t len = std::max(a.size(), b.size());
    int sa = 0;
    int sb = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

std::size_t OrbitPoset::index_of(const Label& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    throw std::invalid_argument("label " + label.to_string() + " is not in the poset");
}

std::size_t OrbitPoset::maximum() const {
    std::vector<std::size_t> maxima;
    for (std::size_t i = 0; i < size(); ++i) {
        bool top = true;
        for (std::size_t j = 0; j < size() && top; ++j) top = !strictly_below(i, j);
        if (top) maxima.push_back(i);
    }
    if (maxima.size() != 1) throw ConfigurationError("closure order has no unique maximum");
    return maxima.front();
}

std::size_t OrbitPoset::minimum() const {
    std::vector<std::size_t> minima;
    for (std::size_t i = 0; i < size(); ++i) {
        bool bottom = true;
        for (std::size_t j = 0; j < size() && bottom; ++j) bottom = !strictly_below(j, i);
        if (bottom) minima.push_back(i);
    }
    if (minima.size() != 1) throw ConfigurationError("closure order has no unique minimum");
    return minima.front();
}

bool OrbitPoset::is_linear_extension(const std::vector<std::size_t>& order) const {
    if (order.size() != size()) return false;
    std::vector<std::size_t> position(size(), size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (order[k] >= size() || position[order[k]] != size()) return false;
        position[order[k]] = k;
    }
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (strictly_below(i, j) && position[j] > position[i]) return false;
    return true;
}

void validate_poset(const OrbitPoset& p) {
    const std::size_t n = p.size();
    auto fail = [&](const std::string& what) { throw ConfigurationError(p.type.name() + " orbit data: " + what); };
    if (p.leq.size() != n || p.d.size() != n || p.total_order.size() != n) fail("inconsistent sizes");
    for (const auto& row : p.leq)
        if (row.size() != n) fail("leq is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (!p.leq[i][i]) fail("leq is not reflexive at " + p.labels[i].to_string());
        if (p.d[i] < 0 || p.d[i] % 2 != 0) fail("d is not a non-negative even integer at " + p.labels[i].to_string());
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && p.leq[i][j] && p.leq[j][i])
                fail("leq is not antisymmetric on " + p.labels[i].to_string() + ", " + p.labels[j].to_string());
            if (i != j && p.leq[i][j] && p.d[i] <= p.d[j])
                fail("d is not strictly decreasing along " + p.labels[i].to_string() + " < " + p.labels[j].to_string());
            if (!p.leq[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (p.leq[j][k] && !p.leq[i][k]) fail("leq is not transitive");
        }
    const std::size_t top = p.maximum();
    const std::size_t bottom = p.minimum();
    if (p.d[top] != 0) fail("open orbit has d != 0");
    const Label triv = p.type.family == Family::A ? Label::partition({p.type.rank})
                                                  : Label::bipartition({p.type.rank}, {});
    if (p.labels[top] != triv) fail("open orbit is not labelled by the trivial representation");
    int expected_bottom = 0;
    for (int deg : p.type.fundamental_degrees()) expected_bottom += 2 * (deg - 1);
    if (p.d[bottom] != expected_bottom)
        fail("zero orbit has d = " + std::to_string(p.d[bottom]) + ", expected " + std::to_string(expected_bottom));
    if (!p.is_linear_extension(p.total_order)) fail("total order does not refine the closure order");
    for (std::size_t k = 1; k < n; ++k)
        if (p.d[p.total_order[k - 1]] > p.d[p.total_order[k]]) fail("total order is not sorted by d");
}

OrbitPoset build_poset(const WeylType& wt) {
    OrbitPoset p;
    p.type = wt;
    p.labels = enumerate_labels(wt);
    const std::size_t n = p.labels.size();
    p.leq.assign(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.leq[i][j] = closure_leq(p.labels[i], p.labels[j]);
    for (const auto& l : p.labels) p.d.push_back(d_value(l));
    // enumerate_labels already sorts by (d, reverse-lex).
    p.total_order.resize(n);
    std::iota(p.total_order.begin(), p.total_order.end(), std::size_t{0});
    validate_poset(p);
    return p;
}

std::vector<std::vector<std::size_t>> refinements(const OrbitPoset& poset, std::size_t count, std::uint64_t seed) {
    if (count == 0) throw std::invalid_argument("refinements: count must be at least 1");
    const std::size_t n = poset.size();
    std::vector<std::vector<std::size_t>> out{poset.total_order};
    std::set<std::vector<std::size_t>> seen{poset.total_order};

    // Number of labels strictly above each label, i.e. that must precede it.
    std::vector<std::size_t> above(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (poset.strictly_below(i, j)) ++above[i];

    std::mt19937_64 rng(seed);
    const std::size_t attempts = 64 * count;
    for (std::size_t a = 0; a < attempts && out.size() < count; ++a) {
        auto pending = above;
        std::vector<bool> placed(n, false);
        std::vector<std::size_t> order;
        for (std::size_t step = 0; step < n; ++step) {
            std::vector<std::size_t> ready;
            for (std::size_t i = 0; i < n; ++i)
                if (!placed[i] && pending[i] == 0) ready.push_back(i);
            const std::size_t pick = ready[static_cast<std::size_t>(rng() % ready.size())];
            placed[pick] = true;
            order.push_back(pick);
            for (std::size_t i = 0; i < n; ++i)
                if (poset.strictly_below(i, pick)) --pending[i];
        }
        if (seen.insert(order).second) out.push_back(std::move(order));
    }

    if (out.size() < count) {
        // Few extensions exist (or sampling kept colliding): enumerate them all
        // in lexicographic order.
        auto pending = above;
        std::vector<bool> placed(n, false);
        std::vector<std::size_t> order;
        std::function<void()> rec = [&] {
            if (out.size() >= count) return;
            if (order.size() == n) {
                if (seen.insert(order).second) out.push_back(order);
                return;
            }
            for (std::size_t i = 0; i < n && out.size() < count; ++i) {
                if (placed[i] || pending[i] != 0) continue;
                placed[i] = true;
                order.push_back(i);
                for (std::size_t k = 0; k < n; ++k)
                    if (poset.strictly_below(k, i)) --pending[k];
                rec();
                for (std::size_t k = 0; k < n; ++k)
                    if (poset.strictly_below(k, i)) ++pending[k];
                order.pop_back();
                placed[i] = false;
            }
        };
        rec();
    }
    return out;
}

}  // namespace lscoinv
