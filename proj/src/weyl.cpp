#include "lscoinv/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "lscoinv/springer.hpp"

namespace lscoinv {

namespace {

struct Cycle {
    int length;
    bool negative;
    friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

// Beta-set of a partition with m entries: beta_i = p_i + m - i.
std::vector<int> beta_set(const Partition& p, int m) {
    std::vector<int> out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const int part = i < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i)] : 0;
        out[static_cast<std::size_t>(i)] = part + m - 1 - i;
    }
    return out;
}

Partition from_beta_set(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const int m = static_cast<int>(beta.size());
    Partition out;
    for (int i = 0; i < m; ++i) {
        const int part = beta[static_cast<std::size_t>(i)] - (m - 1 - i);
        if (part > 0) out.push_back(part);
    }
    return out;
}

// Every way of removing a rim hook of length k: (remaining partition, sign).
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& p, int k) {
    std::vector<std::pair<Partition, int>> out;
    const int m = static_cast<int>(p.size());
    if (m == 0) return out;
    const auto beta = beta_set(p, m);
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - k;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        auto moved = beta;
        moved[i] = target;
        out.emplace_back(from_beta_set(std::move(moved)), between % 2 ? -1 : 1);
    }
    return out;
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Centralizer order contribution of a cycle-length multiset: prod_k base(k)^{m_k} m_k!.
std::int64_t centralizer_part(const Partition& cycles, bool signed_cycles) {
    std::map<int, int> mult;
    for (int c : cycles) ++mult[c];
    std::int64_t z = 1;
    for (const auto& [k, m] : mult) {
        const std::int64_t base = signed_cycles ? 2 * k : k;
        for (int i = 0; i < m; ++i) z *= base;
        z *= factorial(m);
    }
    return z;
}

std::vector<Cycle> cycles_of(const ConjClass& cls) {
    std::vector<Cycle> out;
    for (int k : cls.positive) out.push_back({k, false});
    for (int k : cls.negative) out.push_back({k, true});
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        return std::tie(b.length, a.negative) < std::tie(a.length, b.negative);
    });
    return out;
}

// Murnaghan-Nakayama recursion shared by both families. For type A, beta is
// always empty and every cycle is positive.
class MurnaghanNakayama {
public:
    std::int64_t value(const Partition& alpha, const Partition& beta, const std::vector<Cycle>& cycles) {
        return eval(alpha, beta, cycles, 0);
    }

private:
    std::int64_t eval(const Partition& alpha, const Partition& beta, const std::vector<Cycle>& cycles,
                      std::size_t pos) {
        if (pos == cycles.size()) return 1;
        auto key = std::make_tuple(alpha, beta, std::vector<Cycle>(cycles.begin() + static_cast<std::ptrdiff_t>(pos),
                                                                   cycles.end()));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const Cycle c = cycles[pos];
        std::int64_t total = 0;
        for (const auto& [rest, sign] : remove_rim_hooks(alpha, c.length))
            total += sign * eval(rest, beta, cycles, pos + 1);
        for (const auto& [rest, sign] : remove_rim_hooks(beta, c.length))
            total += (c.negative ? -sign : sign) * eval(alpha, rest, cycles, pos + 1);
        memo_.emplace(std::move(key), total);
        return total;
    }

    std::map<std::tuple<Partition, Partition, std::vector<Cycle>>, std::int64_t> memo_;
};

void check_label(const WeylType& wt, const Label& label) {
    if (label.family != wt.family || label.size() != wt.rank || !is_partition(label.alpha) ||
        !is_partition(label.beta) || (wt.family == Family::A && !label.beta.empty()))
        throw std::invalid_argument("label " + label.to_string() + " is not valid for " + wt.name());
}

}  // namespace

LaurentPoly reflection_char_poly(const WeylType& wt, const ConjClass& cls) {
    LaurentPoly p(1);
    for (int k : cls.positive) p *= LaurentPoly(1) - LaurentPoly::t(2 * k);
    for (int k : cls.negative) p *= LaurentPoly(1) + LaurentPoly::t(2 * k);
    if (wt.family == Family::A) p = exact_divide(p, LaurentPoly(1) - LaurentPoly::t(2));
    return p;
}

std::size_t CharTable::label_index(const Label& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    throw std::invalid_argument("unknown label " + label.to_string() + " for " + type.name());
}

std::size_t CharTable::identity_class() const {
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (classes[c].negative.empty() && std::all_of(classes[c].positive.begin(), classes[c].positive.end(),
                                                       [](int k) { return k == 1; }))
            return c;
    throw std::logic_error("character table has no identity class");
}

std::vector<Label> enumerate_labels(const WeylType& wt) {
    wt.validate();
    std::vector<Label> labels;
    if (wt.family == Family::A) {
        for (auto& p : partitions_of(wt.rank)) labels.push_back(Label::partition(std::move(p)));
    } else {
        for (auto& [a, b] : bipartitions_of(wt.rank)) labels.push_back(Label::bipartition(std::move(a), std::move(b)));
    }
    const std::size_t width = 2 * static_cast<std::size_t>(wt.rank);
    std::stable_sort(labels.begin(), labels.end(), [width](const Label& x, const Label& y) {
        const int dx = d_value(x);
        const int dy = d_value(y);
        if (dx != dy) return dx < dy;
        return flattened(x, width) > flattened(y, width);
    });
    return labels;
}

std::vector<ConjClass> enumerate_classes(const WeylType& wt) {
    wt.validate();
    std::vector<ConjClass> out;
    const std::int64_t order = wt.order();
    if (wt.family == Family::A) {
        for (auto& p : partitions_of(wt.rank)) {
            const auto z = centralizer_part(p, false);
            out.push_back({std::move(p), {}, order / z});
        }
    } else {
        for (auto& [pos, neg] : bipartitions_of(wt.rank)) {
            const auto z = centralizer_part(pos, true) * centralizer_part(neg, true);
            out.push_back({std::move(pos), std::move(neg), order / z});
        }
    }
    return out;
}

std::int64_t character_value(const WeylType& wt, const Label& label, const ConjClass& cls) {
    check_label(wt, label);
    return MurnaghanNakayama{}.value(label.alpha, label.beta, cycles_of(cls));
}

CharTable char_table(const WeylType& wt) {
    CharTable table;
    table.type = wt;
    table.labels = enumerate_labels(wt);
    table.classes = enumerate_classes(wt);
    MurnaghanNakayama mn;
    table.values.assign(table.labels.size(), std::vector<std::int64_t>(table.classes.size()));
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        const auto cycles = cycles_of(table.classes[c]);
        for (std::size_t l = 0; l < table.labels.size(); ++l)
            table.values[l][c] = mn.value(table.labels[l].alpha, table.labels[l].beta, cycles);
    }
    return table;
}

MolienData::MolienData(CharTable table) : table_(std::move(table)), invariant_den_(1) {
    for (int deg : table_.type.fundamental_degrees()) invariant_den_ *= LaurentPoly(1) - LaurentPoly::t(2 * deg);
    class_weights_.reserve(table_.classes.size());
    for (const auto& cls : table_.classes) {
        LaurentPoly w = exact_divide(invariant_den_, reflection_char_poly(table_.type, cls));
        w *= Integer(static_cast<long>(cls.size));
        std::vector<Integer> dense(static_cast<std::size_t>(w.max_exponent()) + 1);
        for (const auto& [e, c] : w.terms()) dense[static_cast<std::size_t>(e)] = c;
        class_weights_.push_back(std::move(dense));
    }
}

LaurentPoly MolienData::weighted_sum(const std::vector<std::int64_t>& chi) const {
    std::vector<Integer> acc;
    for (std::size_t c = 0; c < class_weights_.size(); ++c) {
        if (chi[c] == 0) continue;
        const auto& w = class_weights_[c];
        if (acc.size() < w.size()) acc.resize(w.size());
        const long x = static_cast<long>(chi[c]);
        for (std::size_t e = 0; e < w.size(); ++e)
            if (w[e] != 0) acc[e] += w[e] * x;
    }
    LaurentPoly::Terms terms;
    for (std::size_t e = 0; e < acc.size(); ++e)
        if (acc[e] != 0) terms.emplace_hint(terms.end(), static_cast<LaurentPoly::Exponent>(e), std::move(acc[e]));
    return LaurentPoly(std::move(terms));
}

RatFunc MolienData::graded_mult(std::size_t lambda, std::size_t mu) const {
    std::vector<std::int64_t> chi(class_weights_.size());
    for (std::size_t c = 0; c < chi.size(); ++c) chi[c] = table_.values[lambda][c] * table_.values[mu][c];
    LaurentPoly num = weighted_sum(chi);
    LaurentPoly den = invariant_den_;
    den *= Integer(static_cast<long>(table_.type.order()));
    return RatFunc(std::move(num), std::move(den));
}

RatFunc MolienData::graded_mult(const Label& lambda, const Label& mu) const {
    return graded_mult(table_.label_index(lambda), table_.label_index(mu));
}

LaurentPoly MolienData::fake_degree(std::size_t mu) const {
    // The trivial character is 1 on every class.
    const LaurentPoly num = weighted_sum(table_.values[mu]);
    return exact_divide(num, Integer(static_cast<long>(table_.type.order())));
}

LaurentPoly MolienData::fake_degree(const Label& mu) const { return fake_degree(table_.label_index(mu)); }

GradedMatrix MolienData::pl_matrix() const {
    GradedMatrix m(table_.labels);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i; j < m.size(); ++j) {
            m(i, j) = graded_mult(i, j);
            if (j != i) m(j, i) = m(i, j);
        }
    return m;
}

RatFunc graded_mult(const WeylType& wt, const Label& lambda, const Label& mu) {
    check_label(wt, lambda);
    check_label(wt, mu);
    return MolienData(char_table(wt)).graded_mult(lambda, mu);
}

LaurentPoly fake_degree(const WeylType& wt, const Label& mu) {
    check_label(wt, mu);
    return MolienData(char_table(wt)).fake_degree(mu);
}

GradedMatrix pl_matrix(const WeylType& wt) { return MolienData(char_table(wt)).pl_matrix(); }

LaurentPoly coinvariant_poincare(const WeylType& wt) {
    LaurentPoly num(1);
    for (int deg : wt.fundamental_degrees()) num *= LaurentPoly(1) - LaurentPoly::t(2 * deg);
    const LaurentPoly den = pow(LaurentPoly(1) - LaurentPoly::t(2), static_cast<unsigned>(wt.reflection_dim()));
    return exact_divide(num, den);
}

}  // namespace lscoinv
