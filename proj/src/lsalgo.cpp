#include "lscoinv/lsalgo.hpp"

namespace lscoinv {

namespace {

std::vector<std::size_t> poset_indices(const GradedMatrix& P, const OrbitPoset& poset) {
    std::vector<std::size_t> idx;
    idx.reserve(P.size());
    for (const auto& l : P.labels()) idx.push_back(poset.index_of(l));
    return idx;
}

}  // namespace

LSResult ls_factorize(const GradedMatrix& P, const OrbitPoset& poset) {
    const std::size_t n = P.size();
    if (n != poset.size()) throw FactorizationError("matrix size does not match the orbit poset");
    if (!P.is_symmetric()) throw FactorizationError("[P:L] is not symmetric");
    const auto idx = poset_indices(P, poset);
    if (!poset.is_linear_extension(idx))
        throw FactorizationError("label order of [P:L] does not refine the closure order");

    GradedMatrix work = P;
    LSResult res;
    res.K = GradedMatrix(P.labels());
    res.D.assign(n, RatFunc());
    for (std::size_t g = n; g-- > 0;) {
        const RatFunc pivot = work(g, g);
        if (pivot.is_zero()) throw FactorizationError("zero pivot at label " + P.labels()[g].to_string());
        res.D[g] = pivot;
        const RatFunc inv = pivot.inverse();
        res.K(g, g) = RatFunc(1);
        for (std::size_t j = 0; j < g; ++j) res.K(g, j) = work(g, j) * inv;
        for (std::size_t i = 0; i < g; ++i) {
            if (res.K(g, i).is_zero()) continue;
            const RatFunc scaled = res.K(g, i) * pivot;
            for (std::size_t j = 0; j <= i; ++j) {
                if (res.K(g, j).is_zero()) continue;
                work(i, j) -= scaled * res.K(g, j);
                if (j != i) work(j, i) = work(i, j);
            }
        }
    }

    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!res.K(r, c).is_zero() && !poset.leq[idx[r]][idx[c]])
                throw FactorizationError("order/input mismatch: [K_" + P.labels()[r].to_string() + " : L_" +
                                         P.labels()[c].to_string() + "] = " + res.K(r, c).to_string() +
                                         " but the labels are not related by the closure order");
    res.kostka = PolyMatrix(P.labels());
    return res;
}

PolyMatrix kostka_normalize(const LSResult& res, const OrbitPoset& poset) {
    const auto& labels = res.labels();
    PolyMatrix out(labels);
    for (std::size_t l = 0; l < labels.size(); ++l) {
        const int d = poset.d[poset.index_of(labels[l])];
        for (std::size_t m = 0; m < labels.size(); ++m) {
            const RatFunc& entry = res.K(l, m);
            auto where = [&] { return "(lambda=" + labels[l].to_string() + ", mu=" + labels[m].to_string() + ")"; };
            if (!entry.is_laurent())
                throw FactorizationError("parity/normalization failure at " + where() + ": [K:L] entry " +
                                         entry.to_string() + " is not a polynomial");
            const LaurentPoly shifted = entry.as_laurent().bar().shift(d);
            if (!shifted.is_polynomial())
                throw FactorizationError("parity/normalization failure at " + where() + ": negative exponent in " +
                                         shifted.to_string());
            try {
                out(m, l) = shifted.compress(2);
            } catch (const InexactDivision&) {
                throw FactorizationError("parity/normalization failure at " + where() + ": odd exponent in " +
                                         shifted.to_string());
            }
        }
    }
    return out;
}

LSResult lusztig_shoji(const GradedMatrix& P, const OrbitPoset& poset) {
    LSResult res = ls_factorize(P, poset);
    res.kostka = kostka_normalize(res, poset);
    return res;
}

LSResult reorder(const LSResult& res, const std::vector<Label>& labels) {
    std::vector<std::size_t> order;
    order.reserve(labels.size());
    for (const auto& l : labels) {
        const std::size_t k = res.K.index_of(l);
        if (k == res.K.size()) throw std::invalid_argument("reorder: unknown label " + l.to_string());
        order.push_back(k);
    }
    LSResult out;
    out.K = res.K.permuted(order);
    out.kostka = res.kostka.permuted(order);
    for (auto k : order) out.D.push_back(res.D[k]);
    return out;
}

}  // namespace lscoinv
