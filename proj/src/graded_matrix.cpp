#include "lscoinv/graded_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace lscoinv {

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.labels() != b.labels()) throw std::invalid_argument("matrix product: label lists differ");
    const std::size_t n = a.size();
    GradedMatrix out(a.labels());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

GradedMatrix identity_matrix(const std::vector<Label>& labels) {
    GradedMatrix out(labels);
    for (std::size_t i = 0; i < labels.size(); ++i) out(i, i) = RatFunc(1);
    return out;
}

GradedMatrix diagonal_matrix(const std::vector<Label>& labels, const std::vector<RatFunc>& diag) {
    if (diag.size() != labels.size()) throw std::invalid_argument("diagonal length mismatch");
    GradedMatrix out(labels);
    for (std::size_t i = 0; i < labels.size(); ++i) out(i, i) = diag[i];
    return out;
}

GradedMatrix bar(const GradedMatrix& m) {
    GradedMatrix out(m.labels());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j).bar();
    return out;
}

RatFunc determinant(const GradedMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<RatFunc>> a(n, std::vector<RatFunc>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    RatFunc det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k].is_zero()) ++piv;
        if (piv == n) return RatFunc();
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        const RatFunc inv = a[k][k].inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            const RatFunc f = a[i][k] * inv;
            for (std::size_t j = k + 1; j < n; ++j)
                if (!a[k][j].is_zero()) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

RatFunc determinant_bareiss(const GradedMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return RatFunc(1);
    // Common denominator: lcm of all entry denominators.
    LaurentPoly scale(1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const LaurentPoly& d = m(i, j).den();
            if (d.is_one()) continue;
            scale = exact_divide(scale * d, gcd(scale, d));
        }
    std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = exact_divide(m(i, j).num() * scale, m(i, j).den());

    bool negate = false;
    LaurentPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k].is_zero()) ++piv;
        if (piv == n) return RatFunc();
        if (piv != k) {
            std::swap(a[piv], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            a[i][k] = LaurentPoly();
        }
        prev = a[k][k];
    }
    LaurentPoly det = a[n - 1][n - 1];
    if (negate) det = -det;
    return RatFunc(det, pow(scale, static_cast<unsigned>(n)));
}

namespace {

// Row-reduces [m | rhs] in place to [I | x]. Returns false if singular.
bool gauss_jordan(std::vector<std::vector<RatFunc>>& a, std::size_t n) {
    const std::size_t width = a.empty() ? 0 : a[0].size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k].is_zero()) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[k]);
        const RatFunc inv = a[k][k].inverse();
        for (std::size_t j = k; j < width; ++j)
            if (!a[k][j].is_zero()) a[k][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            const RatFunc f = a[i][k];
            for (std::size_t j = k; j < width; ++j)
                if (!a[k][j].is_zero()) a[i][j] -= f * a[k][j];
        }
    }
    return true;
}

}  // namespace

std::vector<RatFunc> solve(const GradedMatrix& m, const std::vector<RatFunc>& rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n) throw std::invalid_argument("solve: right-hand side length mismatch");
    std::vector<std::vector<RatFunc>> a(n, std::vector<RatFunc>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n] = rhs[i];
    }
    if (!gauss_jordan(a, n)) throw SingularMatrix("solve: singular matrix");
    std::vector<RatFunc> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

GradedMatrix inverse(const GradedMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<RatFunc>> a(n, std::vector<RatFunc>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n + i] = RatFunc(1);
    }
    if (!gauss_jordan(a, n)) throw SingularMatrix("inverse: singular matrix");
    GradedMatrix out(m.labels());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a[i][n + j];
    return out;
}

}  // namespace lscoinv
