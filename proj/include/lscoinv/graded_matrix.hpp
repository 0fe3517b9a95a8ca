#pragma once

#include <cstddef>
#include <vector>

#include "lscoinv/label.hpp"
#include "lscoinv/rat_func.hpp"

namespace lscoinv {

class SingularMatrix : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Square matrix over Q(t) whose rows and columns are indexed by the same
/// ordered label list. Holds [P:L], [K:L], [K~:K] and friends.
template <typename Entry>
class LabeledMatrix {
public:
    LabeledMatrix() = default;
    explicit LabeledMatrix(std::vector<Label> labels)
        : labels_(std::move(labels)), entries_(labels_.size() * labels_.size()) {}

    std::size_t size() const { return labels_.size(); }
    const std::vector<Label>& labels() const { return labels_; }

    Entry& operator()(std::size_t row, std::size_t col) { return entries_[row * size() + col]; }
    const Entry& operator()(std::size_t row, std::size_t col) const { return entries_[row * size() + col]; }

    /// Index of `label`, or size() when absent.
    std::size_t index_of(const Label& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return i;
        return labels_.size();
    }

    LabeledMatrix transposed() const {
        LabeledMatrix out(labels_);
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    /// Reindexes so that new position k holds old index order[k].
    LabeledMatrix permuted(const std::vector<std::size_t>& order) const {
        std::vector<Label> labels;
        labels.reserve(order.size());
        for (auto k : order) labels.push_back(labels_.at(k));
        LabeledMatrix out(std::move(labels));
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = 0; j < order.size(); ++j) out(i, j) = (*this)(order[i], order[j]);
        return out;
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;

private:
    std::vector<Label> labels_;
    std::vector<Entry> entries_;
};

using GradedMatrix = LabeledMatrix<RatFunc>;
using PolyMatrix = LabeledMatrix<LaurentPoly>;

/// Product of two matrices sharing a label list.
GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);

GradedMatrix identity_matrix(const std::vector<Label>& labels);
GradedMatrix diagonal_matrix(const std::vector<Label>& labels, const std::vector<RatFunc>& diag);

/// Entrywise t -> t^-1.
GradedMatrix bar(const GradedMatrix& m);

/// Determinant by Gaussian elimination over Q(t).
RatFunc determinant(const GradedMatrix& m);

/// Determinant computed fraction-free: the matrix is scaled by the lcm of its
/// denominators, the resulting Z[t, t^-1]-matrix is reduced with Bareiss'
/// algorithm (exact divisions only), and the scale is divided back out.
RatFunc determinant_bareiss(const GradedMatrix& m);

/// Solves m * x = rhs exactly. Throws SingularMatrix.
std::vector<RatFunc> solve(const GradedMatrix& m, const std::vector<RatFunc>& rhs);

/// Inverse by Gauss-Jordan elimination. Throws SingularMatrix.
GradedMatrix inverse(const GradedMatrix& m);

}  // namespace lscoinv
