#pragma once

#include <cstdint>
#include <vector>

#include "lscoinv/graded_matrix.hpp"
#include "lscoinv/label.hpp"
#include "lscoinv/laurent_poly.hpp"
#include "lscoinv/rat_func.hpp"

namespace lscoinv {

/// Conjugacy class of S_n (cycle type in `positive`) or of W_n (signed cycle
/// type: `positive` holds the cycles with an even number of sign changes,
/// `negative` those with an odd number).
struct ConjClass {
    Partition positive;
    Partition negative;
    std::int64_t size = 0;

    friend bool operator==(const ConjClass&, const ConjClass&) = default;
};

/// det(1 - t^2 w | t) for w in the class, read off from the cycle type: a
/// positive k-cycle contributes (1 - t^{2k}), a negative one (1 + t^{2k}); for
/// type A the trivial summand of the permutation representation is divided out.
LaurentPoly reflection_char_poly(const WeylType& wt, const ConjClass& cls);

struct CharTable {
    WeylType type;
    std::vector<Label> labels;
    std::vector<ConjClass> classes;
    /// values[label][class]
    std::vector<std::vector<std::int64_t>> values;

    std::size_t label_index(const Label& label) const;  ///< throws std::invalid_argument
    std::size_t identity_class() const;
    std::int64_t dimension(std::size_t label) const { return values[label][identity_class()]; }

    friend bool operator==(const CharTable&, const CharTable&) = default;
};

/// Irr W, ordered by d ascending and then reverse-lexicographically on the
/// flattened label (the order used for matrix indexing throughout).
std::vector<Label> enumerate_labels(const WeylType& wt);

/// Conjugacy classes with their cardinalities, in a fixed order.
std::vector<ConjClass> enumerate_classes(const WeylType& wt);

/// Character value by the Murnaghan-Nakayama rule (type A) or its signed
/// analogue for W_n = (Z/2) wr S_n, where the character of (alpha; beta) is
/// induced from chi^alpha x (eps chi^beta) with eps = -1 on sign changes.
std::int64_t character_value(const WeylType& wt, const Label& label, const ConjClass& cls);

CharTable char_table(const WeylType& wt);

/// Graded multiplicities [P_lambda : L_mu] = gdim hom_W(L_mu, L_lambda (x) C[t])
/// as Molien sums, with t^* placed in degree 2.
class MolienData {
public:
    explicit MolienData(CharTable table);

    const CharTable& table() const { return table_; }
    /// prod_i (1 - t^{2 d_i})
    const LaurentPoly& invariant_denominator() const { return invariant_den_; }

    RatFunc graded_mult(const Label& lambda, const Label& mu) const;
    RatFunc graded_mult(std::size_t lambda, std::size_t mu) const;
    /// graded_mult(triv, mu) * prod_i (1 - t^{2 d_i})
    LaurentPoly fake_degree(const Label& mu) const;
    LaurentPoly fake_degree(std::size_t mu) const;
    /// Full [P:L] indexed by table().labels.
    GradedMatrix pl_matrix() const;

private:
    CharTable table_;
    LaurentPoly invariant_den_;
    // sum_c chi[c] * class weight, accumulated densely
    LaurentPoly weighted_sum(const std::vector<std::int64_t>& chi) const;

    // size_c * prod_i(1 - t^{2d_i}) / det(1 - t^2 w_c), dense coefficients
    std::vector<std::vector<Integer>> class_weights_;
};

RatFunc graded_mult(const WeylType& wt, const Label& lambda, const Label& mu);
LaurentPoly fake_degree(const WeylType& wt, const Label& mu);
GradedMatrix pl_matrix(const WeylType& wt);

/// prod_i (1 - t^{2 d_i}) / (1 - t^2)^{dim t}: the graded dimension of the
/// coinvariant algebra.
LaurentPoly coinvariant_poincare(const WeylType& wt);

}  // namespace lscoinv
