#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lscoinv/graded_matrix.hpp"
#include "lscoinv/springer.hpp"

namespace lscoinv {

/// Fatal failure of the factorization; the message names the offending
/// label(s).
class FactorizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LSResult {
    /// [K:L]: row lambda is gch K_lambda in the L-basis; unitriangular.
    GradedMatrix K;
    /// Diagonal of [K~:K].
    std::vector<RatFunc> D;
    /// kostka(mu, lambda) = K_{mu,lambda}(t), filled by kostka_normalize.
    PolyMatrix kostka;

    const std::vector<Label>& labels() const { return K.labels(); }
    friend bool operator==(const LSResult&, const LSResult&) = default;
};

/// Solves [P:L] = tK * diag(D) * K for a unitriangular K with
/// K(lambda, mu) = 0 whenever mu comes after lambda in P's label order.
///
/// P's label order is the elimination order; it must be a linear extension of
/// the closure order (open orbit first). The pivots are taken from the most
/// closed label upwards: D of the last label is P's last diagonal entry, its
/// row of K is the last row of P divided by it, and the rank-one term
/// D * (row)^t (row) is subtracted before moving on.
///
/// After solving, vanishing of K outside the closure order is checked; a
/// violation means the order, d-function or input matrix is wrong.
/// Throws FactorizationError on an asymmetric input, a zero pivot, an order
/// that does not refine the closure order, or a support violation.
LSResult ls_factorize(const GradedMatrix& P, const OrbitPoset& poset);

/// K_{mu,lambda}(t^2) = t^{d_lambda} * bar(K(lambda, mu)). Requires every K
/// entry to be a Laurent polynomial; throws FactorizationError naming
/// (lambda, mu) if the result has an odd or negative exponent.
PolyMatrix kostka_normalize(const LSResult& res, const OrbitPoset& poset);

/// ls_factorize followed by kostka_normalize.
LSResult lusztig_shoji(const GradedMatrix& P, const OrbitPoset& poset);

/// Re-indexes a result to the given label list (a permutation of its own).
LSResult reorder(const LSResult& res, const std::vector<Label>& labels);

}  // namespace lscoinv
