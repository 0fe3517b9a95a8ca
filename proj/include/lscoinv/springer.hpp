#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lscoinv/label.hpp"

namespace lscoinv {

/// Raised when orbit data (order, d-function, dictionary) violates one of
/// the structural invariants. Never recoverable.
class ConfigurationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// n(p) = sum_i (i - 1) p_i
int n_invariant(const Partition& p);

/// Twice the dimension of the Springer fibre over the orbit of `label`.
///   type A: 2 n(lambda)
///   type B: 2 b(alpha; beta) with b = 2 n(alpha) + 2 n(beta) + |beta|
int d_value(const Label& label);

/// Sequence compared by the closure order: the partition itself for type A,
/// (alpha_1, beta_1, alpha_2, beta_2, ...) for type B. Zero padded to `length`
/// when given.
std::vector<int> flattened(const Label& label, std::size_t length = 0);

/// Orbit closure order lambda <= mu (orbit of lambda inside the closure of
/// the orbit of mu): dominance of partial sums of flattened(). Throws
/// std::invalid_argument on a size or family mismatch.
bool closure_leq(const Label& lambda, const Label& mu);

struct OrbitPoset {
    WeylType type;
    std::vector<Label> labels;
    /// leq[i][j] == closure_leq(labels[i], labels[j])
    std::vector<std::vector<bool>> leq;
    std::vector<int> d;
    /// Label indices from the open orbit downwards; refines leq.
    std::vector<std::size_t> total_order;

    std::size_t size() const { return labels.size(); }
    std::size_t index_of(const Label& label) const;  ///< throws std::invalid_argument
    bool strictly_below(std::size_t i, std::size_t j) const { return i != j && leq[i][j]; }
    /// Unique maximal element (open orbit).
    std::size_t maximum() const;
    /// Unique minimal element (zero orbit); throws ConfigurationError if the
    /// minimum is not unique.
    std::size_t minimum() const;
    /// True when `order` is a permutation listing every label after all labels
    /// strictly above it.
    bool is_linear_extension(const std::vector<std::size_t>& order) const;

    friend bool operator==(const OrbitPoset&, const OrbitPoset&) = default;
};

/// Builds and validates the poset. Throws ConfigurationError on any violated
/// invariant (partial order axioms, strict decrease of d along the order,
/// d = 0 at the open orbit, d = 2 sum_i (d_i - 1) at the zero orbit).
OrbitPoset build_poset(const WeylType& wt);

/// The checks performed by build_poset, callable on deserialized data.
void validate_poset(const OrbitPoset& poset);

/// Up to `count` distinct linear extensions of the closure order, the first
/// being poset.total_order. Deterministic in `seed`; returns all extensions
/// when fewer than `count` exist.
std::vector<std::vector<std::size_t>> refinements(const OrbitPoset& poset, std::size_t count, std::uint64_t seed);

}  // namespace lscoinv
