#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lscoinv/graded_matrix.hpp"
#include "lscoinv/lsalgo.hpp"
#include "lscoinv/springer.hpp"
#include "lscoinv/weyl.hpp"

namespace lscoinv {

struct CheckRecord {
    std::string name;
    std::vector<std::string> subject;  ///< label strings, possibly empty
    bool pass = true;
    std::string detail;
};

struct Report {
    std::string family;
    int rank = 0;
    std::vector<CheckRecord> checks;

    bool all_pass() const;
    std::size_t failures() const;
    void add(std::string name, std::vector<std::string> subject, bool pass, std::string detail = {});
    void append(const Report& other);
    /// Sorts records by (name, subject) so output does not depend on the order
    /// checks ran in.
    void sort();
    /// Records with the given name.
    std::vector<const CheckRecord*> named(const std::string& name) const;
};

/// (i) tK * diag(D) * K == P entrywise, and (ii) expanding each gch P_lambda in
/// the basis {gch K~_mu} (rows of diag(D) * K) yields row lambda of tK.
Report check_reciprocity(const GradedMatrix& P, const GradedMatrix& K, const std::vector<RatFunc>& D);

/// Cartan determinant computed fraction-free (independent of the pivots).
RatFunc cartan_determinant(const GradedMatrix& P);
/// det P == prod D.
Report check_cartan(const GradedMatrix& P, const std::vector<RatFunc>& D);

/// True when p = t^k Q(t^4) with k >= 0 and Q in N[t].
bool has_t4_parity(const LaurentPoly& p);
/// Every [K:L] entry has the form t^k Q(t^4).
Report check_parity_typeB(const GradedMatrix& K);

/// Row of the zero orbit equals t^{d} * bar(fake_degree(mu)) entrywise.
/// `fake_degrees` is indexed like K's labels.
Report check_minimum_row(const GradedMatrix& K, const OrbitPoset& poset, const std::vector<LaurentPoly>& fake_degrees);

/// Coordinates c with v = sum_mu c_mu * (row mu of basis). Throws
/// SingularMatrix when the rows are dependent.
std::vector<RatFunc> expand_in_basis(const std::vector<RatFunc>& v, const GradedMatrix& basis);

/// Matrix of pairings <K~_lambda, K*_mu> with <P_lambda<i>, L_mu<j>> = t^{j-i}
/// delta: K~_lambda is row lambda of (tK)^-1 in P-coordinates, K*_mu is bar of
/// row mu of K in L-coordinates. D does not enter.
GradedMatrix euler_pairing(const GradedMatrix& K, const std::vector<RatFunc>& D);
Report euler_orthogonality(const GradedMatrix& K, const std::vector<RatFunc>& D);

/// K(lambda, mu) != 0 implies lambda <= mu in the closure order.
Report check_support(const GradedMatrix& K, const OrbitPoset& poset);
/// Entries are polynomials in t with non-negative integer coefficients, of
/// degree <= d_lambda, with equality exactly at mu = triv.
Report check_positivity(const GradedMatrix& K, const OrbitPoset& poset);
/// Diagonal of the normalized matrix is t^{d/2}.
Report check_kostka_diagonal(const PolyMatrix& kostka, const OrbitPoset& poset);
/// Series of each D entry up to t^order has non-negative integer coefficients
/// and constant term 1.
Report check_d_series(const std::vector<Label>& labels, const std::vector<RatFunc>& D, int order);
/// Factorizing along every refinement gives the same result after re-sorting.
Report check_refinement_independence(const GradedMatrix& P, const OrbitPoset& poset, const LSResult& reference,
                                     std::size_t count, std::uint64_t seed);
/// Type A: normalized Kostka matrix equals the cocharge statistic oracle.
Report check_cocharge_oracle(const PolyMatrix& kostka);
/// Row and column orthogonality, integrality of dimensions.
Report check_char_table(const CharTable& table);
/// Fake degrees: non-negative, even exponents, value dim at t = 1, and
/// sum_mu dim(mu) f_mu = coinvariant Poincare polynomial.
Report check_fake_degrees(const MolienData& molien);

struct VerifyOptions {
    std::size_t refinements = 3;
    std::uint64_t seed = 7;
    int series_order = 24;
};

/// Inputs to verify_all; the tables may come from a cache.
struct Pipeline {
    WeylType type;
    CharTable table;
    OrbitPoset poset;
};

Pipeline build_pipeline(const WeylType& wt);

/// Runs weyl -> springer -> lsalgo and every applicable check. Upstream
/// fatal errors are recorded as failed "pipeline" records.
Report verify_all(const Pipeline& pipeline, const VerifyOptions& opts = {});
Report verify_all(const WeylType& wt, const VerifyOptions& opts = {});

/// JSON text of the golden data transcribed from the rank-3 type A example.
const char* example05_golden_json();
/// Compares the type A rank 3 pipeline against the golden data.
Report verify_example05();

}  // namespace lscoinv
