#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lscoinv {

/// Weakly decreasing list of positive integers.
using Partition = std::vector<int>;

enum class Family { A, B };

/// Largest rank accepted by the library (class sizes must fit in 64 bits).
inline constexpr int kMaxRank = 12;

/// A Weyl group: family A with rank n means S_n acting on its (n-1)-dim
/// reflection representation; family B with rank n means the hyperoctahedral
/// group W_n acting on C^n.
struct WeylType {
    Family family = Family::A;
    int rank = 1;

    /// Throws std::invalid_argument unless 1 <= rank <= kMaxRank.
    void validate() const;
    std::int64_t order() const;
    /// Dimension of the Cartan subalgebra t.
    int reflection_dim() const;
    /// Degrees of the basic invariants (A_{n-1}: 2..n, B_n: 2,4,..,2n).
    std::vector<int> fundamental_degrees() const;
    std::string name() const;

    friend bool operator==(const WeylType&, const WeylType&) = default;
};

char family_char(Family f);
Family parse_family(const std::string& s);

/// Irreducible representation / orbit label: a partition for type A, a
/// bipartition (alpha; beta) for type B (beta is empty for type A).
struct Label {
    Family family = Family::A;
    Partition alpha;
    Partition beta;

    static Label partition(Partition p) { return {Family::A, std::move(p), {}}; }
    static Label bipartition(Partition a, Partition b) { return {Family::B, std::move(a), std::move(b)}; }

    int size() const;
    /// "(2,1)" for type A, "((2,1),(1))" for type B.
    std::string to_string() const;

    friend auto operator<=>(const Label&, const Label&) = default;
};

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
std::string partition_to_string(const Partition& p);

/// All partitions of n, in reverse-lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// All ordered pairs of partitions of total size n.
std::vector<std::pair<Partition, Partition>> bipartitions_of(int n);

}  // namespace lscoinv
