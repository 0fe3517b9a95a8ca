#include "lscoinv/label.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace lscoinv {

void WeylType::validate() const {
    if (rank < 1 || rank > kMaxRank)
        throw std::invalid_argument("rank must be between 1 and " + std::to_string(kMaxRank) + ", got " +
                                    std::to_string(rank));
}

std::int64_t WeylType::order() const {
    std::int64_t f = 1;
    for (int i = 2; i <= rank; ++i) f *= i;
    if (family == Family::B) f <<= rank;
    return f;
}

int WeylType::reflection_dim() const { return family == Family::A ? rank - 1 : rank; }

std::vector<int> WeylType::fundamental_degrees() const {
    std::vector<int> out;
    if (family == Family::A) {
        for (int i = 2; i <= rank; ++i) out.push_back(i);
    } else {
        for (int i = 1; i <= rank; ++i) out.push_back(2 * i);
    }
    return out;
}

std::string WeylType::name() const { return std::string(1, family_char(family)) + std::to_string(rank); }

char family_char(Family f) { return f == Family::A ? 'A' : 'B'; }

Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b" || s == "C" || s == "c" || s == "BC") return Family::B;
    throw std::invalid_argument("unknown family '" + s + "' (expected A or B)");
}

int Label::size() const { return partition_size(alpha) + partition_size(beta); }

std::string Label::to_string() const {
    if (family == Family::A) return partition_to_string(alpha);
    return "(" + partition_to_string(alpha) + "," + partition_to_string(beta) + ")";
}

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    for (int j = 1; j <= p.front(); ++j) {
        int count = 0;
        for (int part : p)
            if (part >= j) ++count;
        out.push_back(count);
    }
    return out;
}

std::string partition_to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<std::pair<Partition, Partition>> bipartitions_of(int n) {
    std::vector<std::pair<Partition, Partition>> out;
    for (int a = n; a >= 0; --a)
        for (const auto& alpha : partitions_of(a))
            for (const auto& beta : partitions_of(n - a)) out.emplace_back(alpha, beta);
    return out;
}

}  // namespace lscoinv
