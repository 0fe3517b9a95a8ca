#include "lscoinv/charge.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "lscoinv/springer.hpp"

namespace lscoinv {

std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Partition& weight) {
    if (partition_size(shape) != partition_size(weight))
        throw std::invalid_argument("semistandard_tableaux: shape and weight sizes differ");
    std::vector<Tableau> out;
    const std::size_t rows = shape.size();
    Tableau cur(rows);

    // Places the letter `letter` as a horizontal strip, row by row.
    std::function<void(std::size_t, std::size_t, int, const std::vector<std::size_t>&)> place;
    std::function<void(std::size_t)> next_letter = [&](std::size_t letter) {
        if (letter == weight.size()) {
            out.push_back(cur);
            return;
        }
        std::vector<std::size_t> before(rows);
        for (std::size_t r = 0; r < rows; ++r) before[r] = cur[r].size();
        place(letter, 0, weight[letter], before);
    };
    place = [&](std::size_t letter, std::size_t row, int remaining, const std::vector<std::size_t>& before) {
        if (remaining == 0) {
            next_letter(letter + 1);
            return;
        }
        if (row == rows) return;
        const std::size_t cap_shape = static_cast<std::size_t>(shape[row]);
        const std::size_t cap_strip = row == 0 ? cap_shape : std::min(cap_shape, before[row - 1]);
        const std::size_t start = cur[row].size();
        const int room = cap_strip > start ? static_cast<int>(cap_strip - start) : 0;
        for (int c = std::min(room, remaining); c >= 0; --c) {
            for (int k = 0; k < c; ++k) cur[row].push_back(static_cast<int>(letter) + 1);
            place(letter, row + 1, remaining - c, before);
            cur[row].resize(start);
        }
    };
    next_letter(0);
    return out;
}

std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> word;
    for (auto it = t.rbegin(); it != t.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
    return word;
}

int charge(const std::vector<int>& word) {
    std::vector<int> w = word;
    std::vector<bool> used(w.size(), false);
    std::size_t remaining = w.size();
    int total = 0;
    while (remaining > 0) {
        int top = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!used[i]) top = std::max(top, w[i]);
        // Position just right of the current letter; the scan moves leftwards.
        std::size_t pos = w.size();
        int index = 0;
        for (int letter = 1; letter <= top; ++letter) {
            bool wrapped = false;
            std::size_t found = w.size();
            for (std::size_t step = 0; step < w.size(); ++step) {
                if (pos == 0) {
                    pos = w.size();
                    wrapped = true;
                }
                --pos;
                if (!used[pos] && w[pos] == letter) {
                    found = pos;
                    break;
                }
            }
            if (found == w.size()) throw std::invalid_argument("charge: word content is not a partition");
            if (wrapped && letter > 1) ++index;
            total += index;
            used[found] = true;
            --remaining;
        }
    }
    return total;
}

LaurentPoly cocharge_kostka(const Partition& shape, const Partition& weight) {
    const int n_weight = n_invariant(weight);
    LaurentPoly sum;
    for (const auto& t : semistandard_tableaux(shape, weight))
        sum += LaurentPoly::t(n_weight - charge(reading_word(t)));
    return sum;
}

}  // namespace lscoinv
