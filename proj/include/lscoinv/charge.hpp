#pragma once

#include <vector>

#include "lscoinv/label.hpp"
#include "lscoinv/laurent_poly.hpp"

namespace lscoinv {

/// Semistandard tableau, stored row by row (top row first).
using Tableau = std::vector<std::vector<int>>;

/// All semistandard tableaux of the given shape whose content is `weight`
/// (weight[i] copies of the letter i + 1).
std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Partition& weight);

/// Rows read bottom to top, each left to right.
std::vector<int> reading_word(const Tableau& t);

/// Lascoux-Schutzenberger charge of a word whose content is a partition.
///
/// The word is split into standard subwords: starting at the right end, scan
/// leftwards for a 1, then continue leftwards (wrapping around to the right
/// end when the left end is reached) for a 2, then a 3, and so on up to the
/// largest letter still present. The chosen letters form one subword and are
/// deleted; repeat on the rest. Inside a subword the letter 1 gets index 0 and
/// r + 1 gets the index of r, plus one if the scan had to wrap around to reach
/// it (i.e. r + 1 sits to the right of r). The charge of the word is the sum of
/// all indices over all subwords.
int charge(const std::vector<int>& word);

/// sum over SSYT T of shape `shape` and content `weight` of t^{n(weight) - charge(T)}:
/// the modified (cocharge) Kostka-Foulkes polynomial.
LaurentPoly cocharge_kostka(const Partition& shape, const Partition& weight);

}  // namespace lscoinv
