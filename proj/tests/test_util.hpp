#pragma once

#include <random>

#include "lscoinv/laurent_poly.hpp"
#include "lscoinv/rat_func.hpp"

namespace testutil {

inline lscoinv::LaurentPoly random_poly(std::mt19937_64& rng, int lo = -3, int hi = 4, int coeff = 5) {
    lscoinv::LaurentPoly::Terms terms;
    std::uniform_int_distribution<int> exp(lo, hi), c(-coeff, coeff), count(0, 4);
    for (int k = count(rng); k > 0; --k) terms[exp(rng)] += c(rng);
    return lscoinv::LaurentPoly(terms);
}

inline lscoinv::LaurentPoly random_nonzero_poly(std::mt19937_64& rng) {
    for (;;) {
        auto p = random_poly(rng);
        if (!p.is_zero()) return p;
    }
}

inline lscoinv::RatFunc random_ratfunc(std::mt19937_64& rng) {
    return lscoinv::RatFunc(random_poly(rng), random_nonzero_poly(rng));
}

}  // namespace testutil
