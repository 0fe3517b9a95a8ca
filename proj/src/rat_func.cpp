#include "lscoinv/rat_func.hpp"

#include <stdexcept>
#include <vector>

namespace lscoinv {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.is_one()) return;
    const auto num_low = num_.min_exponent();
    const auto den_low = den_.min_exponent();
    LaurentPoly n = num_.shift(-num_low);
    LaurentPoly d = den_.shift(-den_low);
    const LaurentPoly g = gcd(n, d);
    if (!g.is_one()) {
        n = exact_divide(n, g);
        d = exact_divide(d, g);
    }
    if (d.lowest_coeff() < 0) {
        n = -n;
        d = -d;
    }
    num_ = n.shift(num_low - den_low);
    den_ = std::move(d);
}

const LaurentPoly& RatFunc::as_laurent() const {
    if (!is_laurent()) throw std::domain_error("not a Laurent polynomial: " + to_string());
    return num_;
}

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RatFunc(den_, num_);
}

LaurentPoly RatFunc::series_expand(LaurentPoly::Exponent order) const {
    if (is_zero()) return {};
    // den has lowest exponent 0, so den(0) != 0 and the expansion starts at
    // the lowest exponent of num.
    const auto start = num_.min_exponent();
    if (order < start) return {};
    const auto len = static_cast<std::size_t>(order - start + 1);
    const Integer& c0 = den_.lowest_coeff();
    std::vector<Integer> s(len);
    LaurentPoly::Terms out;
    for (std::size_t k = 0; k < len; ++k) {
        Integer acc = num_.coeff(start + static_cast<LaurentPoly::Exponent>(k));
        for (const auto& [e, c] : den_.terms()) {
            if (e == 0) continue;
            if (static_cast<std::size_t>(e) > k) break;
            acc -= c * s[k - static_cast<std::size_t>(e)];
        }
        if (!mpz_divisible_p(acc.get_mpz_t(), c0.get_mpz_t()))
            throw std::domain_error("series of " + to_string() + " has a non-integral coefficient");
        mpz_divexact(s[k].get_mpz_t(), acc.get_mpz_t(), c0.get_mpz_t());
        if (s[k] != 0) out.emplace_hint(out.end(), start + static_cast<LaurentPoly::Exponent>(k), s[k]);
    }
    return LaurentPoly(std::move(out));
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
    if (rhs.is_zero()) return *this;
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
    if (is_zero()) return *this;
    if (rhs.is_zero()) return *this = RatFunc();
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    if (is_zero()) return *this;
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    canonicalize();
    return *this;
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace lscoinv
