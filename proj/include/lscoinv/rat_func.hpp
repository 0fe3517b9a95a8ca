#pragma once

#include <string>

#include "lscoinv/laurent_poly.hpp"

namespace lscoinv {

/// Element of Q(t) as a reduced fraction num/den of Laurent polynomials.
///
/// Canonical form: gcd(num, den) is a unit of Z[t, t^-1] (this includes the
/// integer content), den has lowest exponent 0 and a positive constant term,
/// and zero is 0/1. Two values are equal iff their canonical forms coincide.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long constant) : num_(constant), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(LaurentPoly num) : num_(std::move(num)), den_(1) { canonicalize(); }  // NOLINT
    RatFunc(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when the value lies in Z[t, t^-1].
    bool is_laurent() const { return den_.is_one(); }
    /// Returns the Laurent polynomial value; throws if is_laurent() is false.
    const LaurentPoly& as_laurent() const;

    /// t -> t^-1
    RatFunc bar() const;
    RatFunc inverse() const;

    /// Ascending Laurent expansion keeping the terms up to and including t^order.
    /// Throws std::domain_error if a coefficient is not an integer.
    LaurentPoly series_expand(LaurentPoly::Exponent order) const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& rhs);
    RatFunc& operator-=(const RatFunc& rhs);
    RatFunc& operator*=(const RatFunc& rhs);
    RatFunc& operator/=(const RatFunc& rhs);

    friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
    friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs -= rhs; }
    friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }
    friend RatFunc operator/(RatFunc lhs, const RatFunc& rhs) { return lhs /= rhs; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// "num" when den = 1, otherwise "(num)/(den)".
    std::string to_string() const;

private:
    struct Raw {};
    RatFunc(LaurentPoly num, LaurentPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace lscoinv
