#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lscoinv {

using Integer = mpz_class;

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class InexactDivision : public std::domain_error {
public:
    explicit InexactDivision(const std::string& what) : std::domain_error(what) {}
};

/// Element of Z[t, t^-1], stored sparsely as exponent -> nonzero coefficient.
///
/// Graded dimensions, grading shifts and polynomial multiplicities all live
/// here. The representation is canonical: no zero coefficient is ever stored,
/// so structural equality is ring equality.
class LaurentPoly {
public:
    using Exponent = std::int64_t;
    using Terms = std::map<Exponent, Integer>;

    LaurentPoly() = default;
    LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(const Integer& constant);
    explicit LaurentPoly(Terms terms);

    static LaurentPoly monomial(const Integer& coeff, Exponent exp);
    /// t^exp
    static LaurentPoly t(Exponent exp = 1) { return monomial(1, exp); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// True when every exponent is >= 0.
    bool is_polynomial() const;
    Exponent min_exponent() const;
    Exponent max_exponent() const;
    Integer coeff(Exponent exp) const;
    /// Coefficient of the lowest-exponent term.
    const Integer& lowest_coeff() const;
    const Integer& highest_coeff() const;
    /// Non-negative gcd of all coefficients (0 for the zero polynomial).
    Integer content() const;
    Integer eval_at_one() const;
    bool has_nonnegative_coeffs() const;

    /// t -> t^-1
    LaurentPoly bar() const;
    /// Multiplies by t^k.
    LaurentPoly shift(Exponent k) const;
    /// t -> t^factor (factor > 0).
    LaurentPoly stretch(Exponent factor) const;
    /// Inverse of stretch; throws InexactDivision if an exponent is not a
    /// multiple of `factor`.
    LaurentPoly compress(Exponent factor) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Integer& rhs);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) { return lhs.terms_ == rhs.terms_; }
    friend bool operator!=(const LaurentPoly& lhs, const LaurentPoly& rhs) { return !(lhs == rhs); }

    /// Canonical text form, exponents ascending: "1 + 2*t^2 - t^-1" style.
    std::string to_string() const;

private:
    Terms terms_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned exp);

/// Exact quotient in Z[t, t^-1]. Throws DivisionByZero or InexactDivision.
LaurentPoly exact_divide(const LaurentPoly& dividend, const LaurentPoly& divisor);

/// Divides every coefficient by an integer; throws InexactDivision when the
/// integer does not divide the content.
LaurentPoly exact_divide(const LaurentPoly& dividend, const Integer& divisor);

/// Greatest common divisor in Z[t, t^-1]. The result is normalized to lowest
/// exponent 0 with a positive constant term; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace lscoinv
