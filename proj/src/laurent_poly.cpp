#include "lscoinv/laurent_poly.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace lscoinv {

namespace {

// Dense polynomial in Z[t], ascending coefficients, no trailing zeros.
using Dense = std::vector<Integer>;

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const LaurentPoly& p, LaurentPoly::Exponent offset) {
    Dense out;
    if (p.is_zero()) return out;
    out.resize(static_cast<std::size_t>(p.max_exponent() - offset + 1));
    for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - offset)] = c;
    return out;
}

LaurentPoly from_dense(const Dense& p, LaurentPoly::Exponent offset) {
    LaurentPoly::Terms terms;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) terms.emplace_hint(terms.end(), static_cast<LaurentPoly::Exponent>(i) + offset, p[i]);
    return LaurentPoly(std::move(terms));
}

Integer dense_content(const Dense& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void divide_content(Dense& p, const Integer& c) {
    if (c == 0 || c == 1) return;
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

// a <- lc(b)^k * a mod b (pseudo-remainder).
Dense pseudo_remainder(Dense a, const Dense& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& x : a) x *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

Dense dense_gcd(Dense a, Dense b) {
    if (a.empty()) std::swap(a, b);
    if (a.empty()) return {};
    if (b.empty()) {
        divide_content(a, dense_content(a));
        return a;
    }
    const Integer ca = dense_content(a);
    const Integer cb = dense_content(b);
    Integer c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    divide_content(a, ca);
    divide_content(b, cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Dense r = pseudo_remainder(a, b);
        divide_content(r, dense_content(r));
        a = std::move(b);
        b = std::move(r);
    }
    for (auto& x : a) x *= c;
    return a;
}

// Exact division in Z[t]; returns false if the division is not exact.
bool dense_divide(Dense a, const Dense& b, Dense& quotient) {
    quotient.clear();
    if (a.empty()) return true;
    if (a.size() < b.size()) return false;
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    quotient.assign(a.size() - db, Integer(0));
    for (std::size_t k = a.size(); k-- > db;) {
        if (a[k] == 0) continue;
        if (!mpz_divisible_p(a[k].get_mpz_t(), lb.get_mpz_t())) return false;
        Integer q;
        mpz_divexact(q.get_mpz_t(), a[k].get_mpz_t(), lb.get_mpz_t());
        const std::size_t shift = k - db;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= q * b[i];
        quotient[shift] = q;
    }
    for (const auto& x : a)
        if (x != 0) return false;
    trim(quotient);
    return true;
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(const Integer& constant) {
    if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, Exponent exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace(exp, coeff);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::is_polynomial() const { return is_zero() || min_exponent() >= 0; }

LaurentPoly::Exponent LaurentPoly::min_exponent() const {
    if (is_zero()) throw std::logic_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exponent() const {
    if (is_zero()) throw std::logic_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

Integer LaurentPoly::coeff(Exponent exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Integer(0) : it->second;
}

const Integer& LaurentPoly::lowest_coeff() const {
    if (is_zero()) throw std::logic_error("lowest_coeff of zero polynomial");
    return terms_.begin()->second;
}

const Integer& LaurentPoly::highest_coeff() const {
    if (is_zero()) throw std::logic_error("highest_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

Integer LaurentPoly::content() const {
    Integer g = 0;
    for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

Integer LaurentPoly::eval_at_one() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool LaurentPoly::has_nonnegative_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

LaurentPoly LaurentPoly::bar() const {
    Terms out;
    for (const auto& [e, c] : terms_) out.emplace(-e, c);
    return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::shift(Exponent k) const {
    if (k == 0) return *this;
    Terms out;
    for (const auto& [e, c] : terms_) out.emplace_hint(out.end(), e + k, c);
    return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::stretch(Exponent factor) const {
    if (factor <= 0) throw std::invalid_argument("stretch factor must be positive");
    Terms out;
    for (const auto& [e, c] : terms_) out.emplace_hint(out.end(), e * factor, c);
    return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::compress(Exponent factor) const {
    if (factor <= 0) throw std::invalid_argument("compress factor must be positive");
    Terms out;
    for (const auto& [e, c] : terms_) {
        if (e % factor != 0)
            throw InexactDivision("exponent " + std::to_string(e) + " not divisible by " + std::to_string(factor));
        out.emplace_hint(out.end(), e / factor, c);
    }
    return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    if (rhs.is_monomial() && rhs.terms_.begin()->second == 1) return lhs.shift(rhs.terms_.begin()->first);
    if (lhs.is_monomial() && lhs.terms_.begin()->second == 1) return rhs.shift(lhs.terms_.begin()->first);
    const auto lo = lhs.min_exponent() + rhs.min_exponent();
    const auto a = to_dense(lhs, lhs.min_exponent());
    const auto b = to_dense(rhs, rhs.min_exponent());
    Dense prod(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return from_dense(prod, lo);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const Integer& rhs) {
    if (rhs == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= rhs;
    return *this;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 't';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

LaurentPoly pow(const LaurentPoly& base, unsigned exp) {
    LaurentPoly result(1);
    LaurentPoly b = base;
    while (exp) {
        if (exp & 1U) result *= b;
        exp >>= 1U;
        if (exp) b *= b;
    }
    return result;
}

LaurentPoly exact_divide(const LaurentPoly& dividend, const LaurentPoly& divisor) {
    if (divisor.is_zero()) throw DivisionByZero();
    if (dividend.is_zero()) return {};
    if (divisor.is_monomial()) {
        const auto& [e, c] = *divisor.terms().begin();
        return exact_divide(dividend, c).shift(-e);
    }
    Dense q;
    if (!dense_divide(to_dense(dividend, dividend.min_exponent()), to_dense(divisor, divisor.min_exponent()), q))
        throw InexactDivision("(" + dividend.to_string() + ") is not divisible by (" + divisor.to_string() + ")");
    return from_dense(q, dividend.min_exponent() - divisor.min_exponent());
}

LaurentPoly exact_divide(const LaurentPoly& dividend, const Integer& divisor) {
    if (divisor == 0) throw DivisionByZero();
    LaurentPoly::Terms out;
    for (const auto& [e, c] : dividend.terms()) {
        if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
            throw InexactDivision("(" + dividend.to_string() + ") is not divisible by " + divisor.get_str());
        Integer q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        out.emplace_hint(out.end(), e, std::move(q));
    }
    return LaurentPoly(std::move(out));
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    Dense da = a.is_zero() ? Dense{} : to_dense(a, a.min_exponent());
    Dense db = b.is_zero() ? Dense{} : to_dense(b, b.min_exponent());
    Dense g = dense_gcd(std::move(da), std::move(db));
    // Strip powers of t (units) and fix the sign of the constant term.
    std::size_t lead_zeros = 0;
    while (lead_zeros < g.size() && g[lead_zeros] == 0) ++lead_zeros;
    g.erase(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
    if (!g.empty() && g.front() < 0)
        for (auto& x : g) x = -x;
    return from_dense(g, 0);
}

}  // namespace lscoinv
