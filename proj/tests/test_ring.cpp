#include <doctest.h>

#include <random>

#include "lscoinv/io.hpp"
#include "lscoinv/laurent_poly.hpp"
#include "lscoinv/rat_func.hpp"
#include "test_util.hpp"

using namespace lscoinv;
using testutil::random_nonzero_poly;
using testutil::random_poly;
using testutil::random_ratfunc;

namespace {

const LaurentPoly t = LaurentPoly::t();

// Naive product straight from the definition, independent of operator*.
LaurentPoly schoolbook(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly::Terms out;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) out[ea + eb] += ca * cb;
    return LaurentPoly(out);
}

}  // namespace

TEST_CASE("laurent basics") {
    const LaurentPoly p = 1 + 2 * pow(t, 2) - t.bar();
    CHECK(p.to_string() == "-t^-1 + 1 + 2*t^2");
    CHECK(p.min_exponent() == -1);
    CHECK(p.max_exponent() == 2);
    CHECK(p.eval_at_one() == 2);
    CHECK(!p.is_polynomial());
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(t.to_string() == "t");
    CHECK((t - t).is_zero());
    CHECK(p.bar().bar() == p);
    CHECK((1 + t).stretch(2) == 1 + pow(t, 2));
    CHECK((1 + pow(t, 4)).compress(2) == 1 + pow(t, 2));
    CHECK_THROWS_AS((1 + t).compress(2), InexactDivision);
    CHECK(exact_divide(1 - pow(t, 6), 1 - pow(t, 2)) == 1 + pow(t, 2) + pow(t, 4));
    CHECK_THROWS_AS(exact_divide(1 + t, 1 - t), InexactDivision);
    CHECK_THROWS_AS(exact_divide(1 + t, LaurentPoly()), DivisionByZero);
    CHECK(gcd(1 - pow(t, 4), 1 - pow(t, 6)) == 1 - pow(t, 2));
    CHECK(gcd(LaurentPoly(6) * (1 + t), LaurentPoly(4) * (1 + t)) == 2 + 2 * t);
}

TEST_CASE("laurent ring axioms on random samples") {
    std::mt19937_64 rng(20260101);
    for (int i = 0; i < 300; ++i) {
        const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * b == schoolbook(a, b));
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK(a - a == LaurentPoly());
        if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("gcd divides both arguments and absorbs common factors") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 150; ++i) {
        const auto a = random_nonzero_poly(rng), b = random_nonzero_poly(rng), f = random_nonzero_poly(rng);
        const auto g = gcd(a * f, b * f);
        CHECK_NOTHROW(exact_divide(a * f, g));
        CHECK_NOTHROW(exact_divide(b * f, g));
        // f (up to a unit) divides the gcd
        CHECK_NOTHROW(exact_divide(g * LaurentPoly(f.content()), f));
        CHECK(g.min_exponent() == 0);
        CHECK(g.lowest_coeff() > 0);
    }
}

TEST_CASE("rational function canonical form") {
    const RatFunc a(1 - pow(t, 4), 1 - pow(t, 2));
    CHECK(a.is_laurent());
    CHECK(a.as_laurent() == 1 + pow(t, 2));

    const RatFunc b(t, pow(t, 3) - pow(t, 5));
    CHECK(b.num() == LaurentPoly::t(-2));
    CHECK(b.den() == 1 - pow(t, 2));

    const RatFunc c(LaurentPoly(-2), LaurentPoly(-4) * (1 - t));
    CHECK(c.num() == 1);
    CHECK(c.den() == 2 - 2 * t);
    CHECK(c.to_string() == "(1)/(2 - 2*t)");

    CHECK_THROWS_AS(RatFunc(1, LaurentPoly()), DivisionByZero);
    CHECK_THROWS(RatFunc(1, 1 - t).as_laurent());
    CHECK(RatFunc(0, 1 + t).den() == 1);
}

TEST_CASE("rational function field axioms on random samples") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == RatFunc());
        CHECK(a.bar().bar() == a);
        CHECK((a * b).bar() == a.bar() * b.bar());
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(b * b.inverse() == RatFunc(1));
        }
    }
}

TEST_CASE("series expansion") {
    const RatFunc geo(1, 1 - pow(t, 2));
    CHECK(geo.series_expand(6) == 1 + pow(t, 2) + pow(t, 4) + pow(t, 6));
    const RatFunc d(1, (1 - pow(t, 4)) * (1 - pow(t, 6)));
    CHECK(d.series_expand(12) == 1 + pow(t, 4) + pow(t, 6) + pow(t, 8) + pow(t, 10) + 2 * pow(t, 12));
    CHECK(RatFunc(t.bar(), 1 - t).series_expand(1) == t.bar() + 1 + t);
    CHECK_THROWS_AS(RatFunc(1, 2 - t).series_expand(3), std::domain_error);
}

TEST_CASE("json round trip keeps big coefficients exact") {
    Integer big("123456789012345678901234567890");
    const LaurentPoly p = LaurentPoly::monomial(big, -3) + LaurentPoly::monomial(-7, 5);
    const json j = p;
    CHECK(j["coeffs"]["-3"].is_string());
    CHECK(j["coeffs"]["5"] == -7);
    CHECK(j.get<LaurentPoly>() == p);

    const RatFunc f(p, 1 + pow(t, 3));
    CHECK(json(f).get<RatFunc>() == f);
}
