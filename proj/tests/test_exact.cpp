#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qlie/errors.hpp"
#include "qlie/xpoly.hpp"

using namespace qlie;

namespace {

XPoly random_poly(std::mt19937 &rng, std::size_t n, int order, int terms)
{
    std::uniform_int_distribution<int> c(-5, 5), e(0, order), den(1, 4);
    XPoly p(n, order);
    for (int t = 0; t < terms; ++t) {
        Exponents ex(n);
        for (auto &x : ex)
            x = e(rng) / static_cast<int>(n);
        p.add_term(ex, make_rational(c(rng), den(rng)));
    }
    return p;
}

SeriesCoeffs series(std::initializer_list<Rational> c)
{
    return SeriesCoeffs{std::vector<Rational>(c)};
}

} // namespace

TEST_CASE("rational text form")
{
    CHECK(to_string(make_rational(-2, 1440)) == "-1/720");
    CHECK(to_string(make_rational(6, 3)) == "2");
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK_THROWS_AS(parse_rational("3/-6"), std::invalid_argument);
    CHECK(parse_rational("-4/8") == make_rational(-1, 2));
    CHECK_THROWS_WITH_AS(parse_rational("1/0"), "zero denominator", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_rational("1/x"), doctest::Contains("malformed rational"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("polynomial products and truncation")
{
    const int N = 3;
    XPoly x0 = XPoly::variable(2, N, 0), x1 = XPoly::variable(2, N, 1);
    CHECK(x0 * x1 == XPoly::monomial(2, N, {1, 1}));
    CHECK((x0 * XPoly::monomial(2, N, {3, 0})).is_zero());

    XPoly one = XPoly::constant(1, 2, 1), x = XPoly::variable(1, 2, 0);
    CHECK((one + x) * (one - x + x * x) == one);
    CHECK_THROWS_AS(x0 * x, StructuralError);
}

TEST_CASE("partial derivatives")
{
    const int N = 4;
    XPoly x0 = XPoly::variable(2, N, 0), x1 = XPoly::variable(2, N, 1);
    CHECK(poly_diff(x0 * x0 * x1, 0) == x0 * x1 * Rational(2));
    CHECK(poly_diff(x0, 1).is_zero());
    CHECK(poly_diff(x0 + x0 * x1 * make_rational(1, 2), 0) == XPoly::constant(2, N, 1) + x1 * make_rational(1, 2));
}

TEST_CASE("polynomial ring laws on random samples")
{
    std::mt19937 rng(11);
    for (int k = 0; k < 200; ++k) {
        std::size_t n = 1 + k % 3;
        auto a = random_poly(rng, n, 4, 5), b = random_poly(rng, n, 4, 5), c = random_poly(rng, n, 4, 5);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        for (std::size_t v = 0; v < n; ++v) {
            // Leibniz only holds below the truncation edge, so compare at order 3.
            XPoly a3 = a.with_order(3), b3 = b.with_order(3);
            XPoly lhs = poly_diff(a * b, v).with_order(3);
            REQUIRE(lhs == poly_diff(a, v).with_order(3) * b3 + a3 * poly_diff(b, v).with_order(3));
        }
    }
}

TEST_CASE("series constants")
{
    const int N = 4;
    CHECK(expm1_over_t_series(N) ==
          series({1, make_rational(1, 2), make_rational(1, 6), make_rational(1, 24), make_rational(1, 120)}));
    CHECK(t_over_expm1_series(N) == series({1, make_rational(-1, 2), make_rational(1, 12), 0, make_rational(-1, 720)}));
    CHECK(series_reciprocal(series({1, 0, 0})) == series({1, 0, 0}));
    CHECK(series_reciprocal(series({2, 0, 0})) == series({make_rational(1, 2), 0, 0}));
    CHECK_THROWS_AS(series_reciprocal(series({0, 1})), SingularSeriesError);
    for (int n = 0; n <= 6; ++n)
        CHECK(exp_series(6).coefficients[n] == oracle::inv_factorial(n));
}

TEST_CASE("reciprocal times series is the unit series")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-9, 9), den(1, 7);
    for (int k = 0; k < 1000; ++k) {
        int N = k % 7;
        SeriesCoeffs s{std::vector<Rational>(N + 1)};
        for (auto &x : s.coefficients)
            x = make_rational(c(rng), den(rng));
        if (s.coefficients[0] == 0)
            s.coefficients[0] = 1;
        SeriesCoeffs unit{std::vector<Rational>(N + 1)};
        unit.coefficients[0] = 1;
        REQUIRE(series_mul(series_reciprocal(s), s) == unit);
    }
}

TEST_CASE("matrix series")
{
    PolyMatrix zero(2, 2, 1, 3);
    CHECK(matrix_series_apply(exp_series(3), zero).is_identity());

    Rational a = make_rational(3, 2);
    PolyMatrix m(1, 1, 1, 2);
    m(0, 0) = XPoly::variable(1, 2, 0, a);
    XPoly expect = XPoly::constant(1, 2, 1) + XPoly::variable(1, 2, 0, a) + XPoly::monomial(1, 2, {2}, a * a / 2);
    CHECK(matrix_series_apply(exp_series(2), m)(0, 0) == expect);

    m(0, 0) = XPoly::variable(1, 2, 0);
    CHECK(matrix_series_apply(expm1_over_t_series(2), m)(0, 0) ==
          XPoly::constant(1, 2, 1) + XPoly::variable(1, 2, 0, make_rational(1, 2)) +
              XPoly::monomial(1, 2, {2}, make_rational(1, 6)));
}

TEST_CASE("exp(M) exp(-M) is the identity")
{
    std::mt19937 rng(17);
    for (int k = 0; k < 30; ++k) {
        std::size_t d = 1 + k % 3, n = 1 + k % 2;
        const int N = 4;
        PolyMatrix m(d, d, n, N);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                XPoly p = random_poly(rng, n, N, 3);
                m(r, c) = p - XPoly::constant(n, N, p.constant_term());
            }
        CHECK((matrix_series_apply(exp_series(N), m) * matrix_series_apply(exp_series(N), -m)).is_identity());
    }
}
