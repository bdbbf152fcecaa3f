#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qlie/errors.hpp"
#include "qlie/golden.hpp"
#include "qlie/quantize.hpp"

using namespace qlie;

namespace {

// Variables of a 3-block polynomial ring: block b, coordinate r.
std::vector<XPoly> block(std::size_t v, int order, std::size_t b, std::size_t blocks)
{
    std::vector<XPoly> out;
    for (std::size_t r = 0; r < v; ++r)
        out.push_back(XPoly::variable(blocks * v, order, b * v + r));
    return out;
}

std::vector<XPoly> concat(std::vector<XPoly> a, const std::vector<XPoly> &b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<XPoly> compose_all(const std::vector<XPoly> &f, const std::vector<XPoly> &images)
{
    std::vector<XPoly> out;
    for (auto &p : f)
        out.push_back(p.compose(images));
    return out;
}

Tensor3 heisenberg()
{
    Tensor3 g(3, 3, 3);
    g(2, 0, 1) = 1;
    g(2, 1, 0) = -1;
    return g;
}

std::vector<LieBialgebraSpec> all_specs()
{
    std::vector<LieBialgebraSpec> out;
    for (auto &[n, s] : golden::library())
        out.push_back(s);
    out.push_back(classical_double(golden::k_example()));
    return out;
}

} // namespace

TEST_CASE("BCH of an abelian V*")
{
    auto D = bch(Tensor3(2, 2, 2), 2, 4);
    for (std::size_t mu = 0; mu < 2; ++mu)
        CHECK(D[mu] == XPoly::variable(4, 4, mu) + XPoly::variable(4, 4, 2 + mu));
}

TEST_CASE("BCH at order 2 is x + y + [x,y]/2")
{
    std::mt19937 rng(1);
    for (int k = 0; k < 10; ++k) {
        std::size_t d = 1 + k % 3;
        Tensor3 g = oracle::random_lie(d, rng);
        auto D = bch(g, d, 2);
        for (std::size_t mu = 0; mu < d; ++mu) {
            XPoly expect = XPoly::variable(2 * d, 2, mu) + XPoly::variable(2 * d, 2, d + mu);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t s = 0; s < d; ++s)
                    expect.add_term(
                        [&] {
                            Exponents e(2 * d);
                            e[r] += 1;
                            e[d + s] += 1;
                            return e;
                        }(),
                        g(mu, r, s) / 2);
            CHECK(D[mu] == expect);
        }
    }
}

TEST_CASE("BCH of the Heisenberg algebra terminates")
{
    for (int N : {2, 3, 5}) {
        auto D = bch(heisenberg(), 3, N);
        XPoly x0 = XPoly::variable(6, N, 0), x1 = XPoly::variable(6, N, 1), x2 = XPoly::variable(6, N, 2);
        XPoly y0 = XPoly::variable(6, N, 3), y1 = XPoly::variable(6, N, 4), y2 = XPoly::variable(6, N, 5);
        CHECK(D[0] == x0 + y0);
        CHECK(D[1] == x1 + y1);
        CHECK(D[2] == x2 + y2 + (x0 * y1 - x1 * y0) * make_rational(1, 2));
    }
}

TEST_CASE("BCH agrees with the free-algebra oracle")
{
    std::mt19937 rng(2024);
    for (int k = 0; k < 20; ++k) {
        std::size_t d = 1 + k % 3;
        Tensor3 g = oracle::random_lie(d, rng);
        REQUIRE(oracle::jacobi_holds(g, d));
        CAPTURE(k);
        std::vector<XPoly> D;
        REQUIRE_NOTHROW(D = bch(g, d, 4));
        CHECK(D == oracle::dynkin_bch(g, d, 4));
    }
}

TEST_CASE("BCH is associative")
{
    for (auto &s : all_specs()) {
        const std::size_t v = s.dim_v;
        const int N = 4;
        auto D = bch(s.gamma, v, N);
        auto x = block(v, N, 0, 3), y = block(v, N, 1, 3), z = block(v, N, 2, 3);
        auto xy = compose_all(D, concat(x, y)), yz = compose_all(D, concat(y, z));
        CHECK(compose_all(D, concat(xy, z)) == compose_all(D, concat(x, yz)));
    }
}

TEST_CASE("exp(alpha.X) is group-like along BCH")
{
    for (auto &s : all_specs()) {
        const std::size_t v = s.dim_v;
        const int N = 4;
        auto q = build_algebra(s, N);
        auto x = block(v, N, 0, 2), y = block(v, N, 1, 2);
        PolyMatrix lhs = q->a_plus.compose(q->D);
        PolyMatrix rhs = q->a_plus.compose(x) * q->a_plus.compose(y);
        CHECK(lhs == rhs);
        CHECK((q->a_plus * q->a_minus).is_identity());
    }
}

TEST_CASE("structure series")
{
    // classical limit when gamma = alpha = 0
    auto iso = eval_structure_series(golden::iso(), 4);
    CHECK(iso[0][0] == XPoly::variable(2, 4, 1));
    CHECK(iso[0][1] == -XPoly::variable(2, 4, 0));

    // J: e^X - 1
    auto J = eval_structure_series(golden::jordanian(), 3);
    XPoly e1(1, 3);
    for (int n = 1; n <= 3; ++n)
        e1.add_term({n}, oracle::inv_factorial(n));
    CHECK(J[0][0] == e1);

    // one-dimensional family [H,X] = a X, delta(H) = b (X^H): A(X) = a (e^{bX} - 1) / b
    for (auto [a, b] : {std::pair<int, int>{2, 3}, {1, -1}, {-3, 2}}) {
        auto s = golden::jordanian();
        s.A(0, 0, 0) = a;
        s.alpha(0, 0, 0) = b;
        REQUIRE(validate_bialgebra(s).pass());
        XPoly expect(1, 4);
        Rational bn = 1;
        for (int n = 1; n <= 4; ++n) {
            bn *= b;
            expect.add_term({n}, Rational(a) * bn / b * oracle::inv_factorial(n));
        }
        CHECK(eval_structure_series(s, 4)[0][0] == expect);
    }

    // K: gamma is nilpotent on the A-image, so [H, X1] = X1 exactly
    auto K = eval_structure_series(golden::k_example(), 4);
    CHECK(K[0][0].is_zero());
    CHECK(K[0][1] == XPoly::variable(2, 4, 1));
}

TEST_CASE("build_algebra")
{
    auto z = build_algebra(golden::abelian(2, 2), 3);
    for (std::size_t mu = 0; mu < 2; ++mu)
        CHECK(z->D[mu] == XPoly::variable(4, 3, mu) + XPoly::variable(4, 3, 2 + mu));
    for (auto &row : z->A_series)
        for (auto &p : row)
            CHECK(p.is_zero());
    CHECK(z->a_plus.is_identity());
    CHECK(z->a_minus.is_identity());

    auto J = build_algebra(golden::jordanian(), 3);
    CHECK(J->relation_lines() == std::vector<std::string>{"[H, X0] = X0 + 1/2 X0^2 + 1/6 X0^3"});

    auto bad = LieBialgebraSpec::zero(3, 1);
    bad.C(0, 1, 1) = 1, bad.C(1, 0, 1) = -1;
    bad.C(0, 2, 2) = 1, bad.C(2, 0, 2) = -1;
    bad.C(1, 2, 0) = 1, bad.C(2, 1, 0) = -1;
    CHECK_THROWS_AS(build_algebra(bad, 3), ValidationError);
}

TEST_CASE("normal_order through the quantized algebra")
{
    auto q = build_algebra(golden::jordanian(), 3);
    std::vector<Generator> hx{{Generator::Kind::H, 0}, {Generator::Kind::X, 0}};
    PBWElement e = normal_order(*q, hx);
    CHECK(e.coefficient(Monomial{{1}, {0}}) == 1);
    CHECK(e.coefficient(Monomial{{3}, {}}) == make_rational(1, 6));
}
