#include <catch_amalgamated.hpp>

#include "pappus/polynomial.hpp"
#include "support.hpp"

using namespace pappus;
using Q = Rational;
using P = Poly<Q>;

TEST_CASE("polynomial basics") {
    const P p{1, -3, 2}; // 2t^2 - 3t + 1 = (2t - 1)(t - 1)
    CHECK(p.degree() == 2);
    CHECK(p(Q(1)) == Q(0));
    CHECK(p(Q(1, 2)) == Q(0));
    CHECK(p.derivative() == P{-3, 4});
    CHECK(p.monic() == P{Q(1, 2), Q(-3, 2), 1});
    CHECK((P{1, 1} * P{-1, 1}) == P{-1, 0, 1});
    CHECK((P{1, 2, 3} - P{1, 2, 3}).is_zero());
    CHECK(P{0, 0, 0}.degree() == -1);
}

TEST_CASE("division, gcd and interpolation") {
    const P a = P{-1, 1} * P{-2, 1} * P{3, 1};
    const P b = P{-1, 1} * P{5, 1};
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(gcd(a, b) == P{-1, 1});
    CHECK_THROWS_AS(divmod(a, P{}), DivisionByZero);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        std::vector<Q> c(4);
        for (auto& x : c) x = test::rand_rational(rng);
        const P f(c);
        const std::vector<Q> xs{Q(-1), Q(0), Q(2), Q(7)};
        std::vector<Q> ys;
        for (const Q& x : xs) ys.push_back(f(x));
        REQUIRE(interpolate(xs, ys) == f);
    }
}

TEST_CASE("rational roots") {
    const P f = P{-3, 2} * P{9, -40, 28}; // (2t - 3)(28t^2 - 40t + 9)
    CHECK(rational_roots(f) == std::vector<Q>{Q(3, 2)});
    const P g = P{Q(-2, 7), 1} * P{Q(1, 3), 1} * P{0, 1};
    CHECK(rational_roots(g) == std::vector<Q>{Q(-1, 3), Q(0), Q(2, 7)});
    CHECK(rational_roots(P{1, 0, 1}).empty());
}

TEST_CASE("polynomials over F_p") {
    const PrimeField f(7);
    const Poly<Fp> p{f(1), f(0), f(1)}; // t^2 + 1, irreducible mod 7
    for (int t = 0; t < 7; ++t) CHECK_FALSE(p(f(t)).is_zero());
    const Poly<Fp> q{f(-1), f(0), f(1)};
    CHECK(q(f(1)).is_zero());
    CHECK(q(f(6)).is_zero());
}
