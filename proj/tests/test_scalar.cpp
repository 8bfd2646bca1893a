#include <catch_amalgamated.hpp>

#include <cmath>

#include "pappus/field.hpp"
#include "support.hpp"

using namespace pappus;

TEST_CASE("rational arithmetic is exact and canonical") {
    const Rational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a.str() == "-3/2");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse(" 5 ") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("abc"), ArgumentError);
    CHECK_THROWS_AS(Rational::parse("1/"), ArgumentError);
}

TEST_CASE("rationals grow without overflow") {
    Rational x(3, 2);
    for (int i = 0; i < 8; ++i) x = x * x; // (3/2)^256
    mpz_class three_256;
    mpz_ui_pow_ui(three_256.get_mpz_t(), 3, 256);
    CHECK(x.numerator() == three_256);
    CHECK(x == pow(Rational(3, 2), 256));
}

TEST_CASE("property: (a b) / b = a in Q and F_p") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Rational a = test::rand_rational(rng, 1000, 1000);
        const Rational b = test::rand_rational(rng, 1000, 1000);
        if (b.is_zero()) continue;
        REQUIRE((a * b) * b.inverse() == a);
    }
    for (std::uint64_t p : {5ULL, 47ULL, 1000003ULL, 2305843009213693951ULL}) {
        const PrimeField f(p);
        for (int i = 0; i < 1000; ++i) {
            const Fp a = test::rand_fp(rng, f);
            const Fp b = test::rand_fp(rng, f);
            if (b.is_zero()) continue;
            REQUIRE((a * b) * b.inverse() == a);
        }
    }
}

TEST_CASE("prime field construction and literals") {
    CHECK_THROWS_AS(PrimeField(4), ArgumentError);
    CHECK_THROWS_AS(PrimeField(3), ArgumentError);
    const PrimeField f(47);
    CHECK((f(21) + Fp(30)).residue() == 4);
    CHECK(f.parse("1/2").residue() == 24);
    CHECK(f(-1).residue() == 46);
    CHECK_THROWS_AS(f(1) + PrimeField(53)(1), ArgumentError);
    CHECK_THROWS_AS(f(0).inverse(), DivisionByZero);
}

TEST_CASE("primality and Legendre symbols") {
    CHECK(is_prime(2));
    CHECK(is_prime(46337));
    CHECK_FALSE(is_prime(46339 * 3ULL));
    CHECK(is_prime(2305843009213693951ULL));
    CHECK_FALSE(is_prime(3215031751ULL)); // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(legendre_symbol(2, 7) == 1);
    CHECK(legendre_symbol(3, 7) == -1);
    CHECK(legendre_symbol(14, 7) == 0);
    CHECK_THROWS_AS(legendre_symbol(1, 9), ArgumentError);
}

TEST_CASE("property: square roots square back") {
    std::mt19937_64 rng(5);
    for (std::uint64_t p : {5ULL, 13ULL, 17ULL, 41ULL, 97ULL, 65537ULL, 1000003ULL}) {
        const PrimeField f(p);
        int residues = 0;
        for (int i = 0; i < 300; ++i) {
            const Fp a = test::rand_fp(rng, f);
            const auto r = sqrt_mod(a);
            const int ls = a.is_zero() ? 0 : legendre_symbol(static_cast<std::int64_t>(a.residue()), p);
            REQUIRE(r.has_value() == (ls >= 0));
            if (r) {
                ++residues;
                REQUIRE(r->first * r->first == a);
                REQUIRE(r->second * r->second == a);
                REQUIRE(r->first.residue() <= r->second.residue());
            }
        }
        CHECK(residues > 0);
    }
    for (int i = 0; i < 200; ++i) {
        const Rational q = test::rand_rational(rng, 40, 40);
        const auto r = sqrt_in_field(Rational(q * q));
        REQUIRE(r);
        REQUIRE(r->first * r->first == q * q);
    }
    CHECK_FALSE(sqrt_in_field(Rational(2)));
    CHECK_FALSE(sqrt_in_field(Rational(-4)));
    for (double x : {2.0, 1e-8, 12345.678}) {
        const auto r = sqrt_in_field(x);
        REQUIRE(r);
        CHECK(std::abs(r->first * r->first - x) <= 1e-12 * x);
    }
}

TEST_CASE("tolerance-aware helpers") {
    CHECK(approx_equal(1.0, 1.0 + 1e-12));
    CHECK_FALSE(approx_equal(1.0, 1.0 + 1e-6));
    CHECK(approx_equal(Rational(1, 3), Rational(2, 6)));
    CHECK(parse_scalar<Real>("1/4") == 0.25);
    CHECK_THROWS_AS(parse_scalar<Real>("x"), ArgumentError);
    CHECK(to_string(Rational(-1, 4)) == "-1/4");
}
