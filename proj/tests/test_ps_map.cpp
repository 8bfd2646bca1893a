#include <catch_amalgamated.hpp>

#include "pappus/ps_map.hpp"
#include "support.hpp"

using namespace pappus;
using Q = Rational;
using Z = SigPoint<Q>;

TEST_CASE("fixed points and the 2-cycle") {
    CHECK(ps_map(Z{Q(2), Q(1)}) == Z{Q(2), Q(1)});
    CHECK(ps_map(Z{Q(12), Q(16)}) == Z{Q(12), Q(16)});
    CHECK(ps_map(Z{Q(5), Q(4)}) == Z{Q(8), Q(16)});
    CHECK(ps_map(Z{Q(8), Q(16)}) == Z{Q(5), Q(4)});
    CHECK(ps_map(Z{Q(4), Q(3)}) == Z{Q(6), Q(9)});
    CHECK_THROWS_AS(ps_map(Z{Q(3), Q(3)}), UndefinedMap);
    CHECK_FALSE(try_ps_map(Z{Q(3), Q(3)}));
}

TEST_CASE("the only fixed points are [2,1] and [12,16]") {
    // Over F_p for a few p, by exhaustion; the images of the two rational fixed points always appear.
    for (std::uint64_t p : {101ULL, 103ULL}) {
        const PrimeField f(p);
        std::vector<SigPoint<Fp>> fixed;
        for (std::uint64_t x = 0; x < p; ++x) {
            for (std::uint64_t y = 0; y < p; ++y) {
                if (x == y) continue;
                const SigPoint<Fp> z{f(static_cast<std::int64_t>(x)), f(static_cast<std::int64_t>(y))};
                if (ps_map(z) == z) fixed.push_back(z);
            }
        }
        // y = 0 points map to [0,0] which is not fixed; the fixed set is {[2,1], [12,16]}
        REQUIRE(fixed.size() == 2);
        CHECK(fixed[0] == SigPoint<Fp>{f(2), f(1)});
        CHECK(fixed[1] == SigPoint<Fp>{f(12), f(16)});
    }
}

TEST_CASE("involution") {
    CHECK(involution(Z{Q(5), Q(4)}) == Z{Q(5), Q(4)});
    CHECK(involution(Z{Q(8), Q(16)}) == Z{Q(8, 3), Q(16, 9)});
    CHECK(ps_map(Z{Q(8, 3), Q(16, 9)}) == Z{Q(5), Q(4)});
    CHECK(involution(involution(Z{Q(7), Q(2)})) == Z{Q(7), Q(2)});
}

TEST_CASE("property: double cover and involution") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 500) {
        const Z z{test::rand_rational(rng), test::rand_rational(rng)};
        REQUIRE(involution(involution(z)) == z);
        if (is_harmonic(z) || on_diagonal(z) || on_diagonal(involution(z))) continue;
        REQUIRE(ps_map(involution(z)) == ps_map(z));
        ++done;
    }
}

TEST_CASE("property: harmonic and balanced loci are exchanged") {
    CHECK(is_harmonic(Z{Q(5), Q(4)}));
    CHECK(is_harmonic(Z{Q(2), Q(1)}));
    CHECK(is_balanced(Z{Q(2), Q(1)}));
    CHECK(is_balanced(Z{Q(8), Q(16)}));
    std::mt19937_64 rng(32);
    for (int i = 0; i < 200; ++i) {
        const Q t = test::rand_rational(rng);
        const Z h{t + Q(1), t};
        REQUIRE(ps_map(h) == Z{Q(2) * t, t * t}); // [t+1, t] -> [2t, t^2]
        REQUIRE(is_balanced(ps_map(h)));
        if (t.is_zero()) continue;
        const Z b{Q(2) * t, t * t};
        if (on_diagonal(b)) continue;
        REQUIRE(is_harmonic(ps_map(b)));
    }
}

TEST_CASE("preimages") {
    const auto five_four = preimages(Z{Q(5), Q(4)});
    REQUIRE(five_four.points.size() == 2);
    CHECK_FALSE(five_four.ramified);
    const auto has = [](const auto& set, const Z& z) {
        return std::any_of(set.points.begin(), set.points.end(), [&](const Z& p) { return p == z; });
    };
    CHECK(has(five_four, Z{Q(8), Q(16)}));
    CHECK(has(five_four, Z{Q(8, 3), Q(16, 9)}));

    const auto eight = preimages(Z{Q(8), Q(16)});
    CHECK(eight.ramified);
    REQUIRE(eight.points.size() == 1);
    CHECK(eight.points[0] == Z{Q(5), Q(4)});

    const auto six_nine = preimages(Z{Q(6), Q(9)});
    REQUIRE(six_nine.points.size() == 1);
    CHECK(six_nine.points[0] == Z{Q(4), Q(3)});

    CHECK(preimages(Z{Q(1), Q(2)}).points.empty()); // 2 is not a square in Q
    CHECK_FALSE(preimages(Z{Q(1), Q(2)}).note.empty());
}

TEST_CASE("preimages over F_47 follow the Legendre symbol") {
    const PrimeField f(47);
    int nonresidues = 0;
    for (std::int64_t q = 1; q < 47; ++q) {
        for (std::int64_t p = 0; p < 47; p += 5) {
            const SigPoint<Fp> w{f(p), f(q)};
            const auto pre = preimages(w);
            for (const auto& z : pre.points) REQUIRE(ps_map(z) == w);
            if (pre.ramified) {
                REQUIRE(pre.points.size() <= 1);
            } else if (legendre_symbol(q, 47) < 0) {
                REQUIRE(pre.points.empty());
                ++nonresidues;
            } else {
                REQUIRE(pre.points.size() <= 2);
            }
        }
    }
    CHECK(nonresidues > 0);
}

TEST_CASE("property: ramification and sections") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 500; ++i) {
        const Z z{test::rand_rational(rng), test::rand_rational(rng)};
        if (on_diagonal(z) || z.y.is_zero()) continue;
        const Z w = ps_map(z);
        const auto pre = preimages(w);
        REQUIRE(pre.ramified == (w.x * w.x == Q(4) * w.y));
        REQUIRE(pre.points.size() == (pre.ramified ? 1u : 2u));
        for (const auto& p : pre.points) REQUIRE(ps_map(p) == w);
    }
}

TEST_CASE("alpha and its coherence with the map") {
    CHECK(alpha(Q(0)) == Q(0));
    CHECK(alpha(Q(1)) == Q(1));
    CHECK(alpha(Q(4)) == Q(4));
    CHECK(alpha(Q(3)) == Q(9));
    CHECK_THROWS_AS(alpha(Q(2)), PoleError);
    std::mt19937_64 rng(34);
    for (int i = 0; i < 100; ++i) {
        const Q t = test::rand_rational(rng);
        if (t == Q(2) || t.is_zero()) continue;
        REQUIRE(ps_map(ps_map(Z{t + Q(1), t})) == Z{alpha(t) + Q(1), alpha(t)});
        REQUIRE(ps_map(ps_map(Z{Q(2) * t, t * t})) == Z{Q(2) * alpha(t), alpha(t) * alpha(t)});
    }
}

TEST_CASE("circ") {
    CHECK(circ(Q(3)) == Q(-1, 4));
    CHECK(circ(Q(-1, 4)) == Q(3));
    CHECK(j_invariant(Q(3)) == Q(343, 243));
    CHECK(j_invariant(circ(Q(3))) == Q(343, 100));
    CHECK_THROWS_AS(circ(Q(2)), ArgumentError);
    CHECK(circ_relaxed(Q(2)) == Q(0));
    std::mt19937_64 rng(35);
    for (int i = 0; i < 200; ++i) {
        const Q r = test::rand_rational(rng);
        if (r == Q(-1) || r == Q(2) || r == Q(1, 2) || r.is_zero() || r == Q(1)) continue;
        REQUIRE(circ(circ(r)) == r);
        const Q j = j_invariant(r);
        REQUIRE(j_invariant(circ(r)) == j / (j - Q(1)));
        const auto orbit = circ_orbit(r);
        REQUIRE(orbit[0] == circ(r));
        for (const Q& v : orbit) REQUIRE(j_invariant(v) == j_invariant(orbit[0]));
    }
}

TEST_CASE("strata") {
    CHECK(stratum(Z{Q(3), Q(3)}) == Stratum::W1);
    CHECK(stratum(Z{Q(5), Q(0)}) == Stratum::W2);
    CHECK(ps_map(Z{Q(5), Q(0)}) == Z{Q(0), Q(0)});
    CHECK(stratum(Z{Q(5), Q(6)}) == Stratum::W2);
    CHECK(ps_map(Z{Q(5), Q(6)}) == Z{Q(36), Q(36)});
    std::mt19937_64 rng(36);
    for (int i = 0; i < 1000; ++i) {
        const Q m = test::rand_rational(rng, 20, 7);
        const Z w2{m, Q(2) * m - Q(4)};
        if (!on_diagonal(w2)) REQUIRE(stratum(ps_map(w2)) == Stratum::W1);
        const Z w3{m * m + Q(2) * m, Q(2) * m * m};
        if (on_diagonal(w3) || stratum(w3) != Stratum::W3) continue;
        const Z img = ps_map(w3);
        REQUIRE((stratum(img) == Stratum::W2 || stratum(img) == Stratum::W1));
    }
}

TEST_CASE("orbits stop on the diagonal") {
    const auto o = iterate(Z{Q(5), Q(6)}, 5);
    REQUIRE(o.points.size() == 2);
    REQUIRE(o.undefined_at == 1u);
    const auto cyc = iterate(Z{Q(5), Q(4)}, 4);
    CHECK(cyc.points.back() == Z{Q(5), Q(4)});
    CHECK_FALSE(cyc.undefined_at);
}

TEST_CASE("homogeneous forms agree with the affine maps") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 100; ++i) {
        const Z z{test::rand_rational(rng), test::rand_rational(rng)};
        if (on_diagonal(z)) continue;
        const Vec3<Q> h = ps_map_homogeneous(Vec3<Q>(z.x, z.y, Q(1)));
        const Z w = ps_map(z);
        REQUIRE(h[0] / h[2] == w.x);
        REQUIRE(h[1] / h[2] == w.y);
        const Vec3<Q> t = involution_homogeneous(Vec3<Q>(z.x, z.y, Q(1)));
        if (!is_harmonic(z)) REQUIRE(Z{t[0] / t[2], t[1] / t[2]} == involution(z));
    }
}
