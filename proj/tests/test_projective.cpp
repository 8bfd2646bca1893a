#include <catch_amalgamated.hpp>

#include "pappus/projective.hpp"
#include "support.hpp"

using namespace pappus;
using Q = Rational;

namespace {

// Independent oracle: the affine formula for four finite points.
Q affine_cross_ratio(const Q& a, const Q& b, const Q& c, const Q& d) {
    return (a - c) * (b - d) / ((b - c) * (a - d));
}

ProjPoint1<Q> mobius(const ProjPoint1<Q>& x, const std::array<Q, 4>& m) {
    return ProjPoint1<Q>(m[0] * x.u() + m[1] * x.v(), m[2] * x.u() + m[3] * x.v());
}

} // namespace

TEST_CASE("cross-ratio matches the affine formula and handles infinity") {
    const auto pt = [](long t) { return ProjPoint1<Q>::affine(Q(t)); };
    CHECK(cross_ratio(pt(0), pt(1), pt(2), pt(3)) == affine_cross_ratio(Q(0), Q(1), Q(2), Q(3)));
    CHECK(cross_ratio(pt(2), pt(-1), pt(5), pt(7)) == affine_cross_ratio(Q(2), Q(-1), Q(5), Q(7)));
    // <x, 1, 0, inf> = x
    CHECK(cross_ratio(pt(5), pt(1), pt(0), ProjPoint1<Q>::infinity(Q(1))) == Q(5));
    CHECK_THROWS_AS(cross_ratio(pt(1), pt(1), pt(1), pt(2)), DegenerateInput);
    CHECK_THROWS_AS(ProjPoint1<Q>(Q(0), Q(0)), DegenerateInput);
}

TEST_CASE("property: cross-ratio is invariant under projectivities of P^1") {
    std::mt19937_64 rng(3);
    int done = 0;
    while (done < 200) {
        std::array<Q, 4> xs, m;
        for (auto& x : xs) x = test::rand_rational(rng);
        for (auto& x : m) x = test::rand_rational(rng);
        if (m[0] * m[3] == m[1] * m[2]) continue;
        std::array<ProjPoint1<Q>, 4> p{ProjPoint1<Q>::affine(xs[0]), ProjPoint1<Q>::affine(xs[1]),
                                       ProjPoint1<Q>::affine(xs[2]), ProjPoint1<Q>::affine(xs[3])};
        Q before;
        try {
            before = cross_ratio(p[0], p[1], p[2], p[3]);
        } catch (const DegenerateInput&) {
            continue;
        }
        const Q after = cross_ratio(mobius(p[0], m), mobius(p[1], m), mobius(p[2], m), mobius(p[3], m));
        REQUIRE(before == after);
        ++done;
    }
}

TEST_CASE("property: j is constant on the cross-ratio orbit and solves the sextic") {
    std::mt19937_64 rng(4);
    int done = 0;
    while (done < 200) {
        const Q r = test::rand_rational(rng, 30, 30);
        if (r.is_zero() || r == Q(1)) continue;
        const Q j = j_invariant(r);
        for (const Q& z : cross_ratio_orbit(r)) {
            REQUIRE(j_invariant(z) == j);
            const Q w = z * z - z + Q(1);
            REQUIRE(Q(4) * w * w * w - Q(27) * j * z * z * (z - Q(1)) * (z - Q(1)) == Q(0));
        }
        ++done;
    }
    CHECK(j_invariant(Q(-1)) == Q(1));
    CHECK(j_invariant(Q(2)) == Q(1));
    CHECK_THROWS_AS(j_invariant(Q(1)), PoleError);
}

TEST_CASE("join and meet") {
    const ProjPoint2<Q> p(Q(0), Q(0), Q(1)), q(Q(1), Q(0), Q(1)), r(Q(0), Q(1), Q(1)), s(Q(1), Q(1), Q(1));
    const ProjLine2<Q> pq = join(p, q);
    CHECK(incident(p, pq));
    CHECK(incident(q, pq));
    CHECK_THROWS_AS(join(p, ProjPoint2<Q>(Q(0), Q(0), Q(5))), DegenerateInput);
    CHECK(collinear(p, q, ProjPoint2<Q>(Q(7), Q(0), Q(3))));
    CHECK(concurrent(join(p, s), join(q, r), join(p, ProjPoint2<Q>(Q(1), Q(1), Q(2)))));

    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
        std::array<ProjPoint2<Q>, 4> pts{p, p, p, p};
        for (auto& x : pts) x = ProjPoint2<Q>(test::rand_rational(rng), test::rand_rational(rng), Q(1));
        try {
            const ProjLine2<Q> a = join(pts[0], pts[1]);
            const ProjLine2<Q> b = join(pts[2], pts[3]);
            const ProjPoint2<Q> x = meet(a, b);
            REQUIRE(incident(x, a));
            REQUIRE(incident(x, b));
        } catch (const DegenerateInput&) {
        }
    }
}

TEST_CASE("cross-ratio of collinear points and of concurrent lines") {
    // Points t on the line y = 2x + 1, parameterized by x.
    const auto on_line = [](long x) { return ProjPoint2<Q>(Q(x), Q(2 * x + 1), Q(1)); };
    CHECK(cross_ratio(on_line(0), on_line(1), on_line(2), on_line(3)) == affine_cross_ratio(Q(0), Q(1), Q(2), Q(3)));
    CHECK_THROWS_AS(cross_ratio(on_line(0), on_line(1), on_line(2), ProjPoint2<Q>(Q(5), Q(5), Q(1))), DegenerateInput);
    // Lines through the origin with slopes m: y = m x, i.e. [m, -1, 0]; the cross-ratio equals that of the slopes.
    const auto slope = [](long m) { return ProjLine2<Q>(Q(m), Q(-1), Q(0)); };
    CHECK(cross_ratio_of_lines(slope(0), slope(1), slope(2), slope(5)) == affine_cross_ratio(Q(0), Q(1), Q(2), Q(5)));
    // The same through a common point on z3 = 0 (parallel lines x = c): aux line must change.
    const auto vertical = [](long c) { return ProjLine2<Q>(Q(1), Q(0), Q(-c)); };
    CHECK(cross_ratio_of_lines(vertical(0), vertical(1), vertical(2), vertical(5)) ==
          affine_cross_ratio(Q(0), Q(1), Q(2), Q(5)));
}

TEST_CASE("projective matrices act on points and lines compatibly") {
    Mat3<Q> m;
    m << Q(1), Q(2), Q(0), Q(0), Q(1), Q(3), Q(1), Q(0), Q(1);
    const ProjMatrix<Q> n(m);
    const ProjPoint2<Q> a(Q(1), Q(2), Q(3)), b(Q(-1), Q(0), Q(2));
    const ProjLine2<Q> l = join(a, b);
    CHECK(incident(n.apply(a), n.apply(l)));
    CHECK(incident(n.apply(b), n.apply(l)));
    CHECK(n.apply(a).same_as(ProjPoint2<Q>(Vec3<Q>(a.coords().transpose() * m))));
    Mat3<Q> sing;
    sing << Q(1), Q(2), Q(3), Q(2), Q(4), Q(6), Q(0), Q(0), Q(1);
    CHECK_THROWS_AS(ProjMatrix<Q>(sing), DegenerateInput);
}

TEST_CASE("floating points compare with a relative tolerance") {
    const ProjPoint2<Real> a(1.0, 2.0, 3.0), b(1e8, 2e8, 3e8 * (1 + 1e-13));
    CHECK(a.same_as(b));
    CHECK_FALSE(a.same_as(ProjPoint2<Real>(1.0, 2.0, 3.001)));
}
