#pragma once

#include <array>
#include <cmath>
#include <ostream>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "pappus/field.hpp"

namespace pappus {

template <class F>
using Vec3 = Eigen::Matrix<F, 3, 1>;

template <class F>
using Mat3 = Eigen::Matrix<F, 3, 3>;

template <FieldScalar F>
double norm(const Vec3<F>& v) {
    double s = 0;
    for (int i = 0; i < 3; ++i) s += magnitude(v[i]) * magnitude(v[i]);
    return std::sqrt(s);
}

template <FieldScalar F>
bool is_null(const Vec3<F>& v) {
    return is_zero(v[0], Tolerance{0.0}) && is_zero(v[1], Tolerance{0.0}) && is_zero(v[2], Tolerance{0.0});
}

template <FieldScalar F>
Vec3<F> cross(const Vec3<F>& a, const Vec3<F>& b) {
    return a.cross(b);
}

template <FieldScalar F>
F det3(const Vec3<F>& a, const Vec3<F>& b, const Vec3<F>& c) {
    return a.dot(b.cross(c));
}

/// Equality up to a nonzero scale, by cross-multiplication (no normalization).
template <FieldScalar F>
bool proportional(const Vec3<F>& a, const Vec3<F>& b, Tolerance tol = {}) {
    const Vec3<F> c = a.cross(b);
    const double scale = norm(a) * norm(b);
    return negligible(c[0], scale, tol) && negligible(c[1], scale, tol) && negligible(c[2], scale, tol);
}

/// Homogeneous triple in P^2 or its dual; Tag keeps points and lines apart.
template <FieldScalar F, class Tag>
class Homogeneous3 {
public:
    explicit Homogeneous3(Vec3<F> coords) : c_(std::move(coords)) {
        if (is_null(c_)) throw DegenerateInput("homogeneous coordinates are all zero");
    }
    Homogeneous3(F a, F b, F c) : Homogeneous3(Vec3<F>(std::move(a), std::move(b), std::move(c))) {}

    const Vec3<F>& coords() const { return c_; }
    const F& operator[](int i) const { return c_[i]; }

    /// Scaled so that the last nonzero coordinate is 1 (exact fields) or the
    /// largest-magnitude coordinate is 1 (floating fields). Display only.
    Homogeneous3 normalized() const {
        int pivot = 2;
        if constexpr (is_exact_v<F>) {
            while (pivot > 0 && is_zero(c_[pivot])) --pivot;
        } else {
            for (int i = 1; i >= 0; --i) {
                if (magnitude(c_[i]) > magnitude(c_[pivot])) pivot = i;
            }
        }
        return Homogeneous3(Vec3<F>(c_ / c_[pivot]));
    }

    bool same_as(const Homogeneous3& other, Tolerance tol = {}) const { return proportional(c_, other.c_, tol); }
    friend bool operator==(const Homogeneous3& a, const Homogeneous3& b) { return a.same_as(b); }

    friend std::ostream& operator<<(std::ostream& os, const Homogeneous3& h) {
        return os << '[' << to_string(h.c_[0]) << ", " << to_string(h.c_[1]) << ", " << to_string(h.c_[2]) << ']';
    }

private:
    Vec3<F> c_;
};

struct PointTag {};
struct LineTag {};

template <FieldScalar F>
using ProjPoint2 = Homogeneous3<F, PointTag>;

template <FieldScalar F>
using ProjLine2 = Homogeneous3<F, LineTag>;

/// Reads a line's coordinates as a point of the dual plane.
template <FieldScalar F>
ProjPoint2<F> as_dual_point(const ProjLine2<F>& l) {
    return ProjPoint2<F>(l.coords());
}

/// Reads a point's coordinates as a line of the dual plane.
template <FieldScalar F>
ProjLine2<F> as_dual_line(const ProjPoint2<F>& p) {
    return ProjLine2<F>(p.coords());
}

/// Point (u : v) of P^1. Affine chart t <-> [t, 1], infinity = [1, 0].
template <FieldScalar F>
class ProjPoint1 {
public:
    ProjPoint1(F u, F v) : u_(std::move(u)), v_(std::move(v)) {
        if (is_zero(u_, Tolerance{0.0}) && is_zero(v_, Tolerance{0.0})) {
            throw DegenerateInput("P^1 point (0 : 0)");
        }
    }
    static ProjPoint1 affine(const F& t) { return ProjPoint1(t, one_like(t)); }
    static ProjPoint1 infinity(const F& like) { return ProjPoint1(one_like(like), zero_like(like)); }

    const F& u() const { return u_; }
    const F& v() const { return v_; }
    bool is_infinity(Tolerance tol = {}) const { return negligible(v_, magnitude(u_), tol); }
    /// u / v; throws PoleError at infinity.
    F affine_value() const {
        if (is_zero(v_, Tolerance{0.0})) throw PoleError("affine value of the point at infinity");
        return u_ / v_;
    }

    bool same_as(const ProjPoint1& o, Tolerance tol = {}) const {
        return negligible(F(u_ * o.v_ - v_ * o.u_), std::hypot(magnitude(u_), magnitude(v_)) *
                                                      std::hypot(magnitude(o.u_), magnitude(o.v_)), tol);
    }
    friend bool operator==(const ProjPoint1& a, const ProjPoint1& b) { return a.same_as(b); }

private:
    F u_;
    F v_;
};

template <FieldScalar F>
F det2(const ProjPoint1<F>& a, const ProjPoint1<F>& b) {
    return a.u() * b.v() - a.v() * b.u();
}

// --- incidence --------------------------------------------------------------

template <FieldScalar F>
bool incident(const ProjPoint2<F>& p, const ProjLine2<F>& l, Tolerance tol = {}) {
    return negligible(F(p.coords().dot(l.coords())), norm(p.coords()) * norm(l.coords()), tol);
}

/// Line through two distinct points (cross product).
template <FieldScalar F>
ProjLine2<F> join(const ProjPoint2<F>& p, const ProjPoint2<F>& q, Tolerance tol = {}) {
    if (p.same_as(q, tol)) throw DegenerateInput("join of coincident points");
    return ProjLine2<F>(cross(p.coords(), q.coords()));
}

/// Intersection of two distinct lines (cross product).
template <FieldScalar F>
ProjPoint2<F> meet(const ProjLine2<F>& l, const ProjLine2<F>& m, Tolerance tol = {}) {
    if (l.same_as(m, tol)) throw DegenerateInput("meet of coincident lines");
    return ProjPoint2<F>(cross(l.coords(), m.coords()));
}

template <FieldScalar F>
bool triple_dependent(const Vec3<F>& a, const Vec3<F>& b, const Vec3<F>& c, Tolerance tol = {}) {
    return negligible(det3(a, b, c), norm(a) * norm(b) * norm(c), tol);
}

template <FieldScalar F>
bool collinear(const ProjPoint2<F>& p, const ProjPoint2<F>& q, const ProjPoint2<F>& r, Tolerance tol = {}) {
    return triple_dependent(p.coords(), q.coords(), r.coords(), tol);
}

template <FieldScalar F>
bool concurrent(const ProjLine2<F>& l, const ProjLine2<F>& m, const ProjLine2<F>& n, Tolerance tol = {}) {
    return triple_dependent(l.coords(), m.coords(), n.coords(), tol);
}

// --- cross-ratio ------------------------------------------------------------

/// <x1,x2,x3,x4> = det(x1,x3) det(x2,x4) / (det(x2,x3) det(x1,x4)).
/// In the affine chart: (x1-x3)(x2-x4) / ((x2-x3)(x1-x4)).
template <FieldScalar F>
F cross_ratio(const ProjPoint1<F>& x1, const ProjPoint1<F>& x2, const ProjPoint1<F>& x3, const ProjPoint1<F>& x4,
              Tolerance tol = {}) {
    const F den = det2(x2, x3) * det2(x1, x4);
    const auto len = [](const ProjPoint1<F>& x) { return std::hypot(magnitude(x.u()), magnitude(x.v())); };
    if (negligible(den, len(x1) * len(x2) * len(x3) * len(x4), tol)) {
        throw DegenerateInput("degenerate cross-ratio quadruple");
    }
    return det2(x1, x3) * det2(x2, x4) / den;
}

namespace detail {

/// Index m of a coordinate with l_m != 0: projecting from e_m onto the other two
/// coordinates is then a projectivity from the line l onto P^1.
template <FieldScalar F>
int chart_index(const Vec3<F>& l) {
    if constexpr (is_exact_v<F>) {
        for (int i = 0; i < 3; ++i) {
            if (!is_zero(l[i])) return i;
        }
        return 0;
    } else {
        int best = 0;
        for (int i = 1; i < 3; ++i) {
            if (magnitude(l[i]) > magnitude(l[best])) best = i;
        }
        return best;
    }
}

template <FieldScalar F>
ProjPoint1<F> project_to_line_chart(const Vec3<F>& p, int dropped) {
    const int k = dropped == 0 ? 1 : 0;
    const int l = dropped == 2 ? 1 : 2;
    return ProjPoint1<F>(p[k], p[l]);
}

/// Line (as coordinates) through the first two non-proportional triples.
template <FieldScalar F>
Vec3<F> carrier(const std::array<const Vec3<F>*, 4>& pts, Tolerance tol) {
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (!proportional(*pts[i], *pts[j], tol)) return cross(*pts[i], *pts[j]);
        }
    }
    throw DegenerateInput("cross-ratio of four coincident points");
}

template <FieldScalar F>
F cross_ratio_collinear(const Vec3<F>& a, const Vec3<F>& b, const Vec3<F>& c, const Vec3<F>& d, Tolerance tol) {
    const Vec3<F> line = carrier<F>({&a, &b, &c, &d}, tol);
    for (const Vec3<F>* v : {&a, &b, &c, &d}) {
        if (!negligible(F(v->dot(line)), norm(*v) * norm(line), tol)) {
            throw DegenerateInput("cross-ratio of non-collinear points");
        }
    }
    const int m = chart_index(line);
    return cross_ratio(project_to_line_chart(a, m), project_to_line_chart(b, m), project_to_line_chart(c, m),
                       project_to_line_chart(d, m), tol);
}

} // namespace detail

/// Cross-ratio of four collinear points of P^2 (via any projection onto P^1).
template <FieldScalar F>
F cross_ratio(const ProjPoint2<F>& a, const ProjPoint2<F>& b, const ProjPoint2<F>& c, const ProjPoint2<F>& d,
              Tolerance tol = {}) {
    return detail::cross_ratio_collinear(a.coords(), b.coords(), c.coords(), d.coords(), tol);
}

/// Cross-ratio of four concurrent lines: each line is cut by a fixed auxiliary
/// line (first of z3=0, z2=0, z1=0 missing the common point) and the four
/// intersection points are compared.
template <FieldScalar F>
F cross_ratio_of_lines(const ProjLine2<F>& l1, const ProjLine2<F>& l2, const ProjLine2<F>& l3,
                       const ProjLine2<F>& l4, Tolerance tol = {}) {
    const Vec3<F> v = detail::carrier<F>({&l1.coords(), &l2.coords(), &l3.coords(), &l4.coords()}, tol);
    for (const auto* l : {&l1, &l2, &l3, &l4}) {
        if (!negligible(F(l->coords().dot(v)), norm(l->coords()) * norm(v), tol)) {
            throw DegenerateInput("cross-ratio of non-concurrent lines");
        }
    }
    const F zero = zero_like(v[0]);
    const F one = one_like(v[0]);
    Vec3<F> aux(zero, zero, zero);
    for (int i = 2; i >= 0; --i) {
        if (!negligible(v[i], norm(v), tol)) {
            aux[i] = one;
            break;
        }
    }
    const auto cut = [&](const ProjLine2<F>& l) { return Vec3<F>(cross(l.coords(), aux)); };
    return detail::cross_ratio_collinear(cut(l1), cut(l2), cut(l3), cut(l4), tol);
}

// --- j-function -------------------------------------------------------------

/// j(r) = 4 (r^2 - r + 1)^3 / (27 r^2 (r - 1)^2), invariant under the six
/// cross-ratio substitutions.
template <FieldScalar F>
F j_invariant(const F& r) {
    const F one = one_like(r);
    if (is_zero(r, Tolerance{0.0}) || is_zero(F(r - one), Tolerance{0.0})) throw PoleError("j(r) has poles at r = 0, 1");
    const F q = r * r - r + one;
    const F rm1 = r - one;
    return F(4) * q * q * q / (F(27) * r * r * rm1 * rm1);
}

/// The six values of the cross-ratio under permutations of the first three
/// points, ordered as e, (12), (13), (23), (123), (132).
template <FieldScalar F>
std::array<F, 6> cross_ratio_orbit(const F& r) {
    const F one = one_like(r);
    if (is_zero(r, Tolerance{0.0}) || is_zero(F(r - one), Tolerance{0.0})) {
        throw PoleError("cross-ratio orbit undefined at r = 0, 1");
    }
    return {r, one / r, r / (r - one), one - r, (r - one) / r, one / (one - r)};
}

// --- projectivities ---------------------------------------------------------

/// Nonsingular 3x3 matrix acting on row vectors: z -> z N.
template <FieldScalar F>
class ProjMatrix {
public:
    explicit ProjMatrix(Mat3<F> m, Tolerance tol = {}) : m_(std::move(m)) {
        double scale = 1;
        for (int j = 0; j < 3; ++j) scale *= norm(Vec3<F>(m_.col(j)));
        if (negligible(F(m_.determinant()), scale, tol)) throw DegenerateInput("singular projective matrix");
    }

    static ProjMatrix identity(const F& like) {
        const F z = zero_like(like);
        const F o = one_like(like);
        Mat3<F> m;
        m << o, z, z, z, o, z, z, z, o;
        return ProjMatrix(m);
    }

    const Mat3<F>& matrix() const { return m_; }

    ProjPoint2<F> apply(const ProjPoint2<F>& p) const { return ProjPoint2<F>(Vec3<F>(m_.transpose() * p.coords())); }

    /// Contragredient action l -> adj(N) l, so incidence is preserved.
    ProjLine2<F> apply(const ProjLine2<F>& l) const { return ProjLine2<F>(Vec3<F>(adjugate() * l.coords())); }

    Mat3<F> adjugate() const {
        const Vec3<F> c0 = m_.col(0), c1 = m_.col(1), c2 = m_.col(2);
        Mat3<F> adj;
        adj.row(0) = cross(c1, c2).transpose();
        adj.row(1) = cross(c2, c0).transpose();
        adj.row(2) = cross(c0, c1).transpose();
        return adj;
    }

private:
    Mat3<F> m_;
};

} // namespace pappus
