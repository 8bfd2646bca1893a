#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pappus/polynomial.hpp"
#include "pappus/projective.hpp"
#include "pappus/ps_map.hpp"

namespace pappus {

/// Conic x^T C x = 0 with C symmetric.
template <FieldScalar F>
class Conic {
public:
    explicit Conic(Mat3<F> c) : c_(std::move(c)) {
        bool all_zero = true;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) all_zero = all_zero && is_zero(c_(i, j), Tolerance{0.0});
        }
        if (all_zero) throw DegenerateConic("the zero quadratic form");
    }

    /// The line pair l m, as the symmetric matrix (l m^T + m l^T) / 2 up to scale.
    static Conic line_pair(const ProjLine2<F>& l, const ProjLine2<F>& m) {
        return Conic(Mat3<F>(l.coords() * m.coords().transpose() + m.coords() * l.coords().transpose()));
    }

    const Mat3<F>& matrix() const { return c_; }
    F form(const Vec3<F>& p) const { return p.dot(c_ * p); }
    F bilinear(const Vec3<F>& p, const Vec3<F>& q) const { return p.dot(c_ * q); }
    bool contains(const ProjPoint2<F>& p, Tolerance tol = {}) const {
        const Vec3<F>& v = p.coords();
        double scale = 0;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) scale = std::max(scale, magnitude(c_(i, j)));
        }
        return negligible(form(v), scale * norm(v) * norm(v), tol);
    }
    bool degenerate(Tolerance tol = {}) const {
        double scale = 1;
        for (int j = 0; j < 3; ++j) scale *= norm(Vec3<F>(c_.col(j)));
        return negligible(F(c_.determinant()), scale, tol);
    }
    /// Tangent line C p at a point p of the conic.
    ProjLine2<F> tangent_at(const ProjPoint2<F>& p) const { return ProjLine2<F>(Vec3<F>(c_ * p.coords())); }

private:
    Mat3<F> c_;
};

/// R1 = [2,1,1] and R2 = [12,16,1] (fixed by the map), R3 = [5,4,1] <-> R4 = [8,16,1].
template <FieldScalar F>
std::array<ProjPoint2<F>, 4> base_points(const F& like = F(1)) {
    const F o = one_like(like);
    const auto pt = [&](long x, long y) { return ProjPoint2<F>(F(x) * o, F(y) * o, o); };
    return {pt(2, 1), pt(12, 16), pt(5, 4), pt(8, 16)};
}

/// <P R1, P R2, P R3, P R4>; at a base point the tangent of the conic replaces the
/// (undefined) joining line.
template <FieldScalar F>
F cross_ratio_at(const Conic<F>& c, const ProjPoint2<F>& p, Tolerance tol = {}) {
    const auto r = base_points(p[0]);
    std::array<std::optional<ProjLine2<F>>, 4> lines;
    for (int i = 0; i < 4; ++i) {
        lines[i] = p.same_as(r[i], tol) ? c.tangent_at(r[i]) : join(p, r[i], tol);
    }
    return cross_ratio_of_lines(*lines[0], *lines[1], *lines[2], *lines[3], tol);
}

/// L_t: t x - y + (1 - 2t) z = 0 for t = (t0 : t1); t = infinity is x - 2z = 0.
template <FieldScalar F>
ProjLine2<F> pencil_line(const ProjPoint1<F>& t) {
    return ProjLine2<F>(t.u(), -t.v(), t.v() - F(2) * t.u());
}

/// The parameter t of the line through R1 and a point q != R1.
template <FieldScalar F>
ProjPoint1<F> pencil_parameter(const ProjPoint2<F>& q, Tolerance tol = {}) {
    const ProjLine2<F> l = join(base_points(q[0])[0], q, tol);
    return ProjPoint1<F>(l[0], -l[1]);
}

/// Pencil of conics through R1..R4 labelled by the cross-ratio q. Members are
/// (b - d q) D1 + ((c + d) q - a - b) D2 with D1 = (R1R2)(R3R4), D2 = (R1R3)(R2R4)
/// and q(lambda) = (a lambda + b) / (c lambda + d) the label of lambda D1 + (1 - lambda) D2.
template <FieldScalar F>
class ConicPencil {
public:
    explicit ConicPencil(const F& like = F(1), Tolerance tol = {}) : tol_(tol) {
        const auto r = base_points(like);
        d1_ = line_pair_matrix(join(r[0], r[1], tol), join(r[2], r[3], tol));
        d2_ = line_pair_matrix(join(r[0], r[2], tol), join(r[1], r[3], tol));
        fit(like);
    }

    /// Coefficients (a, b, c, d) of q(lambda).
    const std::array<F, 4>& mobius() const { return m_; }
    const Mat3<F>& d1() const { return d1_; }
    const Mat3<F>& d2() const { return d2_; }

    /// Pencil label of lambda D1 + (1 - lambda) D2, read off a sample point.
    F label_of(const F& lambda) const {
        const Conic<F> c(Mat3<F>(lambda * d1_ + (one_like(lambda) - lambda) * d2_));
        return cross_ratio_at(c, residual_point(c, sample_direction(lambda)), tol_);
    }

    Mat3<F> matrix_for(const F& q) const {
        const auto& [a, b, c, d] = m_;
        return (b - d * q) * d1_ + ((c + d) * q - a - b) * d2_;
    }

    /// C_q; throws DegenerateConic for the three line-pair members.
    Conic<F> conic_through(const F& q) const {
        Conic<F> c(matrix_for(q));
        if (c.degenerate(tol_)) throw DegenerateConic("q = " + to_string(q) + " labels a line pair of the pencil");
        return c;
    }

    /// Residual intersection of a conic through R1 with the line through R1 in direction dir.
    static ProjPoint2<F> residual_point(const Conic<F>& c, const Vec3<F>& dir) {
        const Vec3<F> r1 = base_points(dir[0])[0].coords();
        const F qd = c.form(dir);
        const F b = c.bilinear(r1, dir);
        const Vec3<F> p = qd * r1 - F(2) * b * dir;
        if (is_null(p)) throw DegenerateConic("the line through R1 lies on the conic");
        return ProjPoint2<F>(p);
    }

    /// P_q(t): second intersection of C_q with L_t; equals R1 when L_t is tangent there.
    ProjPoint2<F> point_on_conic(const F& q, const ProjPoint1<F>& t) const {
        return residual_point(conic_through(q), direction(t));
    }
    ProjPoint2<F> point_on_conic(const F& q, const F& t) const { return point_on_conic(q, ProjPoint1<F>::affine(t)); }

    /// Point at infinity of L_t.
    static Vec3<F> direction(const ProjPoint1<F>& t) { return Vec3<F>(t.v(), t.u(), zero_like(t.u())); }

private:
    static Mat3<F> line_pair_matrix(const ProjLine2<F>& l, const ProjLine2<F>& m) {
        return l.coords() * m.coords().transpose() + m.coords() * l.coords().transpose();
    }

    static Vec3<F> sample_direction(const F& like) {
        const F o = one_like(like);
        return Vec3<F>(F(3) * o, F(7) * o, zero_like(o));
    }

    // Three samples give the Möbius map; the fourth is a consistency check.
    void fit(const F& like) {
        const F o = one_like(like);
        const std::array<F, 4> lambdas{F(2) * o, F(3) * o, F(-1) * o, F(5) * o};
        std::array<F, 4> qs;
        for (int i = 0; i < 4; ++i) qs[i] = label_of(lambdas[i]);
        // Rows (lambda, 1, -q lambda, -q) . (a, b, c, d) = 0; the kernel by signed 3x3 minors.
        Eigen::Matrix<F, 3, 4> rows;
        for (int i = 0; i < 3; ++i) rows.row(i) << lambdas[i], o, -qs[i] * lambdas[i], -qs[i];
        for (int j = 0; j < 4; ++j) {
            Mat3<F> minor;
            int col = 0;
            for (int k = 0; k < 4; ++k) {
                if (k == j) continue;
                minor.col(col++) = rows.col(k);
            }
            m_[j] = (j % 2 == 0 ? o : F(-o)) * F(minor.determinant());
        }
        const auto& [a, b, c, d] = m_;
        const F lhs = (a * lambdas[3] + b);
        const F rhs = qs[3] * (c * lambdas[3] + d);
        if (!approx_equal(lhs, rhs, Tolerance{tol_.rel * 1e3})) {
            throw VerificationFailure("pencil labels are not a Möbius function of the pencil parameter");
        }
    }

    Tolerance tol_;
    Mat3<F> d1_, d2_;
    std::array<F, 4> m_;
};

// --- the maps on the parameter line ----------------------------------------

/// iota(t) = (19t - 23) / (16t - 19) on P^1.
template <FieldScalar F>
ProjPoint1<F> iota(const ProjPoint1<F>& t) {
    return ProjPoint1<F>(F(19) * t.u() - F(23) * t.v(), F(16) * t.u() - F(19) * t.v());
}

/// beta(t) = (44t^2 - 76t + 27) / (56t^2 - 120t + 62) on P^1.
template <FieldScalar F>
ProjPoint1<F> beta(const ProjPoint1<F>& t) {
    const F &u = t.u(), &v = t.v();
    return ProjPoint1<F>(F(44) * u * u - F(76) * u * v + F(27) * v * v,
                         F(56) * u * u - F(120) * u * v + F(62) * v * v);
}

template <FieldScalar F>
F iota(const F& t) {
    return iota(ProjPoint1<F>::affine(t)).affine_value();
}

template <FieldScalar F>
F beta(const F& t) {
    return beta(ProjPoint1<F>::affine(t)).affine_value();
}

/// beta'(t) = -64 (16t^2 - 38t + 23) / (56t^2 - 120t + 62)^2.
template <FieldScalar F>
F beta_derivative(const F& t) {
    const F den = F(56) * t * t - F(120) * t + F(62);
    return F(-64) * (F(16) * t * t - F(38) * t + F(23)) / (den * den);
}

/// Numerator of beta(t) - t, times -1: 56t^3 - 164t^2 + 138t - 27.
inline Poly<Rational> beta_fixed_point_cubic() { return Poly<Rational>{-27, 138, -164, 56}; }

/// Homogeneous tau and pi on points of the plane.
template <FieldScalar F>
ProjPoint2<F> tau_point(const ProjPoint2<F>& p) {
    return ProjPoint2<F>(involution_homogeneous(p.coords()));
}

template <FieldScalar F>
ProjPoint2<F> pi_point(const ProjPoint2<F>& p) {
    const Vec3<F> v = ps_map_homogeneous(p.coords());
    if (is_null(v)) throw UndefinedMap("homogeneous map vanishes at this point");
    return ProjPoint2<F>(v);
}

/// Outcome of checking the two-conics identities at one parameter value.
template <FieldScalar F>
struct TwoConicsSample {
    ProjPoint1<F> t;
    bool tau_identity = false;  ///< tau(P_{2/7}(t)) = P_{2/7}(iota(t))
    bool pi_identity = false;   ///< pi(P_{2/7}(t)) = P_{-1/4}(beta(t))
    bool image_on_conic = false;
    std::optional<F> image_cross_ratio; ///< <QR1,..,QR4> for Q = pi(P_{2/7}(t))
};

template <FieldScalar F>
TwoConicsSample<F> two_conics_sample(const ConicPencil<F>& pencil, const ProjPoint1<F>& t, Tolerance tol = {}) {
    const F o = one_like(t.u());
    const F q_tau = F(2) * o / (F(7) * o);
    const F q_pi = F(-1) * o / (F(4) * o);
    const Conic<F> c_tau = pencil.conic_through(q_tau);
    const Conic<F> c_pi = pencil.conic_through(q_pi);

    TwoConicsSample<F> out{t, false, false, false, std::nullopt};
    const ProjPoint2<F> p = pencil.point_on_conic(q_tau, t);
    out.tau_identity = tau_point(p).same_as(pencil.point_on_conic(q_tau, iota(t)), tol);
    const ProjPoint2<F> q = pi_point(p);
    out.pi_identity = q.same_as(pencil.point_on_conic(q_pi, beta(t)), tol);
    out.image_on_conic = c_pi.contains(q, tol);
    try {
        out.image_cross_ratio = cross_ratio_at(c_pi, q, tol);
    } catch (const Error&) {
    }
    return out;
}

} // namespace pappus
