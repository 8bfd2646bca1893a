#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pappus/field.hpp"
#include "pappus/projective.hpp"

namespace pappus {

/// A point [x, y] of the signature plane k^2.
template <FieldScalar F>
struct SigPoint {
    F x;
    F y;

    bool same_as(const SigPoint& o, Tolerance tol = {}) const {
        return approx_equal(x, o.x, tol) && approx_equal(y, o.y, tol);
    }
    friend bool operator==(const SigPoint& a, const SigPoint& b) { return a.same_as(b); }
    friend std::ostream& operator<<(std::ostream& os, const SigPoint& z) {
        return os << '[' << to_string(z.x) << ", " << to_string(z.y) << ']';
    }
};

template <FieldScalar F>
SigPoint(F, F) -> SigPoint<F>;

/// x = y: the locus where the map is undefined.
template <FieldScalar F>
bool on_diagonal(const SigPoint<F>& z, Tolerance tol = {}) {
    return approx_equal(z.x, z.y, tol);
}

/// [x, y] -> [2y(y - x + 2) / (x - y)^2, y^2 / (x - y)^2]. Throws UndefinedMap on x = y.
template <FieldScalar F>
SigPoint<F> ps_map(const SigPoint<F>& z, Tolerance tol = {}) {
    if (on_diagonal(z, tol)) throw UndefinedMap("Pappus-Steiner map undefined on x = y");
    const F d = z.x - z.y;
    const F d2 = d * d;
    return {F(2) * z.y * (z.y - z.x + F(2)) / d2, z.y * z.y / d2};
}

template <FieldScalar F>
std::optional<SigPoint<F>> try_ps_map(const SigPoint<F>& z, Tolerance tol = {}) {
    if (on_diagonal(z, tol)) return std::nullopt;
    return ps_map(z, tol);
}

/// Harmonic locus H: x = y + 1 (j(r) = 1 or j(s) = 1).
template <FieldScalar F>
bool is_harmonic(const SigPoint<F>& z, Tolerance tol = {}) {
    return approx_equal(z.x, F(z.y + one_like(z.y)), tol);
}

/// Balanced locus B: x^2 = 4y (j(r) = j(s)).
template <FieldScalar F>
bool is_balanced(const SigPoint<F>& z, Tolerance tol = {}) {
    return approx_equal(F(z.x * z.x), F(F(4) * z.y), tol);
}

/// Deck involution of the double cover: [(2y - x)/(y - x + 1), y/(y - x + 1)],
/// and the identity on H.
template <FieldScalar F>
SigPoint<F> involution(const SigPoint<F>& z, Tolerance tol = {}) {
    if (is_harmonic(z, tol)) return z;
    const F den = z.y - z.x + one_like(z.x);
    return {(F(2) * z.y - z.x) / den, z.y / den};
}

/// Preimages of w = [p, q] under the map, each verified by mapping forward.
template <FieldScalar F>
struct PreimageSet {
    std::vector<SigPoint<F>> points;
    bool ramified = false; ///< p^2 = 4q: the single-preimage branch
    std::string note;      ///< why fewer than two preimages were found, if applicable
};

template <FieldScalar F>
PreimageSet<F> preimages(const SigPoint<F>& w, Tolerance tol = {}) {
    PreimageSet<F> out;
    const F& p = w.x;
    const F& q = w.y;
    if (is_zero(q, tol)) {
        out.note = "q = 0: the image of a point with y = 0 would need y = 0, which maps to [0, 0] only";
        if (is_zero(p, tol)) out.note = "w = [0, 0] is the image of the whole line y = 0 (excluded)";
        return out;
    }
    const auto accept = [&](const SigPoint<F>& z) {
        const auto image = try_ps_map(z, tol);
        if (image && image->same_as(w, Tolerance{tol.rel * 1e3})) {
            for (const auto& seen : out.points) {
                if (seen.same_as(z, tol)) return;
            }
            out.points.push_back(z);
        }
    };
    if (approx_equal(F(p * p), F(F(4) * q), tol)) {
        out.ramified = true;
        if (is_zero(p, tol)) {
            out.note = "p = 0 on the ramification locus";
            return out;
        }
        const F t = F(2) * q / p;
        accept({t + one_like(t), t});
        return out;
    }
    const auto root = sqrt_in_field(q);
    if (!root) {
        out.note = "q is not a square in the field";
        return out;
    }
    for (const F& sq : {root->first, root->second}) {
        const F den = p + F(2) * sq;
        if (is_zero(den, tol)) continue;
        const F y = F(4) * q / den;
        const F x = (F(2) * q - p) * y / (F(2) * q) + F(2);
        accept({x, y});
    }
    if (out.points.size() < 2 && out.note.empty()) out.note = "a branch has a vanishing denominator";
    return out;
}

/// alpha(t) = t^2 / (t - 2)^2: the second iterate restricted to H (and to B).
template <FieldScalar F>
F alpha(const F& t) {
    const F d = t - F(2);
    if (is_zero(d, Tolerance{0.0})) throw PoleError("alpha has a pole at t = 2");
    return t * t / (d * d);
}

/// w° = (2 - w) / (1 + w), defined for w outside {-1, 2, 1/2}.
template <FieldScalar F>
F circ(const F& w) {
    const F one = one_like(w);
    if (is_zero(F(w + one), Tolerance{0.0}) || is_zero(F(w - F(2)), Tolerance{0.0}) ||
        is_zero(F(F(2) * w - one), Tolerance{0.0})) {
        throw ArgumentError("circ is only defined for w outside {-1, 2, 1/2}");
    }
    return (F(2) - w) / (one + w);
}

/// Same formula as circ, excluding only the pole w = -1 (circ(2) = 0, circ(1/2) = 1).
template <FieldScalar F>
F circ_relaxed(const F& w) {
    const F one = one_like(w);
    if (is_zero(F(w + one), Tolerance{0.0})) throw PoleError("circ has a pole at w = -1");
    return (F(2) - w) / (one + w);
}

/// (2-r)/(r+1), (r+1)/(2-r), (r+1)/(2r-1), (2r-1)/(r+1), (2r-1)/(r-2), (r-2)/(2r-1).
/// The first entry is circ(r).
template <FieldScalar F>
std::array<F, 6> circ_orbit(const F& r) {
    const F one = one_like(r);
    const F a = F(2) - r;
    const F b = r + one;
    const F c = F(2) * r - one;
    for (const F* v : {&a, &b, &c}) {
        if (is_zero(*v, Tolerance{0.0})) throw ArgumentError("circ_orbit is only defined for r outside {-1, 2, 1/2}");
    }
    return {a / b, b / a, b / c, c / b, -c / a, -a / c};
}

enum class Stratum { W1, W2, W3, interior };

std::string_view stratum_name(Stratum s);

/// W1: x = y.  W2: y = 0 or y = 2x - 4.  W3: 4x^2 - 4xy + y^2 - 8y = 0.
/// "interior" only means none of the first three.
template <FieldScalar F>
Stratum stratum(const SigPoint<F>& z, Tolerance tol = {}) {
    const F& x = z.x;
    const F& y = z.y;
    if (approx_equal(x, y, tol)) return Stratum::W1;
    if (is_zero(y, tol) || approx_equal(y, F(F(2) * x - F(4)), tol)) return Stratum::W2;
    const F w3 = F(4) * x * x - F(4) * x * y + y * y - F(8) * y;
    if (negligible(w3, std::max({1.0, magnitude(x) * magnitude(x), magnitude(y) * magnitude(y)}), tol)) {
        return Stratum::W3;
    }
    return Stratum::interior;
}

/// Forward orbit z, pi(z), ..., stopping early when a step lands on x = y.
template <FieldScalar F>
struct Orbit {
    std::vector<SigPoint<F>> points;   ///< points[0] is the start
    std::optional<std::size_t> undefined_at; ///< index of the first point on W1 that had to be mapped
};

template <FieldScalar F>
Orbit<F> iterate(const SigPoint<F>& start, std::size_t steps, Tolerance tol = {}) {
    Orbit<F> orbit;
    orbit.points.push_back(start);
    for (std::size_t k = 0; k < steps; ++k) {
        const auto next = try_ps_map(orbit.points.back(), tol);
        if (!next) {
            orbit.undefined_at = k;
            break;
        }
        orbit.points.push_back(*next);
    }
    return orbit;
}

// --- homogeneous forms on the plane [x, y, z] --------------------------------

/// [x, y, z] -> [2y(y - x + 2z), y^2, (x - y)^2].
template <FieldScalar F>
Vec3<F> ps_map_homogeneous(const Vec3<F>& p) {
    const F& x = p[0];
    const F& y = p[1];
    const F& z = p[2];
    return Vec3<F>(F(2) * y * (y - x + F(2) * z), y * y, (x - y) * (x - y));
}

/// [x, y, z] -> [2y - x, y, y - x + z].
template <FieldScalar F>
Vec3<F> involution_homogeneous(const Vec3<F>& p) {
    return Vec3<F>(F(2) * p[1] - p[0], p[1], p[1] - p[0] + p[2]);
}

} // namespace pappus
