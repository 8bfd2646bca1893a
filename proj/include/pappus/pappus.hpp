#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "pappus/projective.hpp"
#include "pappus/ps_map.hpp"

namespace pappus {

/// Signature [j(r) + j(s), j(r) j(s)] of a Pappus structure; a point of the
/// plane the Pappus-Steiner map acts on.
template <FieldScalar F>
using Signature = SigPoint<F>;

/// Which plane a configuration lives in. Dual configurations store lines as
/// ProjPoint2 and points as ProjLine2; the tag is informational.
enum class Plane { primal, dual };

/// Permutation of {1,2,3} applied to the bottom row B of the array.
struct Perm {
    std::array<int, 3> image; ///< zero-based: sigma(i + 1) = image[i] + 1
    std::string_view name;
    bool even;
};

/// e, (1 2), (1 3), (2 3), (1 2 3), (1 3 2). (1 3 2) takes 1 to 3, 3 to 2, 2 to 1.
inline constexpr std::array<Perm, 6> kPerms{{
    {{0, 1, 2}, "e", true},
    {{1, 0, 2}, "(1 2)", false},
    {{2, 1, 0}, "(1 3)", false},
    {{0, 2, 1}, "(2 3)", false},
    {{1, 2, 0}, "(1 2 3)", true},
    {{2, 0, 1}, "(1 3 2)", true},
}};

/// Indices into kPerms of the even and odd permutations.
inline constexpr std::array<int, 3> kEvenPerms{0, 4, 5};
inline constexpr std::array<int, 3> kOddPerms{1, 2, 3};

/// Six points on two lines: A1..A3 on L, B1..B3 on M, P = L ∩ M.
template <FieldScalar F>
struct PappusConfig {
    std::array<ProjPoint2<F>, 3> a;
    std::array<ProjPoint2<F>, 3> b;
    ProjLine2<F> l;
    ProjLine2<F> m;
    ProjPoint2<F> p;
    Plane plane = Plane::primal;
};

/// Builds a configuration from two point triples, checking the four axioms:
/// six distinct points, each triple collinear, distinct carrier lines, and
/// their intersection P away from all six points.
template <FieldScalar F>
PappusConfig<F> make_config(const std::array<ProjPoint2<F>, 3>& a, const std::array<ProjPoint2<F>, 3>& b,
                            Plane plane = Plane::primal, Tolerance tol = {}) {
    std::array<const ProjPoint2<F>*, 6> all{&a[0], &a[1], &a[2], &b[0], &b[1], &b[2]};
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (all[i]->same_as(*all[j], tol)) throw StructureError("Pappus structure points are not distinct");
        }
    }
    if (!collinear(a[0], a[1], a[2], tol)) throw StructureError("A1, A2, A3 are not collinear");
    if (!collinear(b[0], b[1], b[2], tol)) throw StructureError("B1, B2, B3 are not collinear");
    const ProjLine2<F> l = join(a[0], a[1], tol);
    const ProjLine2<F> m = join(b[0], b[1], tol);
    if (l.same_as(m, tol)) throw StructureError("the two carrier lines coincide");
    const ProjPoint2<F> p = meet(l, m, tol);
    for (const auto* pt : all) {
        if (pt->same_as(p, tol)) throw StructureError("a point coincides with the intersection P of the lines");
    }
    return PappusConfig<F>{a, b, l, m, p, plane};
}

/// The standard structure C(r, s): L: z1 = 0, M: z2 = 0, P = [0, 0, 1],
/// A = [0,1,r], [0,1,1], [0,1,0] and B = [1,0,s], [1,0,1], [1,0,0].
template <FieldScalar F>
PappusConfig<F> standard_config(const F& r, const F& s, Tolerance tol = {}) {
    const F o = one_like(r);
    const F z = zero_like(r);
    return make_config<F>({ProjPoint2<F>(z, o, r), ProjPoint2<F>(z, o, o), ProjPoint2<F>(z, o, z)},
                          {ProjPoint2<F>(o, z, s), ProjPoint2<F>(o, z, o), ProjPoint2<F>(o, z, z)}, Plane::primal,
                          tol);
}

/// r = <A1, A2, A3, P> and s = <B1, B2, B3, P>.
template <FieldScalar F>
std::pair<F, F> config_cross_ratios(const PappusConfig<F>& c, Tolerance tol = {}) {
    return {cross_ratio(c.a[0], c.a[1], c.a[2], c.p, tol), cross_ratio(c.b[0], c.b[1], c.b[2], c.p, tol)};
}

template <FieldScalar F>
Signature<F> signature_from_cross_ratios(const F& r, const F& s) {
    const F jr = j_invariant(r);
    const F js = j_invariant(s);
    return {jr + js, jr * js};
}

template <FieldScalar F>
Signature<F> signature(const PappusConfig<F>& c, Tolerance tol = {}) {
    const auto [r, s] = config_cross_ratios(c, tol);
    return signature_from_cross_ratios(r, s);
}

namespace detail {

// Line through three points that should be collinear. Throws DegenerateInput
// if all three coincide, VerificationFailure if they are not collinear.
template <FieldScalar F>
ProjLine2<F> line_through_three(const ProjPoint2<F>& x, const ProjPoint2<F>& y, const ProjPoint2<F>& z,
                                Tolerance tol, const char* what) {
    const ProjPoint2<F>* other = !x.same_as(y, tol) ? &y : !x.same_as(z, tol) ? &z : nullptr;
    if (other == nullptr) throw DegenerateInput(std::string(what) + ": the three points coincide");
    const ProjLine2<F> line = join(x, *other, tol);
    if (!incident(y, line, tol) || !incident(z, line, tol)) {
        throw VerificationFailure(std::string(what) + ": points are not collinear");
    }
    return line;
}

template <FieldScalar F>
std::array<ProjPoint2<F>, 3> permuted_bottom_row(const PappusConfig<F>& c, const Perm& sigma) {
    return {c.b[sigma.image[0]], c.b[sigma.image[1]], c.b[sigma.image[2]]};
}

} // namespace detail

/// The three cross-hair points A1B2∩A2B1, A2B3∩A3B2, A1B3∩A3B1 of the array
/// with bottom row B_sigma(1), B_sigma(2), B_sigma(3).
template <FieldScalar F>
std::array<ProjPoint2<F>, 3> cross_hair_points(const PappusConfig<F>& c, const Perm& sigma, Tolerance tol = {}) {
    const auto& a = c.a;
    const auto bs = detail::permuted_bottom_row(c, sigma);
    const auto hair = [&](int i, int j) { return meet(join(a[i], bs[j], tol), join(a[j], bs[i], tol), tol); };
    return {hair(0, 1), hair(1, 2), hair(0, 2)};
}

/// Pappus line of the permuted array. Pappus's theorem is re-checked here:
/// a non-collinear cross-hair triple raises VerificationFailure.
template <FieldScalar F>
ProjLine2<F> pappus_line(const PappusConfig<F>& c, const Perm& sigma, Tolerance tol = {}) {
    const auto h = cross_hair_points(c, sigma, tol);
    return detail::line_through_three(h[0], h[1], h[2], tol, "Pappus line");
}

/// The six Pappus lines in kPerms order.
template <FieldScalar F>
std::array<ProjLine2<F>, 6> pappus_lines(const PappusConfig<F>& c, Tolerance tol = {}) {
    return {pappus_line(c, kPerms[0], tol), pappus_line(c, kPerms[1], tol), pappus_line(c, kPerms[2], tol),
            pappus_line(c, kPerms[3], tol), pappus_line(c, kPerms[4], tol), pappus_line(c, kPerms[5], tol)};
}

/// True when both r^2 - r + 1 and s^2 - s + 1 vanish.
template <FieldScalar F>
bool steiner_degenerate(const F& r, const F& s, Tolerance tol = {}) {
    const F one = one_like(r);
    return is_zero(F(r * r - r + one), tol) && is_zero(F(s * s - s + one), tol);
}

/// Common point of three concurrent lines.
template <FieldScalar F>
ProjPoint2<F> concurrency_point(const ProjLine2<F>& x, const ProjLine2<F>& y, const ProjLine2<F>& z, Tolerance tol,
                                const char* what) {
    const ProjLine2<F> through = detail::line_through_three(as_dual_point(x), as_dual_point(y), as_dual_point(z), tol, what);
    return as_dual_point(through);
}

/// E (even lines) and E' (odd lines).
template <FieldScalar F>
std::pair<ProjPoint2<F>, ProjPoint2<F>> steiner_points(const std::array<ProjLine2<F>, 6>& lines, Tolerance tol = {}) {
    const auto pick = [&](const std::array<int, 3>& idx, const char* what) {
        try {
            return concurrency_point(lines[idx[0]], lines[idx[1]], lines[idx[2]], tol, what);
        } catch (const DegenerateInput&) {
            throw SteinerDegenerate(std::string(what) + " is undefined: its three lines coincide");
        }
    };
    return {pick(kEvenPerms, "E"), pick(kOddPerms, "E'")};
}

template <FieldScalar F>
std::pair<ProjPoint2<F>, ProjPoint2<F>> steiner_points(const PappusConfig<F>& c, Tolerance tol = {}) {
    const auto [r, s] = config_cross_ratios(c, tol);
    if (steiner_degenerate(r, s, tol)) throw SteinerDegenerate("r^2 - r + 1 = 0 and s^2 - s + 1 = 0");
    return steiner_points(pappus_lines(c, tol), tol);
}

/// Closed forms for the standard structure:
/// E  = [r(r-1)(s^2-s+1),  s(s-1)(r^2-r+1), rs(rs-1)],
/// E' = [r(r-1)(s^2-s+1), -s(s-1)(r^2-r+1), rs(r-s)].
template <FieldScalar F>
std::pair<ProjPoint2<F>, ProjPoint2<F>> steiner_points_closed_form(const F& r, const F& s) {
    const F one = one_like(r);
    const F a = r * (r - one) * (s * s - s + one);
    const F b = s * (s - one) * (r * r - r + one);
    return {ProjPoint2<F>(a, b, r * s * (r * s - one)), ProjPoint2<F>(a, -b, r * s * (r - s))};
}

/// Builds the dual-plane structure {{Λe, Λ(123), Λ(132)}, {Λ(12), Λ(13), Λ(23)}}
/// from a configuration and its six lines. The construction needs x != y.
template <FieldScalar F>
PappusConfig<F> dual_structure(const std::array<ProjLine2<F>, 6>& lines, const std::array<int, 3>& first,
                               const std::array<int, 3>& second, Tolerance tol = {}) {
    return make_config<F>({as_dual_point(lines[first[0]]), as_dual_point(lines[first[1]]), as_dual_point(lines[first[2]])},
                          {as_dual_point(lines[second[0]]), as_dual_point(lines[second[1]]),
                           as_dual_point(lines[second[2]])},
                          Plane::dual, tol);
}

template <FieldScalar F>
PappusConfig<F> steiner_structure(const PappusConfig<F>& c, Tolerance tol = {}) {
    const Signature<F> sig = signature(c, tol);
    if (on_diagonal(sig, tol)) throw UndefinedMap("steiner(Π) needs a signature with x != y");
    const auto [r, s] = config_cross_ratios(c, tol);
    if (steiner_degenerate(r, s, tol)) throw SteinerDegenerate("r^2 - r + 1 = 0 and s^2 - s + 1 = 0");
    return dual_structure(pappus_lines(c, tol), kEvenPerms, kOddPerms, tol);
}

} // namespace pappus
