#pragma once

#include <array>
#include <string>
#include <utility>

#include "pappus/pappus.hpp"

namespace pappus {

/// R1, R2, R3 of the array with bottom row B_sigma: Qi is the cross-hair point
/// opposite column i and Ri = P Qi ∩ Ai B_sigma(i).
template <FieldScalar F>
std::array<ProjPoint2<F>, 3> leisenring_points(const PappusConfig<F>& c, const Perm& sigma, Tolerance tol = {}) {
    const auto& a = c.a;
    const auto bs = detail::permuted_bottom_row(c, sigma);
    std::array<ProjPoint2<F>, 3> out{c.p, c.p, c.p};
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        const ProjPoint2<F> q = meet(join(a[j], bs[k], tol), join(a[k], bs[j], tol), tol);
        out[i] = meet(join(c.p, q, tol), join(a[i], bs[i], tol), tol);
    }
    return out;
}

/// Leisenring line Ψ_sigma; collinearity of R1, R2, R3 is re-checked.
template <FieldScalar F>
ProjLine2<F> leisenring_line(const PappusConfig<F>& c, const Perm& sigma, Tolerance tol = {}) {
    const auto r = leisenring_points(c, sigma, tol);
    return detail::line_through_three(r[0], r[1], r[2], tol, "Leisenring line");
}

template <FieldScalar F>
std::array<ProjLine2<F>, 6> leisenring_lines(const PappusConfig<F>& c, Tolerance tol = {}) {
    return {leisenring_line(c, kPerms[0], tol), leisenring_line(c, kPerms[1], tol), leisenring_line(c, kPerms[2], tol),
            leisenring_line(c, kPerms[3], tol), leisenring_line(c, kPerms[4], tol), leisenring_line(c, kPerms[5], tol)};
}

/// F (even Ψ's) and F' (odd Ψ's), found as concurrency points.
template <FieldScalar F>
std::pair<ProjPoint2<F>, ProjPoint2<F>> rigby_points(const PappusConfig<F>& c, Tolerance tol = {}) {
    const auto [r, s] = config_cross_ratios(c, tol);
    if (steiner_degenerate(r, s, tol)) throw SteinerDegenerate("r^2 - r + 1 = 0 and s^2 - s + 1 = 0");
    return steiner_points(leisenring_lines(c, tol), tol);
}

/// F  = [r(r-1)(s^2-s+1),  s(s-1)(r^2-r+1),  (r-1)(s-1)(r+s)(rs-1)],
/// F' = [r(r-1)(s^2-s+1), -s(s-1)(r^2-r+1), -(r-1)(s-1)(rs+1)(r-s)].
template <FieldScalar F>
std::pair<ProjPoint2<F>, ProjPoint2<F>> rigby_points_closed_form(const F& r, const F& s) {
    const F one = one_like(r);
    const F a = r * (r - one) * (s * s - s + one);
    const F b = s * (s - one) * (r * r - r + one);
    const F k = (r - one) * (s - one);
    return {ProjPoint2<F>(a, b, k * (r + s) * (r * s - one)), ProjPoint2<F>(a, -b, -k * (r * s + one) * (r - s))};
}

template <FieldScalar F>
PappusConfig<F> leisenring_structure(const PappusConfig<F>& c, Tolerance tol = {}) {
    const Signature<F> sig = signature(c, tol);
    if (on_diagonal(sig, tol)) throw UndefinedMap("leisen(Π) needs a signature with x != y");
    const auto [r, s] = config_cross_ratios(c, tol);
    if (steiner_degenerate(r, s, tol)) throw SteinerDegenerate("r^2 - r + 1 = 0 and s^2 - s + 1 = 0");
    return dual_structure(leisenring_lines(c, tol), kEvenPerms, kOddPerms, tol);
}

/// The two cross-ratios <X_e, X_(123), X_(132), X_*> and <X_(12), X_(13), X_(23), X_*>
/// of a line sextuple, where X_* joins the two concurrency points.
template <FieldScalar F>
std::pair<F, F> sextuple_cross_ratios(const std::array<ProjLine2<F>, 6>& x, const ProjLine2<F>& star,
                                      Tolerance tol = {}) {
    return {cross_ratio_of_lines(x[0], x[4], x[5], star, tol), cross_ratio_of_lines(x[1], x[2], x[3], star, tol)};
}

/// N = [[2, 0, s+1], [0, 2, r+1], [0, 0, -1]].
template <FieldScalar F>
ProjMatrix<F> leisenring_matrix(const F& r, const F& s) {
    const F o = one_like(r);
    const F z = zero_like(r);
    Mat3<F> m;
    m << F(2) * o, z, s + o, z, F(2) * o, r + o, z, z, -o;
    return ProjMatrix<F>(m);
}

template <FieldScalar F>
struct LeisenringEquivalence {
    bool passed = false;
    F c, c_prime, d, d_prime;
    bool n_maps_lines = false; ///< φ_N(Ψ_σ) = Λ_σ for σ in S3 and *
    bool n_preserves_axes = false;
    ProjMatrix<F> n;
    std::string failure;
};

/// Checks c = d, c' = d' and that N relates Λ_σ and Ψ_σ for the six σ and for *.
/// With points acting as z -> z N, it is φ_N that sends Ψ_σ to Λ_σ; read on line
/// coordinates, l -> N l sends Λ_σ to Ψ_σ.
template <FieldScalar F>
LeisenringEquivalence<F> leisenring_equivalence_check(const F& r, const F& s, Tolerance tol = {}) {
    const PappusConfig<F> cfg = standard_config(r, s, tol);
    if (on_diagonal(signature(cfg, tol), tol)) throw UndefinedMap("equivalence check needs x != y");

    const auto lambda = pappus_lines(cfg, tol);
    const auto [e, e_prime] = steiner_points(lambda, tol);
    const ProjLine2<F> lambda_star = join(e, e_prime, tol);
    const auto psi = leisenring_lines(cfg, tol);
    const auto [f, f_prime] = steiner_points(psi, tol);
    const ProjLine2<F> psi_star = join(f, f_prime, tol);

    const auto [c, c_prime] = sextuple_cross_ratios(lambda, lambda_star, tol);
    const auto [d, d_prime] = sextuple_cross_ratios(psi, psi_star, tol);
    LeisenringEquivalence<F> out{false, c, c_prime, d, d_prime, false, false, leisenring_matrix(r, s), {}};

    out.n_maps_lines = out.n.apply(psi_star).same_as(lambda_star, tol);
    for (int i = 0; i < 6; ++i) out.n_maps_lines = out.n_maps_lines && out.n.apply(psi[i]).same_as(lambda[i], tol);

    const F o = one_like(r);
    const F z = zero_like(r);
    const ProjLine2<F> l1(o, z, z), l2(z, o, z);
    out.n_preserves_axes = out.n.apply(l1).same_as(l1, tol) && out.n.apply(l2).same_as(l2, tol);

    if (!approx_equal(c, d, tol) || !approx_equal(c_prime, d_prime, tol)) {
        out.failure = "cross-ratios differ: c=" + to_string(c) + " d=" + to_string(d) + " c'=" + to_string(c_prime) +
                      " d'=" + to_string(d_prime);
    } else if (!out.n_maps_lines) {
        out.failure = "N does not relate the Pappus lines and the Leisenring lines";
    } else if (!out.n_preserves_axes) {
        out.failure = "N moves z1 = 0 or z2 = 0";
    }
    out.passed = out.failure.empty();
    return out;
}

/// T with diagonal (2s-1)(s-2)/(s(s-1)), (2r-1)(r-2)/(r(r-1)), -3 and last
/// column (s-2)/(s-1), (r-2)/(r-1).
template <FieldScalar F>
ProjMatrix<F> circ_conjugation_matrix(const F& r, const F& s) {
    const F o = one_like(r);
    const F z = zero_like(r);
    const auto bad = [&](const F& w) {
        return is_zero(w, Tolerance{0.0}) || is_zero(F(w - o), Tolerance{0.0}) || is_zero(F(w + o), Tolerance{0.0}) ||
               is_zero(F(w - F(2)), Tolerance{0.0}) || is_zero(F(F(2) * w - o), Tolerance{0.0});
    };
    if (bad(r) || bad(s)) throw ArgumentError("T needs r, s outside {0, 1, -1, 2, 1/2}");
    Mat3<F> m;
    m << (F(2) * s - o) * (s - F(2)) / (s * (s - o)), z, (s - F(2)) / (s - o),
         z, (F(2) * r - o) * (r - F(2)) / (r * (r - o)), (r - F(2)) / (r - o),
         z, z, F(-3) * o;
    return ProjMatrix<F>(m);
}

template <FieldScalar F>
struct CircConjugation {
    bool passed = false;
    bool lines_match_in_order = false; ///< φ_T(Λ°_σ) = Λ_σ for every σ
    bool lines_match_as_set = false;
    bool preserves_axes = false;
    bool signatures_agree = false; ///< sig(steiner(Π(r,s))) = sig(steiner(Π(r°,s°)))
    std::array<int, 6> matching{-1, -1, -1, -1, -1, -1}; ///< φ_T(Λ°_σ) = Λ_matching[σ]
    std::string failure;
};

/// As with N, φ_T under z -> z T carries the C(r°,s°) sextuple to the C(r,s) one.
template <FieldScalar F>
CircConjugation<F> circ_conjugation_check(const F& r, const F& s, Tolerance tol = {}) {
    const ProjMatrix<F> t = circ_conjugation_matrix(r, s);
    const PappusConfig<F> c1 = standard_config(r, s, tol);
    const PappusConfig<F> c2 = standard_config(circ(r), circ(s), tol);
    const auto lines1 = pappus_lines(c1, tol);
    const auto lines2 = pappus_lines(c2, tol);

    CircConjugation<F> out;
    out.lines_match_in_order = true;
    out.lines_match_as_set = true;
    for (int i = 0; i < 6; ++i) {
        const ProjLine2<F> image = t.apply(lines2[i]);
        for (int j = 0; j < 6; ++j) {
            if (image.same_as(lines1[j], tol)) out.matching[i] = j;
        }
        out.lines_match_as_set = out.lines_match_as_set && out.matching[i] >= 0;
        out.lines_match_in_order = out.lines_match_in_order && out.matching[i] == i;
    }
    const F o = one_like(r);
    const F z = zero_like(r);
    const ProjLine2<F> l1(o, z, z), l2(z, o, z);
    out.preserves_axes = t.apply(l1).same_as(l1, tol) && t.apply(l2).same_as(l2, tol);
    const Signature<F> s1 = signature(c1, tol);
    const Signature<F> s2 = signature(c2, tol);
    if (!on_diagonal(s1, tol) && !on_diagonal(s2, tol)) {
        out.signatures_agree = signature(steiner_structure(c1, tol), tol).same_as(signature(steiner_structure(c2, tol), tol), tol);
    }

    if (!out.lines_match_as_set) out.failure = "T does not carry the Pappus sextuple of C(r,s) onto that of C(r°,s°)";
    else if (!out.preserves_axes) out.failure = "T moves z1 = 0 or z2 = 0";
    else if (!out.signatures_agree) out.failure = "steiner signatures of C(r,s) and C(r°,s°) differ";
    out.passed = out.failure.empty();
    return out;
}

/// <L, M, PE', PE> in the pencil t -> z1 + t z2 = 0 through P.
template <FieldScalar F>
F rigby_harmonic_cross_ratio(const F& r, const F& s, Tolerance tol = {}) {
    const PappusConfig<F> cfg = standard_config(r, s, tol);
    const auto [e, e_prime] = steiner_points(cfg, tol);
    const ProjLine2<F> pe = join(cfg.p, e, tol);
    const ProjLine2<F> pe_prime = join(cfg.p, e_prime, tol);
    // Line [1, t, 0] has pencil coordinate (t : 1); [0, 1, 0] is t = infinity.
    const auto pencil_coord = [](const ProjLine2<F>& l) { return ProjPoint1<F>(l[1], l[0]); };
    return cross_ratio(pencil_coord(cfg.l), pencil_coord(cfg.m), pencil_coord(pe_prime), pencil_coord(pe), tol);
}

template <FieldScalar F>
bool rigby_harmonic_check(const F& r, const F& s, Tolerance tol = {}) {
    return approx_equal(rigby_harmonic_cross_ratio(r, s, tol), F(-one_like(r)), tol);
}

} // namespace pappus
