#include "pappus/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "pappus/conic.hpp"
#include "pappus/dynamics.hpp"
#include "pappus/leisenring.hpp"
#include "pappus/pappus.hpp"
#include "pappus/polynomial.hpp"
#include "pappus/ps_map.hpp"

namespace pappus {

using Q = Rational;

std::optional<TrialRecord> VerifyReport::first_failure() const {
    for (const auto& r : records) {
        if (!r.ok && !r.skipped) return r;
    }
    return std::nullopt;
}

void VerifyReport::add(TrialRecord r) {
    r.index = records.size();
    ++trials;
    if (r.skipped) {
        ++skipped;
    } else if (r.ok) {
        ++passed;
    } else {
        ++failed;
    }
    records.push_back(std::move(r));
}

namespace {

std::string pair_str(const Q& a, const Q& b) { return "r=" + a.str() + " s=" + b.str(); }

template <class T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Runs one trial; the body returns "" on success or a failure message.
// Degenerate draws (no structure, Steiner degenerate, x = y) are skipped.
TrialRecord run_trial(std::string input, const std::function<std::string()>& body) {
    TrialRecord rec{0, std::move(input), false, false, {}};
    try {
        rec.detail = body();
        rec.ok = rec.detail.empty();
    } catch (const SteinerDegenerate& e) {
        rec.skipped = true;
        rec.detail = std::string("skipped: ") + e.what();
    } catch (const UndefinedMap& e) {
        rec.skipped = true;
        rec.detail = std::string("skipped: ") + e.what();
    } catch (const StructureError& e) {
        rec.skipped = true;
        rec.detail = std::string("skipped: ") + e.what();
    } catch (const Error& e) {
        rec.detail = std::string("error: ") + e.what();
    }
    return rec;
}

VerifyReport new_report(std::string target, const VerifyOptions& opts) {
    VerifyReport rep;
    rep.target = std::move(target);
    rep.seed = opts.seed;
    return rep;
}

// r, s outside {0, 1}, where C(r, s) is a valid structure.
std::pair<Q, Q> draw_rs(RationalSampler& g) {
    for (;;) {
        Q r = g.next();
        Q s = g.next();
        if (r.is_zero() || s.is_zero() || r == Q(1) || s == Q(1)) continue;
        return {r, s};
    }
}

} // namespace

VerifyReport verify_pappus(const VerifyOptions& opts) {
    VerifyReport rep = new_report("pappus", opts);
    RationalSampler g(opts.seed);
    for (std::size_t i = 0; i < opts.trials; ++i) {
        const auto [r, s] = draw_rs(g);
        rep.add(run_trial(pair_str(r, s), [&]() -> std::string {
            const PappusConfig<Q> cfg = standard_config(r, s);
            const auto [r2, s2] = config_cross_ratios(cfg);
            if (r2 != r || s2 != s) return "cross-ratios of C(r,s) are " + pair_str(r2, s2);
            // Pappus: the cross-hair points of every sigma are collinear (throws otherwise).
            const auto lines = pappus_lines(cfg);
            (void)lines;
            const Signature<Q> sig = signature(cfg);
            for (const Q& a : cross_ratio_orbit(r)) {
                for (const Q& b : cross_ratio_orbit(s)) {
                    if (signature_from_cross_ratios(a, b) != sig || signature_from_cross_ratios(b, a) != sig) {
                        return "signature not invariant at " + pair_str(a, b);
                    }
                }
            }
            if (!steiner_degenerate(r, s)) (void)steiner_points(cfg);
            return {};
        }));
    }
    return rep;
}

VerifyReport verify_steiner(const VerifyOptions& opts) {
    VerifyReport rep = new_report("steiner", opts);
    RationalSampler g(opts.seed);
    for (std::size_t i = 0; i < opts.trials; ++i) {
        const auto [r, s] = draw_rs(g);
        rep.add(run_trial(pair_str(r, s), [&]() -> std::string {
            const PappusConfig<Q> cfg = standard_config(r, s);
            const Signature<Q> sig = signature(cfg);
            const Signature<Q> geometric = signature(steiner_structure(cfg));
            const Signature<Q> formula = ps_map(sig);
            if (geometric != formula) return "sig(steiner) = " + str(geometric) + " but pi(sig) = " + str(formula);
            const auto [e, e_prime] = steiner_points(cfg);
            const auto [ce, ce_prime] = steiner_points_closed_form(r, s);
            if (!e.same_as(ce) || !e_prime.same_as(ce_prime)) return "E, E' differ from the closed forms";
            return {};
        }));
    }
    return rep;
}

VerifyReport verify_leisenring(const VerifyOptions& opts) {
    VerifyReport rep = new_report("leisenring", opts);
    RationalSampler g(opts.seed);
    const std::set<Q> t_excluded{Q(0), Q(1), Q(-1), Q(2), Q(1, 2)};
    for (std::size_t i = 0; i < opts.trials; ++i) {
        const auto [r, s] = draw_rs(g);
        rep.add(run_trial(pair_str(r, s), [&]() -> std::string {
            const PappusConfig<Q> cfg = standard_config(r, s);
            const auto [f, f_prime] = rigby_points(cfg);
            const auto [cf, cf_prime] = rigby_points_closed_form(r, s);
            if (!f.same_as(cf) || !f_prime.same_as(cf_prime)) return "F, F' differ from the closed forms";
            if (rigby_harmonic_cross_ratio(r, s) != Q(-1)) {
                return "<L, M, PE', PE> = " + rigby_harmonic_cross_ratio(r, s).str();
            }
            const auto eq = leisenring_equivalence_check(r, s);
            if (!eq.passed) return "N: " + eq.failure;
            if (t_excluded.count(r) == 0 && t_excluded.count(s) == 0) {
                const auto cc = circ_conjugation_check(r, s);
                if (!cc.passed) return "T: " + cc.failure;
            }
            return {};
        }));
    }
    return rep;
}

std::vector<Rational> tau_invariant_labels(const std::vector<Rational>& ts) {
    const ConicPencil<Q> pencil(Q(1));
    // q -> C_q(tau(P_q(t))) has degree <= 3 in q; five samples, the fifth as a check.
    const std::vector<Q> qs{Q(-3), Q(-2), Q(3), Q(5), Q(7)};
    Poly<Q> common;
    for (const Q& t : ts) {
        std::vector<Q> vals;
        for (const Q& q : qs) {
            const Conic<Q> c(pencil.matrix_for(q));
            const Vec3<Q> p = ConicPencil<Q>::residual_point(c, ConicPencil<Q>::direction(ProjPoint1<Q>::affine(t))).coords();
            vals.push_back(c.form(involution_homogeneous(p)));
        }
        const Poly<Q> g = interpolate(std::vector<Q>(qs.begin(), qs.begin() + 4), std::vector<Q>(vals.begin(), vals.begin() + 4));
        if (g(qs[4]) != vals[4]) throw VerificationFailure("tau condition is not cubic in q");
        common = gcd(common, g);
    }
    std::vector<Q> out;
    for (const Q& q : rational_roots(common)) {
        if (!Conic<Q>(pencil.matrix_for(q)).degenerate()) out.push_back(q);
    }
    return out;
}

VerifyReport verify_conics(const VerifyOptions& opts) {
    VerifyReport rep = new_report("conics", opts);
    RationalSampler g(opts.seed);
    const ConicPencil<Q> pencil(Q(1));
    const Q q_tau(2, 7);
    const Q q_pi(-1, 4);

    // iota's matrix squares to -7 I.
    {
        Eigen::Matrix<Q, 2, 2> m;
        m << Q(19), Q(-23), Q(16), Q(-19);
        const Eigen::Matrix<Q, 2, 2> sq = m * m;
        const bool ok = sq(0, 0) == Q(-7) && sq(1, 1) == Q(-7) && sq(0, 1).is_zero() && sq(1, 0).is_zero();
        rep.add({0, "iota matrix", ok, false, ok ? "" : "iota^2 != -7 I"});
    }
    // tau-invariant labels: expected to be exactly 2/7.
    {
        std::vector<Q> ts;
        for (int k = 0; k < 6; ++k) ts.push_back(g.next());
        const auto labels = tau_invariant_labels(ts);
        std::string found;
        for (const Q& q : labels) found += (found.empty() ? "" : ",") + q.str();
        rep.fact("tau_invariant_labels", found);
        const bool ok = labels.size() == 1 && labels[0] == q_tau;
        rep.add({0, "uniqueness of q", ok, false, ok ? "" : "tau-invariant labels: {" + found + "}"});
    }
    // Other labels are not tau-invariant: some sample leaves the conic.
    for (const Q& q : {Q(1, 3), Q(1, 2), Q(3)}) {
        const Conic<Q> c = pencil.conic_through(q);
        bool moved = false;
        for (int k = 1; k <= 5 && !moved; ++k) {
            const ProjPoint2<Q> p = pencil.point_on_conic(q, Q(k, 3));
            moved = !c.contains(tau_point(p));
        }
        rep.add({0, "non-invariance q=" + q.str(), moved, false, moved ? "" : "tau kept C_q in the samples"});
    }
    for (std::size_t i = 0; i < opts.trials; ++i) {
        const Q t = g.next();
        rep.add(run_trial("t=" + t.str(), [&]() -> std::string {
            const auto s = two_conics_sample(pencil, ProjPoint1<Q>::affine(t));
            if (!s.tau_identity) return "tau(P_{2/7}(t)) != P_{2/7}(iota(t))";
            if (!s.pi_identity) return "pi(P_{2/7}(t)) != P_{-1/4}(beta(t))";
            if (!s.image_on_conic) return "pi(P_{2/7}(t)) is off C_{-1/4}";
            if (s.image_cross_ratio && *s.image_cross_ratio != q_pi) return "image cross-ratio " + s.image_cross_ratio->str();
            if (!iota(iota(ProjPoint1<Q>::affine(t))).same_as(ProjPoint1<Q>::affine(t))) return "iota(iota(t)) != t";
            // The label is constant along several members.
            for (const Q& q : {q_tau, q_pi, Q(3), Q(-2), Q(5, 3)}) {
                const Conic<Q> c = pencil.conic_through(q);
                for (const auto& r : base_points(Q(1))) {
                    if (!c.contains(r)) return "C_" + q.str() + " misses a base point";
                }
                const ProjPoint2<Q> p = pencil.point_on_conic(q, t);
                if (cross_ratio_at(c, p) != q) return "cross-ratio on C_" + q.str() + " is " + cross_ratio_at(c, p).str();
            }
            return {};
        }));
    }
    return rep;
}

VerifyReport verify_involution(const VerifyOptions& opts) {
    VerifyReport rep = new_report("involution", opts);
    RationalSampler g(opts.seed);
    for (std::size_t i = 0; i < opts.trials; ++i) {
        const SigPoint<Q> z{g.next(), g.next()};
        const Q y = g.next();
        const SigPoint<Q> h{y + Q(1), y};           // on H
        const Q m = g.nonzero();
        const SigPoint<Q> b{m, m * m / Q(4)};       // on B
        const SigPoint<Q> w2{m, Q(2) * m - Q(4)};   // on W2
        const SigPoint<Q> w3{m * m + Q(2) * m, Q(2) * m * m}; // on W3: (2x - y)^2 = 8y
        rep.add(run_trial(str(z), [&]() -> std::string {
            if (involution(involution(z)) != z) return "tau^2 != id";
            if (!on_diagonal(z) && !is_harmonic(z)) {
                const SigPoint<Q> tz = involution(z);
                if (on_diagonal(tz)) return "tau moved z onto x = y";
                if (ps_map(tz) != ps_map(z)) return "pi(tau(z)) != pi(z)";
            }
            if (!on_diagonal(h) && !is_balanced(ps_map(h))) return "pi(" + str(h) + ") is off B";
            if (!on_diagonal(b) && !is_harmonic(ps_map(b))) return "pi(" + str(b) + ") is off H";
            if (!on_diagonal(w2) && stratum(ps_map(w2)) != Stratum::W1) return "pi(" + str(w2) + ") is off W1";
            if (!on_diagonal(w3) && stratum(w3) == Stratum::W3 && !on_diagonal(ps_map(w3)) &&
                stratum(ps_map(w3)) != Stratum::W2) {
                return "pi(" + str(w3) + ") is off W2";
            }
            if (!on_diagonal(z)) {
                const SigPoint<Q> w = ps_map(z);
                const auto pre = preimages(w);
                const bool ramified = w.x * w.x == Q(4) * w.y;
                if (!w.y.is_zero()) {
                    if (pre.ramified != ramified) return "ramification flag wrong at " + str(w);
                    if (ramified && pre.points.size() != 1) return "expected one preimage of " + str(w);
                    if (!ramified && pre.points.size() > 2) return "more than two preimages of " + str(w);
                    if (std::none_of(pre.points.begin(), pre.points.end(), [&](const auto& p) { return p == z; })) {
                        return str(z) + " missing from the preimages of " + str(w);
                    }
                }
                for (const auto& p : pre.points) {
                    if (ps_map(p) != w) return "preimage " + str(p) + " does not map to " + str(w);
                }
            }
            return {};
        }));
    }
    return rep;
}

VerifyReport verify_alpha(const VerifyOptions& opts) {
    VerifyReport rep = new_report("alpha", opts);
    const AlphaReport a = alpha_dynamics_checks(opts.trials, opts.seed);
    rep.add({0, "conjugacy identity", a.conjugacy_identity, false, ""});
    rep.add({0, "fixed points 0, 1, 4", a.fixed_points, false, ""});
    rep.add({0, "multipliers", a.multiplier0.is_zero() && a.multiplier1.abs() > Q(1) && a.multiplier4.abs() > Q(1), false,
             "alpha'(0)=" + a.multiplier0.str() + " alpha'(1)=" + a.multiplier1.str() + " alpha'(4)=" + a.multiplier4.str()});
    rep.add({0, "[1,inf] invariant", a.invariance_failures == 0, false,
             std::to_string(a.invariance_failures) + "/" + std::to_string(a.invariance_samples) + " left"});
    rep.add({0, "convergence to 0", a.convergence_failures == 0, false,
             std::to_string(a.convergence_failures) + "/" + std::to_string(a.convergence_samples) + " did not converge"});
    rep.fact("max_steps_to_converge", std::to_string(a.max_steps_to_converge));
    return rep;
}

VerifyReport verify_beta(const VerifyOptions& opts) {
    VerifyReport rep = new_report("beta", opts);
    const BetaReport b = beta_dynamics_checks(opts.trials, opts.seed);
    const auto d = [](double v) { return str(v); };
    rep.add({0, "multipliers", b.mult_a < 1 && b.mult_b > 1 && b.mult_c > 1, false,
             "|b'(a)|=" + d(b.mult_a) + " |b'(b)|=" + d(b.mult_b) + " |b'(3/2)|=" + d(b.mult_c)});
    rep.add({0, "critical points", b.critical_residual <= 1e-10, false, "residual " + d(b.critical_residual)});
    rep.add({0, "fixed-point cubic", b.fixed_cubic_factors && b.quadratic_discriminant == Q(592), false,
             "cofactor discriminant " + b.quadratic_discriminant.str()});
    rep.add({0, "2-cycle", b.two_cycle_exact && b.two_cycle_multiplier > 1, false,
             "multiplier " + d(b.two_cycle_multiplier)});
    rep.add({0, "random starts", b.converged_to_a * 100 >= b.random_starts * 99, false,
             std::to_string(b.converged_to_a) + "/" + std::to_string(b.random_starts) + " reached a"});
    rep.add({0, "conic process limit", b.limit_error <= 1e-3, false,
             "[" + d(b.limit_point[0]) + ", " + d(b.limit_point[1]) + ", 1] after " + std::to_string(b.limit_iterations)});
    return rep;
}

const std::vector<std::string>& verify_targets() {
    static const std::vector<std::string> names{"pappus", "steiner", "leisenring", "conics", "involution", "alpha", "beta"};
    return names;
}

VerifyReport verify(std::string_view target, const VerifyOptions& opts) {
    static const std::map<std::string, VerifyReport (*)(const VerifyOptions&), std::less<>> table{
        {"pappus", verify_pappus},         {"steiner", verify_steiner}, {"leisenring", verify_leisenring},
        {"conics", verify_conics},         {"involution", verify_involution},
        {"alpha", verify_alpha},           {"beta", verify_beta},
    };
    const auto it = table.find(target);
    if (it == table.end()) throw ArgumentError("unknown verify target '" + std::string(target) + "'");
    return it->second(opts);
}

} // namespace pappus
