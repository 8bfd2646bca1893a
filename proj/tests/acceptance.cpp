// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance [--allow-red N[,M...]]
// Exit status is 0 when every failing criterion is in the allowed list.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pappus/census.hpp"
#include "pappus/conic.hpp"
#include "pappus/dynamics.hpp"
#include "pappus/leisenring.hpp"
#include "pappus/pappus.hpp"
#include "pappus/ps_map.hpp"
#include "pappus/verify.hpp"

using namespace pappus;
using Q = Rational;
using Clock = std::chrono::steady_clock;

namespace {

// pinned tolerances and budgets
constexpr double kExactBudgetMs = 1.0;
constexpr double kSignatureBudgetS = 10.0;
constexpr double kCensusBudgetS = 60.0;
constexpr double kRasterBudgetS = 10.0;
constexpr double kBetaLimitTol = 1e-3;
constexpr std::size_t kBetaLimitIterations = 200;
constexpr double kCriticalTol = 1e-10;
constexpr double kReturnConstant = 50.0;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string counts(const VerifyReport& r) {
    std::ostringstream os;
    os << r.target << " " << r.passed << " pass/" << r.skipped << " skip/" << r.failed << " fail";
    if (const auto f = r.first_failure()) os << " [" << f->input << ": " << f->detail << "]";
    return os.str();
}

Outcome fixed_points_and_two_cycle() {
    const auto t0 = Clock::now();
    const bool ok = ps_map(SigPoint<Q>{Q(2), Q(1)}) == SigPoint<Q>{Q(2), Q(1)} &&
                    ps_map(SigPoint<Q>{Q(12), Q(16)}) == SigPoint<Q>{Q(12), Q(16)} &&
                    ps_map(SigPoint<Q>{Q(5), Q(4)}) == SigPoint<Q>{Q(8), Q(16)} &&
                    ps_map(SigPoint<Q>{Q(8), Q(16)}) == SigPoint<Q>{Q(5), Q(4)};
    const double ms = seconds_since(t0) * 1e3;
    return {ok && ms < kExactBudgetMs, fmt("%.3f ms", ms)};
}

Outcome signature_theorem() {
    const auto t0 = Clock::now();
    RationalSampler g(kSeed);
    std::size_t agree = 0, skipped = 0, bad = 0;
    for (int i = 0; i < 200; ++i) {
        const Q r = g.next(), s = g.next();
        try {
            const auto c = standard_config(r, s);
            if (signature(steiner_structure(c)) == ps_map(signature(c))) {
                ++agree;
            } else {
                ++bad;
            }
        } catch (const StructureError&) {
            ++skipped;
        } catch (const SteinerDegenerate&) {
            ++skipped;
        } catch (const UndefinedMap&) {
            ++skipped;
        }
    }
    const double s = seconds_since(t0);
    return {bad == 0 && agree > 0 && s < kSignatureBudgetS,
            std::to_string(agree) + " equal, " + std::to_string(skipped) + " degenerate skipped, " + std::to_string(bad) +
                " unequal, " + fmt("%.2f s", s)};
}

Outcome closed_forms() {
    const VerifyReport st = verify_steiner(VerifyOptions{50, kSeed});
    const VerifyReport le = verify_leisenring(VerifyOptions{50, kSeed});
    return {st.ok() && le.ok(), counts(st) + "; " + counts(le)};
}

Outcome harmonic_separation() {
    RationalSampler g(kSeed + 4);
    std::size_t ok = 0, skipped = 0, bad = 0;
    for (int i = 0; i < 100; ++i) {
        const Q r = g.next(), s = g.next();
        try {
            (void)standard_config(r, s);
            if (rigby_harmonic_cross_ratio(r, s) == Q(-1)) {
                ++ok;
            } else {
                ++bad;
            }
        } catch (const Error&) {
            ++skipped;
        }
    }
    return {bad == 0 && ok > 0, std::to_string(ok) + " exact -1, " + std::to_string(skipped) + " degenerate skipped"};
}

// The congruence predicates, restated here rather than taken from the library.
bool period3_predicate(std::uint64_t p) {
    const auto a = p % 13, b = p % 7;
    return a == 1 || a == 5 || a == 8 || a == 12 || b == 1 || b == 6;
}
bool period4_predicate(std::uint64_t p) {
    const auto a = p % 5, b = p % 17;
    return a == 1 || a == 4 || b == 1 || b == 4 || b == 13 || b == 16;
}

Outcome census_check(int n, const Cycle& explicit_cycle, std::uint64_t explicit_p) {
    const auto t0 = Clock::now();
    const auto rows = census(37, 300, n);
    const double s = seconds_since(t0);
    const auto exempt = default_exempt_primes(n);
    std::size_t checked = 0, disagreements = 0;
    bool explicit_found = false;
    for (const auto& row : rows) {
        if (exempt.count(row.p)) continue;
        ++checked;
        const bool predicate = n == 3 ? period3_predicate(row.p) : period4_predicate(row.p);
        if (row.exists != predicate || row.exists != row.factor_root) ++disagreements;
        if (row.exists && !is_exact_cycle(*row.witness, n)) ++disagreements;
        if (row.p == explicit_p) {
            const auto cycles = find_cycles(explicit_p, n);
            for (const auto& c : cycles) {
                for (const auto& z : c) explicit_found = explicit_found || z == explicit_cycle[0];
            }
        }
    }
    const bool explicit_ok = is_exact_cycle(explicit_cycle, n) && explicit_found;
    return {disagreements == 0 && explicit_ok && s <= kCensusBudgetS,
            std::to_string(checked) + " primes, " + std::to_string(disagreements) + " disagreements, p=" +
                std::to_string(explicit_p) + " cycle " + (explicit_ok ? "ok" : "missing") + ", " + fmt("%.2f s", s)};
}

Outcome period3_census() {
    const PrimeField f(47);
    return census_check(3, {{f(21), f(2)}, {f(39), f(6)}, {f(24), f(28)}}, 47);
}

Outcome period4_census() {
    const PrimeField f(89);
    return census_check(4, {{f(80), f(36)}, {f(8), f(22)}, {f(49), f(17)}, {f(7), f(44)}}, 89);
}

bool is_square(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Outcome discriminants() {
    const mpz_class du = discriminant(period3_u()), dv = discriminant(period3_v());
    bool ok = du == mpz_class(4096) * 169 * 961 && dv == mpz_class(4096) * 49;
    for (const IntPoly& q : period4_quadratics()) {
        const mpz_class d = discriminant(q);
        ok = ok && d % 5 == 0 && is_square(d / 5);
    }
    const bool irreducible = q_irreducibility_check(period3_u()) && q_irreducibility_check(period3_v()) &&
                             q_irreducibility_check(period4_w());
    return {ok && irreducible, "disc(u)=" + du.get_str() + " disc(v)=" + dv.get_str() +
                                   (irreducible ? ", u v w irreducible" : ", reducible factor")};
}

Outcome two_conics() {
    const VerifyReport rep = verify_conics(VerifyOptions{50, kSeed});
    // fixed points of beta: the fixed-point cubic splits as (2t - 3)(28t^2 - 40t + 9)
    const auto [quot, rem] = divmod(beta_fixed_point_cubic(), Poly<Q>{-3, 2});
    const bool factors = rem.is_zero() && quot == Poly<Q>{9, -40, 28};
    const Q disc = quot.coeff(1) * quot.coeff(1) - Q(4) * quot.coeff(2) * quot.coeff(0); // 592 = 16 * 37
    bool roots_ok = disc == Q(592);
    for (double sign : {-1.0, 1.0}) {
        const double t = (10 + sign * std::sqrt(37.0)) / 14;
        roots_ok = roots_ok && std::abs(beta(t) - t) < 1e-12;
    }
    const bool cycle = beta(Q(1)) == Q(5, 2) && beta(Q(5, 2)) == Q(1) && beta(Q(3, 2)) == Q(3, 2);
    return {rep.ok() && factors && roots_ok && cycle,
            counts(rep) + (factors && roots_ok ? ", fixed points exact" : ", fixed points wrong") +
                (cycle ? ", 2-cycle exact" : ", 2-cycle wrong")};
}

Outcome double_cover() {
    const VerifyReport rep = verify_involution(VerifyOptions{500, kSeed});
    return {rep.ok() && rep.passed >= 200, counts(rep)};
}

Outcome alpha_dynamics() {
    const AlphaReport a = alpha_dynamics_checks(10000, kSeed, 1000);
    return {a.passed(), "conjugacy " + std::string(a.conjugacy_identity ? "ok" : "fails") + ", alpha'(1)=" +
                            a.multiplier1.str() + ", alpha'(4)=" + a.multiplier4.str() + ", " +
                            std::to_string(a.convergence_failures) + " non-convergent, " +
                            std::to_string(a.invariance_failures) + " left [1,inf]"};
}

Outcome beta_dynamics() {
    const BetaReport b = beta_dynamics_checks(10000, kSeed, kBetaLimitIterations);
    const bool ok = b.limit_error <= kBetaLimitTol && b.limit_iterations < kBetaLimitIterations && b.mult_a < 1 &&
                    b.mult_b > 1 && b.mult_c > 1 && b.critical_residual <= kCriticalTol;
    return {ok, "limit [" + fmt("%.5f", b.limit_point[0]) + ", " + fmt("%.5f", b.limit_point[1]) + "] error " +
                    fmt("%.1e", b.limit_error) + " after " + std::to_string(b.limit_iterations) + " steps, |b'(a)|=" +
                    fmt("%.5f", b.mult_a) + " |b'(b)|=" + fmt("%.4f", b.mult_b) + " |b'(3/2)|=" + fmt("%.1f", b.mult_c) +
                    ", critical " + fmt("%.1e", b.critical_residual)};
}

Outcome raster_and_return() {
    const Region region{-3, 3, -3, 3};
    const RasterOptions opts{400, 400, 4'000'000, 1};
    const auto t0 = Clock::now();
    const Raster a = raster(region, opts);
    const double s = seconds_since(t0);
    const Raster b = raster(region, opts);
    std::ostringstream pa, pb;
    write_pgm(pa, a);
    write_pgm(pb, b);
    const bool reproducible = pa.str() == pb.str();

    bool bounded = true;
    std::string ratios, corrected;
    for (double d : {1e-2, 1e-3, 1e-4}) {
        const double r = two_step_return_ratio(d);
        bounded = bounded && r <= kReturnConstant;
        ratios += (ratios.empty() ? "" : " ") + fmt("%.2f", r);
        // the exact return point is (1 + e, e) with e = d^2/(2 - d)^2
        const auto [x1, y1] = ps_map_real(1 + d, d);
        const auto [x2, y2] = ps_map_real(x1, y1);
        corrected += (corrected.empty() ? "" : " ") + fmt("%.2e", std::hypot(x2 - 1 - d * d / 4, y2 - d * d / 4) / (d * d));
    }
    return {s <= kRasterBudgetS && reproducible && bounded,
            fmt("raster %.2f s", s) + (reproducible ? ", reproducible" : ", NOT reproducible") +
                "; |pi^2(1+d,d) - (1-d,d^2/4)|/d^2 = " + ratios + " (bound 50); against (1+d^2/4,d^2/4): " + corrected};
}

std::set<int> parse_list(const std::string& s) {
    std::set<int> out;
    std::istringstream in(s);
    for (std::string item; std::getline(in, item, ',');) out.insert(std::stoi(item));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> allowed;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--allow-red" && i + 1 < argc) {
            allowed = parse_list(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: acceptance [--allow-red N[,M...]]\n");
            return 2;
        }
    }

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"fixed points and 2-cycle", fixed_points_and_two_cycle},
        {"signature of the Steiner structure", signature_theorem},
        {"Steiner/Leisenring closed forms, N and T", closed_forms},
        {"harmonic separation", harmonic_separation},
        {"period-3 census", period3_census},
        {"period-4 census", period4_census},
        {"discriminants and irreducibility", discriminants},
        {"two conics", two_conics},
        {"harmonic/balanced exchange and double cover", double_cover},
        {"alpha dynamics", alpha_dynamics},
        {"beta convergence", beta_dynamics},
        {"raster and two-step return", raster_and_return},
    };

    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%-4s %2d  %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) failed.insert(id);
    }
    bool unexpected = false;
    for (int id : failed) unexpected = unexpected || allowed.count(id) == 0;
    std::printf("%zu/%zu passed\n", criteria.size() - failed.size(), criteria.size());
    return unexpected ? 1 : 0;
}
