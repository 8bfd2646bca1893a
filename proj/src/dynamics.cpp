#include "pappus/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <random>
#include <thread>

#include "pappus/conic.hpp"
#include "pappus/polynomial.hpp"
#include "pappus/ps_map.hpp"

namespace pappus {

void OrbitParams::validate() const {
    if (max_iter == 0 || !(escape_radius > 0) || !(attractor_tol > 0) || !(undefined_tol > 0) || window == 0) {
        throw ArgumentError("orbit parameters must all be positive");
    }
}

const char* label_name(OrbitLabel l) {
    switch (l) {
    case OrbitLabel::diverged: return "diverged";
    case OrbitLabel::origin_attractor: return "origin_attractor";
    case OrbitLabel::two_point_attractor: return "two_point_attractor";
    case OrbitLabel::other_periodic: return "other_periodic";
    case OrbitLabel::undefined_hit: return "undefined_hit";
    case OrbitLabel::unresolved: return "unresolved";
    }
    return "?";
}

std::uint8_t label_gray(OrbitLabel l) {
    switch (l) {
    case OrbitLabel::undefined_hit: return 0;
    case OrbitLabel::origin_attractor: return 64;
    case OrbitLabel::two_point_attractor: return 128;
    case OrbitLabel::other_periodic: return 192;
    case OrbitLabel::unresolved: return 224;
    case OrbitLabel::diverged: return 255;
    }
    return 0;
}

std::pair<double, double> ps_map_real(double x, double y) {
    const double d = x - y;
    const double d2 = d * d;
    return {2 * y * (y - x + 2) / d2, y * y / d2};
}

Classification classify_orbit(double x, double y, const OrbitParams& prm) {
    prm.validate();
    constexpr int kMaxPeriod = 8;
    enum class Near { none, origin, second };

    std::array<std::pair<double, double>, kMaxPeriod + 1> history{};
    std::array<std::size_t, kMaxPeriod + 1> periodic_run{};
    std::size_t origin_run = 0;
    std::size_t alt_run = 0;
    Near prev = Near::none;

    for (std::size_t k = 0; k < prm.max_iter; ++k) {
        if (!std::isfinite(x) || !std::isfinite(y)) return {OrbitLabel::undefined_hit, k, "non-finite iterate"};

        const bool near_o = std::hypot(x, y) <= prm.attractor_tol;
        const bool near_s = std::hypot(x - prm.second_x, y - prm.second_y) <= prm.attractor_tol;
        const Near now = near_o ? Near::origin : near_s ? Near::second : Near::none;
        origin_run = near_o ? origin_run + 1 : 0;
        if ((now == Near::origin && prev == Near::second) || (now == Near::second && prev == Near::origin)) {
            ++alt_run;
        } else {
            alt_run = now == Near::none ? 0 : 1;
        }
        if (origin_run >= prm.window) return {OrbitLabel::origin_attractor, k, {}};
        if (alt_run >= prm.window) return {OrbitLabel::two_point_attractor, k, {}};

        if (std::abs(x - y) <= prm.undefined_tol * std::max(std::abs(x), std::abs(y))) {
            if (near_o && prev == Near::second) {
                return {OrbitLabel::two_point_attractor, k, "collapsed onto the origin while alternating"};
            }
            if (near_o && origin_run >= 2) return {OrbitLabel::origin_attractor, k, "collapsed onto the origin"};
            return {OrbitLabel::undefined_hit, k, near_o ? "underflowed onto the origin" : "reached the diagonal"};
        }
        if (std::hypot(x, y) > prm.escape_radius) return {OrbitLabel::diverged, k, {}};

        const std::size_t slot = k % history.size();
        for (int p = 1; p <= kMaxPeriod; ++p) {
            if (k < static_cast<std::size_t>(p)) continue;
            const auto& old = history[(k - static_cast<std::size_t>(p)) % history.size()];
            const bool close = std::hypot(x - old.first, y - old.second) <= prm.attractor_tol;
            periodic_run[p] = close ? periodic_run[p] + 1 : 0;
            if (periodic_run[p] >= prm.window && now == Near::none) return {OrbitLabel::other_periodic, k, {}};
        }
        history[slot] = {x, y};
        prev = now;
        std::tie(x, y) = ps_map_real(x, y);
    }
    return {OrbitLabel::unresolved, prm.max_iter, {}};
}

double Raster::x_of(std::size_t col) const {
    return region.xmin + (static_cast<double>(col) + 0.5) * (region.xmax - region.xmin) / static_cast<double>(width);
}

double Raster::y_of(std::size_t row) const {
    return region.ymax - (static_cast<double>(row) + 0.5) * (region.ymax - region.ymin) / static_cast<double>(height);
}

std::size_t Raster::count(OrbitLabel l) const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [l](const Classification& c) { return c.label == l; }));
}

Raster raster(const Region& region, const RasterOptions& opts, const OrbitParams& params) {
    params.validate();
    if (opts.width == 0 || opts.height == 0) throw ArgumentError("raster size must be positive");
    if (!(region.xmax > region.xmin) || !(region.ymax > region.ymin)) throw ArgumentError("empty raster region");
    if (opts.width * opts.height > opts.max_pixels) {
        throw ArgumentError("raster of " + std::to_string(opts.width * opts.height) + " pixels exceeds the budget of " +
                            std::to_string(opts.max_pixels));
    }
    Raster out{region, opts.width, opts.height, std::vector<Classification>(opts.width * opts.height)};
    std::atomic<std::size_t> next_row{0};
    const auto worker = [&] {
        for (std::size_t row = next_row++; row < out.height; row = next_row++) {
            const double y = out.y_of(row);
            for (std::size_t col = 0; col < out.width; ++col) {
                out.cells[row * out.width + col] = classify_orbit(out.x_of(col), y, params);
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1U, opts.threads); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

void write_pgm(std::ostream& os, const Raster& r) {
    os << "P5\n# labels:";
    for (auto l : {OrbitLabel::undefined_hit, OrbitLabel::origin_attractor, OrbitLabel::two_point_attractor,
                   OrbitLabel::other_periodic, OrbitLabel::unresolved, OrbitLabel::diverged}) {
        os << ' ' << label_name(l) << '=' << static_cast<int>(label_gray(l));
    }
    os << "\n" << r.width << ' ' << r.height << "\n255\n";
    for (const auto& c : r.cells) os.put(static_cast<char>(label_gray(c.label)));
}

void write_csv(std::ostream& os, const Raster& r) {
    os << "x,y,label,steps\r\n";
    char buf[64];
    for (std::size_t row = 0; row < r.height; ++row) {
        for (std::size_t col = 0; col < r.width; ++col) {
            const auto& c = r.at(row, col);
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,", r.x_of(col), r.y_of(row));
            os << buf << label_name(c.label) << ',' << c.steps_used << "\r\n";
        }
    }
}

// ---------------------------------------------------------------------------

namespace {

using Q = Rational;

/// alpha on P^1: [u : v] -> [u^2 : (u - 2v)^2].
std::pair<Q, Q> alpha_homogeneous(const Q& u, const Q& v) {
    const Q d = u - Q(2) * v;
    return {u * u, d * d};
}

bool in_one_to_infinity(const Q& u, const Q& v) { return v.is_zero() || u / v >= Q(1); }

} // namespace

bool AlphaReport::passed() const {
    return conjugacy_identity && fixed_points && multiplier0.is_zero() && multiplier1.abs() > Q(1) &&
           multiplier4.abs() > Q(1) && invariance_failures == 0 && convergence_failures == 0;
}

AlphaReport alpha_dynamics_checks(std::size_t samples, std::uint64_t seed, std::size_t max_iter) {
    AlphaReport rep;
    // alpha(N/D) = N^2 / (N - 2D)^2 with N = 2, D = 1 + w, against 2 / (2w^2).
    {
        const Poly<Q> n{2};
        const Poly<Q> d{1, 1};
        const Poly<Q> lhs_num = n * n;
        const Poly<Q> lhs_den = (n - Q(2) * d) * (n - Q(2) * d);
        const Poly<Q> rhs_num{2};
        const Poly<Q> rhs_den = Poly<Q>{1} + Poly<Q>{-1, 0, 2};
        rep.conjugacy_identity = (lhs_num * rhs_den - rhs_num * lhs_den).is_zero();
    }
    rep.fixed_points = alpha(Q(0)) == Q(0) && alpha(Q(1)) == Q(1) && alpha(Q(4)) == Q(4);
    const auto deriv = [](const Q& t) {
        const Q d = t - Q(2);
        return Q(-4) * t / (d * d * d);
    };
    rep.multiplier0 = deriv(Q(0));
    rep.multiplier1 = deriv(Q(1));
    rep.multiplier4 = deriv(Q(4));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(0, 1'000'000);
    std::uniform_int_distribution<long> den(1, 1'000);
    for (std::size_t i = 0; i < samples; ++i) {
        Q u = Q(1) + Q(num(rng), den(rng));
        Q v = Q(1);
        if (i == 0) u = Q(2); // maps to infinity
        if (i == 1) v = Q(0), u = Q(1);
        const auto [au, av] = alpha_homogeneous(u, v);
        ++rep.invariance_samples;
        if (!in_one_to_infinity(au, av)) ++rep.invariance_failures;
    }

    std::uniform_real_distribution<double> real_start(-100.0, 1.0);
    std::uniform_real_distribution<double> box(-10.0, 10.0);
    for (std::size_t i = 0; i < samples; ++i) {
        Complex t = i % 2 == 0 ? Complex(real_start(rng), 0.0) : Complex(box(rng), box(rng));
        if (t.imag() == 0.0 && t.real() >= 1.0) continue;
        ++rep.convergence_samples;
        bool converged = false;
        for (std::size_t k = 0; k < max_iter; ++k) {
            if (std::abs(t) <= 1e-9) {
                converged = true;
                rep.max_steps_to_converge = std::max(rep.max_steps_to_converge, k);
                break;
            }
            const Complex d = t - 2.0;
            t = t * t / (d * d);
        }
        if (!converged) ++rep.convergence_failures;
    }
    return rep;
}

bool BetaReport::passed() const {
    return mult_a < 1 && mult_b > 1 && mult_c > 1 && two_cycle_multiplier > 1 && critical_residual <= 1e-10 &&
           fixed_cubic_factors && quadratic_discriminant == Q(592) && two_cycle_exact &&
           converged_to_a * 100 >= random_starts * 99 && limit_error <= 1e-3;
}

BetaReport beta_dynamics_checks(std::size_t samples, std::uint64_t seed, std::size_t iterations) {
    BetaReport rep;
    rep.a = (10 - std::sqrt(37.0)) / 14;
    rep.b = (10 + std::sqrt(37.0)) / 14;
    rep.mult_a = std::abs(beta_derivative(rep.a));
    rep.mult_b = std::abs(beta_derivative(rep.b));
    rep.mult_c = std::abs(beta_derivative(1.5));
    rep.two_cycle_multiplier = std::abs(beta_derivative(1.0) * beta_derivative(2.5));
    const Complex crit(19.0 / 16, std::sqrt(7.0) / 16);
    rep.critical_residual = std::max(std::abs(beta_derivative(crit)), std::abs(beta_derivative(std::conj(crit))));

    // Fixed points: numerator of beta(t) - t, split off t = 3/2 exactly.
    const Poly<Q> num{27, -76, 44};
    const Poly<Q> den{62, -120, 56};
    const Poly<Q> fixed = Poly<Q>{0, 1} * den - num;
    const auto [quot, rem] = divmod(fixed, Poly<Q>{-3, 2});
    rep.fixed_cubic_factors = fixed == beta_fixed_point_cubic() && rem.is_zero() && quot == Poly<Q>{9, -40, 28};
    rep.quadratic_discriminant = quot.coeff(1) * quot.coeff(1) - Q(4) * quot.coeff(2) * quot.coeff(0);
    rep.two_cycle_exact = beta(Q(1)) == Q(5, 2) && beta(Q(5, 2)) == Q(1);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> start(-10.0, 10.0);
    for (std::size_t i = 0; i < samples; ++i) {
        double t = start(rng);
        for (std::size_t k = 0; k < iterations; ++k) {
            const double d = 56 * t * t - 120 * t + 62; // no real zeros
            t = (44 * t * t - 76 * t + 27) / d;
        }
        ++rep.random_starts;
        if (std::abs(t - rep.a) <= 1e-6) ++rep.converged_to_a;
    }

    // The conic process: P on C_{2/7}, Q = pi(P) on C_{-1/4}, next P on the line R1 Q.
    const ConicPencil<Real> pencil(1.0);
    const Real q = 2.0 / 7.0;
    const std::array<double, 3> reference{6.5951, 2.2857, 1.0};
    ProjPoint1<Real> t = ProjPoint1<Real>::affine(0.0);
    const auto scaled = [](const ProjPoint2<Real>& p) {
        return std::array<double, 3>{p[0] / p[2], p[1] / p[2], 1.0};
    };
    const auto error = [&](const std::array<double, 3>& p) {
        return std::max(std::abs(p[0] - reference[0]), std::abs(p[1] - reference[1]));
    };
    rep.limit_iterations = iterations;
    for (std::size_t k = 0; k < iterations; ++k) {
        const ProjPoint2<Real> p = pencil.point_on_conic(q, t).normalized();
        if (error(scaled(p)) <= 1e-3 && rep.limit_iterations == iterations) rep.limit_iterations = k;
        // homogeneous coordinates grow with every step; rescale the parameter
        t = pencil_parameter(pi_point(p).normalized());
        const double m = std::max(std::abs(t.u()), std::abs(t.v()));
        t = ProjPoint1<Real>(t.u() / m, t.v() / m);
    }
    rep.limit_point = scaled(pencil.point_on_conic(q, t));
    rep.limit_error = error(rep.limit_point);
    return rep;
}

double two_step_return_ratio(double delta) {
    const auto [x1, y1] = ps_map_real(1 + delta, delta);
    const auto [x2, y2] = ps_map_real(x1, y1);
    return std::hypot(x2 - (1 - delta), y2 - delta * delta / 4) / (delta * delta);
}

double float_exact_agreement(std::size_t samples, std::uint64_t seed, double min_gap) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    double worst = 0;
    for (std::size_t i = 0; i < samples;) {
        const double x = coord(rng);
        const double y = coord(rng);
        if (std::abs(x - y) < min_gap) continue;
        ++i;
        const auto [fx, fy] = ps_map_real(x, y);
        const SigPoint<Q> exact = ps_map(SigPoint<Q>{Q(mpq_class(x)), Q(mpq_class(y))});
        const double ex = exact.x.to_double();
        const double ey = exact.y.to_double();
        worst = std::max(worst, std::abs(fx - ex) / std::max(1.0, std::abs(ex)));
        worst = std::max(worst, std::abs(fy - ey) / std::max(1.0, std::abs(ey)));
    }
    return worst;
}

} // namespace pappus
