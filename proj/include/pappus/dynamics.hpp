#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pappus/field.hpp"

namespace pappus {

struct OrbitParams {
    std::size_t max_iter = 1000;
    double escape_radius = 1e6;
    double attractor_tol = 1e-6;
    double undefined_tol = 1e-12; ///< relative threshold on |x - y|
    std::size_t window = 20;      ///< confirmation steps for an attractor
    double second_x = 1.0;        ///< second point of the two-point attractor
    double second_y = 0.0;

    void validate() const;
};

enum class OrbitLabel { diverged, origin_attractor, two_point_attractor, other_periodic, undefined_hit, unresolved };

const char* label_name(OrbitLabel l);
/// Gray level used in PGM output.
std::uint8_t label_gray(OrbitLabel l);

struct Classification {
    OrbitLabel label = OrbitLabel::unresolved;
    std::size_t steps_used = 0;
    std::string note; ///< e.g. why an undefined point was read as an attractor
};

/// One step of the map in doubles; no domain check.
std::pair<double, double> ps_map_real(double x, double y);

/// Iterates in floating point and classifies the orbit of (x0, y0).
///
/// Orbits approaching the two-point attractor shrink their distance to it
/// quadratically, so they can land exactly on (0, 0) (after underflow) and then
/// hit x = y. Such a collapse onto the attractor being tracked is reported as
/// that attractor, with a note.
Classification classify_orbit(double x0, double y0, const OrbitParams& params = {});

struct Region {
    double xmin = -3, xmax = 3, ymin = -3, ymax = 3;
};

struct RasterOptions {
    std::size_t width = 400, height = 400;
    std::size_t max_pixels = 4'000'000;
    unsigned threads = 1;
};

struct Raster {
    Region region;
    std::size_t width = 0, height = 0;
    std::vector<Classification> cells; ///< row-major, row 0 at ymax

    const Classification& at(std::size_t row, std::size_t col) const { return cells[row * width + col]; }
    /// Pixel-centre coordinates.
    double x_of(std::size_t col) const;
    double y_of(std::size_t row) const;
    std::size_t count(OrbitLabel l) const;
};

/// Classifies every pixel centre. Rows are independent; the result does not
/// depend on the thread count.
Raster raster(const Region& region, const RasterOptions& opts, const OrbitParams& params = {});

/// Binary P5 with a comment line listing the label-to-gray map.
void write_pgm(std::ostream& os, const Raster& r);
/// x,y,label,steps per pixel, header row first.
void write_csv(std::ostream& os, const Raster& r);

// --- reports for the one-dimensional maps ------------------------------------

struct AlphaReport {
    bool conjugacy_identity = false;   ///< alpha(2/(1+w)) = 2/(1 + (2w^2 - 1)) as rational functions
    bool fixed_points = false;         ///< alpha fixes 0, 1, 4 exactly
    Rational multiplier0, multiplier1, multiplier4;
    std::size_t invariance_samples = 0, invariance_failures = 0;
    std::size_t convergence_samples = 0, convergence_failures = 0;
    std::size_t max_steps_to_converge = 0;
    bool passed() const;
};

AlphaReport alpha_dynamics_checks(std::size_t samples = 10000, std::uint64_t seed = 1, std::size_t max_iter = 1000);

struct BetaReport {
    double a = 0, b = 0;                          ///< (10 -+ sqrt 37) / 14
    double mult_a = 0, mult_b = 0, mult_c = 0;    ///< |beta'| at a, b, 3/2
    double two_cycle_multiplier = 0;              ///< |beta'(1) beta'(5/2)|
    double critical_residual = 0;                 ///< max |beta'| at (19 +- i sqrt 7)/16
    bool fixed_cubic_factors = false;             ///< 56t^3 - 164t^2 + 138t - 27 = (2t - 3)(28t^2 - 40t + 9)
    Rational quadratic_discriminant;              ///< of the cofactor; 16 * 37
    bool two_cycle_exact = false;                 ///< beta(1) = 5/2, beta(5/2) = 1
    std::size_t random_starts = 0, converged_to_a = 0;
    std::array<double, 3> limit_point{};          ///< geometric iteration from t0, scaled so z = 1
    std::size_t limit_iterations = 0;
    double limit_error = 0;                       ///< max-norm distance to the reference point
    bool passed() const;
};

BetaReport beta_dynamics_checks(std::size_t samples = 10000, std::uint64_t seed = 1, std::size_t iterations = 200);

/// ||pi^2(1 + d, d) - (1 - d, d^2 / 4)|| / d^2.
double two_step_return_ratio(double delta);

/// Largest relative disagreement between the double and exact-rational map over
/// random points with |x - y| >= min_gap.
double float_exact_agreement(std::size_t samples, std::uint64_t seed, double min_gap = 0.1);

} // namespace pappus
