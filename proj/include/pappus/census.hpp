#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pappus/prime_field.hpp"
#include "pappus/ps_map.hpp"

namespace pappus {

/// Integer polynomial, coefficients in ascending degree, leading coefficient nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> c);
    /// Descending-degree convenience: {1, -84, 896, -1984} is x^3 - 84x^2 + 896x - 1984.
    static IntPoly from_descending(std::initializer_list<long> c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }

    mpz_class eval(const mpz_class& x) const;
    std::uint64_t eval_mod(std::uint64_t x, std::uint64_t p) const;
    std::string str() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    std::vector<mpz_class> c_;
};

/// All roots in F_p, by exhaustive evaluation, ascending.
std::vector<std::uint64_t> poly_roots_mod_p(const IntPoly& f, std::uint64_t p);

/// Discriminant of a polynomial of degree 2, 3 or 4 (closed formulas).
mpz_class discriminant(const IntPoly& f);

/// Irreducibility over Q for degree <= 4: no rational root and, for quartics,
/// no splitting into two integer quadratics (Gauss's lemma makes that enough).
bool q_irreducibility_check(const IntPoly& f);

/// n = p_1^e_1 ... as (prime, exponent) pairs; trial division.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n);

/// Squarefree part of |n| (n divided by its largest square factor, sign dropped).
mpz_class squarefree_part(const mpz_class& n);

// --- the polynomials behind the period-3 and period-4 criteria ---------------

IntPoly period3_u();                      ///< x^3 - 84x^2 + 896x - 1984
IntPoly period3_v();                      ///< x^3 - 48x^2 + 656x - 1856
std::vector<IntPoly> period4_quadratics(); ///< the five quadratic factors
IntPoly period4_w();                      ///< x^4 - 144x^3 + 3152x^2 - 16896x + 25856

/// Congruence prediction for period n in {3, 4}.
bool predicted_period(std::uint64_t p, int n);

/// Whether the relevant factor polynomials have a root mod p.
bool factor_root_exists(std::uint64_t p, int n);

// --- cycles over F_p --------------------------------------------------------

using Cycle = std::vector<SigPoint<Fp>>;

/// Every cycle of exact minimal period n (1 <= n <= 6), one representative
/// rotation each, starting at its smallest point (x, then y).
std::vector<Cycle> find_cycles(std::uint64_t p, int n);

/// pi^n(z) = z, pi^d(z) != z for proper divisors d, every step defined.
bool is_exact_cycle(const Cycle& c, int n);

enum class CensusStatus { agree, exempt, disagree };
const char* census_status_name(CensusStatus s);

struct CycleReport {
    std::uint64_t p = 0;
    int n = 0;
    bool exists = false;         ///< brute force
    std::optional<Cycle> witness;
    std::size_t cycle_count = 0;
    bool predicted = false;      ///< congruence criterion
    bool factor_root = false;    ///< root of the factor polynomials mod p
    bool agrees = false;         ///< all three coincide
    CensusStatus status = CensusStatus::agree;
};

struct CensusOptions {
    std::set<std::uint64_t> exempt;    ///< empty: the default set for n
    double max_work = 5e9;             ///< refuse when sum of p^2 * n exceeds this
    unsigned threads = 1;
};

/// Default exempt primes: {2, 3} plus the discriminant primes {7, 13, 31} (n=3) or {5, 17} (n=4).
std::set<std::uint64_t> default_exempt_primes(int n);

/// Estimated field operations for a census, sum of p^2 * n over the primes.
double census_work(std::uint64_t lo, std::uint64_t hi, int n);

CycleReport census_row(std::uint64_t p, int n, const std::set<std::uint64_t>& exempt);

/// One row per prime in [lo, hi] with p >= 5; rows in ascending p.
std::vector<CycleReport> census(std::uint64_t lo, std::uint64_t hi, int n, const CensusOptions& opts = {});

struct CensusSummary {
    std::size_t agree = 0, exempt = 0, disagree = 0;
};
CensusSummary summarize(const std::vector<CycleReport>& rows);

} // namespace pappus
