#include "pappus/polynomial.hpp"

#include <gmpxx.h>

#include "pappus/census.hpp"

namespace pappus {

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::vector<mpz_class> divs{1};
    for (const auto& [prime, exp] : factor_integer(abs(n))) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned e = 1; e <= exp; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

} // namespace

std::vector<Rational> rational_roots(const Poly<Rational>& p) {
    if (p.is_zero()) throw ArgumentError("rational_roots of the zero polynomial");
    // Clear denominators.
    mpz_class l = 1;
    for (const Rational& c : p.coeffs()) l = lcm(l, c.denominator());
    std::vector<mpz_class> ints;
    for (const Rational& c : p.coeffs()) ints.push_back(mpz_class(c.value() * l));

    std::vector<Rational> roots;
    std::size_t low = 0;
    while (low < ints.size() && ints[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    if (low + 1 >= ints.size()) return roots;

    const auto nums = positive_divisors(ints[low]);
    const auto dens = positive_divisors(ints.back());
    for (const auto& a : nums) {
        for (const auto& b : dens) {
            if (gcd(a, b) != 1) continue;
            for (int sign : {1, -1}) {
                const Rational cand(mpz_class(sign * a), b);
                if (p(cand).is_zero()) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace pappus
