#pragma once

#include <cstdint>
#include <random>

#include "pappus/prime_field.hpp"
#include "pappus/rational.hpp"

namespace test {

inline pappus::Rational rand_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 9) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return pappus::Rational(num(rng), den(rng));
}

inline pappus::Fp rand_fp(std::mt19937_64& rng, const pappus::PrimeField& f) {
    std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(f.modulus()) - 1);
    return f(d(rng));
}

} // namespace test
