#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <optional>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "pappus/errors.hpp"
#include "pappus/prime_field.hpp"
#include "pappus/rational.hpp"

namespace pappus {

using Real = double;
using Complex = std::complex<double>;

/// Relative tolerance for floating fields. Exact fields ignore it.
struct Tolerance {
    double rel = 1e-9;
};

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& a, Tolerance) { return a.is_zero(); }
    static double magnitude(const Rational& a) { return std::abs(a.to_double()); }
    static std::string to_string(const Rational& a) { return a.str(); }
    static std::optional<std::pair<Rational, Rational>> sqrt(const Rational& a) {
        if (a.sign() < 0) return std::nullopt;
        const mpz_class num = a.numerator();
        const mpz_class den = a.denominator();
        if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
            return std::nullopt;
        }
        const Rational root(::sqrt(num), ::sqrt(den));
        return std::pair{root, -root};
    }
};

template <>
struct FieldTraits<Fp> {
    static constexpr bool exact = true;
    static bool is_zero(const Fp& a, Tolerance) { return a.is_zero(); }
    static double magnitude(const Fp&) { return 1.0; }
    static std::string to_string(const Fp& a) { return a.str(); }
    static std::optional<std::pair<Fp, Fp>> sqrt(const Fp& a) { return sqrt_mod(a); }
};

template <>
struct FieldTraits<Real> {
    static constexpr bool exact = false;
    static bool is_zero(Real a, Tolerance tol) { return std::abs(a) <= tol.rel; }
    static double magnitude(Real a) { return std::abs(a); }
    static std::string to_string(Real a);
    static std::optional<std::pair<Real, Real>> sqrt(Real a) {
        if (a < 0) return std::nullopt;
        const Real r = std::sqrt(a);
        return std::pair{r, -r};
    }
};

template <>
struct FieldTraits<Complex> {
    static constexpr bool exact = false;
    static bool is_zero(const Complex& a, Tolerance tol) { return std::abs(a) <= tol.rel; }
    static double magnitude(const Complex& a) { return std::abs(a); }
    static std::string to_string(const Complex& a);
    static std::optional<std::pair<Complex, Complex>> sqrt(const Complex& a) {
        const Complex r = std::sqrt(a);
        return std::pair{r, -r};
    }
};

/// The shared field contract: exact rationals, F_p, real and complex doubles.
template <class F>
concept FieldScalar = requires(const F a, const F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { F(0) };
    { FieldTraits<F>::exact } -> std::convertible_to<bool>;
    { FieldTraits<F>::is_zero(a, Tolerance{}) } -> std::convertible_to<bool>;
};

template <FieldScalar F>
inline constexpr bool is_exact_v = FieldTraits<F>::exact;

template <FieldScalar F>
bool is_zero(const F& a, Tolerance tol = {}) {
    return FieldTraits<F>::is_zero(a, tol);
}

/// Exact equality in exact fields; |a-b| <= rel * max(1, |a|, |b|) otherwise.
template <FieldScalar F>
bool approx_equal(const F& a, const F& b, Tolerance tol = {}) {
    if constexpr (is_exact_v<F>) {
        return a == b;
    } else {
        using T = FieldTraits<F>;
        const double scale = std::max({1.0, T::magnitude(a), T::magnitude(b)});
        return T::magnitude(a - b) <= tol.rel * scale;
    }
}

/// value == 0 for exact fields, |value| <= rel * scale for floating ones.
template <FieldScalar F>
bool negligible(const F& value, double scale, Tolerance tol = {}) {
    if constexpr (is_exact_v<F>) {
        return is_zero(value);
    } else {
        return FieldTraits<F>::magnitude(value) <= tol.rel * scale;
    }
}

template <FieldScalar F>
double magnitude(const F& a) {
    return FieldTraits<F>::magnitude(a);
}

/// Zero and one carrying the same modulus (for F_p) as the sample value.
template <FieldScalar F>
F zero_like(const F& a) {
    return a - a;
}

template <FieldScalar F>
F one_like(const F& a) {
    if constexpr (std::same_as<F, Fp>) {
        return a.is_bound() ? PrimeField(a.modulus()).one() : Fp(1);
    } else {
        return F(1);
    }
}

template <FieldScalar F>
F field_inv(const F& a) {
    if (is_zero(a, Tolerance{0.0})) throw DivisionByZero("field_inv of zero");
    return one_like(a) / a;
}

template <FieldScalar F>
std::optional<std::pair<F, F>> sqrt_in_field(const F& a) {
    return FieldTraits<F>::sqrt(a);
}

template <FieldScalar F>
std::string to_string(const F& a) {
    return FieldTraits<F>::to_string(a);
}

/// Parses a field value from the command line or a test table.
template <FieldScalar F>
F parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) {
    return Rational::parse(text);
}

template <>
Real parse_scalar<Real>(std::string_view text);

} // namespace pappus

namespace Eigen {

template <>
struct NumTraits<pappus::Rational> : GenericNumTraits<pappus::Rational> {
    using Real = pappus::Rational;
    using NonInteger = pappus::Rational;
    using Nested = pappus::Rational;
    using Literal = pappus::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 20,
        MulCost = 40
    };
};

template <>
struct NumTraits<pappus::Fp> : GenericNumTraits<pappus::Fp> {
    using Real = pappus::Fp;
    using NonInteger = pappus::Fp;
    using Nested = pappus::Fp;
    using Literal = pappus::Fp;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 6
    };
};

} // namespace Eigen
