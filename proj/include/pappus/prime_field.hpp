#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace pappus {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Legendre symbol (a/p) in {-1, 0, +1}. Throws ArgumentError unless p is an odd prime.
int legendre_symbol(std::int64_t a, std::uint64_t p);

class PrimeField;

/// Element of F_p for a runtime prime p (5 <= p < 2^63).
///
/// Elements carry their modulus. A default-constructed or integer-constructed
/// value is an unbound literal: it adopts the modulus of the first bound
/// element it meets, which lets generic code (and Eigen) write Scalar(0),
/// Scalar(2) and so on. Mixing two different moduli throws ArgumentError.
class Fp {
public:
    Fp() = default;
    Fp(int literal) : lit_(literal) {} // NOLINT(google-explicit-constructor)
    Fp(long literal) : lit_(literal) {} // NOLINT(google-explicit-constructor)
    Fp(long long literal) : lit_(literal) {} // NOLINT(google-explicit-constructor)

    std::uint64_t modulus() const { return p_; }
    bool is_bound() const { return p_ != 0; }
    /// Residue in [0, p). Throws ArgumentError for unbound literals.
    std::uint64_t residue() const;

    bool is_zero() const { return is_bound() ? v_ == 0 : lit_ == 0; }
    Fp inverse() const;
    Fp pow(std::uint64_t e) const;

    std::string str() const;

    Fp operator-() const;
    Fp& operator+=(const Fp& rhs);
    Fp& operator-=(const Fp& rhs);
    Fp& operator*=(const Fp& rhs);
    Fp& operator/=(const Fp& rhs);

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b);

    friend std::ostream& operator<<(std::ostream& os, const Fp& a);

private:
    friend class PrimeField;
    Fp(std::uint64_t p, std::uint64_t v) : p_(p), v_(v) {}

    Fp bound_to(std::uint64_t p) const;
    static std::uint64_t common_modulus(const Fp& a, const Fp& b);

    std::uint64_t p_ = 0;
    std::uint64_t v_ = 0;
    std::int64_t lit_ = 0;
};

/// Validated prime modulus; the factory for bound F_p elements.
class PrimeField {
public:
    /// Throws ArgumentError unless p is prime, p >= 5 and p < 2^63.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    Fp operator()(std::int64_t value) const;
    Fp zero() const { return Fp(p_, 0); }
    Fp one() const { return Fp(p_, 1); }
    /// Integers, or "a/b" evaluated as a * b^-1 mod p.
    Fp parse(std::string_view text) const;

private:
    std::uint64_t p_;
};

/// Both square roots of a (smaller residue first), or nullopt for a non-residue.
/// Tonelli-Shanks for p = 1 mod 4, the direct exponent otherwise.
std::optional<std::pair<Fp, Fp>> sqrt_mod(const Fp& a);

} // namespace pappus
