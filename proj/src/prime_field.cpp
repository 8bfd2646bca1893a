#include "pappus/prime_field.hpp"

#include <array>
#include <limits>
#include <ostream>

#include "pappus/errors.hpp"
#include "pappus/rational.hpp"

namespace pappus {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 e, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (e != 0) {
        if (e & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1U;
    }
    return result;
}

u64 reduce_signed(std::int64_t v, u64 p) {
    const auto m = static_cast<__int128>(p);
    __int128 r = static_cast<__int128>(v) % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

std::int64_t checked(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw ArgumentError("unbound F_p literal overflow");
    }
    return static_cast<std::int64_t>(v);
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 b : bases) {
        if (n % b == 0) return n == b;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (u64 a : bases) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int legendre_symbol(std::int64_t a, u64 p) {
    if (p == 2 || !is_prime(p)) throw ArgumentError("legendre_symbol: modulus must be an odd prime");
    const u64 r = reduce_signed(a, p);
    if (r == 0) return 0;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------

u64 Fp::residue() const {
    if (!is_bound()) throw ArgumentError("F_p literal has no modulus yet");
    return v_;
}

Fp Fp::bound_to(u64 p) const {
    if (p == 0 || is_bound()) return *this;
    return Fp(p, reduce_signed(lit_, p));
}

u64 Fp::common_modulus(const Fp& a, const Fp& b) {
    if (a.is_bound() && b.is_bound() && a.p_ != b.p_) {
        throw ArgumentError("mixing elements of F_" + std::to_string(a.p_) + " and F_" + std::to_string(b.p_));
    }
    return a.is_bound() ? a.p_ : b.p_;
}

Fp Fp::operator-() const {
    if (!is_bound()) return Fp(static_cast<long long>(checked(-static_cast<__int128>(lit_))));
    return Fp(p_, v_ == 0 ? 0 : p_ - v_);
}

Fp& Fp::operator+=(const Fp& rhs) {
    const u64 p = common_modulus(*this, rhs);
    if (p == 0) {
        lit_ = checked(static_cast<__int128>(lit_) + rhs.lit_);
        return *this;
    }
    const Fp a = bound_to(p);
    const Fp b = rhs.bound_to(p);
    u64 s = a.v_ + b.v_; // p < 2^63 so no wrap
    if (s >= p) s -= p;
    *this = Fp(p, s);
    return *this;
}

Fp& Fp::operator-=(const Fp& rhs) { return *this += -rhs; }

Fp& Fp::operator*=(const Fp& rhs) {
    const u64 p = common_modulus(*this, rhs);
    if (p == 0) {
        lit_ = checked(static_cast<__int128>(lit_) * rhs.lit_);
        return *this;
    }
    *this = Fp(p, mul_mod(bound_to(p).v_, rhs.bound_to(p).v_, p));
    return *this;
}

Fp Fp::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (!is_bound()) {
        if (lit_ == 1 || lit_ == -1) return *this;
        throw ArgumentError("cannot invert an unbound F_p literal");
    }
    // Extended Euclid on (v, p).
    __int128 old_r = v_, r = p_;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 q = old_r / r;
        const __int128 tr = old_r - q * r;
        old_r = r;
        r = tr;
        const __int128 ts = old_s - q * s;
        old_s = s;
        s = ts;
    }
    __int128 inv = old_s % static_cast<__int128>(p_);
    if (inv < 0) inv += p_;
    return Fp(p_, static_cast<u64>(inv));
}

Fp& Fp::operator/=(const Fp& rhs) {
    const u64 p = common_modulus(*this, rhs);
    if (p == 0) {
        if (rhs.lit_ == 0) throw DivisionByZero();
        if (lit_ % rhs.lit_ != 0) throw ArgumentError("inexact division of unbound F_p literals");
        lit_ /= rhs.lit_;
        return *this;
    }
    return *this *= rhs.bound_to(p).inverse();
}

Fp Fp::pow(u64 e) const {
    if (!is_bound()) throw ArgumentError("pow of an unbound F_p literal");
    return Fp(p_, pow_mod(v_, e, p_));
}

bool operator==(const Fp& a, const Fp& b) {
    const u64 p = Fp::common_modulus(a, b);
    if (p == 0) return a.lit_ == b.lit_;
    return a.bound_to(p).v_ == b.bound_to(p).v_;
}

std::string Fp::str() const { return is_bound() ? std::to_string(v_) : std::to_string(lit_); }

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.str(); }

// ---------------------------------------------------------------------------

PrimeField::PrimeField(u64 p) : p_(p) {
    if (p < 5 || p >= (u64{1} << 63U) || !is_prime(p)) {
        throw ArgumentError("prime field modulus must be a prime with 5 <= p < 2^63, got " + std::to_string(p));
    }
}

Fp PrimeField::operator()(std::int64_t value) const { return Fp(p_, reduce_signed(value, p_)); }

Fp PrimeField::parse(std::string_view text) const {
    const Rational q = Rational::parse(text);
    auto to_fp = [this](const mpz_class& z) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
        return Fp(p_, r.get_ui());
    };
    return to_fp(q.numerator()) / to_fp(q.denominator());
}

std::optional<std::pair<Fp, Fp>> sqrt_mod(const Fp& a) {
    const u64 p = a.modulus();
    if (p == 0) throw ArgumentError("sqrt_mod needs a bound F_p element");
    const u64 n = a.residue();
    if (n == 0) return std::pair{a, a};
    if (pow_mod(n, (p - 1) / 2, p) != 1) return std::nullopt;

    PrimeField field(p);
    u64 root = 0;
    if (p % 4 == 3) {
        root = pow_mod(n, (p + 1) / 4, p);
    } else {
        u64 q = p - 1;
        int s = 0;
        while ((q & 1U) == 0) {
            q >>= 1U;
            ++s;
        }
        u64 z = 2;
        while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

        int m = s;
        u64 c = pow_mod(z, q, p);
        u64 t = pow_mod(n, q, p);
        u64 r = pow_mod(n, (q + 1) / 2, p);
        while (t != 1) {
            int i = 1;
            u64 t2 = mul_mod(t, t, p);
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, p);
                ++i;
            }
            u64 b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        root = r;
    }
    const u64 other = p - root;
    const u64 lo = root < other ? root : other;
    const u64 hi = root < other ? other : root;
    return std::pair{field(static_cast<std::int64_t>(lo)), field(static_cast<std::int64_t>(hi))};
}

} // namespace pappus
