#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pappus/field.hpp"

namespace pappus {

/// Dense univariate polynomial over a field, coefficients in ascending degree.
template <FieldScalar F>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<F> c) : c_(c) { trim(); }
    explicit Poly(std::vector<F> c) : c_(std::move(c)) { trim(); }

    static Poly constant(const F& a) { return Poly(std::vector<F>{a}); }
    /// x - a
    static Poly linear_root(const F& a) { return Poly(std::vector<F>{-a, one_like(a)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : F(0); }
    F leading() const { return c_.empty() ? F(0) : c_.back(); }

    F operator()(const F& x) const {
        F acc = zero_like(x);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        std::vector<F> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(F(static_cast<long>(i)) * c_[i]);
        return Poly(std::move(d));
    }

    Poly monic() const {
        if (c_.empty()) return *this;
        const F lead = c_.back();
        std::vector<F> m;
        for (const F& a : c_) m.push_back(a / lead);
        return Poly(std::move(m));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<F> r;
        for (const F& x : a.c_) r.push_back(-x);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const F& k, const Poly& a) { return Poly::constant(k) * a; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (int i = p.degree(); i >= 0; --i) {
            if (pappus::is_zero(p.c_[i], Tolerance{0.0})) continue;
            if (!first) os << " + ";
            os << '(' << to_string(p.c_[i]) << ')';
            if (i > 0) os << "*t" << (i > 1 ? "^" + std::to_string(i) : "");
            first = false;
        }
        return os;
    }

private:
    void trim() {
        while (!c_.empty() && pappus::is_zero(c_.back(), Tolerance{0.0})) c_.pop_back();
    }
    std::vector<F> c_;
};

/// Quotient and remainder; exact in exact fields.
template <FieldScalar F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<F> rem = a.coeffs();
    const int db = b.degree();
    const F lead = b.leading();
    if (a.degree() < db) return {Poly<F>{}, a};
    std::vector<F> quot(a.degree() - db + 1, F(0));
    for (int i = a.degree(); i >= db; --i) {
        const F k = rem[i] / lead;
        quot[i - db] = k;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - k * b.coeff(j);
    }
    rem.resize(db);
    return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

/// Monic gcd (zero if both are zero).
template <FieldScalar F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Lagrange interpolation through (xs[i], ys[i]); the xs must be distinct.
template <FieldScalar F>
Poly<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw ArgumentError("interpolate: mismatched or empty samples");
    Poly<F> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly<F> basis = Poly<F>::constant(one_like(xs[i]));
        F denom = one_like(xs[i]);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly<F>::linear_root(xs[j]);
            denom = denom * (xs[i] - xs[j]);
        }
        out = out + (ys[i] / denom) * basis;
    }
    return out;
}

/// All rational roots (without multiplicity), by the rational-root theorem
/// applied to the integer polynomial obtained by clearing denominators.
std::vector<Rational> rational_roots(const Poly<Rational>& p);

} // namespace pappus
