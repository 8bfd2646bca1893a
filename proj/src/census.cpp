#include "pappus/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

namespace pappus {

IntPoly::IntPoly(std::vector<mpz_class> c) : c_(std::move(c)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) throw ArgumentError("IntPoly: zero polynomial");
}

IntPoly IntPoly::from_descending(std::initializer_list<long> c) {
    std::vector<mpz_class> asc;
    for (auto it = std::rbegin(c); it != std::rend(c); ++it) asc.emplace_back(*it);
    return IntPoly(std::move(asc));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::uint64_t IntPoly::eval_mod(std::uint64_t x, std::uint64_t p) const {
    using u128 = unsigned __int128;
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), it->get_mpz_t(), p);
        acc = static_cast<std::uint64_t>((static_cast<u128>(acc) * x + r.get_ui()) % p);
    }
    return acc;
}

std::string IntPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        const mpz_class mag = abs(a);
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << '-';
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) os << 'x';
        if (i > 1) os << '^' << i;
        first = false;
    }
    return os.str();
}

std::vector<std::uint64_t> poly_roots_mod_p(const IntPoly& f, std::uint64_t p) {
    if (!is_prime(p)) throw ArgumentError("poly_roots_mod_p: modulus must be prime");
    std::vector<std::uint64_t> roots;
    for (std::uint64_t x = 0; x < p; ++x) {
        if (f.eval_mod(x, p) == 0) roots.push_back(x);
    }
    return roots;
}

mpz_class discriminant(const IntPoly& f) {
    const auto& c = f.coeffs();
    switch (f.degree()) {
    case 2: {
        const mpz_class &a = c[2], &b = c[1], &cc = c[0];
        return b * b - 4 * a * cc;
    }
    case 3: {
        const mpz_class &a = c[3], &b = c[2], &cc = c[1], &d = c[0];
        return b * b * cc * cc - 4 * a * cc * cc * cc - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * cc * d;
    }
    case 4: {
        const mpz_class &a = c[4], &b = c[3], &cc = c[2], &d = c[1], &e = c[0];
        const mpz_class a2 = a * a, b2 = b * b, c2 = cc * cc, d2 = d * d, e2 = e * e;
        return 256 * a2 * a * e2 * e - 192 * a2 * b * d * e2 - 128 * a2 * c2 * e2 + 144 * a2 * cc * d2 * e -
               27 * a2 * d2 * d2 + 144 * a * b2 * cc * e2 - 6 * a * b2 * d2 * e - 80 * a * b * c2 * d * e +
               18 * a * b * cc * d2 * d + 16 * a * c2 * c2 * e - 4 * a * c2 * cc * d2 - 27 * b2 * b2 * e2 +
               18 * b2 * b * cc * d * e - 4 * b2 * b * d2 * d - 4 * b2 * c2 * cc * e + b2 * c2 * d2;
    }
    default:
        throw ArgumentError("discriminant: degree must be 2, 3 or 4");
    }
}

std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
    n = abs(n);
    std::vector<std::pair<mpz_class, unsigned>> out;
    if (n == 0) throw ArgumentError("factor_integer(0)");
    for (mpz_class d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0) {
            n /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

mpz_class squarefree_part(const mpz_class& n) {
    mpz_class out = 1;
    for (const auto& [prime, e] : factor_integer(n)) {
        if (e % 2 == 1) out *= prime;
    }
    return out;
}

namespace {

std::vector<mpz_class> signed_divisors(const mpz_class& n) {
    std::vector<mpz_class> pos{1};
    for (const auto& [prime, exp] : factor_integer(n)) {
        const std::size_t base = pos.size();
        mpz_class pk = 1;
        for (unsigned e = 1; e <= exp; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) pos.push_back(pos[i] * pk);
        }
    }
    std::vector<mpz_class> out;
    for (const auto& d : pos) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

bool has_rational_root(const IntPoly& f) {
    const auto& c = f.coeffs();
    if (c[0] == 0) return true;
    for (const auto& a : signed_divisors(c[0])) {
        for (const auto& b : signed_divisors(c.back())) {
            if (b < 0) continue;
            // f(a/b) = 0  <=>  sum c_i a^i b^(n-i) = 0
            mpz_class acc = 0, apow = 1, bpow = 1;
            const int n = f.degree();
            std::vector<mpz_class> bp(static_cast<std::size_t>(n) + 1);
            for (int i = 0; i <= n; ++i) {
                bp[static_cast<std::size_t>(i)] = bpow;
                bpow *= b;
            }
            for (int i = 0; i <= n; ++i) {
                acc += c[static_cast<std::size_t>(i)] * apow * bp[static_cast<std::size_t>(n - i)];
                apow *= a;
            }
            if (acc == 0) return true;
        }
    }
    return false;
}

/// (a1 x^2 + b1 x + c1)(a2 x^2 + b2 x + c2) = f for some integers.
bool splits_into_quadratics(const IntPoly& f) {
    const mpz_class &a = f.coeff(4), &b = f.coeff(3), &c = f.coeff(2), &d = f.coeff(1), &e = f.coeff(0);
    mpz_class norm2 = 0;
    for (const auto& x : f.coeffs()) norm2 += x * x;
    // Mignotte: every coefficient of a quadratic factor is at most 2 ||f||_2 in size.
    const mpz_class bound = 2 * sqrt(norm2) + 2;
    for (const auto& a1 : signed_divisors(a)) {
        if (a1 < 0) continue;
        const mpz_class a2 = a / a1;
        for (const auto& c1 : signed_divisors(e)) {
            const mpz_class c2 = e / c1;
            const auto matches = [&](const mpz_class& b1, const mpz_class& b2) {
                return a1 * b2 + b1 * a2 == b && a1 * c2 + b1 * b2 + c1 * a2 == c && b1 * c2 + c1 * b2 == d;
            };
            // a2 b1 + a1 b2 = b and c2 b1 + c1 b2 = d.
            const mpz_class det = a2 * c1 - a1 * c2;
            if (det != 0) {
                const mpz_class n1 = b * c1 - a1 * d;
                const mpz_class n2 = a2 * d - c2 * b;
                if (mpz_divisible_p(n1.get_mpz_t(), det.get_mpz_t()) != 0 &&
                    mpz_divisible_p(n2.get_mpz_t(), det.get_mpz_t()) != 0 && matches(n1 / det, n2 / det)) {
                    return true;
                }
                continue;
            }
            for (mpz_class b1 = -bound; b1 <= bound; ++b1) {
                const mpz_class rest = b - a2 * b1;
                if (mpz_divisible_p(rest.get_mpz_t(), a1.get_mpz_t()) == 0) continue;
                if (matches(b1, rest / a1)) return true;
            }
        }
    }
    return false;
}

} // namespace

bool q_irreducibility_check(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1 || n > 4) throw ArgumentError("q_irreducibility_check: degree must be 1..4");
    if (n == 1) return true;
    if (has_rational_root(f)) return false;
    if (n == 4) return !splits_into_quadratics(f);
    return true;
}

IntPoly period3_u() { return IntPoly::from_descending({1, -84, 896, -1984}); }
IntPoly period3_v() { return IntPoly::from_descending({1, -48, 656, -1856}); }
std::vector<IntPoly> period4_quadratics() {
    return {IntPoly::from_descending({1, -96, 304}), IntPoly::from_descending({1, -14, 29}),
            IntPoly::from_descending({1, -20, 80}), IntPoly::from_descending({1, -12, 16}),
            IntPoly::from_descending({1, -24, 64})};
}
IntPoly period4_w() { return IntPoly::from_descending({1, -144, 3152, -16896, 25856}); }

bool predicted_period(std::uint64_t p, int n) {
    if (n == 3) {
        const auto m13 = p % 13, m7 = p % 7;
        return m13 == 1 || m13 == 5 || m13 == 8 || m13 == 12 || m7 == 1 || m7 == 6;
    }
    if (n == 4) {
        const auto m5 = p % 5, m17 = p % 17;
        return m5 == 1 || m5 == 4 || m17 == 1 || m17 == 4 || m17 == 13 || m17 == 16;
    }
    throw ArgumentError("predicted_period: only n = 3 and n = 4 are covered");
}

bool factor_root_exists(std::uint64_t p, int n) {
    std::vector<IntPoly> polys;
    if (n == 3) {
        polys = {period3_u(), period3_v()};
    } else if (n == 4) {
        polys = period4_quadratics();
        polys.push_back(period4_w());
    } else {
        throw ArgumentError("factor_root_exists: only n = 3 and n = 4 are covered");
    }
    return std::any_of(polys.begin(), polys.end(), [p](const IntPoly& f) { return !poly_roots_mod_p(f, p).empty(); });
}

namespace {

constexpr std::uint32_t kUndefined = std::numeric_limits<std::uint32_t>::max();

/// next[x * p + y] = pi(x, y) encoded the same way, or kUndefined on x = y.
std::vector<std::uint32_t> successor_table(std::uint64_t p) {
    std::vector<std::uint64_t> inv(p, 0);
    inv[1] = 1;
    for (std::uint64_t a = 2; a < p; ++a) inv[a] = (p - (p / a) * inv[p % a] % p) % p;

    std::vector<std::uint32_t> next(p * p, kUndefined);
    for (std::uint64_t x = 0; x < p; ++x) {
        for (std::uint64_t y = 0; y < p; ++y) {
            if (x == y) continue;
            const std::uint64_t d = inv[(x + p - y) % p];
            const std::uint64_t d2 = d * d % p;
            const std::uint64_t t = (y + 2 * p + 2 - x) % p; // y - x + 2
            const std::uint64_t nx = 2 * y % p * t % p * d2 % p;
            const std::uint64_t ny = y * y % p * d2 % p;
            next[x * p + y] = static_cast<std::uint32_t>(nx * p + ny);
        }
    }
    return next;
}

std::vector<int> proper_divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

} // namespace

std::vector<Cycle> find_cycles(std::uint64_t p, int n) {
    if (p < 5 || !is_prime(p)) throw ArgumentError("find_cycles: p must be a prime >= 5");
    if (n < 1 || n > 6) throw ArgumentError("find_cycles: period must be in 1..6");
    if (p > 46340) throw ArgumentError("find_cycles: p too large for the p^2 table");

    const auto next = successor_table(p);
    const auto divisors = proper_divisors(n);
    std::vector<bool> seen(p * p, false);
    std::vector<Cycle> cycles;
    const PrimeField field(p);

    const auto step = [&](std::uint32_t z, int k) {
        for (int i = 0; i < k && z != kUndefined; ++i) z = next[z];
        return z;
    };
    for (std::uint32_t z = 0; z < p * p; ++z) {
        if (seen[z]) continue;
        if (step(z, n) != z) continue;
        if (std::any_of(divisors.begin(), divisors.end(), [&](int d) { return step(z, d) == z; })) continue;
        // z starts the cycle at its smallest member, since smaller members were seen first.
        Cycle c;
        std::uint32_t w = z;
        for (int i = 0; i < n; ++i) {
            seen[w] = true;
            c.push_back({field(static_cast<std::int64_t>(w / p)), field(static_cast<std::int64_t>(w % p))});
            w = next[w];
        }
        cycles.push_back(std::move(c));
    }
    return cycles;
}

bool is_exact_cycle(const Cycle& c, int n) {
    if (c.size() != static_cast<std::size_t>(n) || n < 1) return false;
    const auto orbit = iterate(c.front(), static_cast<std::size_t>(n));
    if (orbit.undefined_at || orbit.points.size() != c.size() + 1) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!(orbit.points[i] == c[i])) return false;
    }
    if (!(orbit.points.back() == c.front())) return false;
    for (int d : proper_divisors(n)) {
        if (orbit.points[static_cast<std::size_t>(d)] == c.front()) return false;
    }
    return true;
}

const char* census_status_name(CensusStatus s) {
    switch (s) {
    case CensusStatus::agree: return "agree";
    case CensusStatus::exempt: return "exempt";
    case CensusStatus::disagree: return "disagree";
    }
    return "?";
}

std::set<std::uint64_t> default_exempt_primes(int n) {
    if (n == 3) return {2, 3, 7, 13, 31};
    if (n == 4) return {2, 3, 5, 17};
    return {2, 3};
}

double census_work(std::uint64_t lo, std::uint64_t hi, int n) {
    double work = 0;
    for (std::uint64_t p = std::max<std::uint64_t>(lo, 5); p <= hi; ++p) {
        if (is_prime(p)) work += static_cast<double>(p) * static_cast<double>(p) * (n + 2);
    }
    return work;
}

CycleReport census_row(std::uint64_t p, int n, const std::set<std::uint64_t>& exempt) {
    CycleReport row;
    row.p = p;
    row.n = n;
    const auto cycles = find_cycles(p, n);
    for (const auto& c : cycles) {
        if (!is_exact_cycle(c, n)) throw VerificationFailure("find_cycles returned a non-cycle at p = " + std::to_string(p));
    }
    row.cycle_count = cycles.size();
    row.exists = !cycles.empty();
    if (row.exists) row.witness = cycles.front();
    row.predicted = predicted_period(p, n);
    row.factor_root = factor_root_exists(p, n);
    row.agrees = row.exists == row.predicted && row.predicted == row.factor_root;
    row.status = row.agrees ? CensusStatus::agree : exempt.count(p) != 0 ? CensusStatus::exempt : CensusStatus::disagree;
    return row;
}

std::vector<CycleReport> census(std::uint64_t lo, std::uint64_t hi, int n, const CensusOptions& opts) {
    if (n != 3 && n != 4) throw ArgumentError("census: period must be 3 or 4");
    if (lo > hi) throw ArgumentError("census: empty prime range");
    if (hi > 46340) throw ArgumentError("census: primes above 46340 are not supported");
    const double work = census_work(lo, hi, n);
    if (work > opts.max_work) {
        std::ostringstream os;
        os << "census range too large: about " << work << " table operations (limit " << opts.max_work << ")";
        throw ArgumentError(os.str());
    }
    const auto exempt = opts.exempt.empty() ? default_exempt_primes(n) : opts.exempt;

    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = std::max<std::uint64_t>(lo, 5); p <= hi; ++p) {
        if (is_prime(p)) primes.push_back(p);
    }
    std::vector<CycleReport> rows(primes.size());
    std::atomic<std::size_t> cursor{0};
    std::vector<std::exception_ptr> errors(primes.size());
    const auto worker = [&] {
        for (std::size_t i = cursor++; i < primes.size(); i = cursor++) {
            try {
                rows[i] = census_row(primes[i], n, exempt);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::max(1U, opts.threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rows;
}

CensusSummary summarize(const std::vector<CycleReport>& rows) {
    CensusSummary s;
    for (const auto& r : rows) {
        switch (r.status) {
        case CensusStatus::agree: ++s.agree; break;
        case CensusStatus::exempt: ++s.exempt; break;
        case CensusStatus::disagree: ++s.disagree; break;
        }
    }
    return s;
}

} // namespace pappus
