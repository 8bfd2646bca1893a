#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pappus/rational.hpp"

namespace pappus {

/// Seeded source of small rationals n/d with |n| <= max_num, 1 <= d <= max_den.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, long max_num = 9, long max_den = 9)
        : rng_(seed), num_(-max_num, max_num), den_(1, max_den) {}

    Rational next() {
        const long n = num_(rng_);
        return Rational(n, den_(rng_));
    }
    /// Same as next() but never zero.
    Rational nonzero() {
        for (;;) {
            Rational r = next();
            if (!r.is_zero()) return r;
        }
    }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<long> num_;
    std::uniform_int_distribution<long> den_;
};

struct TrialRecord {
    std::size_t index = 0;
    std::string input;
    bool ok = false;
    bool skipped = false;
    std::string detail;
};

struct VerifyReport {
    std::string target;
    std::uint64_t seed = 0;
    std::size_t trials = 0, passed = 0, failed = 0, skipped = 0;
    std::vector<TrialRecord> records;
    std::vector<std::pair<std::string, std::string>> facts; ///< summary values (name, value)

    bool ok() const { return failed == 0 && passed > 0; }
    std::optional<TrialRecord> first_failure() const;

    void add(TrialRecord r);
    void fact(std::string name, std::string value) { facts.emplace_back(std::move(name), std::move(value)); }
};

struct VerifyOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 20240601;
};

/// pappus, steiner, leisenring, conics, involution, alpha, beta.
const std::vector<std::string>& verify_targets();

/// Throws ArgumentError for an unknown target.
VerifyReport verify(std::string_view target, const VerifyOptions& opts = {});

VerifyReport verify_pappus(const VerifyOptions& opts);
VerifyReport verify_steiner(const VerifyOptions& opts);
VerifyReport verify_leisenring(const VerifyOptions& opts);
VerifyReport verify_conics(const VerifyOptions& opts);
VerifyReport verify_involution(const VerifyOptions& opts);
VerifyReport verify_alpha(const VerifyOptions& opts);
VerifyReport verify_beta(const VerifyOptions& opts);

/// Pencil labels q for which tau carries C_q into itself, found as the common
/// rational roots of q -> C_q(tau(P_q(t))) over the sampled t; line-pair members
/// are dropped. Expected: {2/7}.
std::vector<Rational> tau_invariant_labels(const std::vector<Rational>& ts);

} // namespace pappus
