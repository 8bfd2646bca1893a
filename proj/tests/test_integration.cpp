#include <catch_amalgamated.hpp>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "pappus/census.hpp"
#include "pappus/conic.hpp"
#include "pappus/pappus.hpp"
#include "pappus/verify.hpp"
#include "support.hpp"

using namespace pappus;
using Q = Rational;
using nlohmann::json;

namespace {

json run_json(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    REQUIRE(cli::run(args, out, err) == 0);
    return json::parse(out.str());
}

Fp parse_fp(const PrimeField& f, const json& v) { return f(v.get<std::int64_t>()); }

} // namespace

TEST_CASE("repeated Steiner structures follow the orbit of the map") {
    std::mt19937_64 rng(101);
    int chains = 0;
    for (int i = 0; i < 40; ++i) {
        const Q r = test::rand_rational(rng), s = test::rand_rational(rng);
        try {
            auto c = standard_config(r, s);
            auto z = signature(c);
            for (int k = 0; k < 3; ++k) {
                c = steiner_structure(c);
                z = ps_map(z);
                REQUIRE(signature(c) == z);
            }
            ++chains;
        } catch (const Error&) {
            // degenerate somewhere along the chain
        }
    }
    CHECK(chains > 20);
}

TEST_CASE("Steiner chain over F_p") {
    const PrimeField f(1009);
    std::mt19937_64 rng(5);
    int chains = 0;
    for (int i = 0; i < 40; ++i) {
        try {
            auto c = standard_config(test::rand_fp(rng, f), test::rand_fp(rng, f));
            auto z = signature(c);
            for (int k = 0; k < 2; ++k) {
                c = steiner_structure(c);
                z = ps_map(z);
                REQUIRE(signature(c) == z);
            }
            ++chains;
        } catch (const Error&) {
        }
    }
    CHECK(chains > 20);
}

TEST_CASE("census witnesses from the command line are genuine cycles") {
    std::ostringstream out, err;
    REQUIRE(cli::run({"census", "--from", "37", "--to", "200", "--period", "4", "--threads", "2"}, out, err) == 0);
    std::istringstream in(out.str());
    int witnesses = 0;
    for (std::string line; std::getline(in, line);) {
        const json row = json::parse(line);
        if (!row.contains("p") || row["witness"].is_null()) continue;
        const PrimeField f(row["p"].get<std::uint64_t>());
        Cycle c;
        for (const auto& pt : row["witness"]) c.push_back({parse_fp(f, pt[0]), parse_fp(f, pt[1])});
        REQUIRE(is_exact_cycle(c, 4));
        REQUIRE(ps_map(c.back()) == c.front());
        ++witnesses;
    }
    CHECK(witnesses > 5);
}

TEST_CASE("signature from the command line matches a geometric Steiner construction") {
    const json j = run_json({"signature", "-r", "5/2", "-s", "-3"});
    const auto c = standard_config(Q(5, 2), Q(-3));
    const auto z = signature(steiner_structure(c));
    CHECK(j["steiner_geometric"][0] == to_string(z.x));
    CHECK(j["steiner_geometric"][1] == to_string(z.y));
}

TEST_CASE("points of C_{2/7} map to C_{-1/4} and their fibre is closed under tau") {
    const ConicPencil<Q> pencil{Q(1)};
    const Conic<Q> image = pencil.conic_through(Q(-1, 4));
    std::mt19937_64 rng(8);
    int checked = 0;
    for (int i = 0; i < 30; ++i) {
        const Q t = test::rand_rational(rng);
        try {
            const ProjPoint2<Q> p = pencil.point_on_conic(Q(2, 7), t);
            if (p[2].is_zero()) continue;
            const SigPoint<Q> z{p[0] / p[2], p[1] / p[2]};
            const SigPoint<Q> w = ps_map(z);
            REQUIRE(image.contains(ProjPoint2<Q>(w.x, w.y, Q(1))));
            const auto fibre = preimages(w);
            const bool has_z = std::any_of(fibre.points.begin(), fibre.points.end(), [&](const auto& u) { return u == z; });
            REQUIRE(has_z);
            if (!fibre.ramified) {
                const SigPoint<Q> tz = involution(z);
                const bool has_tz =
                    std::any_of(fibre.points.begin(), fibre.points.end(), [&](const auto& u) { return u == tz; });
                REQUIRE(has_tz);
            }
            ++checked;
        } catch (const Error&) {
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("every verification suite passes") {
    for (const auto& target : verify_targets()) {
        INFO(target);
        const VerifyReport r = verify(target, VerifyOptions{40, 77});
        CHECK(r.ok());
        CHECK(r.trials == r.passed + r.failed + r.skipped);
    }
}
