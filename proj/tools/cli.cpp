#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "pappus/census.hpp"
#include "pappus/dynamics.hpp"
#include "pappus/pappus.hpp"
#include "pappus/ps_map.hpp"
#include "pappus/verify.hpp"

namespace pappus::cli {
namespace {

using nlohmann::json;

// rational | real | fp:<p>
struct FieldChoice {
    std::string name = "rational";
    std::optional<PrimeField> fp;
};

FieldChoice parse_field(const std::string& text) {
    FieldChoice f;
    f.name = text;
    if (text == "rational" || text == "real") return f;
    if (text.rfind("fp:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            std::size_t used = 0;
            p = std::stoull(text.substr(3), &used);
            if (used != text.size() - 3) throw std::invalid_argument(text);
        } catch (const std::logic_error&) {
            throw ArgumentError("bad prime in field selector '" + text + "'");
        }
        f.fp.emplace(p);
        return f;
    }
    throw ArgumentError("unknown field '" + text + "' (expected rational, real or fp:<p>)");
}

template <class F>
json value(const F& a) {
    if constexpr (std::is_same_v<F, Real>) {
        return a;
    } else {
        return to_string(a);
    }
}

template <class F>
json point(const SigPoint<F>& z) {
    return json::array({value(z.x), value(z.y)});
}

// Calls fn(parse) with parse: string -> F for the chosen field.
template <class Fn>
int with_field(const FieldChoice& f, Fn&& fn) {
    if (f.fp) {
        const PrimeField field = *f.fp;
        return fn([field](const std::string& s) { return field.parse(s); });
    }
    if (f.name == "real") return fn([](const std::string& s) { return parse_scalar<Real>(s); });
    return fn([](const std::string& s) { return parse_scalar<Rational>(s); });
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// --- subcommands ------------------------------------------------------------

int cmd_signature(const FieldChoice& field, const std::string& r_text, const std::string& s_text, std::ostream& out) {
    return with_field(field, [&](auto parse) {
        const auto r = parse(r_text);
        const auto s = parse(s_text);
        using F = std::decay_t<decltype(r)>;
        const PappusConfig<F> cfg = standard_config(r, s);
        const Signature<F> sig = signature(cfg);
        json j{{"r", value(r)}, {"s", value(s)}, {"signature", point(sig)}};
        if (on_diagonal(sig)) {
            j["steiner_geometric"] = nullptr;
            j["steiner_formula"] = nullptr;
            j["note"] = "x = y: the Steiner structure and the map are undefined";
            emit(out, j);
            return int(ok);
        }
        const Signature<F> formula = ps_map(sig);
        j["steiner_formula"] = point(formula);
        if (steiner_degenerate(r, s)) {
            j["steiner_geometric"] = nullptr;
            j["note"] = "r^2 - r + 1 = s^2 - s + 1 = 0: the Steiner points are undefined";
            emit(out, j);
            return int(ok);
        }
        const Signature<F> geometric = signature(steiner_structure(cfg));
        j["steiner_geometric"] = point(geometric);
        j["agree"] = geometric.same_as(formula);
        emit(out, j);
        return j["agree"].get<bool>() ? int(ok) : int(verification_failed);
    });
}

int cmd_iterate(const FieldChoice& field, const std::string& x_text, const std::string& y_text, std::size_t n,
                std::ostream& out, std::ostream& err) {
    return with_field(field, [&](auto parse) {
        using F = decltype(parse(x_text));
        const SigPoint<F> start{parse(x_text), parse(y_text)};
        if (on_diagonal(start)) {
            err << "start point " << start << " lies on x = y, where the map is undefined\n";
            return int(domain_error);
        }
        const Orbit<F> orbit = iterate(start, n);
        for (std::size_t k = 0; k < orbit.points.size(); ++k) {
            emit(out, {{"step", k}, {"point", point(orbit.points[k])},
                       {"stratum", stratum_name(stratum(orbit.points[k]))}});
        }
        if (orbit.undefined_at) {
            emit(out, {{"step", *orbit.undefined_at + 1}, {"undefined", true},
                       {"note", "the previous point lies on x = y"}});
        }
        return int(ok);
    });
}

int cmd_preimage(const FieldChoice& field, const std::string& x_text, const std::string& y_text, std::ostream& out) {
    return with_field(field, [&](auto parse) {
        using F = decltype(parse(x_text));
        const SigPoint<F> w{parse(x_text), parse(y_text)};
        const PreimageSet<F> pre = preimages(w);
        json pts = json::array();
        for (const auto& z : pre.points) pts.push_back(point(z));
        json j{{"point", point(w)}, {"preimages", pts}, {"count", pre.points.size()}, {"ramified", pre.ramified}};
        if (!pre.note.empty()) j["note"] = pre.note;
        emit(out, j);
        return int(ok);
    });
}

int cmd_verify(const std::string& target, std::size_t trials, std::uint64_t seed, bool records, std::ostream& out) {
    const VerifyReport rep = verify(target, VerifyOptions{trials, seed});
    if (records) {
        for (const auto& r : rep.records) {
            json j{{"index", r.index}, {"input", r.input}, {"ok", r.ok}};
            if (r.skipped) j["skipped"] = true;
            if (!r.detail.empty()) j["detail"] = r.detail;
            emit(out, j);
        }
    }
    json summary{{"target", rep.target}, {"seed", rep.seed},     {"trials", rep.trials}, {"passed", rep.passed},
                 {"failed", rep.failed}, {"skipped", rep.skipped}, {"ok", rep.ok()}};
    for (const auto& [k, v] : rep.facts) summary["facts"][k] = v;
    if (auto f = rep.first_failure()) summary["first_failure"] = {{"input", f->input}, {"detail", f->detail}};
    emit(out, summary);
    return rep.ok() ? int(ok) : int(verification_failed);
}

int cmd_census(std::uint64_t lo, std::uint64_t hi, int n, const std::string& format, const CensusOptions& opts,
               std::ostream& out, std::ostream& err) {
    if (n != 3 && n != 4) throw ArgumentError("--period must be 3 or 4");
    if (format != "json" && format != "csv") throw ArgumentError("--format must be json or csv");
    const auto rows = census(lo, hi, n, opts);
    const auto cycle_json = [](const Cycle& c) {
        json a = json::array();
        for (const auto& z : c) a.push_back({z.x.residue(), z.y.residue()});
        return a;
    };
    if (format == "csv") out << "p,n,exists,predicted,factor_root,cycles,status,witness\r\n";
    for (const auto& r : rows) {
        if (format == "json") {
            json j{{"p", r.p},
                   {"n", r.n},
                   {"exists", r.exists},
                   {"predicted", r.predicted},
                   {"factor_root", r.factor_root},
                   {"cycles", r.cycle_count},
                   {"status", census_status_name(r.status)}};
            j["witness"] = r.witness ? cycle_json(*r.witness) : json(nullptr);
            emit(out, j);
        } else {
            std::string w;
            if (r.witness) {
                for (const auto& z : *r.witness) {
                    w += (w.empty() ? "" : " ") + ("[" + z.x.str() + "," + z.y.str() + "]");
                }
            }
            out << r.p << ',' << r.n << ',' << r.exists << ',' << r.predicted << ',' << r.factor_root << ','
                << r.cycle_count << ',' << census_status_name(r.status) << ",\"" << w << "\"\r\n";
        }
    }
    const CensusSummary s = summarize(rows);
    const json summary{{"summary", {{"agree", s.agree}, {"exempt", s.exempt}, {"disagree", s.disagree}}}};
    emit(format == "json" ? out : err, summary);
    return s.disagree == 0 ? int(ok) : int(verification_failed);
}

int cmd_raster(const Region& region, const RasterOptions& ropts, const OrbitParams& params, const std::string& pgm,
               const std::string& csv, std::ostream& out) {
    const Raster r = raster(region, ropts, params);
    const auto write = [](const std::string& path, auto&& writer) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ArgumentError("cannot open '" + path + "' for writing");
        writer(f);
    };
    if (!pgm.empty()) write(pgm, [&](std::ostream& os) { write_pgm(os, r); });
    if (!csv.empty()) write(csv, [&](std::ostream& os) { write_csv(os, r); });
    json counts;
    for (auto l : {OrbitLabel::diverged, OrbitLabel::origin_attractor, OrbitLabel::two_point_attractor,
                   OrbitLabel::other_periodic, OrbitLabel::undefined_hit, OrbitLabel::unresolved}) {
        counts[label_name(l)] = r.count(l);
    }
    emit(out, {{"width", r.width}, {"height", r.height}, {"counts", counts}});
    return int(ok);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pappus-Steiner map toolkit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string field_text = "rational";
    std::uint64_t seed = VerifyOptions{}.seed;

    auto* sig = app.add_subcommand("signature", "signature of C(r,s) and of its Steiner structure");
    std::string r_text, s_text;
    sig->add_option("-r", r_text, "cross-ratio r")->required();
    sig->add_option("-s", s_text, "cross-ratio s")->required();
    sig->add_option("--field", field_text, "rational | real | fp:<p>");

    auto* it = app.add_subcommand("iterate", "forward orbit of [x, y]");
    std::string x_text, y_text;
    std::size_t steps = 10;
    it->add_option("-x", x_text)->required();
    it->add_option("-y", y_text)->required();
    it->add_option("-n", steps, "number of steps");
    it->add_option("--field", field_text, "rational | real | fp:<p>");

    auto* pre = app.add_subcommand("preimage", "preimages of [x, y]");
    pre->add_option("-x", x_text)->required();
    pre->add_option("-y", y_text)->required();
    pre->add_option("--field", field_text, "rational | real | fp:<p>");

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string target;
    std::size_t trials = VerifyOptions{}.trials;
    bool no_records = false;
    ver->add_option("target", target, "pappus | steiner | leisenring | conics | involution | alpha | beta")->required();
    ver->add_option("--trials", trials);
    ver->add_option("--seed", seed);
    ver->add_flag("--summary-only", no_records, "omit per-trial records");

    auto* cen = app.add_subcommand("census", "cycle census over F_p against the congruence criteria");
    std::uint64_t lo = 37, hi = 300;
    int period = 3;
    std::string format = "json";
    CensusOptions copts;
    std::vector<std::uint64_t> exempt;
    cen->add_option("--from", lo);
    cen->add_option("--to", hi);
    cen->add_option("--period", period, "3 or 4");
    cen->add_option("--format", format, "json | csv");
    cen->add_option("--threads", copts.threads);
    cen->add_option("--max-work", copts.max_work, "refuse runs above this many field operations");
    cen->add_option("--exempt", exempt, "exempt primes (default depends on the period)")->delimiter(',');

    auto* ras = app.add_subcommand("raster", "classify orbits on a grid of starting points");
    Region region;
    RasterOptions ropts;
    OrbitParams params;
    std::string pgm, csv;
    ras->add_option("--xmin", region.xmin);
    ras->add_option("--xmax", region.xmax);
    ras->add_option("--ymin", region.ymin);
    ras->add_option("--ymax", region.ymax);
    ras->add_option("--width", ropts.width);
    ras->add_option("--height", ropts.height);
    ras->add_option("--max-pixels", ropts.max_pixels);
    ras->add_option("--threads", ropts.threads);
    ras->add_option("--max-iter", params.max_iter);
    ras->add_option("--escape", params.escape_radius);
    ras->add_option("--tol", params.attractor_tol);
    ras->add_option("--undefined-tol", params.undefined_tol);
    ras->add_option("--window", params.window);
    ras->add_option("--second-x", params.second_x, "second point of the two-point attractor");
    ras->add_option("--out", pgm, "PGM (P5) output path");
    ras->add_option("--csv", csv, "CSV output path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return usage_error;
    }

    try {
        if (*sig) return cmd_signature(parse_field(field_text), r_text, s_text, out);
        if (*it) return cmd_iterate(parse_field(field_text), x_text, y_text, steps, out, err);
        if (*pre) return cmd_preimage(parse_field(field_text), x_text, y_text, out);
        if (*ver) return cmd_verify(target, trials, seed, !no_records, out);
        if (*cen) {
            copts.exempt.insert(exempt.begin(), exempt.end());
            return cmd_census(lo, hi, period, format, copts, out, err);
        }
        if (*ras) return cmd_raster(region, ropts, params, pgm, csv, out);
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const StructureError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const VerificationFailure& e) {
        err << "verification failure: " << e.what() << '\n';
        return verification_failed;
    } catch (const Error& e) {
        err << "domain error: " << e.what() << '\n';
        return domain_error;
    }
    return usage_error;
}

} // namespace pappus::cli
