#include "gmfq/cli.hpp"

#include "gmfq/arith.hpp"
#include "gmfq/coeffs.hpp"
#include "gmfq/curves.hpp"
#include "gmfq/density.hpp"
#include "gmfq/errors.hpp"
#include "gmfq/integrality.hpp"
#include "gmfq/io.hpp"
#include "gmfq/measures.hpp"
#include "gmfq/series.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>

namespace gmfq {

namespace {

int thread_count() {
    const char* env = std::getenv("GMF_THREADS");
    if (!env) return 1;
    try {
        return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
        return 1;
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw DataError("cannot open output file: " + path);
    return os;
}

std::string fmt_endpoint(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string interval_id(const Interval& I) {
    return std::string(I.lo_closed ? "[" : "(") + fmt_endpoint(I.lo) + ".." +
           fmt_endpoint(I.hi) + (I.hi_closed ? "]" : ")");
}

struct IntervalArgs {
    std::vector<double> endpoints; // LO HI when present
    bool open_lo = false, open_hi = false;

    bool given() const { return !endpoints.empty(); }
    Interval build() const {
        return Interval::make(endpoints[0], endpoints[1], !open_lo, !open_hi);
    }
};

// Adds --interval LO HI with the endpoint-openness flags; --closed is an
// explicit assertion of the default and conflicts with the open flags.
void add_interval_options(CLI::App* cmd, IntervalArgs& args, bool required) {
    auto* opt = cmd->add_option("--interval", args.endpoints, "interval endpoints LO HI")
                    ->expected(2);
    if (required) opt->required();
    auto* lo = cmd->add_flag("--open-lo", args.open_lo, "exclude the lower endpoint");
    auto* hi = cmd->add_flag("--open-hi", args.open_hi, "exclude the upper endpoint");
    auto* closed = cmd->add_flag("--closed", "include both endpoints (the default)");
    closed->excludes(lo)->excludes(hi);
    lo->needs(opt);
    hi->needs(opt);
    closed->needs(opt);
}

struct DensityArgs {
    std::string curve_path, out_path, sign, norm = "b1";
    long long bound = 0, mod = 0, res = 0;
    std::vector<long long> checkpoints;
    IntervalArgs interval;
    bool reproducible = false;
    bool mod_given = false;
    bool norm_given = false;
};

int cmd_density(const DensityArgs& a) {
    const CurveSpec spec = load_curve(a.curve_path);
    if (a.sign.empty() == !a.interval.given())
        throw std::invalid_argument("density: give exactly one of --sign or --interval");

    const CoefficientTable table =
        CoefficientTable::build(spec.curve, a.bound, spec.ap_overrides, thread_count());
    const MeasureKind kind =
        spec.curve.is_cm() ? MeasureKind::DeuringCM : MeasureKind::SatoTate;

    PredicateSpec pred;
    if (!a.sign.empty()) {
        const SignClass cls = a.sign == "pos"   ? SignClass::Positive
                              : a.sign == "neg" ? SignClass::Negative
                                                : SignClass::Zero;
        pred.id = "sign_" + a.sign;
        pred.theoretical = theoretical_sign_density(kind, cls);
        pred.pred = [cls](long long, long long b) {
            const long long num = 1 - b;
            switch (cls) {
            case SignClass::Positive: return num > 0;
            case SignClass::Negative: return num < 0;
            default: return num == 0;
            }
        };
    } else {
        const Interval I = a.interval.build();
        if (!I.inside_unit())
            throw std::invalid_argument("density: interval must lie inside [-1, 1]");
        if (a.mod_given) {
            if (spec.curve.is_cm())
                throw std::invalid_argument(
                    "density: the arithmetic-progression refinement applies to non-CM "
                    "eigenforms only");
            if (a.norm_given && a.norm == "b1")
                throw std::invalid_argument(
                    "density: --mod counts c_1(p); drop --norm b1");
            if (a.mod < 1) throw std::invalid_argument("density: --mod must be >= 1");
            const long long res = ((a.res % a.mod) + a.mod) % a.mod;
            if (std::gcd(res, a.mod) != 1)
                throw std::invalid_argument("density: --res must be coprime to --mod");
            pred.id = "c1_in_" + interval_id(I) + "_mod" + std::to_string(a.mod) + "_res" +
                      std::to_string(res);
            pred.theoretical = st_mass(I) / static_cast<double>(euler_phi(a.mod));
            const long long q = a.mod;
            pred.pred = [I, q, res](long long p, long long b) {
                return p % q == res && scaled_in_interval(1 - b, p, I);
            };
        } else {
            const bool use_b1 = a.norm == "b1";
            pred.id = a.norm + "_in_" + interval_id(I);
            if (spec.curve.is_cm()) {
                if (!use_b1)
                    throw std::invalid_argument(
                        "density: for CM curves the c_1 interval law needs the restricted "
                        "interval rule; use the cm-interval command");
                pred.theoretical = cm_mass(I);
            } else {
                pred.theoretical = st_mass(I);
            }
            pred.pred = [I, use_b1](long long p, long long b) {
                return scaled_in_interval(use_b1 ? b : 1 - b, p, I);
            };
        }
    }

    const auto checkpoints =
        a.checkpoints.empty() ? default_checkpoints(a.bound) : a.checkpoints;
    const DensityReport report = convergence_report(table, checkpoints, pred);

    auto os = open_out(a.out_path);
    write_density_csv(os, report, !a.reproducible);

    const DensityRow& last = report.rows.back();
    std::cout << pred.id << " at x = " << last.x << ": ratio " << format_double(last.ratio)
              << " vs " << format_double(last.theoretical) << " (deviation "
              << format_double(last.deviation) << ")\n";
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args) {
    CLI::App app{"exact q-exponents c(n) of the weight-0 generalized modular function "
                 "attached to a rational weight-2 eigenform, with empirical density and "
                 "integrality checks"};
    app.name("gmfq");
    app.require_subcommand(1);

    // ---- ap-compute ----
    std::string ac_curve, ac_out;
    long long ac_bound = 0;
    auto* ap_cmd = app.add_subcommand("ap-compute", "point-count a_p for good primes");
    ap_cmd->add_option("--curve", ac_curve, "curve JSON file")->required();
    ap_cmd->add_option("--bound", ac_bound, "prime bound")->required()
        ->check(CLI::PositiveNumber);
    ap_cmd->add_option("--out", ac_out, "output CSV path")->required();

    // ---- coeffs ----
    std::string co_curve, co_cache;
    long long co_bound = 0;
    auto* co_cmd = app.add_subcommand("coeffs", "build and cache b(n), c(n) for n <= N");
    co_cmd->add_option("--curve", co_curve, "curve JSON file")->required();
    co_cmd->add_option("--bound", co_bound, "table bound N")->required()
        ->check(CLI::PositiveNumber);
    co_cmd->add_option("--cache", co_cache, "cache file to write")->required();

    // ---- density ----
    DensityArgs da;
    auto* de_cmd = app.add_subcommand("density", "empirical densities against the "
                                                 "theoretical measures");
    de_cmd->add_option("--curve", da.curve_path, "curve JSON file")->required();
    de_cmd->add_option("--bound", da.bound, "prime bound x")->required()
        ->check(CLI::PositiveNumber);
    de_cmd->add_option("--sign", da.sign, "sign class of c(p)")
        ->check(CLI::IsMember({"pos", "neg", "zero"}));
    add_interval_options(de_cmd, da.interval, false);
    auto* norm_opt = de_cmd->add_option("--norm", da.norm, "normalization for --interval")
                         ->check(CLI::IsMember({"b1", "c1"}));
    auto* mod_opt = de_cmd->add_option("--mod", da.mod, "arithmetic-progression modulus");
    auto* res_opt = de_cmd->add_option("--res", da.res, "residue class for --mod");
    mod_opt->needs(res_opt);
    res_opt->needs(mod_opt);
    de_cmd->add_option("--checkpoints", da.checkpoints, "comma-separated checkpoint list")
        ->delimiter(',');
    de_cmd->add_option("--out", da.out_path, "output CSV path")->required();
    de_cmd->add_flag("--reproducible", da.reproducible, "suppress the timestamp comment");

    // ---- cm-interval ----
    std::string cm_curve;
    long long cm_bound = 0;
    IntervalArgs cm_interval;
    auto* cm_cmd = app.add_subcommand("cm-interval", "restricted-interval c_1 law for CM "
                                                     "curves");
    cm_cmd->add_option("--curve", cm_curve, "curve JSON file")->required();
    cm_cmd->add_option("--bound", cm_bound, "prime bound x")->required()
        ->check(CLI::PositiveNumber);
    add_interval_options(cm_cmd, cm_interval, true);

    // ---- integrality ----
    std::string in_curve, in_out;
    long long in_bound = 0;
    bool in_reproducible = false;
    auto* in_cmd = app.add_subcommand("integrality", "scan for integral nonzero c(p)");
    in_cmd->add_option("--curve", in_curve, "curve JSON file")->required();
    in_cmd->add_option("--bound", in_bound, "scan bound x")->required()
        ->check(CLI::PositiveNumber);
    in_cmd->add_option("--out", in_out, "output JSON path")->required();
    in_cmd->add_flag("--reproducible", in_reproducible, "suppress the timestamp field");

    // ---- verify-series ----
    std::string vs_curve;
    long long vs_order = 0;
    auto* vs_cmd = app.add_subcommand("verify-series", "check the logarithmic-derivative "
                                                       "round trip exactly");
    vs_cmd->add_option("--curve", vs_curve, "curve JSON file")->required();
    vs_cmd->add_option("--order", vs_order, "truncation order N")->required()
        ->check(CLI::PositiveNumber);

    // ---- report ----
    std::string re_in, re_format, re_out;
    auto* re_cmd = app.add_subcommand("report", "re-emit a density CSV as csv or json");
    re_cmd->add_option("--in", re_in, "input CSV path")->required();
    re_cmd->add_option("--format", re_format, "output format")->required()
        ->check(CLI::IsMember({"csv", "json"}));
    re_cmd->add_option("--out", re_out, "output path (stdout when omitted)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (ap_cmd->parsed()) {
            const CurveSpec spec = load_curve(ac_curve);
            const ApTable table = ap_table(spec.curve, ac_bound, thread_count());
            auto os = open_out(ac_out);
            write_ap_csv(os, table);
            std::cout << "wrote " << table.size() << " good-prime a_p values to " << ac_out
                      << "\n";
        } else if (co_cmd->parsed()) {
            const CurveSpec spec = load_curve(co_curve);
            const CoefficientTable table =
                CoefficientTable::build(spec.curve, co_bound, spec.ap_overrides,
                                        thread_count());
            auto os = open_out(co_cache);
            write_coeff_cache(os, table, spec.curve.label());
            std::cout << "cached b(n), c(n) for n <= " << co_bound << " at " << co_cache
                      << "\n";
        } else if (de_cmd->parsed()) {
            da.mod_given = mod_opt->count() > 0;
            da.norm_given = norm_opt->count() > 0;
            return cmd_density(da);
        } else if (cm_cmd->parsed()) {
            const CurveSpec spec = load_curve(cm_curve);
            if (!spec.curve.is_cm())
                throw std::invalid_argument(
                    "cm-interval: curve has no cm_discriminant; use density --interval");
            const CoefficientTable table =
                CoefficientTable::build(spec.curve, cm_bound, spec.ap_overrides,
                                        thread_count());
            const Interval I = cm_interval.build();
            const auto [empirical, theoretical] = cm_interval_density(table, cm_bound, I);
            std::cout << "interval: " << interval_id(I) << "\n"
                      << "x: " << cm_bound << "\n"
                      << "empirical: " << format_double(empirical) << "\n"
                      << "theoretical: " << format_double(theoretical) << "\n"
                      << "deviation: " << format_double(std::abs(empirical - theoretical))
                      << "\n";
        } else if (in_cmd->parsed()) {
            const CurveSpec spec = load_curve(in_curve);
            const CoefficientTable table =
                CoefficientTable::build(spec.curve, in_bound, spec.ap_overrides,
                                        thread_count());
            const IntegralityResult result = scan(table, in_bound);
            auto os = open_out(in_out);
            write_integrality_json(os, result, spec.curve.label(), !in_reproducible);
            std::cout << "nonzero integral c(p): " << result.nonzero_integral.size()
                      << " prime(s); zero set: " << result.zero_set.size()
                      << " prime(s) up to " << in_bound << "\n";
        } else if (vs_cmd->parsed()) {
            const CurveSpec spec = load_curve(vs_curve);
            const CoefficientTable table =
                CoefficientTable::build(spec.curve, vs_order, spec.ap_overrides,
                                        thread_count());
            const RoundTrip rt = roundtrip_verify(table, vs_order);
            if (!rt.ok) {
                std::cerr << "round trip mismatch at coefficient " << rt.first_mismatch
                          << "\n";
                return 3;
            }
            std::cout << "round trip exact through order " << vs_order << "\n";
        } else if (re_cmd->parsed()) {
            std::ifstream is(re_in);
            if (!is) throw DataError("report input not found: " + re_in);
            if (re_out.empty()) {
                convert_report(is, std::cout, re_format);
            } else {
                auto os = open_out(re_out);
                convert_report(is, os, re_format);
            }
        }
        return 0;
    } catch (const VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace gmfq
