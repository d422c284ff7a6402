// ambig: verify ambiguous class numbers of quadratic fields.
//
//   ambig verify --disc -20
//   ambig scan --min -1000 --max -3 --format csv --out neg.csv
//   ambig classgroup --disc -23
//   ambig pell --disc 8

#include "ambig/ambiguity.hpp"
#include "ambig/forms.hpp"
#include "ambig/pell.hpp"
#include "ambig/scan.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

using namespace ambig;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

int bad_input(const std::string& msg) {
    std::cerr << "error: " << msg << '\n';
    return kBadInput;
}

int cmd_verify(std::int64_t disc, const VerifyOptions& opt) {
    try {
        validate_discriminant(disc);
    } catch (const NotFundamental& e) {
        return bad_input(e.what());
    }
    VerificationReport r = verify_discriminant(disc, opt);
    std::string ramified;
    for (std::size_t i = 0; i < r.ramified.size(); ++i) ramified += (i ? ", " : "") + std::to_string(r.ramified[i]);
    std::cout << "delta            " << r.delta << '\n'
              << "h                " << r.h << '\n'
              << "h_narrow         " << r.h_narrow << '\n'
              << "t                " << r.t << '\n'
              << "ramified primes  " << ramified << '\n'
              << "norm_eps         " << r.norm_eps << '\n'
              << "idx_Q            " << r.idx_Q << '\n'
              << "idx_E            " << r.idx_E << '\n'
              << "idx_coh          " << r.idx_coh << '\n'
              << "am               " << r.am_actual << " (predicted " << r.am_predicted << ")\n"
              << "amst             " << r.amst_actual << " (predicted " << r.amst_predicted << ")\n";
    for (const auto& [name, ok] : r.checks.named()) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
    }
    std::cout << "elapsed_ms       " << format_ms(r.elapsed_ms, true) << '\n';
    return r.checks.all() ? kPass : kFail;
}

int cmd_scan(ScanConfig cfg, const std::string& out_path) {
    if (cfg.min_delta > cfg.max_delta) {
        return bad_input("empty range: min " + std::to_string(cfg.min_delta) + " > max " +
                         std::to_string(cfg.max_delta));
    }
    if (scan_discriminants(cfg).empty()) return bad_input("no fundamental discriminants in range");
    std::ofstream file;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file) return bad_input("cannot write " + out_path);
    }
    std::ostream& out = file.is_open() ? file : std::cout;
    ScanSummary s = run_scan(cfg, out, &std::cerr);
    if (file.is_open()) {
        file.close();
        if (!file) return bad_input("write to " + out_path + " failed");
    }
    std::cerr << "scanned " << s.written << "/" << s.total << ", failures " << s.failures << ", errors " << s.errors
              << ", " << format_ms(s.elapsed_ms, true) << " ms\n";
    return s.ok() ? kPass : kFail;
}

int cmd_classgroup(std::int64_t disc) {
    ClassGroup cg = class_group(disc);
    const FinAbGroup& G = cg.wide();
    auto line = [](const FinAbGroup& g, std::vector<QForm> reps) {
        // by |a|, then |b|, positive b first
        std::sort(reps.begin(), reps.end(), [](const QForm& x, const QForm& y) {
            if (cmpabs(x.a, y.a) != 0) return cmpabs(x.a, y.a) < 0;
            if (cmpabs(x.b, y.b) != 0) return cmpabs(x.b, y.b) < 0;
            return x.b > y.b;
        });
        std::string s = (g.is_trivial() ? std::string("trivial") : g.to_string()) + "; representatives ";
        for (std::size_t i = 0; i < reps.size(); ++i) s += (i ? ", " : "") + reps[i].to_string();
        return s;
    };
    std::vector<QForm> wide_reps;
    for (const Element& e : G.elements()) wide_reps.push_back(cg.wide_rep(e));
    if (disc < 0) {
        std::cout << line(G, cg.representatives()) << '\n';
    } else {
        std::cout << line(G, wide_reps) << '\n';
        std::cout << "narrow " << line(cg.narrow(), cg.representatives()) << '\n';
    }
    return kPass;
}

int cmd_pell(std::int64_t disc) {
    if (disc <= 0) return bad_input("pell needs a positive discriminant, got " + std::to_string(disc));
    QuadInt eps = fundamental_unit(disc);
    std::cout << eps.to_string() << ", norm " << eps.norm() << '\n';
    return kPass;
}

std::optional<SignFilter> parse_sign(const std::string& s) {
    if (s == "neg" || s == "negative") return SignFilter::Negative;
    if (s == "pos" || s == "positive") return SignFilter::Positive;
    if (s == "both") return SignFilter::Both;
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ambiguous and strongly ambiguous class groups of quadratic fields"};
    app.require_subcommand(1);

    std::int64_t disc = 0;
    std::string factor_bound;
    auto add_factor_bound = [&](CLI::App* sub) {
        sub->add_option("--factor-bound", factor_bound, "largest integer the factoring routine accepts");
    };

    auto* verify = app.add_subcommand("verify", "run every check for one discriminant");
    verify->add_option("--disc", disc, "fundamental discriminant")->required();
    add_factor_bound(verify);

    ScanConfig cfg;
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
    std::optional<std::int64_t> min_delta, max_delta;
    std::string sign = "both", format = "csv", out_path;
    bool no_timing = false;
    auto* scan = app.add_subcommand("scan", "verify every fundamental discriminant in a range");
    scan->add_option("--min", min_delta, "smallest discriminant (default -10000)");
    scan->add_option("--max", max_delta, "largest discriminant (default 5000)");
    scan->add_option("--sign", sign, "neg, pos or both")->capture_default_str();
    scan->add_option("--format", format, "csv or jsonl")->capture_default_str();
    scan->add_option("--out", out_path, "output file (default stdout)");
    scan->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    scan->add_flag("--fail-fast", cfg.fail_fast, "stop at the first failing discriminant");
    scan->add_flag("--no-timing", no_timing, "write 0 for ms_elapsed so output is reproducible");
    add_factor_bound(scan);

    auto* classgroup = app.add_subcommand("classgroup", "print the class group and reduced forms");
    classgroup->add_option("--disc", disc, "fundamental discriminant")->required();

    auto* pell = app.add_subcommand("pell", "print the fundamental unit");
    pell->add_option("--disc", disc, "positive fundamental discriminant")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kBadInput;
    }

    VerifyOptions opt;
    if (!factor_bound.empty()) {
        try {
            opt.limits.max_value = Int(factor_bound);
        } catch (const std::invalid_argument&) {
            return bad_input("--factor-bound must be an integer");
        }
        if (sgn(opt.limits.max_value) <= 0) return bad_input("--factor-bound must be positive");
    }

    try {
        if (*verify) return cmd_verify(disc, opt);
        if (*scan) {
            auto s = parse_sign(sign);
            if (!s) return bad_input("--sign must be neg, pos or both");
            if (format != "csv" && format != "jsonl") return bad_input("--format must be csv or jsonl");
            cfg.sign = *s;
            cfg.format = format == "csv" ? Format::Csv : Format::Jsonl;
            cfg.timing = !no_timing;
            cfg.verify = opt;
            if (min_delta) cfg.min_delta = *min_delta;
            if (max_delta) cfg.max_delta = *max_delta;
            return cmd_scan(cfg, out_path);
        }
        if (*classgroup) return cmd_classgroup(disc);
        if (*pell) return cmd_pell(disc);
    } catch (const NotFundamental& e) {
        return bad_input(e.what());
    } catch (const NegativeDiscriminant& e) {
        return bad_input(e.what());
    } catch (const FactorizationTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kBadInput;
}
