#include "iwa/checker.hpp"
#include "iwa/curve_db.hpp"
#include "iwa/invariants.hpp"
#include "iwa/lseries.hpp"
#include "iwa/quad_field.hpp"
#include "iwa/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace iwa;

namespace {

struct Common {
    std::string curve;
    std::string curve_file;
    long depth = RunConfig{}.depth;
    long coeff_prec = RunConfig{}.coeff_prec;
    long max_terms = RunConfig{}.max_terms;
    unsigned threads = 0;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--curve", c.curve, "Bundled label or a1,a2,a3,a4,a6")->required();
    app->add_option("--curve-file", c.curve_file, "Extra curve table searched before the bundled one");
    app->add_option("--depth", c.depth, "Mazur-Tate level n")->check(CLI::PositiveNumber);
    app->add_option("--coeff-prec", c.coeff_prec, "Digits claimed for T^k, k >= 1")->check(CLI::Range(2, 1000));
    app->add_option("--max-terms", c.max_terms, "Series coefficients kept");
    app->add_option("--threads", c.threads, "Worker threads (0: all cores)");
}

RunConfig make_config(const Common& c) {
    RunConfig cfg;
    cfg.depth = c.depth;
    cfg.coeff_prec = c.coeff_prec;
    cfg.max_terms = c.max_terms;
    cfg.threads = c.threads;
    if (const char* env = std::getenv("IWACHECK_THREADS")) {
        try {
            cfg.threads = static_cast<unsigned>(std::stoul(env));
        } catch (const std::logic_error&) {
            fail(ErrorKind::InvalidInput, "IWACHECK_THREADS must be a nonnegative integer");
        }
    }
    validate(cfg);
    return cfg;
}

CurveRecord lookup(const Common& c) {
    if (!c.curve_file.empty()) {
        for (auto& r : load_curve_file(c.curve_file))
            if (r.label == c.curve) return r;
    }
    return resolve_curve(c.curve);
}

Mode pick_mode(const std::string& name, const WeierstrassCurve& E, long p) {
    if (name != "auto") return parse_mode(name);
    if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidInput, std::to_string(p) + " is not an odd prime");
    return mod(ap(E, p), p) == 0 ? Mode::Supersingular : Mode::Ordinary;
}

int cmd_check(const Common& c, long d, long p, const std::string& mode_arg, const std::string& format) {
    RunConfig cfg = make_config(c);
    CurveRecord rec = lookup(c);
    CurveSymbols cs(rec.curve(), cfg.index_bound, cfg.numeric_digits);
    Report r;
    r.curve = rec.label;
    r.d = d;
    r.p = p;
    r.mode = pick_mode(mode_arg, cs.curve(), p);
    r.config = cfg;
    r.verdict = run_check(cs, d, p, r.mode, cfg);
    if (format == "json") std::cout << to_json(r).dump(2) << "\n";
    else std::cout << render_text(r);
    return exit_code(r.verdict.conclusion);
}

int cmd_scan(const Common& c, long dmax, long pmax, const std::string& mode_arg, const std::string& format,
             const std::string& log_path) {
    RunConfig cfg = make_config(c);
    CurveRecord rec = lookup(c);
    CurveSymbols cs(rec.curve(), cfg.index_bound, cfg.numeric_digits);
    ScanResult s = scan(cs, dmax, pmax, parse_mode(mode_arg), cfg);
    if (format == "json") std::cout << scan_to_json(rec.label, dmax, pmax, cfg, s).dump(2) << "\n";
    else if (format == "csv") std::cout << render_scan_csv(s);
    else std::cout << render_scan_table(s);
    if (!log_path.empty()) {
        std::ofstream f(log_path);
        if (!f) fail(ErrorKind::InvalidInput, "cannot write " + log_path);
        f << render_scan_log(s);
    }
    return 0;
}

void print_invariants(const PAdicSeries& s) {
    InvariantReport r = mu_lambda(s);
    std::cout << "mu = " << (r.mu_lower_bound ? ">= " : "") << r.mu << ", lambda = ";
    if (r.lambda) std::cout << *r.lambda;
    else std::cout << "unresolved";
    std::cout << ", ord_T >= " << r.ord_T_lower << (r.reliable ? "" : " (unreliable: " + r.reason + ")") << "\n";
}

int cmd_lfun(const Common& c, long p, long twist_d, const std::string& sign) {
    RunConfig cfg = make_config(c);
    CurveRecord rec = lookup(c);
    CurveSymbols cs(rec.curve(), cfg.index_bound, cfg.numeric_digits);
    const long D = twist_d ? discriminant_of(twist_d) : 1;
    if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidInput, std::to_string(p) + " is not an odd prime");
    const long a = twisted_ap(cs.curve(), p, D);
    std::cout << rec.label << (D == 1 ? "" : " twisted by " + std::to_string(D)) << ", p = " << p << ", a_p = " << a
              << "\n";
    if (mod(a, p) != 0) {
        PAdicSeries s = ordinary_lseries(cs, p, D, cfg);
        std::cout << render_series(s);
        print_invariants(s);
        return 0;
    }
    if (sign == "alpha") {
        auto pair = lp_alpha_supersingular(cs.symbol(CurveSymbols::sign_for(D)), cs.curve(), p, cfg.depth, D,
                                           cfg.coeff_prec);
        const QuadSeries& q = pair.first;
        for (std::size_t k = 0; k < q.coeffs.size() && k < static_cast<std::size_t>(cfg.max_terms); ++k)
            std::cout << "T^" << k << ": (" << q.coeffs[k].a().to_string() << ") + (" << q.coeffs[k].b().to_string()
                      << ")*alpha\n";
        return 0;
    }
    auto [plus, minus] = signed_lseries(cs, p, D, cfg);
    const PAdicSeries& s = sign == "minus" ? minus : plus;
    std::cout << "sign " << sign << "\n" << render_series(s);
    print_invariants(s);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks Mazur's growth-number hypotheses for elliptic curves over imaginary quadratic fields"};
    app.require_subcommand(1);
    Common common;

    long d = 0, p = 0, dmax = 100, pmax = 100, twist_d = 0;
    std::string mode = "auto", scan_mode = "supersingular", format = "text", scan_format = "table", log_path;
    std::string sign = "plus";

    auto* check = app.add_subcommand("check", "Run one checklist");
    add_common(check, common);
    check->add_option("--d", d, "K = Q(sqrt(-d))")->required()->check(CLI::PositiveNumber);
    check->add_option("--prime", p, "The prime p")->required();
    check->add_option("--mode", mode)->check(CLI::IsMember({"ordinary", "supersingular", "sc", "auto"}));
    check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* scan_cmd = app.add_subcommand("scan", "Scan prime pairs (p, d)");
    add_common(scan_cmd, common);
    scan_cmd->add_option("--dmax", dmax, "Primes d < dmax");
    scan_cmd->add_option("--pmax", pmax, "Primes p < pmax");
    scan_cmd->add_option("--mode", scan_mode)->check(CLI::IsMember({"ordinary", "supersingular", "sc"}));
    scan_cmd->add_option("--format", scan_format)->check(CLI::IsMember({"table", "csv", "json"}));
    scan_cmd->add_option("--log", log_path, "Write the per-cell log here");

    auto* lfun = app.add_subcommand("lfun", "Print a p-adic L-series");
    add_common(lfun, common);
    lfun->add_option("--prime", p, "The prime p")->required();
    lfun->add_option("--twist-d", twist_d, "Twist by the discriminant of Q(sqrt(-d))")->check(CLI::PositiveNumber);
    lfun->add_option("--sign", sign, "Supersingular branch")->check(CLI::IsMember({"alpha", "plus", "minus"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (check->parsed()) return cmd_check(common, d, p, mode, format);
        if (scan_cmd->parsed()) return cmd_scan(common, dmax, pmax, scan_mode, scan_format, log_path);
        return cmd_lfun(common, p, twist_d, sign);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
}
