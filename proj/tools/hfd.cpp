// hfd — exact d-invariants of positive surgeries on L-space knots and the
// Owens-Strle fillability obstruction.
//
// Subcommands:
//   alex      Alexander polynomial, genus, torsion and V sequences
//   dinv      d-invariant table of one surgery
//   obstruct  fillability verdict for one surgery
//   scan      verdicts over a parameter range (deterministic, parallel)
//   verify    self-verification suite
//
// Exit codes: 0 success, 1 usage error, 2 validation error, 3 verify failure.

#include <hfd/format.hpp>
#include <hfd/knot.hpp>
#include <hfd/obstruction.hpp>
#include <hfd/scan.hpp>
#include <hfd/surgery.hpp>
#include <hfd/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace hfd;

// Flat key=value config file mirroring the long flags ("family=custom",
// "q=4..50", ...).  '#' and ';' start comments.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file \"" + path + "\"");
    auto trim = [](const std::string& s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        out.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return out;
}

// Applies a config file by appending "--key value" for every key the command
// line did not set, so flags always win.  The pretzel/alexander pair is
// skipped wholesale once either appears on the command line.
std::vector<std::string> merge_config_args(std::vector<std::string> args) {
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            config_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            config_path = args[i].substr(9);
    }
    if (config_path.empty()) return args;

    const std::vector<std::string> given = args;
    auto cli_has = [&](const std::string& flag) {
        return std::any_of(given.begin(), given.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
    };
    bool knot_given = cli_has("--pretzel") || cli_has("--alexander");
    for (const auto& [key, value] : read_config_file(config_path)) {
        if (key == "config") continue;
        if (knot_given && (key == "pretzel" || key == "alexander")) continue;
        if (cli_has("--" + key)) continue;
        args.push_back("--" + key);
        args.push_back(value);
    }
    return args;
}

struct KnotArgs {
    long long pretzel_q = 0;
    std::string alexander;

    KnotModel build() const {
        if (pretzel_q != 0) return KnotModel::pretzel(pretzel_q);
        return KnotModel::from_polynomial("custom", parse_laurent(alexander));
    }
};

// --pretzel / --alexander, exactly one required unless optional.
void add_knot_options(CLI::App* sub, KnotArgs& args, bool required = true) {
    auto* group = sub->add_option_group("knot");
    group->add_option("--pretzel", args.pretzel_q,
                      "pretzel knot P(-2,3,2q+1), q >= 1")
        ->check(CLI::PositiveNumber);
    group->add_option("--alexander", args.alexander,
                      "symmetrized Alexander polynomial, e.g. \"t - 1 + t^-1\"");
    if (required)
        group->require_option(1);
    else
        group->require_option(0, 1);
}

std::string join_ints(const KnotModel& k, Int (KnotModel::*fn)(long long) const) {
    std::string out;
    for (long long s = 0; s <= k.genus(); ++s) {
        if (!out.empty()) out += ' ';
        out += (k.*fn)(s).str();
    }
    return out;
}

int cmd_alex(const KnotArgs& args, OutputFormat format) {
    KnotModel k = args.build();
    switch (format) {
    case OutputFormat::text:
        std::cout << "knot: " << k.label() << "\n"
                  << "alexander: " << k.alexander() << "\n"
                  << "genus: " << k.genus() << "\n"
                  << "torsion: " << join_ints(k, &KnotModel::torsion) << "\n"
                  << "V: " << join_ints(k, &KnotModel::V) << "\n";
        break;
    case OutputFormat::json: {
        json j;
        j["knot"] = k.label();
        j["alexander"] = k.alexander().str();
        j["genus"] = k.genus();
        json torsion = json::array(), v = json::array();
        for (long long s = 0; s <= k.genus(); ++s) {
            torsion.push_back(k.torsion(s).convert_to<long long>());
            v.push_back(k.V(s).convert_to<long long>());
        }
        j["torsion"] = std::move(torsion);
        j["V"] = std::move(v);
        std::cout << j.dump(2) << "\n";
        break;
    }
    case OutputFormat::csv:
        std::cout << "s,torsion,V\n";
        for (long long s = 0; s <= k.genus(); ++s)
            std::cout << s << "," << k.torsion(s) << "," << k.V(s) << "\n";
        break;
    }
    return 0;
}

int cmd_dinv(const KnotArgs& args, const std::string& slope_text, OutputFormat format) {
    KnotModel k = args.build();
    Slope slope = Slope::parse(slope_text);
    DInvariantTable t = table(k, slope);
    Rational max4d = Rational(4) * t.max_d();
    switch (format) {
    case OutputFormat::text:
        std::cout << "knot: " << t.knot_label << "   slope: " << t.slope.str() << "\n";
        for (std::size_t i = 0; i < t.entries.size(); ++i)
            std::cout << i << "\t" << t.entries[i] << "\n";
        std::cout << "max d: " << t.max_d() << "   max 4d: " << max4d << "\n";
        break;
    case OutputFormat::json:
        std::cout << table_json(t).dump(2) << "\n";
        break;
    case OutputFormat::csv:
        write_table_csv(std::cout, t);
        // keep stdout machine-readable; the summary goes to stderr
        std::cerr << "max d: " << t.max_d() << "   max 4d: " << max4d << "\n";
        break;
    }
    return 0;
}

void print_verdict_text(const Verdict& v, const KnotModel& k) {
    std::cout << "knot:       " << v.knot_label << "\n"
              << "slope:      " << v.slope.str() << "\n"
              << "delta:      " << v.delta << " (order of H_1; square-free: "
              << (v.delta_squarefree ? "yes" : "no") << ")\n"
              << "L-space:    " << (v.lspace ? "yes" : "no") << " (slope "
              << (v.lspace ? ">=" : "<") << " 2*genus - 1 = " << 2 * k.genus() - 1 << ")\n"
              << "max 4d:     " << v.max4d << "\n"
              << "threshold:  " << v.threshold << " (Owens-Strle bound, "
              << (v.delta % 2 == 1 ? "odd" : "even") << " delta)\n"
              << "conclusion: " << to_string(v.conclusion) << "\n";
    if (v.conclusion == Conclusion::NO_WEAK_FILLING) {
        std::cout
            << "\nThe surgered manifold is an L-space, so by Ozsvath-Szabo any weak\n"
               "symplectic semi-filling has connected boundary and b_2^+ = 0, hence is\n"
               "negative-definite.  delta is square-free and max 4d < threshold, so the\n"
               "Owens-Strle theorem rules out negative-definite fillings.  Therefore the\n"
               "manifold admits no weakly symplectically fillable contact structure (and\n"
               "no weak symplectic semi-filling at all).\n";
    } else {
        std::cout << "\nThe obstruction does not apply:\n";
        if (!v.delta_squarefree)
            std::cout << "  - delta " << v.delta << " is not square-free\n";
        if (!(v.max4d < v.threshold))
            std::cout << "  - max 4d = " << v.max4d << " is not below the threshold "
                      << v.threshold << "\n";
        if (!v.lspace)
            std::cout << "  - the slope is below the L-space range 2*genus - 1\n";
        std::cout << "No conclusion about fillability follows.\n";
    }
}

int cmd_obstruct(const KnotArgs& args, const std::string& slope_text, OutputFormat format) {
    KnotModel k = args.build();
    Slope slope = Slope::parse(slope_text);
    Verdict v = obstruct(k, slope);
    switch (format) {
    case OutputFormat::text:
        print_verdict_text(v, k);
        break;
    case OutputFormat::json:
        std::cout << verdict_json(v).dump(2) << "\n";
        break;
    case OutputFormat::csv:
        std::cout << kScanCsvHeader << "\n"
                  << csv_cell(v.knot_label) << "," << v.slope.str() << "," << v.delta << ","
                  << (v.delta_squarefree ? "true" : "false") << ","
                  << (v.lspace ? "true" : "false") << "," << v.max4d.fraction_str() << ","
                  << v.threshold.fraction_str() << "," << to_string(v.conclusion) << "\n";
        break;
    }
    return 0;
}

int cmd_scan(ScanConfig cfg, const KnotArgs& knot, const std::string& q_range,
             const std::string& p_range, const std::string& expr_text) {
    if (knot.pretzel_q != 0) cfg.pretzel_q = knot.pretzel_q;
    if (!knot.alexander.empty()) cfg.alexander = knot.alexander;

    char param = 'q';
    std::string range = q_range;
    switch (cfg.family) {
    case ScanFamily::pretzel_integral:
        if (q_range.empty()) throw std::invalid_argument("scan: pretzel_integral needs --q A..B");
        break;
    case ScanFamily::pretzel_rational_on_q3:
        if (p_range.empty())
            throw std::invalid_argument("scan: pretzel_rational_on_q3 needs --p A..B");
        param = 'p';
        range = p_range;
        break;
    case ScanFamily::custom:
        if (q_range.empty() == p_range.empty())
            throw std::invalid_argument("scan: custom family needs exactly one of --q/--p");
        if (q_range.empty()) {
            param = 'p';
            range = p_range;
        }
        break;
    }
    std::tie(cfg.lo, cfg.hi) = parse_range(range);

    cfg.slope_expr = expr_text.empty() ? ScanConfig::default_expr(cfg.family)
                                       : SlopeExpr(expr_text);
    if (cfg.slope_expr.var() != '\0' && cfg.slope_expr.var() != param)
        throw std::invalid_argument(std::string("scan: slope expression uses variable '") +
                                    cfg.slope_expr.var() + "' but the range parameter is '" +
                                    param + "'");
    run_scan(cfg, std::cout);
    return 0;
}

int cmd_verify(const std::string& only, const std::vector<std::string>& ranges) {
    VerifyOptions opt;
    for (const std::string& spec : ranges) {
        auto eq = spec.find('=');
        if (eq == std::string::npos || eq != 1)
            throw std::invalid_argument("bad --range \"" + spec + "\", expected q=A..B, p=A..B "
                                        "or k=A..B");
        auto [lo, hi] = parse_range(spec.substr(2));
        switch (spec[0]) {
        case 'q':
            opt.q_lo = lo;
            opt.q_hi = hi;
            opt.det_q_lo = lo;
            opt.det_q_hi = hi;
            opt.vt_q = hi;
            opt.cross_q = std::min<long long>(hi, 10);
            break;
        case 'p':
            opt.p_lo = lo;
            opt.p_hi = hi;
            break;
        case 'k':
            opt.k_lo = lo;
            opt.k_hi = hi;
            break;
        default:
            throw std::invalid_argument("bad --range parameter '" + spec.substr(0, 1) +
                                        "', expected q, p or k");
        }
    }
    std::vector<CheckResult> results = run_verify(opt, only);
    std::size_t failed = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        if (!r.pass) {
            std::cout << "     " << r.failure << "\n";
            ++failed;
        }
    }
    if (failed > 0) {
        std::cout << failed << " of " << results.size() << " checks failed\n";
        return 3;
    }
    std::cout << "all " << results.size() << " checks passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Heegaard Floer d-invariants of positive surgeries on L-space knots\n"
                 "and the Owens-Strle obstruction to weak symplectic fillability."};
    app.require_subcommand(1);

    std::string format_text = "text";
    std::string config_file;
    auto add_config = [&](CLI::App* sub) {
        sub->add_option("--config", config_file,
                        "flat key=value file mirroring the flags; command-line flags win");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "output format")
            ->check(CLI::IsMember({"csv", "json", "text"}))
            ->capture_default_str();
    };

    // alex
    auto* alex = app.add_subcommand("alex", "Alexander polynomial, genus, torsion and V sequences");
    KnotArgs alex_knot;
    add_knot_options(alex, alex_knot);
    add_format(alex);
    add_config(alex);

    // dinv
    auto* dinv = app.add_subcommand("dinv", "d-invariant table of one surgery");
    KnotArgs dinv_knot;
    std::string dinv_slope;
    add_knot_options(dinv, dinv_knot);
    dinv->add_option("--slope", dinv_slope, "surgery slope g/h or integer n")->required();
    add_format(dinv);
    add_config(dinv);

    // obstruct
    auto* obs = app.add_subcommand("obstruct", "fillability verdict for one surgery");
    KnotArgs obs_knot;
    std::string obs_slope;
    add_knot_options(obs, obs_knot);
    obs->add_option("--slope", obs_slope, "surgery slope g/h or integer n")->required();
    add_format(obs);
    add_config(obs);

    // scan
    auto* scan = app.add_subcommand("scan", "verdicts over a parameter range");
    ScanConfig scan_cfg;
    KnotArgs scan_knot;
    std::string scan_family = "pretzel_integral";
    std::string scan_q, scan_p, scan_expr;
    std::string scan_format = "csv";
    scan->add_option("--family", scan_family, "pretzel_integral | pretzel_rational_on_q3 | custom")
        ->check(CLI::IsMember({"pretzel_integral", "pretzel_rational_on_q3", "custom"}))
        ->capture_default_str();
    scan->add_option("--q", scan_q, "q range A..B (pretzel_integral, custom)");
    scan->add_option("--p", scan_p, "p range A..B (pretzel_rational_on_q3, custom)");
    scan->add_option("--slope-expr", scan_expr,
                     "slope as a function of the parameter, e.g. \"2q+3\" or \"(10p+1)/p\"");
    add_knot_options(scan, scan_knot, /*required=*/false);
    scan->add_option("--format", scan_format, "output format")
        ->check(CLI::IsMember({"csv", "json", "text"}))
        ->capture_default_str();
    scan->add_option("--jobs", scan_cfg.jobs, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_config(scan);

    // verify
    auto* verify = app.add_subcommand("verify", "run the self-verification suite");
    std::string verify_only;
    std::vector<std::string> verify_ranges;
    verify->add_option("--only", verify_only, "run a single named check");
    verify->add_option("--range", verify_ranges,
                       "narrow a sweep, e.g. q=4..20, p=1..30, k=1..10 (repeatable)");
    add_config(verify);

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = merge_config_args(std::move(args));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::reverse(args.begin(), args.end()); // CLI11 takes the vector reversed
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*alex) return cmd_alex(alex_knot, output_format_from_string(format_text));
        if (*dinv) return cmd_dinv(dinv_knot, dinv_slope, output_format_from_string(format_text));
        if (*obs) return cmd_obstruct(obs_knot, obs_slope, output_format_from_string(format_text));
        if (*scan) {
            scan_cfg.family = scan_family_from_string(scan_family);
            scan_cfg.format = output_format_from_string(scan_format);
            return cmd_scan(scan_cfg, scan_knot, scan_q, scan_p, scan_expr);
        }
        if (*verify) return cmd_verify(verify_only, verify_ranges);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
