#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pillai/campaigns.hpp"
#include "pillai/pillai.hpp"
#include "pillai/version.hpp"

namespace {

using pillai::cli::Report;

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write the report to this path as well");
}

std::string render(const Report& rep, const std::string& format) {
    if (format == "json") return rep.to_json().dump(2) + "\n";
    if (format == "csv") return rep.to_csv();
    return rep.to_text();
}

int emit(const Report& rep, const OutputOptions& opts) {
    const std::string body = render(rep, opts.format);
    std::cout << body;
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path);
        if (!f) {
            std::cerr << "error: cannot write " << opts.out_path << "\n";
            return 2;
        }
        f << body;
    }
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified solver and verifier for prime-power Pillai equations"};
    app.set_version_flag("--version", pillai::artifact_version);
    app.set_config("--config", "", "Flat key=value config file (section per subcommand)");
    app.require_subcommand(1);

    // solve
    pillai::cli::SolveConfig solve_cfg;
    OutputOptions solve_out;
    std::string sa, sb, sc, sr = "1", ss = "1";
    std::optional<unsigned long> sxmax, symax;
    auto* solve = app.add_subcommand("solve", "Enumerate solutions of one instance");
    solve->add_option("--a", sa, "Base a (>= 2)")->required();
    solve->add_option("--b", sb, "Base b (>= 2)")->required();
    solve->add_option("--c", sc, "Right side c (>= 1)")->required();
    solve->add_option("--r", sr, "Coefficient r");
    solve->add_option("--s", ss, "Coefficient s");
    solve->add_option("--x-max", sxmax, "Bounded mode: x ceiling");
    solve->add_option("--y-max", symax, "Bounded mode: y ceiling");
    add_output_options(solve, solve_out);

    // scan
    pillai::cli::ScanConfig scan_cfg;
    OutputOptions scan_out;
    auto* scan = app.add_subcommand("scan", "Scan prime pairs for triples with many solutions");
    scan->add_option("--primes", scan_cfg.prime_limit, "Upper bound for the primes")
        ->capture_default_str();
    scan->add_option("--c", scan_cfg.c_limit, "Upper bound for c")->capture_default_str();
    scan->add_option("--threshold", scan_cfg.threshold, "Minimum solution count to report")
        ->capture_default_str();
    scan->add_option("--workers", scan_cfg.workers, "Worker threads")->capture_default_str();
    add_output_options(scan, scan_out);

    // special
    pillai::cli::SpecialConfig special_cfg;
    OutputOptions special_out;
    std::string sp_p, sp_pmax;
    auto* special = app.add_subcommand("special", "Solve one auxiliary equation (L2..L7)");
    special->add_option("tag", special_cfg.tag, "Equation tag L2..L7")->required();
    special->add_option("--d-max", special_cfg.d_max, "L2: D window")->capture_default_str();
    special->add_option("--w-max", special_cfg.w_max, "L4: w window")->capture_default_str();
    special->add_option("--r-max", special_cfg.r_max, "Exponent window (0 = tag default)");
    special->add_option("--p", sp_p, "L3/L5: single odd prime p");
    special->add_option("--p-max", sp_pmax, "L3/L5: sweep odd primes up to here");
    add_output_options(special, special_out);

    // bound
    pillai::cli::BoundConfig bound_cfg;
    OutputOptions bound_out;
    std::string ba, bb, bc;
    auto* bound = app.add_subcommand("bound", "Exponent-bound certificate for a^x - b^y = c");
    bound->add_option("--a", ba)->required();
    bound->add_option("--b", bb)->required();
    bound->add_option("--c", bc)->required();
    add_output_options(bound, bound_out);

    // theorem4
    pillai::cli::Theorem4Config t4_cfg;
    OutputOptions t4_out;
    std::string t4c, t4range, t4xmax = "1000";
    auto* t4 = app.add_subcommand("theorem4", "Check the x^2 + C = y^n exponent bound");
    t4->add_option("--c", t4c, "Single even C");
    t4->add_option("--c-range", t4range, "Range lo..hi of even C");
    t4->add_option("--x-max", t4xmax, "x search ceiling")->capture_default_str();
    add_output_options(t4, t4_out);

    // verify-tables
    pillai::cli::TablesConfig tables_cfg;
    OutputOptions tables_out;
    std::string fermat_max = "65537", mersenne_max = "8191";
    auto* tables = app.add_subcommand("verify-tables", "Re-derive the exception tables");
    tables->add_option("--fermat-max", fermat_max, "Largest Fermat prime window")
        ->capture_default_str();
    tables->add_option("--mersenne-max", mersenne_max, "Largest Mersenne prime window")
        ->capture_default_str();
    tables->add_option("--n-max", tables_cfg.windows.n_max, "3^n family window")
        ->capture_default_str();
    tables->add_option("--t-max", tables_cfg.windows.t_max, "2^t family window")
        ->capture_default_str();
    tables->add_option("--lemma9-t-max", tables_cfg.lemma9_t_max, "Fermat/Mersenne family t window")
        ->capture_default_str();
    add_output_options(tables, tables_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (solve->parsed()) {
            solve_cfg.a = mpz_class(sa);
            solve_cfg.b = mpz_class(sb);
            solve_cfg.c = mpz_class(sc);
            solve_cfg.r = mpz_class(sr);
            solve_cfg.s = mpz_class(ss);
            solve_cfg.x_max = sxmax;
            solve_cfg.y_max = symax;
            return emit(pillai::cli::run_solve(solve_cfg), solve_out);
        }
        if (scan->parsed()) return emit(pillai::cli::run_scan(scan_cfg), scan_out);
        if (special->parsed()) {
            if (!sp_p.empty()) special_cfg.p = mpz_class(sp_p);
            if (!sp_pmax.empty()) special_cfg.p_max = mpz_class(sp_pmax);
            return emit(pillai::cli::run_special(special_cfg), special_out);
        }
        if (bound->parsed()) {
            bound_cfg.a = mpz_class(ba);
            bound_cfg.b = mpz_class(bb);
            bound_cfg.c = mpz_class(bc);
            return emit(pillai::cli::run_bound(bound_cfg), bound_out);
        }
        if (t4->parsed()) {
            if (!t4c.empty()) {
                t4_cfg.c = mpz_class(t4c);
            } else if (!t4range.empty()) {
                auto dots = t4range.find("..");
                if (dots == std::string::npos)
                    throw std::invalid_argument("--c-range must look like 2..500");
                t4_cfg.c_range_lo = mpz_class(t4range.substr(0, dots));
                t4_cfg.c_range_hi = mpz_class(t4range.substr(dots + 2));
            } else {
                throw std::invalid_argument("theorem4 needs --c or --c-range");
            }
            t4_cfg.x_max = mpz_class(t4xmax);
            return emit(pillai::cli::run_theorem4(t4_cfg), t4_out);
        }
        if (tables->parsed()) {
            tables_cfg.windows.fermat_max = mpz_class(fermat_max);
            tables_cfg.windows.mersenne_max = mpz_class(mersenne_max);
            return emit(pillai::cli::run_verify_tables(tables_cfg), tables_out);
        }
    } catch (const pillai::certification_unavailable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
