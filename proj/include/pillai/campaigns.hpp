#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

#include "pillai/report.hpp"
#include "pillai/tables.hpp"

namespace pillai::cli {

struct SolveConfig {
    mpz_class a, b, c;
    mpz_class r = 1, s = 1;
    std::optional<unsigned long> x_max;  // both present => bounded mode
    std::optional<unsigned long> y_max;
};

struct ScanConfig {
    unsigned prime_limit = 30;
    unsigned long c_limit = 200;
    unsigned threshold = 3;
    unsigned workers = 1;
};

struct SpecialConfig {
    std::string tag;          // L2..L7
    unsigned d_max = 100;     // L2
    unsigned w_max = 60;      // L4
    unsigned r_max = 0;       // 0 = per-tag default
    std::optional<mpz_class> p;  // L3/L5 single prime
    mpz_class p_max = 97;        // L3/L5 sweep when p absent
};

struct Theorem4Config {
    std::optional<mpz_class> c;
    mpz_class c_range_lo = 0, c_range_hi = 0;  // used when c absent
    mpz_class x_max = 1000;
};

struct BoundConfig {
    mpz_class a, b, c;
};

struct TablesConfig {
    FamilyWindows windows;
    unsigned lemma9_t_max = 16;
};

Report run_solve(const SolveConfig& cfg);
Report run_scan(const ScanConfig& cfg);
Report run_special(const SpecialConfig& cfg);
Report run_theorem4(const Theorem4Config& cfg);
Report run_bound(const BoundConfig& cfg);
Report run_verify_tables(const TablesConfig& cfg);

}
