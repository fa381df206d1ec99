#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "pillai/pillai.hpp"

namespace pillai {

// One expected row: the instance, its full expected solution set, and the
// identity chain it renders to (e.g. "2^2 + 3^2 = 2^4 - 3 = 2^8 - 3^5 = 13").
struct TableRow {
    mpz_class p, q, c;
    std::vector<PillaiSolution> expected;
    std::string identity;
    std::string family;       // empty for sporadic rows
    std::string skip_reason;  // nonempty when the family parameter is not instantiable
};

struct TableCheck {
    TableRow row;
    bool verified = false;
    bool skipped = false;  // family parameter with composite q
    std::string note;      // diff on mismatch, reason on skip
};

struct TableReport {
    std::vector<TableCheck> checks;
    std::size_t verified = 0;
    std::size_t skipped = 0;
    std::size_t failed = 0;
    bool pass = false;
};

struct FamilyWindows {
    mpz_class fermat_max = 65537;   // F > 5 Fermat primes up to here
    mpz_class mersenne_max = 8191;  // M > 3 Mersenne primes up to here
    unsigned n_max = 10;            // 3^n +- 2 family, n in 2..n_max
    unsigned t_max = 10;            // 2^t +- 3 family, t in 2..t_max
};

/// The 13 sporadic rows of the exception table, with full solution sets.
std::vector<TableRow> theorem3_sporadic_rows();

/// Family rows instantiated over the windows. Window members whose q is
/// composite are included with skip_reason set.
std::vector<TableRow> theorem3_family_rows(const FamilyWindows& w);

/// Expected three solutions for one Fermat/Mersenne family member:
/// family in {"M+2", "2M+1", "F-2", "2F-1"}, parameterized by t.
TableRow mf_family_row(const std::string& family, unsigned long t);

/// Re-enumerate every row and compare against the expected sets.
TableReport verify_theorem3_table(const FamilyWindows& w = {});

/// The four Fermat/Mersenne families alone, over 2 <= t <= t_max.
TableReport verify_lemma9_families(unsigned t_max);

}
