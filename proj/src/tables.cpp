#include "pillai/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pillai/arith.hpp"

namespace pillai {

using arith::is_prime;

namespace {

std::string identity_chain(const PillaiInstance& inst, const std::vector<PillaiSolution>& sols) {
    std::ostringstream os;
    for (const auto& s : sols) os << solution_string(inst, s) << " = ";
    os << inst.c;
    return os.str();
}

TableRow make_row(long p, long q, const mpz_class& c, const std::string& family,
                  std::vector<PillaiSolution> sols) {
    TableRow row;
    row.p = p;
    row.q = q;
    row.c = c;
    row.family = family;
    row.expected = std::move(sols);
    PillaiInstance inst(row.p, row.q, row.c);
    for (const auto& s : row.expected)
        if (!check_solution(inst, s))
            throw std::logic_error("table fixture row does not satisfy its equation: " +
                                   identity_chain(inst, {s}));
    row.identity = identity_chain(inst, row.expected);
    return row;
}

}  // namespace

std::vector<TableRow> theorem3_sporadic_rows() {
    std::vector<TableRow> rows;
    rows.push_back(make_row(2, 3, 1, "", {{1, 0, 0, 1}, {1, 1, 1, 0}, {2, 1, 0, 1}, {3, 2, 1, 0}}));
    rows.push_back(make_row(2, 3, 5, "",
                            {{2, 0, 0, 0}, {1, 1, 0, 0}, {3, 1, 0, 1}, {2, 2, 1, 0}, {5, 3, 0, 1}}));
    rows.push_back(make_row(2, 3, 7, "", {{3, 0, 0, 1}, {2, 1, 0, 0}, {1, 2, 1, 0}, {4, 2, 0, 1}}));
    rows.push_back(make_row(2, 3, 11, "", {{3, 1, 0, 0}, {1, 2, 0, 0}, {4, 3, 1, 0}}));
    rows.push_back(make_row(2, 3, 13, "", {{2, 2, 0, 0}, {4, 1, 0, 1}, {8, 5, 0, 1}}));
    rows.push_back(make_row(2, 3, 17, "", {{4, 0, 0, 0}, {3, 2, 0, 0}, {6, 4, 1, 0}}));
    rows.push_back(make_row(2, 5, 3, "",
                            {{1, 0, 0, 0}, {2, 0, 0, 1}, {1, 1, 1, 0}, {3, 1, 0, 1}, {7, 3, 0, 1}}));
    rows.push_back(make_row(2, 5, 7, "", {{3, 0, 0, 1}, {1, 1, 0, 0}, {5, 2, 0, 1}}));
    rows.push_back(make_row(2, 5, 9, "", {{3, 0, 0, 0}, {2, 1, 0, 0}, {4, 2, 1, 0}}));
    rows.push_back(make_row(2, 11, 7, "", {{3, 0, 0, 1}, {2, 1, 1, 0}, {7, 2, 0, 1}}));
    rows.push_back(make_row(3, 5, 2, "", {{0, 0, 0, 0}, {1, 0, 0, 1}, {1, 1, 1, 0}, {3, 2, 0, 1}}));
    rows.push_back(make_row(3, 5, 4, "", {{1, 0, 0, 0}, {0, 1, 1, 0}, {2, 1, 0, 1}}));
    rows.push_back(make_row(3, 13, 10, "", {{2, 0, 0, 0}, {1, 1, 1, 0}, {7, 3, 1, 0}}));
    return rows;
}

TableRow mf_family_row(const std::string& family, unsigned long t) {
    const mpz_class two_t = arith::pow(2, t);
    TableRow row;
    row.p = 2;
    row.family = family;
    if (family == "M+2") {
        row.q = two_t - 1;
        row.c = row.q + 2;
        row.expected = {{t, 0, 0, 0}, {1, 1, 0, 0}, {t + 1, 1, 0, 1}};
    } else if (family == "2M+1") {
        row.q = two_t - 1;
        row.c = 2 * row.q + 1;
        row.expected = {{t + 1, 0, 0, 1}, {t, 1, 0, 0}, {2 * t, 2, 0, 1}};
    } else if (family == "F-2") {
        row.q = two_t + 1;
        row.c = row.q - 2;
        row.expected = {{t, 0, 0, 1}, {1, 1, 1, 0}, {t + 1, 1, 0, 1}};
    } else if (family == "2F-1") {
        row.q = two_t + 1;
        row.c = 2 * row.q - 1;
        row.expected = {{t + 1, 0, 0, 0}, {t, 1, 0, 0}, {2 * t, 2, 1, 0}};
    } else {
        throw std::invalid_argument("mf_family_row: unknown family " + family);
    }
    PillaiInstance inst(row.p, row.q, row.c);
    for (const auto& s : row.expected)
        if (!check_solution(inst, s))
            throw std::logic_error("family fixture row does not satisfy its equation");
    row.identity = identity_chain(inst, row.expected);
    return row;
}

namespace {

TableRow power_family_row(int which_base, unsigned long e, int delta) {
    // which_base 3: (3, 3^n +- 2, 2); which_base 2: (2, 2^t +- 3, 3)
    const mpz_class base = which_base;
    const mpz_class off = (which_base == 3) ? 2 : 3;
    const mpz_class q = arith::pow(base, e) + (delta ? -off : off);
    TableRow row;
    row.p = base;
    row.q = q;
    row.c = off == 2 ? 2 : 3;
    std::ostringstream fam;
    fam << base << "^" << (which_base == 3 ? "n" : "t") << (delta ? "-" : "+") << off;
    row.family = fam.str();
    if (!is_prime(q)) {
        std::ostringstream os;
        os << "q = " << q << " is not prime";
        row.skip_reason = os.str();
        return row;
    }
    if (which_base == 3)
        row.expected = {{0, 0, 0, 0},
                        {1, 0, 0, 1},
                        delta ? PillaiSolution{e, 1, 0, 1} : PillaiSolution{e, 1, 1, 0}};
    else
        row.expected = {{1, 0, 0, 0},
                        {2, 0, 0, 1},
                        delta ? PillaiSolution{e, 1, 0, 1} : PillaiSolution{e, 1, 1, 0}};
    PillaiInstance inst(row.p, row.q, row.c);
    row.identity = identity_chain(inst, row.expected);
    return row;
}

}  // namespace

std::vector<TableRow> theorem3_family_rows(const FamilyWindows& w) {
    std::vector<TableRow> rows;
    for (const auto& F : arith::fermat_primes(w.fermat_max)) {
        if (F <= 5) continue;
        unsigned long t = *arith::power_of_base(F - 1, 2);
        rows.push_back(mf_family_row("F-2", t));
        rows.push_back(mf_family_row("2F-1", t));
    }
    for (const auto& M : arith::mersenne_primes(w.mersenne_max)) {
        if (M <= 3) continue;
        unsigned long t = *arith::power_of_base(M + 1, 2);
        rows.push_back(mf_family_row("M+2", t));
        rows.push_back(mf_family_row("2M+1", t));
    }
    for (unsigned long n = 2; n <= w.n_max; ++n)
        for (int delta : {0, 1}) {
            if (n == 3 && delta == 1) continue;  // excluded (n, delta)
            rows.push_back(power_family_row(3, n, delta));
        }
    for (unsigned long t = 2; t <= w.t_max; ++t)
        for (int delta : {0, 1}) {
            if (delta == 1 && (t == 2 || t == 3 || t == 7)) continue;  // excluded (t, delta)
            rows.push_back(power_family_row(2, t, delta));
        }
    return rows;
}

namespace {

TableCheck run_check(const TableRow& row) {
    TableCheck check;
    check.row = row;
    if (!row.skip_reason.empty()) {
        check.skipped = true;
        check.note = row.skip_reason;
        return check;
    }
    PillaiInstance inst(row.p, row.q, row.c);
    SolutionSet got = enumerate_solutions(inst);
    std::vector<PillaiSolution> want = row.expected;
    std::sort(want.begin(), want.end());
    if (got.solutions == want) {
        check.verified = true;
    } else {
        std::ostringstream os;
        os << "expected {" << identity_chain(inst, want) << "} got {"
           << identity_chain(inst, got.solutions) << "}";
        check.note = os.str();
    }
    return check;
}

TableReport run_report(const std::vector<TableRow>& rows) {
    TableReport report;
    for (const auto& row : rows) {
        report.checks.push_back(run_check(row));
        const TableCheck& c = report.checks.back();
        if (c.skipped)
            ++report.skipped;
        else if (c.verified)
            ++report.verified;
        else
            ++report.failed;
    }
    report.pass = report.failed == 0;
    return report;
}

}  // namespace

TableReport verify_theorem3_table(const FamilyWindows& w) {
    std::vector<TableRow> rows = theorem3_sporadic_rows();
    for (auto& r : theorem3_family_rows(w)) rows.push_back(std::move(r));
    return run_report(rows);
}

TableReport verify_lemma9_families(unsigned t_max) {
    std::vector<TableRow> rows;
    for (unsigned long t = 2; t <= t_max; ++t) {
        const mpz_class M = arith::pow(2, t) - 1;
        if (M > 3 && is_prime(M)) {
            rows.push_back(mf_family_row("M+2", t));
            rows.push_back(mf_family_row("2M+1", t));
        }
        const mpz_class F = arith::pow(2, t) + 1;
        if (F > 5 && is_prime(F)) {
            rows.push_back(mf_family_row("F-2", t));
            rows.push_back(mf_family_row("2F-1", t));
        }
    }
    return run_report(rows);
}

}
