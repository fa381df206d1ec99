#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pillai/pillai.hpp"

namespace pillai {

enum class ExceptionKind {
    none,
    sporadic,
    fermat_family,       // (2, F, F-2) form 1, (2, F, 2F-1) form 2, F > 5
    mersenne_family,     // (2, M, M+2) form 1, (2, M, 2M+1) form 2, M > 3
    three_power_family,  // (3, 3^n + (-1)^delta * 2, 2), n > 1
    two_power_family,    // (2, 2^t + (-1)^delta * 3, 3), t > 1
};

const char* kind_name(ExceptionKind k);

struct ExceptionClassification {
    ExceptionKind kind = ExceptionKind::none;
    std::string label;       // "(2,3,13)" or family description
    int form = 0;            // 1 or 2 for the Fermat/Mersenne families
    unsigned long t = 0;     // t (or n) of the matched family member
    int delta = 0;
    bool swapped = false;    // matched as (q, p, c)

    bool matched() const { return kind != ExceptionKind::none; }
};

/// Match (p, q, c) (either base order) against the exception list of the
/// three-solution theorem: 13 sporadic triples plus six parameterized
/// families with their side conditions.
ExceptionClassification classify_exception(const mpz_class& p, const mpz_class& q,
                                           const mpz_class& c);

/// Exception list for the |p^x - q^y| = c two-solution theorem:
/// (3,5,2), (2,3,5), (2,3,7), (2,11,7), and (2, F, F-2) for any Fermat
/// prime F.
bool is_theorem2_exception(const mpz_class& p, const mpz_class& q, const mpz_class& c);

struct ScanItem {
    mpz_class p, q, c;
    SolutionSet sols;
    ExceptionClassification cls;
};

/// All (p, q, c) with p < q primes <= prime_limit, 1 <= c <= c_limit and
/// at least `threshold` certified solutions, ascending in (p, q, c).
/// Deterministic for any worker count.
std::vector<ScanItem> scan_box(unsigned prime_limit, unsigned long c_limit,
                               std::size_t threshold = 3, unsigned workers = 1);

}
