#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "pillai/arith.hpp"

namespace pillai::special_eqs {

enum class EquationTag { L2, L3, L4, L5, L6, L7 };

const char* tag_name(EquationTag tag);

// Parameter layout per tag:
//   L2: (D, r, m)            (1+sqrt(-D))^r = m +- sqrt(-D)
//   L3: (z, p, r, s)         p^r - p^s + 1 = z^2
//   L4: (z, w, r, s, e1, e2) z^2 = w^r + e1*w^s + e2
//   L5: (z, p, r, s)         p^r + p^s + 1 = z^2
//   L6: (r, s, z)            2^r - 2^s + 1 = z^2
//   L7: (r, s, z)            2^r + 2^s + 1 = z^2
// The defining identity is re-verified on construction.
struct SpecialSolutionRecord {
    EquationTag tag;
    std::vector<mpz_class> parameters;

    SpecialSolutionRecord(EquationTag tag, std::vector<mpz_class> parameters);
    bool operator==(const SpecialSolutionRecord& o) const {
        return tag == o.tag && parameters == o.parameters;
    }
};

// N = 2 * 3^u_flag * h * lcm_part, with h the class-group exponent of
// Q(sqrt(-P)) and lcm_part = lcm(q - chi(q)) over primes q | Q.
struct Theorem4Bound {
    mpz_class C;
    arith::SquarefreeSplit split;
    int u_flag;
    unsigned h;
    mpz_class lcm_part;
    mpz_class N;
};

enum class Theorem4Status { n_equals_3, divides_bound, listed_exception, violation };

const char* status_name(Theorem4Status st);

struct Theorem4Solution {
    mpz_class x;
    mpz_class y;
    unsigned long n;  // maximal exponent with x^2 + C = y^n
    Theorem4Status status;
};

/// All (D, r, m), D <= D_max with D = 2 mod 4, or D = 0 mod 4 and 1+D a
/// prime power, 2 <= r <= r_max, where (1+sqrt(-D))^r has imaginary
/// coefficient +-1. Exact expansion.
std::vector<SpecialSolutionRecord> solve_lemma2(unsigned D_max, unsigned r_max);

/// All (z, p, r, s), r_max >= r > s >= 1, with p^r - p^s + 1 a square.
/// p must be an odd prime.
std::vector<SpecialSolutionRecord> solve_p_minus(const mpz_class& p, unsigned r_max);

/// All (z, p, r, s), r_max >= r >= s >= 1, with p^r + p^s + 1 a square.
std::vector<SpecialSolutionRecord> solve_p_plus(const mpz_class& p, unsigned r_max);

/// All (r, s, z), r_max >= r > s >= 1, with 2^r - 2^s + 1 = z^2.
std::vector<SpecialSolutionRecord> solve_2_minus(unsigned r_max);

/// All (r, s, z), r_max >= r >= s >= 1, with 2^r + 2^s + 1 = z^2.
std::vector<SpecialSolutionRecord> solve_2_plus(unsigned r_max);

/// Scan z^2 = w^r + e1*w^s + e2 over w in 3..w_max, even r in 2..r_max,
/// r > s >= 1. Any hit is a theorem violation; expected empty.
std::vector<SpecialSolutionRecord> lemma4_scan(unsigned w_max, unsigned r_max);

/// Exponent bound N for x^2 + C = y^n; C even, C >= 2.
Theorem4Bound theorem4_bound(const mpz_class& C);

/// All solutions of x^2 + C = y^n with 1 <= x <= x_max, x and y each 1 or
/// a prime power, gcd(x, y) = 1, n the maximal exponent of x^2 + C.
std::vector<Theorem4Solution> theorem4_enumerate(const mpz_class& C, const mpz_class& x_max);

// Expected result lists (window-restricted) used by the verification
// campaigns: Lemma 6/7 family-plus-sporadic closed forms.
std::vector<SpecialSolutionRecord> lemma6_expected(unsigned r_max);
std::vector<SpecialSolutionRecord> lemma7_expected(unsigned r_max);

}
