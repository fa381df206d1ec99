#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pillai {

/// Certified mode was requested for an instance outside the certified
/// preconditions (r = s = 1, gcd(a, b) = 1).
struct certification_unavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The equation (-1)^u * r * a^x + (-1)^v * s * b^y = c.
struct PillaiInstance {
    mpz_class a, b, c, r, s;
    bool coprime;  // gcd(r*a, s*b) == 1, recorded at construction

    PillaiInstance(mpz_class a, mpz_class b, mpz_class c,
                   mpz_class r = 1, mpz_class s = 1);
};

// One solution (x, y, u, v); the equation value determines u and v from
// (x, y) uniquely, so ordering ignores the signs.
struct PillaiSolution {
    unsigned long x = 0;
    unsigned long y = 0;
    int u = 0;
    int v = 0;

    friend std::strong_ordering operator<=>(const PillaiSolution& l, const PillaiSolution& r) {
        if (auto c = l.x <=> r.x; c != 0) return c;
        return l.y <=> r.y;
    }
    friend bool operator==(const PillaiSolution& l, const PillaiSolution& r) {
        return l.x == r.x && l.y == r.y && l.u == r.u && l.v == r.v;
    }
};

/// Validates that (x, y) solves the instance for a unique sign pair and
/// returns the signed solution; throws std::invalid_argument otherwise.
PillaiSolution make_solution(const PillaiInstance& inst, unsigned long x, unsigned long y);

/// True iff the signed tuple satisfies the instance exactly.
bool check_solution(const PillaiInstance& inst, const PillaiSolution& sol);

enum class BoundMethod { mignotte_fixed_point, floor_1m, uncertified };

const char* method_name(BoundMethod m);

// Proven exponent ceiling for a^x - b^y = +-c: x <= x_max, y <= y_max
// over all solutions with positive exponents.
struct BoundCertificate {
    double G_star = 0.0;
    unsigned long y_max = 0;
    unsigned long x_max = 0;
    BoundMethod method = BoundMethod::uncertified;
    bool conditions_met = false;
};

// Unordered set of solutions for one instance, (x, y)-sorted for
// deterministic output.
struct SolutionSet {
    PillaiInstance instance;
    std::vector<PillaiSolution> solutions;
    std::optional<BoundCertificate> certificate;

    /// Solutions of the a^x - b^y = c form only, i.e. (u, v) = (0, 1).
    std::vector<PillaiSolution> difference_form() const;
    /// Solutions of |a^x - b^y| = c, i.e. (u, v) != (0, 0).
    std::vector<PillaiSolution> abs_difference_form() const;
};

/// Right side of the bound inequality at G.
double mignotte_rhs(double G, const mpz_class& a, const mpz_class& b, const mpz_class& c);

/// Exponent-bound certificate for a^x - b^y = c with gcd(a, b) = 1,
/// c > 1: G_star = max(2409.08, least fixed point of the bound
/// inequality) * 1.001, x_max = ceil(G_star ln b), y_max = ceil(G_star ln a).
BoundCertificate mignotte_bound(const mpz_class& a, const mpz_class& b, const mpz_class& c);

/// Certified mode: complete solution set over all nonnegative (x, y).
/// Requires r = s = 1 and gcd(a, b) = 1; throws certification_unavailable
/// otherwise. c = 1 uses the fixed 64/64 window (method floor_1m).
SolutionSet enumerate_solutions(const PillaiInstance& inst);

/// Bounded mode: complete within x <= x_max, y <= y_max only.
SolutionSet enumerate_solutions(const PillaiInstance& inst,
                                unsigned long x_max, unsigned long y_max);

/// Number of solutions in certified mode.
std::size_t count_solutions(const PillaiInstance& inst);

/// Family equivalence of two solution sets: common base roots, a positive
/// rational k with k*c = C, and a term-matching bijection, all in exact
/// rational arithmetic.
bool same_family(const SolutionSet& s1, const SolutionSet& s2);

/// "r*a^x" rendered the way the tables write terms: exponent zero folds
/// to the constant, exponent one drops the caret.
std::string term_string(const mpz_class& coeff, const mpz_class& base, unsigned long e);

/// "+2^5 -3^3" style rendering of one solution.
std::string solution_string(const PillaiInstance& inst, const PillaiSolution& sol);

}
