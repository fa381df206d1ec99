#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pillai::quadratics {

// a0 = floor(sqrt(D)); period is the minimal period, ending in 2*a0.
struct ContinuedFraction {
    mpz_class D;
    mpz_class a0;
    std::vector<mpz_class> period;
};

// X^2 - D*Y^2 == norm, X, Y > 0, norm in {+1, -1}.
struct PellSolution {
    mpz_class D;
    mpz_class X;
    mpz_class Y;
    int norm;
};

// Positive definite integral binary quadratic form a*x^2 + b*x*y + c*y^2.
struct QuadForm {
    mpz_class a, b, c;

    mpz_class discriminant() const { return b * b - 4 * a * c; }
    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

struct ClassGroupInfo {
    mpz_class P;
    mpz_class discriminant;
    unsigned order;     // class number h
    unsigned exponent;  // lcm of class orders under composition
};

/// Minimal-period continued fraction of sqrt(D); D >= 2 nonsquare.
ContinuedFraction cf_sqrt(const mpz_class& D);

/// First k convergents h/k of the expansion, in lowest terms.
std::vector<std::pair<mpz_class, mpz_class>> convergents(const ContinuedFraction& cf, std::size_t k);

/// Least positive solution of X^2 - D*Y^2 = norm, via the period of
/// sqrt(D); absent when norm = -1 and the period is even.
std::optional<PellSolution> pell_fundamental(const mpz_class& D, int norm);

/// Coefficients of (X1 + Y1*sqrt(D))^n in Z[sqrt(D)], n >= 1.
std::pair<mpz_class, mpz_class> pell_power(const PellSolution& base, unsigned long n);

/// Stormer hypothesis: every prime divisor of Y divides D.
/// Rejects (X, Y, D, norm) that do not satisfy X^2 - D*Y^2 = norm.
bool stormer_least(const mpz_class& D, const mpz_class& X, const mpz_class& Y, int norm);

/// Least t <= t_max with +-p^t = r^2 - D*s^2, r, s nonzero,
/// gcd(r, sD) = 1, u | s; searched over the window |r|, |s| <= p^(t/2)+1.
/// Requires D squarefree nonzero, p an odd prime, p coprime to 2*u*D.
std::optional<unsigned> norm_least_exponent(const mpz_class& D, const mpz_class& u,
                                            const mpz_class& p, unsigned t_max);

/// True iff every n <= n_max expressible as such a norm is a multiple of
/// the least exponent t.
bool lemma1_divisibility_check(const mpz_class& D, const mpz_class& u,
                               const mpz_class& p, unsigned n_max);

/// Class group of Q(sqrt(-P)) for squarefree P >= 1, by reduced forms and
/// composition. discriminant = -P if P = 3 mod 4, else -4P.
ClassGroupInfo class_exponent(const mpz_class& P);

// Form-level operations, shared with tests.
std::vector<QuadForm> reduced_forms(const mpz_class& disc);
QuadForm principal_form(const mpz_class& disc);
QuadForm reduce(QuadForm f);
QuadForm compose(const QuadForm& f, const QuadForm& g);

}
