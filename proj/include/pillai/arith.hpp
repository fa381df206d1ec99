#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pillai::arith {

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline mpz_class pow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

/// Natural log of a positive integer of any size.
double log_mpz(const mpz_class& n);

/// Largest e with b^e <= n (b >= 2, n >= 1), by exact multiplication.
unsigned long floor_log(const mpz_class& b, const mpz_class& n);

// value == product of prime^exponent; primes strictly increasing.
struct FactoredInteger {
    mpz_class value;
    std::vector<std::pair<mpz_class, unsigned>> factors;
};

// P*Q is the largest squarefree divisor of C; C/P is a perfect square.
struct SquarefreeSplit {
    mpz_class C;
    mpz_class P;
    mpz_class Q;
};

/// Jacobi symbol (a/n) for odd n >= 1; 0 iff gcd(a, n) > 1.
int jacobi_symbol(const mpz_class& a, const mpz_class& n);

/// Largest e with p^e | b (p >= 2, b != 0).
unsigned long valuation(const mpz_class& p, const mpz_class& b);

/// Deterministic primality test. Fixed-witness Miller-Rabin, proven
/// correct below 3.317e24; exact trial division above that.
bool is_prime(const mpz_class& n);

/// (floor(sqrt(n)), root*root == n) for n >= 0.
std::pair<mpz_class, bool> integer_sqrt(const mpz_class& n);

/// e with n == b^e, by repeated exact division; absent if no such e.
/// n == 1 gives e = 0.
std::optional<unsigned long> power_of_base(const mpz_class& n, const mpz_class& b);

/// Maximal-exponent representation n == base^e with e >= 2; absent if
/// n is not a perfect power. Requires n >= 2.
std::optional<std::pair<mpz_class, unsigned long>> is_perfect_power(const mpz_class& n);

/// Full factorization (trial division + Pollard rho); n >= 1.
FactoredInteger factorize(const mpz_class& n);

/// n == 1, or n == p^k for a single prime p.
bool is_prime_power(const mpz_class& n);

/// Split even C >= 2: P = product of odd-exponent primes, Q = product of
/// even-positive-exponent primes of C.
SquarefreeSplit squarefree_split(const mpz_class& C);

/// All primes 2^t + 1 <= limit, ascending.
std::vector<mpz_class> fermat_primes(const mpz_class& limit);

/// All primes 2^t - 1 <= limit, ascending.
std::vector<mpz_class> mersenne_primes(const mpz_class& limit);

}
