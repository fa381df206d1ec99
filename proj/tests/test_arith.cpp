#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "pillai/arith.hpp"

using namespace pillai::arith;

TEST_CASE("jacobi symbol basics") {
    CHECK(jacobi_symbol(1, 9) == 1);
    // Euler factors: (2/3) = -1, (2/5) = -1
    CHECK(oracles::legendre_euler(2, 3) == -1);
    CHECK(oracles::legendre_euler(2, 5) == -1);
    CHECK(jacobi_symbol(2, 15) == 1);
    CHECK(jacobi_symbol(6, 15) == 0);
    CHECK_THROWS_AS(jacobi_symbol(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_symbol(3, -7), std::invalid_argument);
}

TEST_CASE("jacobi agrees with Euler's criterion on odd primes <= 500") {
    for (long p = 3; p <= 500; p += 2) {
        if (!is_prime(p)) continue;
        for (long a = 0; a < p; ++a)
            CHECK(jacobi_symbol(a, p) == oracles::legendre_euler(a, p));
    }
}

TEST_CASE("jacobi is completely multiplicative in n over odd n <= 500") {
    for (long n = 3; n <= 500; n += 2) {
        auto f = factorize(n);
        if (f.factors.size() == 1 && f.factors[0].second == 1) continue;  // prime
        for (long a = -10; a <= 30; ++a) {
            int expect = 1;
            for (const auto& [p, e] : f.factors)
                for (unsigned i = 0; i < e; ++i) expect *= jacobi_symbol(a, p);
            CHECK(jacobi_symbol(a, n) == expect);
        }
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(2, 48) == 4);
    CHECK(valuation(3, 10) == 0);
    CHECK(valuation(5, -250) == 3);
    CHECK_THROWS_AS(valuation(5, 0), std::invalid_argument);

    // p^v | b and p^(v+1) does not divide b
    for (long p : {2, 3, 5, 7, 13}) {
        for (long b = 1; b <= 2000; b += 7) {
            unsigned long v = valuation(p, b);
            mpz_class pv = pow(mpz_class(p), v);
            CHECK(b % pv == 0);
            CHECK(b % (pv * p) != 0);
        }
    }
}

TEST_CASE("is_prime matches trial division up to 10^6") {
    const unsigned long limit = 1'000'000;
    std::vector<char> comp(limit + 1, 0);
    for (unsigned long i = 2; i * i <= limit; ++i)
        if (!comp[i])
            for (unsigned long j = i * i; j <= limit; j += i) comp[j] = 1;
    unsigned long primes = 0;
    unsigned long mismatches = 0;
    for (unsigned long n = 1; n <= limit; ++n) {
        bool expect = n >= 2 && !comp[n];
        if (is_prime(n) != expect) ++mismatches;
        primes += expect;
    }
    CHECK(mismatches == 0);
    CHECK(primes == 78498);
}

TEST_CASE("is_prime spot values") {
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(8191));
    CHECK_FALSE(is_prime(2047));  // 23 * 89
    CHECK(is_prime(65537));
    CHECK_FALSE(is_prime(mpz_class("18446744073709551617")));  // 2^64 + 1 = 274177 * ...
    CHECK(is_prime(mpz_class("18446744073709551557")));        // largest prime below 2^64
}

TEST_CASE("integer_sqrt") {
    CHECK(integer_sqrt(529) == std::make_pair(mpz_class(23), true));
    CHECK(integer_sqrt(0) == std::make_pair(mpz_class(0), true));
    CHECK(integer_sqrt(2) == std::make_pair(mpz_class(1), false));
    CHECK_THROWS_AS(integer_sqrt(-4), std::invalid_argument);
    for (long n = 0; n <= 5000; ++n) {
        auto [r, exact] = integer_sqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
        CHECK(exact == (r * r == n));
    }
}

TEST_CASE("power_of_base") {
    CHECK(power_of_base(243, 3) == 5);
    CHECK(power_of_base(1, 7) == 0);
    CHECK_FALSE(power_of_base(244, 3).has_value());
    CHECK(power_of_base(1024, 2) == 10);
    CHECK_FALSE(power_of_base(1023, 2).has_value());

    for (unsigned long b = 2; b <= 30; ++b)
        for (unsigned long e = 0; e <= 40; ++e)
            CHECK(power_of_base(pow(mpz_class(b), e), b) == e);
}

TEST_CASE("is_perfect_power") {
    CHECK(is_perfect_power(64) == std::make_pair(mpz_class(2), 6ul));
    CHECK_FALSE(is_perfect_power(10).has_value());
    CHECK(is_perfect_power(161051) == std::make_pair(mpz_class(11), 5ul));
    CHECK(is_perfect_power(729) == std::make_pair(mpz_class(3), 6ul));  // maximal exponent
}

TEST_CASE("factorize") {
    auto f = factorize(mpz_class("963761198400"));
    mpz_class prod = 1;
    mpz_class last = 1;
    for (const auto& [p, e] : f.factors) {
        CHECK(is_prime(p));
        CHECK(p > last);
        last = p;
        for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == f.value);
    CHECK(factorize(1).factors.empty());

    // semiprime beyond small trial division exercises the rho path
    mpz_class a = 1000003, b = 1000033;
    auto g = factorize(a * b);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].first == a);
    CHECK(g.factors[1].first == b);
}

TEST_CASE("squarefree_split") {
    auto s = squarefree_split(250);
    CHECK(s.P == 10);
    CHECK(s.Q == 1);
    s = squarefree_split(32);
    CHECK(s.P == 2);
    CHECK(s.Q == 1);
    s = squarefree_split(12);
    CHECK(s.P == 3);
    CHECK(s.Q == 2);
    CHECK_THROWS_AS(squarefree_split(15), std::invalid_argument);
    CHECK_THROWS_AS(squarefree_split(0), std::invalid_argument);
}

TEST_CASE("squarefree_split invariants against divisor enumeration, C <= 10^4") {
    for (unsigned long C = 2; C <= 10'000; C += 2) {
        auto s = squarefree_split(C);
        mpz_class pq = s.P * s.Q;
        CHECK(pq == oracles::largest_squarefree_divisor(C));
        CHECK(mpz_class(C) % s.P == 0);
        auto [root, exact] = integer_sqrt(mpz_class(C) / s.P);
        CHECK(exact);
        CHECK(gcd(s.P, s.Q) == 1);
    }
}

TEST_CASE("fermat and mersenne prime generators") {
    CHECK(fermat_primes(100'000) == std::vector<mpz_class>{3, 5, 17, 257, 65537});
    CHECK(fermat_primes(2).empty());
    CHECK(fermat_primes(20) == std::vector<mpz_class>{3, 5, 17});
    CHECK(mersenne_primes(10'000) == std::vector<mpz_class>{3, 7, 31, 127, 8191});
    CHECK(mersenne_primes(2).empty());
    CHECK(mersenne_primes(130) == std::vector<mpz_class>{3, 7, 31, 127});
}
