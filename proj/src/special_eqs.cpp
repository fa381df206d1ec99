#include "pillai/special_eqs.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pillai/quadratics.hpp"

namespace pillai::special_eqs {

using arith::gcd;
using arith::integer_sqrt;
using arith::is_prime;
using arith::pow;

namespace {
inline mpz_class zpow(unsigned long b, unsigned long e) { return pow(mpz_class(b), e); }
}  // namespace

const char* tag_name(EquationTag tag) {
    switch (tag) {
        case EquationTag::L2: return "L2";
        case EquationTag::L3: return "L3";
        case EquationTag::L4: return "L4";
        case EquationTag::L5: return "L5";
        case EquationTag::L6: return "L6";
        case EquationTag::L7: return "L7";
    }
    return "?";
}

const char* status_name(Theorem4Status st) {
    switch (st) {
        case Theorem4Status::n_equals_3: return "n=3";
        case Theorem4Status::divides_bound: return "n|N";
        case Theorem4Status::listed_exception: return "listed exception";
        case Theorem4Status::violation: return "violation";
    }
    return "?";
}

namespace {

// (1 + sqrt(-D))^r = re + im*sqrt(-D), exact
std::pair<mpz_class, mpz_class> gauss_power(const mpz_class& D, unsigned long r) {
    mpz_class re = 1, im = 0;
    for (unsigned long i = 0; i < r; ++i) {
        mpz_class re2 = re - im * D;
        mpz_class im2 = re + im;
        re.swap(re2);
        im.swap(im2);
    }
    return {re, im};
}

bool record_identity_holds(EquationTag tag, const std::vector<mpz_class>& p) {
    switch (tag) {
        case EquationTag::L2: {
            if (p.size() != 3 || p[1] < 2) return false;
            auto [re, im] = gauss_power(p[0], mpz_get_ui(p[1].get_mpz_t()));
            return re == p[2] && abs(im) == 1;
        }
        case EquationTag::L3:
        case EquationTag::L5: {
            if (p.size() != 4) return false;
            const mpz_class& z = p[0];
            mpz_class lhs = pow(p[1], mpz_get_ui(p[2].get_mpz_t()));
            mpz_class ps = pow(p[1], mpz_get_ui(p[3].get_mpz_t()));
            lhs += (tag == EquationTag::L3) ? -ps : ps;
            lhs += 1;
            return lhs == z * z;
        }
        case EquationTag::L4: {
            if (p.size() != 6 || abs(p[4]) != 1 || abs(p[5]) != 1) return false;
            mpz_class lhs = pow(p[1], mpz_get_ui(p[2].get_mpz_t()));
            lhs += p[4] * pow(p[1], mpz_get_ui(p[3].get_mpz_t()));
            lhs += p[5];
            return lhs == p[0] * p[0];
        }
        case EquationTag::L6:
        case EquationTag::L7: {
            if (p.size() != 3) return false;
            mpz_class lhs = zpow(2, mpz_get_ui(p[0].get_mpz_t()));
            mpz_class ps = zpow(2, mpz_get_ui(p[1].get_mpz_t()));
            lhs += (tag == EquationTag::L6) ? -ps : ps;
            lhs += 1;
            return lhs == p[2] * p[2];
        }
    }
    return false;
}

}  // namespace

SpecialSolutionRecord::SpecialSolutionRecord(EquationTag tag_, std::vector<mpz_class> parameters_)
    : tag(tag_), parameters(std::move(parameters_)) {
    if (!record_identity_holds(tag, parameters))
        throw std::invalid_argument(std::string("SpecialSolutionRecord: parameters do not satisfy ") +
                                    tag_name(tag));
}

std::vector<SpecialSolutionRecord> solve_lemma2(unsigned D_max, unsigned r_max) {
    std::vector<SpecialSolutionRecord> out;
    for (unsigned D = 1; D <= D_max; ++D) {
        const bool two_mod_4 = (D % 4 == 2);
        const bool zero_mod_4 = (D % 4 == 0) && arith::is_prime_power(mpz_class(D + 1)) && D + 1 > 1;
        if (!two_mod_4 && !zero_mod_4) continue;
        mpz_class re = 1, im = 0;
        for (unsigned r = 1; r <= r_max; ++r) {
            mpz_class re2 = re - im * D;
            mpz_class im2 = re + im;
            re.swap(re2);
            im.swap(im2);
            if (r >= 2 && abs(im) == 1)
                out.emplace_back(EquationTag::L2, std::vector<mpz_class>{D, r, re});
        }
    }
    return out;
}

std::vector<SpecialSolutionRecord> solve_p_minus(const mpz_class& p, unsigned r_max) {
    if (p == 2) throw std::invalid_argument("solve_p_minus: p = 2 is handled by solve_2_minus");
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("solve_p_minus: p must be an odd prime");
    std::vector<SpecialSolutionRecord> out;
    for (unsigned r = 2; r <= r_max; ++r) {
        const mpz_class pr = pow(p, r);
        for (unsigned s = 1; s < r; ++s) {
            mpz_class v = pr - pow(p, s) + 1;
            auto [z, exact] = integer_sqrt(v);
            if (exact)
                out.emplace_back(EquationTag::L3, std::vector<mpz_class>{z, p, r, s});
        }
    }
    return out;
}

std::vector<SpecialSolutionRecord> solve_p_plus(const mpz_class& p, unsigned r_max) {
    if (p == 2) throw std::invalid_argument("solve_p_plus: p = 2 is handled by solve_2_plus");
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("solve_p_plus: p must be an odd prime");
    std::vector<SpecialSolutionRecord> out;
    for (unsigned r = 1; r <= r_max; ++r) {
        const mpz_class pr = pow(p, r);
        for (unsigned s = 1; s <= r; ++s) {
            mpz_class v = pr + pow(p, s) + 1;
            auto [z, exact] = integer_sqrt(v);
            if (exact)
                out.emplace_back(EquationTag::L5, std::vector<mpz_class>{z, p, r, s});
        }
    }
    return out;
}

std::vector<SpecialSolutionRecord> solve_2_minus(unsigned r_max) {
    std::vector<SpecialSolutionRecord> out;
    for (unsigned r = 2; r <= r_max; ++r)
        for (unsigned s = 1; s < r; ++s) {
            mpz_class v = zpow(2, r) - zpow(2, s) + 1;
            auto [z, exact] = integer_sqrt(v);
            if (exact)
                out.emplace_back(EquationTag::L6, std::vector<mpz_class>{r, s, z});
        }
    return out;
}

std::vector<SpecialSolutionRecord> solve_2_plus(unsigned r_max) {
    std::vector<SpecialSolutionRecord> out;
    for (unsigned r = 1; r <= r_max; ++r)
        for (unsigned s = 1; s <= r; ++s) {
            mpz_class v = zpow(2, r) + zpow(2, s) + 1;
            auto [z, exact] = integer_sqrt(v);
            if (exact)
                out.emplace_back(EquationTag::L7, std::vector<mpz_class>{r, s, z});
        }
    return out;
}

std::vector<SpecialSolutionRecord> lemma4_scan(unsigned w_max, unsigned r_max) {
    std::vector<SpecialSolutionRecord> out;
    for (unsigned w = 3; w <= w_max; ++w)
        for (unsigned r = 2; r <= r_max; r += 2)
            for (unsigned s = 1; s < r; ++s)
                for (int e1 : {1, -1})
                    for (int e2 : {1, -1}) {
                        mpz_class v = zpow(w, r) + e1 * zpow(w, s) + e2;
                        if (v < 1) continue;
                        auto [z, exact] = integer_sqrt(v);
                        if (exact && z >= 1)
                            out.emplace_back(EquationTag::L4,
                                             std::vector<mpz_class>{z, w, r, s, e1, e2});
                    }
    return out;
}

std::vector<SpecialSolutionRecord> lemma6_expected(unsigned r_max) {
    std::vector<SpecialSolutionRecord> out;
    for (unsigned t = 2; 2 * t <= r_max; ++t)
        out.emplace_back(EquationTag::L6,
                         std::vector<mpz_class>{2 * t, t + 1, zpow(2, t) - 1});
    for (auto [r, s, z] : {std::array<unsigned, 3>{5, 3, 5}, {7, 3, 11}, {15, 3, 181}})
        if (r <= r_max)
            out.emplace_back(EquationTag::L6, std::vector<mpz_class>{r, s, z});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.parameters < b.parameters; });
    return out;
}

std::vector<SpecialSolutionRecord> lemma7_expected(unsigned r_max) {
    std::vector<SpecialSolutionRecord> out;
    for (unsigned t = 1; 2 * t <= r_max; ++t)
        out.emplace_back(EquationTag::L7,
                         std::vector<mpz_class>{2 * t, t + 1, zpow(2, t) + 1});
    for (auto [r, s, z] : {std::array<unsigned, 3>{5, 4, 7}, {9, 4, 23}})
        if (r <= r_max)
            out.emplace_back(EquationTag::L7, std::vector<mpz_class>{r, s, z});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.parameters < b.parameters; });
    return out;
}

Theorem4Bound theorem4_bound(const mpz_class& C) {
    Theorem4Bound out;
    out.C = C;
    out.split = arith::squarefree_split(C);  // rejects odd C
    const mpz_class& P = out.split.P;
    out.u_flag = (P > 3 && P % 8 == 3) ? 1 : 0;
    out.h = quadratics::class_exponent(P).exponent;
    out.lcm_part = 1;
    for (const auto& [q, e] : arith::factorize(out.split.Q).factors) {
        mpz_class chi = (q == 2) ? 0 : arith::jacobi_symbol(-P, q);
        out.lcm_part = arith::lcm(out.lcm_part, q - chi);
    }
    out.N = 2 * zpow(3, static_cast<unsigned long>(out.u_flag)) * out.h * out.lcm_part;
    return out;
}

namespace {

// prime-power flags for 0..n (1 counts as a prime power here)
std::vector<char> prime_power_sieve(unsigned long n) {
    std::vector<char> is_comp(n + 1, 0), flag(n + 1, 0);
    for (unsigned long i = 2; i * i <= n; ++i)
        if (!is_comp[i])
            for (unsigned long j = i * i; j <= n; j += i) is_comp[j] = 1;
    if (n >= 1) flag[1] = 1;
    for (unsigned long p = 2; p <= n; ++p) {
        if (is_comp[p]) continue;
        for (unsigned long pk = p; pk <= n; pk = (pk > n / p) ? n + 1 : pk * p) flag[pk] = 1;
    }
    return flag;
}

}  // namespace

std::vector<Theorem4Solution> theorem4_enumerate(const mpz_class& C, const mpz_class& x_max) {
    if (x_max < 1) throw std::invalid_argument("theorem4_enumerate: x_max must be >= 1");
    const Theorem4Bound bound = theorem4_bound(C);  // validates even C

    std::vector<char> sieve;
    const bool sieved = x_max.fits_ulong_p() && mpz_get_ui(x_max.get_mpz_t()) <= 10'000'000;
    if (sieved) sieve = prime_power_sieve(mpz_get_ui(x_max.get_mpz_t()));

    std::vector<Theorem4Solution> out;
    for (mpz_class x = 1; x <= x_max; ++x) {
        if (sieved ? !sieve[mpz_get_ui(x.get_mpz_t())] : !arith::is_prime_power(x)) continue;
        mpz_class m = x * x + C;
        mpz_class y;
        unsigned long n;
        if (auto ppow = arith::is_perfect_power(m)) {
            y = ppow->first;
            n = ppow->second;
        } else {
            y = m;
            n = 1;
        }
        // n maximal means y is not itself a perfect power, so a prime
        // power y is simply a prime
        if (!is_prime(y)) continue;
        if (gcd(x, y) != 1) continue;

        Theorem4Status st;
        if ((x == 7 && y == 3 && n == 4) || (x == 401 && y == 11 && n == 5))
            st = Theorem4Status::listed_exception;
        else if (n == 3)
            st = Theorem4Status::n_equals_3;
        else if (bound.N % n == 0)
            st = Theorem4Status::divides_bound;
        else
            st = Theorem4Status::violation;
        out.push_back({x, y, n, st});
    }
    return out;
}

}
