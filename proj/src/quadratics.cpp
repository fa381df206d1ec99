#include "pillai/quadratics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pillai/arith.hpp"

namespace pillai::quadratics {

using arith::gcd;
using arith::integer_sqrt;
using arith::is_prime;
using arith::lcm;

ContinuedFraction cf_sqrt(const mpz_class& D) {
    if (D < 2) throw std::invalid_argument("cf_sqrt: D must be >= 2");
    auto [a0, exact] = integer_sqrt(D);
    if (exact) throw std::invalid_argument("cf_sqrt: D must not be a perfect square");

    ContinuedFraction out{D, a0, {}};
    // PQa recurrence; the (m, d) state is periodic from the first step on
    mpz_class m = a0;              // m1 = d0*a0 - m0 with (m0, d0) = (0, 1)
    mpz_class d = D - a0 * a0;     // d1 = (D - m1^2)/d0
    mpz_class a = (a0 + m) / d;
    const mpz_class m1 = m, d1 = d;
    out.period.push_back(a);
    while (true) {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        if (m == m1 && d == d1) break;
        out.period.push_back(a);
    }
    if (out.period.back() != 2 * a0)
        throw std::logic_error("cf_sqrt: period did not close on 2*a0");
    return out;
}

std::vector<std::pair<mpz_class, mpz_class>> convergents(const ContinuedFraction& cf, std::size_t k) {
    if (k < 1) throw std::invalid_argument("convergents: k must be >= 1");
    std::vector<std::pair<mpz_class, mpz_class>> out;
    out.reserve(k);
    mpz_class h0 = 1, h1 = cf.a0;  // h_{-1}, h_0
    mpz_class k0 = 0, k1 = 1;
    out.emplace_back(h1, k1);
    std::size_t idx = 0;
    while (out.size() < k) {
        const mpz_class& a = cf.period[idx % cf.period.size()];
        ++idx;
        mpz_class h2 = a * h1 + h0;
        mpz_class k2 = a * k1 + k0;
        out.emplace_back(h2, k2);
        h0.swap(h1); h1.swap(h2);
        k0.swap(k1); k1.swap(k2);
    }
    return out;
}

std::optional<PellSolution> pell_fundamental(const mpz_class& D, int norm) {
    if (norm != 1 && norm != -1) throw std::invalid_argument("pell_fundamental: norm must be +-1");
    ContinuedFraction cf = cf_sqrt(D);
    const std::size_t l = cf.period.size();
    auto conv = convergents(cf, l);
    mpz_class x = conv[l - 1].first, y = conv[l - 1].second;
    const bool odd_period = (l % 2 == 1);
    // x^2 - D y^2 = (-1)^l at the period boundary
    if (norm == -1) {
        if (!odd_period) return std::nullopt;
        return PellSolution{D, x, y, -1};
    }
    if (odd_period) {
        // square the norm -1 solution
        mpz_class x2 = x * x + D * y * y;
        mpz_class y2 = 2 * x * y;
        return PellSolution{D, x2, y2, 1};
    }
    return PellSolution{D, x, y, 1};
}

std::pair<mpz_class, mpz_class> pell_power(const PellSolution& base, unsigned long n) {
    if (n < 1) throw std::invalid_argument("pell_power: n must be >= 1");
    if (base.X * base.X - base.D * base.Y * base.Y != base.norm)
        throw std::invalid_argument("pell_power: base does not satisfy its norm equation");
    mpz_class X = base.X, Y = base.Y;
    for (unsigned long i = 1; i < n; ++i) {
        mpz_class Xn = X * base.X + base.D * Y * base.Y;
        mpz_class Yn = X * base.Y + Y * base.X;
        X.swap(Xn);
        Y.swap(Yn);
    }
    return {X, Y};
}

bool stormer_least(const mpz_class& D, const mpz_class& X, const mpz_class& Y, int norm) {
    if (norm != 1 && norm != -1) throw std::invalid_argument("stormer_least: norm must be +-1");
    if (D < 2 || X < 1 || Y < 1 || X * X - D * Y * Y != norm)
        throw std::invalid_argument("stormer_least: (X, Y, D, norm) is not a Pell solution");
    mpz_class rest = Y, g;
    while ((g = gcd(rest, D)) > 1) rest /= g;
    return rest == 1;
}

namespace {

constexpr unsigned long long square_residue_mask() {
    unsigned long long m = 0;
    for (unsigned i = 0; i < 64; ++i) m |= 1ULL << ((i * i) & 63);
    return m;
}

inline bool is_square_ull(unsigned long long v, unsigned long long& root) {
    static constexpr unsigned long long mask = square_residue_mask();
    if (!((mask >> (v & 63)) & 1)) return false;
    auto s = static_cast<unsigned long long>(std::sqrt(static_cast<double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    root = s;
    return s * s == v;
}

inline unsigned long long gcd_ull(unsigned long long a, unsigned long long b) {
    while (b) {
        unsigned long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

using uint128 = unsigned __int128;

inline bool is_square_u128(uint128 v, uint128& root) {
    static constexpr unsigned long long mask = square_residue_mask();
    if (!((mask >> (static_cast<unsigned>(v) & 63)) & 1)) return false;
    auto s = static_cast<uint128>(sqrtl(static_cast<long double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    root = s;
    return s * s == v;
}

inline uint128 to_u128(const mpz_class& v) {
    uint128 lo = mpz_getlimbn(v.get_mpz_t(), 0);
    uint128 hi = mpz_getlimbn(v.get_mpz_t(), 1);
    return (hi << 64) | lo;
}

// Searches r^2 - D s^2 = +-p^t for r, s nonzero, u | s, gcd(r, sD) = 1.
// For D < 0 the window |s| <= sqrt(p^t / |D|) is exhaustive. For D > 0
// every orbit under the fundamental unit has a representative with
// |s| <= sqrt(p^t * eps / D); the u | s condition is decided by cycling
// the unit action mod u, and gcd(r, sD) = 1 is orbit-invariant.
struct NormSearch {
    mpz_class D, u, p;
    mpz_class ad;            // |D|
    unsigned long long u0;
    std::optional<PellSolution> eps;  // D > 0 only

    NormSearch(const mpz_class& D_, const mpz_class& u_, const mpz_class& p_)
        : D(D_), u(u_), p(p_), ad(abs(D_)) {
        if (D == 0 || D == 1)
            throw std::invalid_argument("norm search: D must be squarefree and not 0 or 1");
        for (const auto& [q, e] : arith::factorize(ad).factors)
            if (e > 1) throw std::invalid_argument("norm search: D must be squarefree");
        if (u < 1) throw std::invalid_argument("norm search: u must be positive");
        if (p < 3 || !is_prime(p))
            throw std::invalid_argument("norm search: p must be an odd prime");
        if (gcd(p, 2 * u * ad) != 1)
            throw std::invalid_argument("norm search: p must not divide 2*u*D");
        u0 = mpz_get_ui(u.get_mpz_t());
        if (D > 1) eps = pell_fundamental(D, 1);
    }

    bool inert() const { return arith::jacobi_symbol(D, p) == -1; }

    // does some unit multiple of (r0, +-s0) have s divisible by u?
    bool orbit_hits_u(const mpz_class& r0, const mpz_class& s0) const {
        if (u0 == 1) return true;
        const unsigned long long X = mpz_fdiv_ui(eps->X.get_mpz_t(), u0);
        const unsigned long long Y = mpz_fdiv_ui(eps->Y.get_mpz_t(), u0);
        const unsigned long long Dm = mpz_fdiv_ui(D.get_mpz_t(), u0);
        const unsigned long long r_m = mpz_fdiv_ui(r0.get_mpz_t(), u0);
        const unsigned long long s_m = mpz_fdiv_ui(s0.get_mpz_t(), u0);
        for (unsigned long long start_s : {s_m, (u0 - s_m) % u0}) {
            unsigned long long a = r_m, b = start_s;
            for (unsigned long long k = 0; k <= u0 * u0 + 1; ++k) {
                if (b == 0) return true;
                unsigned long long an = (a * X + b * Y % u0 * Dm) % u0;
                unsigned long long bn = (a * Y + b * X) % u0;
                a = an;
                b = bn;
            }
        }
        return false;
    }

    bool candidate_ok(const mpz_class& r, const mpz_class& s) const {
        if (r < 1) return false;
        if (r % p == 0 && s % p == 0) return false;  // gcd(r, sD) > 1, orbit-invariant
        if (D < 0) return s % u == 0;                // units are +-1, s fixed up to sign
        return orbit_hits_u(r, s);
    }

    bool representable(const mpz_class& pt) const {
        // s window: exhaustive for D < 0, one-per-orbit for D > 0
        mpz_class s_cap;
        if (D < 0) {
            s_cap = integer_sqrt(pt / ad).first + 1;
        } else {
            s_cap = integer_sqrt(pt * (2 * eps->X + 1) / D).first + 2;
        }
        const unsigned long long step = (D < 0) ? u0 : 1;

        // 128-bit kernel when the largest intermediate fits comfortably
        const mpz_class worst = pt + ad * (s_cap + 2) * (s_cap + 2);
        if (mpz_sizeinbase(worst.get_mpz_t(), 2) <= 100 && s_cap.fits_ulong_p()) {
            const uint128 pt128 = to_u128(pt);
            const uint128 d128 = to_u128(ad);
            const unsigned long long cap = mpz_get_ui(s_cap.get_mpz_t());
            uint128 r;
            for (unsigned long long s = step; s <= cap; s += step) {
                const uint128 ds2 = d128 * s * s;
                if (D < 0) {
                    if (ds2 >= pt128) break;
                    if (is_square_u128(pt128 - ds2, r) &&
                        candidate_ok(u128_to_mpz(r), mpz_class(static_cast<unsigned long>(s))))
                        return true;
                } else {
                    if (ds2 > pt128 && is_square_u128(ds2 - pt128, r) &&
                        candidate_ok(u128_to_mpz(r), mpz_class(static_cast<unsigned long>(s))))
                        return true;
                    if (is_square_u128(pt128 + ds2, r) &&
                        candidate_ok(u128_to_mpz(r), mpz_class(static_cast<unsigned long>(s))))
                        return true;
                }
            }
            return false;
        }
        for (mpz_class s = static_cast<unsigned long>(step); s <= s_cap;
             s += static_cast<unsigned long>(step)) {
            mpz_class ds2 = ad * s * s;
            if (D < 0) {
                if (ds2 >= pt) break;
                auto [r, exact] = integer_sqrt(pt - ds2);
                if (exact && candidate_ok(r, s)) return true;
            } else {
                if (ds2 > pt) {
                    auto [r, exact] = integer_sqrt(ds2 - pt);
                    if (exact && candidate_ok(r, s)) return true;
                }
                auto [r, exact] = integer_sqrt(pt + ds2);
                if (exact && candidate_ok(r, s)) return true;
            }
        }
        return false;
    }

    static mpz_class u128_to_mpz(uint128 v) {
        mpz_class out = static_cast<unsigned long>(v >> 64);
        out <<= 64;
        out += static_cast<unsigned long>(v & ~0ULL);
        return out;
    }
};

}  // namespace

std::optional<unsigned> norm_least_exponent(const mpz_class& D, const mpz_class& u,
                                            const mpz_class& p, unsigned t_max) {
    NormSearch search(D, u, p);
    // r^2 - D s^2 = +-p^t forces (D/p) != -1: p | r and p | s would break
    // gcd(r, sD) = 1, and otherwise D is a square mod p.
    if (search.inert()) return std::nullopt;
    mpz_class pt = 1;
    for (unsigned t = 1; t <= t_max; ++t) {
        pt *= p;
        if (search.representable(pt)) return t;
    }
    return std::nullopt;
}

bool lemma1_divisibility_check(const mpz_class& D, const mpz_class& u,
                               const mpz_class& p, unsigned n_max) {
    NormSearch search(D, u, p);
    if (search.inert()) return true;
    std::optional<unsigned> t;
    mpz_class pt = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        pt *= p;
        if (!search.representable(pt)) continue;
        if (!t)
            t = n;  // the least exponent in range
        else if (n % *t != 0)
            return false;
    }
    return true;
}

QuadForm principal_form(const mpz_class& disc) {
    if (disc >= 0) throw std::invalid_argument("principal_form: discriminant must be negative");
    if (mpz_class rem = ((disc % 4) + 4) % 4; rem == 0)
        return {1, 0, -disc / 4};
    else if (rem == 1)
        return {1, 1, (1 - disc) / 4};
    throw std::invalid_argument("principal_form: discriminant must be 0 or 1 mod 4");
}

QuadForm reduce(QuadForm f) {
    if (f.a <= 0 || f.discriminant() >= 0)
        throw std::invalid_argument("reduce: form must be positive definite");
    while (true) {
        if (f.b > f.a || f.b <= -f.a) {
            // shift b into (-a, a]
            mpz_class two_a = 2 * f.a, r;
            mpz_fdiv_r(r.get_mpz_t(), f.b.get_mpz_t(), two_a.get_mpz_t());
            if (r > f.a) r -= two_a;
            mpz_class k = (f.b - r) / two_a;
            f.c = f.a * k * k - f.b * k + f.c;
            f.b = r;
        }
        if (f.a > f.c) {
            mpz_class t = f.a;
            f.a = f.c;
            f.b = -f.b;
            f.c = t;
            continue;
        }
        break;
    }
    if (f.b < 0 && (f.a == f.c || f.a == -f.b)) f.b = -f.b;
    return f;
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
    const mpz_class disc = f.discriminant();
    if (disc != g.discriminant())
        throw std::invalid_argument("compose: discriminants differ");

    // replace g by an equivalent form whose leading coefficient is coprime
    // to f.a, then unite on a common middle coefficient
    mpz_class x, y, v;
    bool found = false;
    for (long bound = 1; bound <= 64 && !found; ++bound) {
        for (long xi = -bound; xi <= bound && !found; ++xi) {
            for (long yi = -bound; yi <= bound && !found; ++yi) {
                if (std::abs(xi) != bound && std::abs(yi) != bound) continue;  // new cells only
                if (std::gcd(xi, yi) != 1) continue;
                mpz_class vv = g.a * xi * xi + g.b * xi * yi + g.c * yi * yi;
                if (gcd(vv, f.a) == 1) {
                    x = xi; y = yi; v = vv;
                    found = true;
                }
            }
        }
    }
    if (!found) throw std::logic_error("compose: no coprime representative found");

    mpz_class gg, sx, ty;
    mpz_gcdext(gg.get_mpz_t(), sx.get_mpz_t(), ty.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    // columns (x, y), (pp, qq) with x*qq - y*pp = 1
    mpz_class pp = -ty, qq = sx;
    mpz_class A2 = v;
    mpz_class B2 = 2 * (g.a * x * pp + g.c * y * qq) + g.b * (x * qq + y * pp);

    // common middle coefficient: B = f.b (mod 2 f.a), B = B2 (mod 2 A2)
    mpz_class diff = (B2 - f.b) / 2;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), f.a.get_mpz_t(), A2.get_mpz_t()) == 0)
        throw std::logic_error("compose: leading coefficients not coprime");
    mpz_class alpha = diff * inv % A2;
    mpz_class B = f.b + 2 * f.a * alpha;
    mpz_class A3 = f.a * A2;
    mpz_class num = B * B - disc;
    if (num % (4 * A3) != 0) throw std::logic_error("compose: united form is not integral");
    return reduce({A3, B, num / (4 * A3)});
}

std::vector<QuadForm> reduced_forms(const mpz_class& disc) {
    if (disc >= 0) throw std::invalid_argument("reduced_forms: discriminant must be negative");
    std::vector<QuadForm> out;
    for (mpz_class a = 1; 3 * a * a <= -disc; ++a) {
        for (mpz_class b = -a; b <= a; ++b) {
            if ((b - disc) % 2 != 0) continue;
            mpz_class num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            mpz_class c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (b == -a || a == c)) continue;
            if (gcd(gcd(a, b), c) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

ClassGroupInfo class_exponent(const mpz_class& P) {
    if (P < 1) throw std::invalid_argument("class_exponent: P must be positive");
    for (const auto& [q, e] : arith::factorize(P).factors)
        if (e > 1) throw std::invalid_argument("class_exponent: P must be squarefree");
    const mpz_class disc = (P % 4 == 3) ? mpz_class(-P) : mpz_class(-4 * P);
    const auto forms = reduced_forms(disc);
    const QuadForm id = reduce(principal_form(disc));

    unsigned long exponent = 1;
    for (const auto& f : forms) {
        QuadForm g = f;
        unsigned long order = 1;
        while (!(g == id)) {
            g = compose(g, f);
            ++order;
            if (order > 4 * forms.size() + 8)
                throw std::logic_error("class_exponent: runaway class order");
        }
        exponent = std::lcm(exponent, order);
    }
    return ClassGroupInfo{P, disc, static_cast<unsigned>(forms.size()),
                          static_cast<unsigned>(exponent)};
}

}
