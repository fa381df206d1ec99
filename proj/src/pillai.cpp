#include "pillai/pillai.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pillai/arith.hpp"

namespace pillai {

using arith::floor_log;
using arith::gcd;
using arith::log_mpz;
using arith::power_of_base;

PillaiInstance::PillaiInstance(mpz_class a_, mpz_class b_, mpz_class c_,
                               mpz_class r_, mpz_class s_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), r(std::move(r_)), s(std::move(s_)) {
    if (a < 2 || b < 2) throw std::invalid_argument("PillaiInstance: bases must be >= 2");
    if (c < 1 || r < 1 || s < 1)
        throw std::invalid_argument("PillaiInstance: c, r, s must be positive");
    coprime = gcd(r * a, s * b) == 1;
}

bool check_solution(const PillaiInstance& inst, const PillaiSolution& sol) {
    mpz_class ta = inst.r * arith::pow(inst.a, sol.x);
    mpz_class tb = inst.s * arith::pow(inst.b, sol.y);
    if (sol.u) ta = -ta;
    if (sol.v) tb = -tb;
    return ta + tb == inst.c;
}

PillaiSolution make_solution(const PillaiInstance& inst, unsigned long x, unsigned long y) {
    std::optional<PillaiSolution> found;
    for (int u = 0; u <= 1; ++u)
        for (int v = 0; v <= 1; ++v) {
            PillaiSolution cand{x, y, u, v};
            if (!check_solution(inst, cand)) continue;
            if (found) throw std::invalid_argument("make_solution: ambiguous sign pair");
            found = cand;
        }
    if (!found) throw std::invalid_argument("make_solution: (x, y) does not solve the instance");
    return *found;
}

const char* method_name(BoundMethod m) {
    switch (m) {
        case BoundMethod::mignotte_fixed_point: return "mignotte_fixed_point";
        case BoundMethod::floor_1m: return "floor_1m";
        case BoundMethod::uncertified: return "uncertified";
    }
    return "?";
}

std::vector<PillaiSolution> SolutionSet::difference_form() const {
    std::vector<PillaiSolution> out;
    for (const auto& s : solutions)
        if (s.u == 0 && s.v == 1) out.push_back(s);
    return out;
}

std::vector<PillaiSolution> SolutionSet::abs_difference_form() const {
    std::vector<PillaiSolution> out;
    for (const auto& s : solutions)
        if (!(s.u == 0 && s.v == 0)) out.push_back(s);
    return out;
}

double mignotte_rhs(double G, const mpz_class& a, const mpz_class& b, const mpz_class& c) {
    const double t = std::log(G) + 2.405;
    return 2.0 * log_mpz(c) / (log_mpz(a) * log_mpz(b)) + 22.997 * t * t;
}

namespace {

constexpr double kGFloor = 2409.08;

unsigned long ceil_bound(double v) {
    return static_cast<unsigned long>(std::ceil(std::nextafter(v, std::numeric_limits<double>::infinity())));
}

BoundCertificate floor_1m_certificate() {
    return BoundCertificate{kGFloor, 64, 64, BoundMethod::floor_1m, false};
}

}  // namespace

BoundCertificate mignotte_bound(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
    if (a < 2 || b < 2) throw std::invalid_argument("mignotte_bound: bases must be >= 2");
    if (c <= 1) throw std::invalid_argument("mignotte_bound: requires c > 1");
    if (gcd(a, b) != 1) throw std::invalid_argument("mignotte_bound: requires gcd(a, b) = 1");

    double G = kGFloor;
    for (int i = 0; i < 500; ++i) {
        double next = std::max(kGFloor, mignotte_rhs(G, a, b, c));
        if (std::abs(next - G) <= 1e-9 * G) {
            G = next;
            break;
        }
        G = next;
    }
    const double G_star = G * 1.001;
    BoundCertificate cert;
    cert.G_star = G_star;
    cert.method = BoundMethod::mignotte_fixed_point;
    cert.conditions_met = true;
    cert.x_max = ceil_bound(G_star * log_mpz(b));
    cert.y_max = ceil_bound(G_star * log_mpz(a));
    return cert;
}

namespace {

// Scan one sign layout: iterate the exponent e of base A (coefficient R),
// solving exactly for the complementary power of B (coefficient S).
// swap_roles maps results back when A is the instance's b.
void scan_side(const PillaiInstance& inst, bool iterate_b, unsigned long e_max,
               std::optional<unsigned long> other_cap, std::vector<PillaiSolution>& out) {
    const mpz_class& A = iterate_b ? inst.b : inst.a;
    const mpz_class& B = iterate_b ? inst.a : inst.b;
    const mpz_class& R = iterate_b ? inst.s : inst.r;
    const mpz_class& S = iterate_b ? inst.r : inst.s;
    const mpz_class& c = inst.c;

    auto emit = [&](unsigned long e, unsigned long f, int ue, int vf) {
        if (other_cap && f > *other_cap) return;
        PillaiSolution sol = iterate_b ? PillaiSolution{f, e, vf, ue} : PillaiSolution{e, f, ue, vf};
        out.push_back(sol);
    };
    auto try_complement = [&](const mpz_class& t, unsigned long e, int ue, int vf) {
        if (t <= 0 || t % S != 0) return;
        if (auto f = power_of_base(t / S, B)) emit(e, *f, ue, vf);
    };

    mpz_class P = R;  // R * A^e
    for (unsigned long e = 0; e <= e_max; ++e) {
        try_complement(c - P, e, 0, 0);
        try_complement(c + P, e, 1, 0);  // -R A^e + S B^f = c
        try_complement(P - c, e, 0, 1);  // R A^e - S B^f = c
        P *= A;
    }
}

SolutionSet finish(PillaiInstance inst, std::vector<PillaiSolution> sols,
                   std::optional<BoundCertificate> cert) {
    std::sort(sols.begin(), sols.end());
    sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
    return SolutionSet{std::move(inst), std::move(sols), std::move(cert)};
}

}  // namespace

SolutionSet enumerate_solutions(const PillaiInstance& inst) {
    if (inst.r != 1 || inst.s != 1 || gcd(inst.a, inst.b) != 1)
        throw certification_unavailable(
            "certified enumeration requires r = s = 1 and gcd(a, b) = 1");

    if (inst.c == 1) {
        // the bound lemma needs c > 1; fixed elementary window instead
        SolutionSet set = enumerate_solutions(inst, 64, 64);
        set.certificate = floor_1m_certificate();
        return set;
    }

    BoundCertificate cert = mignotte_bound(inst.a, inst.b, inst.c);
    // exponent of a is bounded by x_max for positive-exponent solutions and
    // by log_a(c+1) when the other exponent is zero; same on the b side
    const unsigned long Xa = std::max(cert.x_max, floor_log(inst.a, inst.c + 1) + 1);
    const unsigned long Yb = std::max(cert.y_max, floor_log(inst.b, inst.c + 1) + 1);

    std::vector<PillaiSolution> sols;
    if (Xa <= Yb)
        scan_side(inst, false, Xa, std::nullopt, sols);
    else
        scan_side(inst, true, Yb, std::nullopt, sols);
    return finish(inst, std::move(sols), cert);
}

SolutionSet enumerate_solutions(const PillaiInstance& inst,
                                unsigned long x_max, unsigned long y_max) {
    std::vector<PillaiSolution> sols;
    if (x_max <= y_max)
        scan_side(inst, false, x_max, y_max, sols);
    else
        scan_side(inst, true, y_max, x_max, sols);

    BoundCertificate cert;
    cert.method = BoundMethod::uncertified;
    cert.conditions_met = false;
    cert.x_max = x_max;
    cert.y_max = y_max;
    cert.G_star = std::max(x_max / log_mpz(inst.b), y_max / log_mpz(inst.a));
    return finish(inst, std::move(sols), cert);
}

std::size_t count_solutions(const PillaiInstance& inst) {
    return enumerate_solutions(inst).solutions.size();
}

namespace {

mpz_class minimal_base(const mpz_class& n) {
    if (auto pp = arith::is_perfect_power(n)) return pp->first;
    return n;
}

}  // namespace

bool same_family(const SolutionSet& s1, const SolutionSet& s2) {
    if (s1.solutions.size() != s2.solutions.size()) return false;
    const PillaiInstance& i1 = s1.instance;
    const PillaiInstance& i2 = s2.instance;
    if (minimal_base(i1.a) != minimal_base(i2.a)) return false;
    if (minimal_base(i1.b) != minimal_base(i2.b)) return false;

    const mpq_class k(mpq_class(i2.c) / mpq_class(i1.c));  // k * c = C
    auto terms = [](const PillaiInstance& inst, const std::vector<PillaiSolution>& sols,
                    const mpq_class& scale) {
        std::vector<std::pair<mpq_class, mpq_class>> out;
        out.reserve(sols.size());
        for (const auto& s : sols)
            out.emplace_back(scale * inst.r * arith::pow(inst.a, s.x),
                             scale * inst.s * arith::pow(inst.b, s.y));
        std::sort(out.begin(), out.end());
        return out;
    };
    return terms(i1, s1.solutions, k) == terms(i2, s2.solutions, mpq_class(1));
}

std::string term_string(const mpz_class& coeff, const mpz_class& base, unsigned long e) {
    std::ostringstream os;
    if (e == 0) {
        os << coeff;
    } else {
        if (coeff != 1) os << coeff << "*";
        os << base;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::string solution_string(const PillaiInstance& inst, const PillaiSolution& sol) {
    std::ostringstream os;
    if (sol.u) os << "-";
    os << term_string(inst.r, inst.a, sol.x);
    os << (sol.v ? " - " : " + ");
    os << term_string(inst.s, inst.b, sol.y);
    return os.str();
}

}
