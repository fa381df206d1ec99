#include "pillai/classify.hpp"

#include <array>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "pillai/arith.hpp"

namespace pillai {

using arith::floor_log;
using arith::is_prime;
using arith::power_of_base;

const char* kind_name(ExceptionKind k) {
    switch (k) {
        case ExceptionKind::none: return "none";
        case ExceptionKind::sporadic: return "sporadic";
        case ExceptionKind::fermat_family: return "fermat_family";
        case ExceptionKind::mersenne_family: return "mersenne_family";
        case ExceptionKind::three_power_family: return "three_power_family";
        case ExceptionKind::two_power_family: return "two_power_family";
    }
    return "?";
}

namespace {

struct Triple {
    long p, q, c;
};

constexpr std::array<Triple, 13> kSporadics{{{2, 3, 1},
                                             {2, 3, 5},
                                             {2, 3, 7},
                                             {2, 3, 11},
                                             {2, 3, 13},
                                             {2, 3, 17},
                                             {2, 5, 3},
                                             {2, 5, 7},
                                             {2, 5, 9},
                                             {2, 11, 7},
                                             {3, 5, 2},
                                             {3, 5, 4},
                                             {3, 13, 10}}};

std::string triple_label(const mpz_class& p, const mpz_class& q, const mpz_class& c) {
    std::ostringstream os;
    os << "(" << p << "," << q << "," << c << ")";
    return os.str();
}

std::optional<ExceptionClassification> match_families(const mpz_class& P, const mpz_class& Q,
                                                      const mpz_class& c) {
    ExceptionClassification out;
    if (P == 2) {
        if (Q > 5) {
            if (auto t = power_of_base(Q - 1, 2)) {  // Q is a Fermat prime 2^t + 1
                if (c == Q - 2 || c == 2 * Q - 1) {
                    out.kind = ExceptionKind::fermat_family;
                    out.form = (c == Q - 2) ? 1 : 2;
                    out.t = *t;
                    out.label = (out.form == 1 ? "(2, F, F-2), F = " : "(2, F, 2F-1), F = ");
                    out.label += Q.get_str();
                    return out;
                }
            }
        }
        if (Q > 3) {
            if (auto t = power_of_base(Q + 1, 2)) {  // Q is a Mersenne prime 2^t - 1
                if (c == Q + 2 || c == 2 * Q + 1) {
                    out.kind = ExceptionKind::mersenne_family;
                    out.form = (c == Q + 2) ? 1 : 2;
                    out.t = *t;
                    out.label = (out.form == 1 ? "(2, M, M+2), M = " : "(2, M, 2M+1), M = ");
                    out.label += Q.get_str();
                    return out;
                }
            }
        }
        if (c == 3) {  // (2, 2^t + (-1)^delta * 3, 3)
            if (Q > 3) {
                if (auto t = power_of_base(Q - 3, 2); t && *t > 1) {
                    out.kind = ExceptionKind::two_power_family;
                    out.t = *t;
                    out.delta = 0;
                    out.label = "(2, 2^t+3, 3), t = " + std::to_string(*t);
                    return out;
                }
            }
            if (auto t = power_of_base(Q + 3, 2);
                t && *t > 1 && *t != 2 && *t != 3 && *t != 7) {
                out.kind = ExceptionKind::two_power_family;
                out.t = *t;
                out.delta = 1;
                out.label = "(2, 2^t-3, 3), t = " + std::to_string(*t);
                return out;
            }
        }
    }
    if (P == 3 && c == 2) {  // (3, 3^n + (-1)^delta * 2, 2)
        if (Q > 2) {
            if (auto n = power_of_base(Q - 2, 3); n && *n > 1) {
                out.kind = ExceptionKind::three_power_family;
                out.t = *n;
                out.delta = 0;
                out.label = "(3, 3^n+2, 2), n = " + std::to_string(*n);
                return out;
            }
        }
        if (auto n = power_of_base(Q + 2, 3); n && *n > 1 && *n != 3) {
            out.kind = ExceptionKind::three_power_family;
            out.t = *n;
            out.delta = 1;
            out.label = "(3, 3^n-2, 2), n = " + std::to_string(*n);
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace

ExceptionClassification classify_exception(const mpz_class& p, const mpz_class& q,
                                           const mpz_class& c) {
    ExceptionClassification none;
    if (c < 1 || p == q || !is_prime(p) || !is_prime(q)) return none;

    for (bool swapped : {false, true}) {
        const mpz_class& P = swapped ? q : p;
        const mpz_class& Q = swapped ? p : q;
        for (const auto& s : kSporadics) {
            if (P == s.p && Q == s.q && c == s.c) {
                ExceptionClassification out;
                out.kind = ExceptionKind::sporadic;
                out.label = triple_label(P, Q, c);
                out.swapped = swapped;
                return out;
            }
        }
    }
    for (bool swapped : {false, true}) {
        const mpz_class& P = swapped ? q : p;
        const mpz_class& Q = swapped ? p : q;
        if (auto m = match_families(P, Q, c)) {
            m->swapped = swapped;
            return *m;
        }
    }
    return none;
}

bool is_theorem2_exception(const mpz_class& p, const mpz_class& q, const mpz_class& c) {
    if (!is_prime(p) || !is_prime(q)) return false;
    constexpr std::array<Triple, 4> list{{{3, 5, 2}, {2, 3, 5}, {2, 3, 7}, {2, 11, 7}}};
    for (bool swapped : {false, true}) {
        const mpz_class& P = swapped ? q : p;
        const mpz_class& Q = swapped ? p : q;
        for (const auto& s : list)
            if (P == s.p && Q == s.q && c == s.c) return true;
        // (2, F, F-2) for any Fermat prime F, F = 3 and F = 5 included
        if (P == 2 && power_of_base(Q - 1, 2) && c == Q - 2) return true;
    }
    return false;
}

namespace {

BoundCertificate certificate_for(const mpz_class& p, const mpz_class& q, const mpz_class& c) {
    if (c == 1) return BoundCertificate{2409.08, 64, 64, BoundMethod::floor_1m, false};
    return mignotte_bound(p, q, c);
}

// All solutions for every c <= c_limit at once: collisions |p^i - q^j| <= c_limit
// between the two power sequences, plus the finite p^i + q^j = c case.
std::vector<ScanItem> scan_pair(const mpz_class& p, const mpz_class& q,
                                unsigned long c_limit, std::size_t threshold) {
    const mpz_class c_cap = std::max<unsigned long>(c_limit, 2);
    const BoundCertificate shared = mignotte_bound(p, q, c_cap);
    const unsigned long X = std::max(shared.x_max, floor_log(p, c_cap + 1) + 1);
    const unsigned long Y = std::max(shared.y_max, floor_log(q, c_cap + 1) + 1);

    std::vector<mpz_class> pow_p(X + 1), pow_q(Y + 1);
    pow_p[0] = 1;
    for (unsigned long i = 1; i <= X; ++i) pow_p[i] = pow_p[i - 1] * p;
    pow_q[0] = 1;
    for (unsigned long j = 1; j <= Y; ++j) pow_q[j] = pow_q[j - 1] * q;

    std::map<unsigned long, std::vector<PillaiSolution>> buckets;
    std::size_t lo = 0;
    mpz_class d;
    for (unsigned long i = 0; i <= X; ++i) {
        while (lo <= Y && pow_q[lo] + c_limit < pow_p[i]) ++lo;
        for (std::size_t j = lo; j <= Y && pow_q[j] <= pow_p[i] + c_limit; ++j) {
            d = pow_p[i] - pow_q[j];
            if (d > 0)
                buckets[mpz_get_ui(d.get_mpz_t())].push_back({i, j, 0, 1});
            else if (d < 0)
                buckets[mpz_get_ui(mpz_class(-d).get_mpz_t())].push_back({i, j, 1, 0});
        }
    }
    for (unsigned long i = 0; i <= X && pow_p[i] < c_limit; ++i)
        for (unsigned long j = 0; j <= Y && pow_p[i] + pow_q[j] <= c_limit; ++j)
            buckets[mpz_get_ui(mpz_class(pow_p[i] + pow_q[j]).get_mpz_t())].push_back(
                {i, j, 0, 0});

    std::vector<ScanItem> out;
    for (auto& [c, sols] : buckets) {
        if (sols.size() < threshold) continue;
        const BoundCertificate cert = certificate_for(p, q, c);
        const unsigned long Xc = std::max(cert.x_max, floor_log(p, mpz_class(c + 1)) + 1);
        const unsigned long Yc = std::max(cert.y_max, floor_log(q, mpz_class(c + 1)) + 1);
        std::vector<PillaiSolution> kept;
        for (const auto& s : sols)
            if (s.x <= Xc && s.y <= Yc) kept.push_back(s);
        if (kept.size() < threshold) continue;
        std::sort(kept.begin(), kept.end());

        ScanItem item{p, q, c, SolutionSet{PillaiInstance(p, q, c), std::move(kept), cert},
                      classify_exception(p, q, c)};
        out.push_back(std::move(item));
    }
    return out;
}

}  // namespace

std::vector<ScanItem> scan_box(unsigned prime_limit, unsigned long c_limit,
                               std::size_t threshold, unsigned workers) {
    if (c_limit < 1) throw std::invalid_argument("scan_box: c_limit must be >= 1");
    if (workers < 1) throw std::invalid_argument("scan_box: workers must be >= 1");

    std::vector<unsigned> primes;
    for (unsigned n = 2; n <= prime_limit; ++n)
        if (is_prime(n)) primes.push_back(n);

    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            pairs.emplace_back(primes[i], primes[j]);

    std::vector<std::vector<ScanItem>> slots(pairs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < pairs.size();)
            slots[k] = scan_pair(pairs[k].first, pairs[k].second, c_limit, threshold);
    };
    const unsigned n_threads = std::min<std::size_t>(workers, std::max<std::size_t>(pairs.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<ScanItem> out;
    for (auto& slot : slots)
        for (auto& item : slot) out.push_back(std::move(item));
    return out;
}

}
