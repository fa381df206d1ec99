#include "pillai/campaigns.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "pillai/arith.hpp"
#include "pillai/classify.hpp"
#include "pillai/special_eqs.hpp"

namespace pillai::cli {

using nlohmann::json;
namespace speq = pillai::special_eqs;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

json solution_json(const PillaiInstance& inst, const PillaiSolution& s) {
    json j;
    j["x"] = s.x;
    j["y"] = s.y;
    j["u"] = s.u;
    j["v"] = s.v;
    j["term"] = solution_string(inst, s);
    return j;
}

json certificate_json(const BoundCertificate& cert) {
    json j;
    j["method"] = method_name(cert.method);
    j["G_star"] = cert.G_star;
    j["x_max"] = cert.x_max;
    j["y_max"] = cert.y_max;
    j["conditions_met"] = cert.conditions_met;
    return j;
}

json classification_json(const ExceptionClassification& cls) {
    json j;
    j["kind"] = kind_name(cls.kind);
    if (cls.matched()) {
        j["label"] = cls.label;
        j["swapped"] = cls.swapped;
        if (cls.t) j["t"] = cls.t;
        if (cls.kind != ExceptionKind::sporadic && cls.kind != ExceptionKind::fermat_family &&
            cls.kind != ExceptionKind::mersenne_family)
            j["delta"] = cls.delta;
        if (cls.form) j["form"] = cls.form;
    }
    return j;
}

json record_json(const speq::SpecialSolutionRecord& rec) {
    json params = json::array();
    for (const auto& v : rec.parameters) params.push_back(json_int(v));
    json j;
    j["tag"] = speq::tag_name(rec.tag);
    j["parameters"] = params;
    return j;
}

std::string record_display(const speq::SpecialSolutionRecord& rec) {
    std::ostringstream os;
    os << speq::tag_name(rec.tag) << " (";
    for (std::size_t i = 0; i < rec.parameters.size(); ++i) {
        if (i) os << ",";
        os << rec.parameters[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

Report run_solve(const SolveConfig& cfg) {
    Timer timer;
    Report rep;
    rep.campaign = "solve";
    rep.config = {{"a", json_int(cfg.a)}, {"b", json_int(cfg.b)}, {"c", json_int(cfg.c)},
                  {"r", json_int(cfg.r)}, {"s", json_int(cfg.s)}};
    PillaiInstance inst(cfg.a, cfg.b, cfg.c, cfg.r, cfg.s);
    const bool bounded = cfg.x_max.has_value() || cfg.y_max.has_value();
    SolutionSet set = bounded
                          ? enumerate_solutions(inst, cfg.x_max.value_or(64), cfg.y_max.value_or(64))
                          : enumerate_solutions(inst);
    if (bounded) {
        rep.config["x_max"] = cfg.x_max.value_or(64);
        rep.config["y_max"] = cfg.y_max.value_or(64);
    }
    rep.config["mode"] = bounded ? "bounded" : "certified";
    for (const auto& s : set.solutions) {
        json item = solution_json(inst, s);
        item["display"] = solution_string(inst, s) + " = " + cfg.c.get_str();
        rep.items.push_back(item);
    }
    rep.summary["count"] = set.solutions.size();
    rep.summary["certificate"] = certificate_json(*set.certificate);
    rep.pass = true;
    rep.duration_ms = timer.ms();
    return rep;
}

Report run_scan(const ScanConfig& cfg) {
    Timer timer;
    Report rep;
    rep.campaign = "scan";
    rep.config = {{"prime_limit", cfg.prime_limit},
                  {"c_limit", cfg.c_limit},
                  {"threshold", cfg.threshold}};
    auto items = scan_box(cfg.prime_limit, cfg.c_limit, cfg.threshold, cfg.workers);
    std::size_t unclassified = 0;
    for (const auto& it : items) {
        json j;
        j["p"] = json_int(it.p);
        j["q"] = json_int(it.q);
        j["c"] = json_int(it.c);
        j["count"] = it.sols.solutions.size();
        json sols = json::array();
        for (const auto& s : it.sols.solutions) sols.push_back(solution_json(it.sols.instance, s));
        j["solutions"] = sols;
        j["certificate"] = certificate_json(*it.sols.certificate);
        j["classification"] = classification_json(it.cls);
        std::ostringstream disp;
        disp << "(" << it.p << "," << it.q << "," << it.c << "): " << it.sols.solutions.size()
             << " solutions, " << (it.cls.matched() ? it.cls.label : std::string("UNCLASSIFIED"));
        j["display"] = disp.str();
        rep.items.push_back(j);
        if (!it.cls.matched()) ++unclassified;
    }
    rep.summary["triples"] = items.size();
    rep.summary["unclassified"] = unclassified;
    rep.pass = unclassified == 0;
    rep.duration_ms = timer.ms();
    return rep;
}

namespace {

void compare_records(Report& rep, const std::vector<speq::SpecialSolutionRecord>& found,
                     const std::vector<speq::SpecialSolutionRecord>& expected) {
    std::size_t unexpected = 0, missing = 0;
    for (const auto& rec : found) {
        const bool ok = std::find(expected.begin(), expected.end(), rec) != expected.end();
        json j = record_json(rec);
        j["expected"] = ok;
        j["display"] = record_display(rec) + (ok ? "" : " UNEXPECTED");
        rep.items.push_back(j);
        if (!ok) ++unexpected;
    }
    for (const auto& rec : expected) {
        if (std::find(found.begin(), found.end(), rec) != found.end()) continue;
        json j = record_json(rec);
        j["missing"] = true;
        j["display"] = record_display(rec) + " MISSING";
        rep.items.push_back(j);
        ++missing;
    }
    rep.summary["found"] = found.size();
    rep.summary["expected"] = expected.size();
    rep.summary["unexpected"] = unexpected;
    rep.summary["missing"] = missing;
    rep.pass = unexpected == 0 && missing == 0;
}

std::vector<mpz_class> odd_primes_upto(const mpz_class& limit) {
    std::vector<mpz_class> out;
    for (mpz_class p = 3; p <= limit; p += 2)
        if (arith::is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace

Report run_special(const SpecialConfig& cfg) {
    Timer timer;
    Report rep;
    rep.campaign = "special";
    rep.config["tag"] = cfg.tag;

    std::vector<speq::SpecialSolutionRecord> found, expected;
    if (cfg.tag == "L2") {
        const unsigned r_max = cfg.r_max ? cfg.r_max : 25;
        rep.config["d_max"] = cfg.d_max;
        rep.config["r_max"] = r_max;
        found = speq::solve_lemma2(cfg.d_max, r_max);
        if (cfg.d_max >= 2 && r_max >= 3)
            expected.emplace_back(speq::EquationTag::L2, std::vector<mpz_class>{2, 3, -5});
        if (cfg.d_max >= 4 && r_max >= 3)
            expected.emplace_back(speq::EquationTag::L2, std::vector<mpz_class>{4, 3, -11});
    } else if (cfg.tag == "L3" || cfg.tag == "L5") {
        const unsigned r_max = cfg.r_max ? cfg.r_max : 30;
        rep.config["r_max"] = r_max;
        std::vector<mpz_class> ps;
        if (cfg.p) {
            ps.push_back(*cfg.p);
            rep.config["p"] = json_int(*cfg.p);
        } else {
            ps = odd_primes_upto(cfg.p_max);
            rep.config["p_max"] = json_int(cfg.p_max);
        }
        for (const auto& p : ps) {
            auto part = (cfg.tag == "L3") ? speq::solve_p_minus(p, r_max)
                                          : speq::solve_p_plus(p, r_max);
            for (auto& rec : part) found.push_back(std::move(rec));
            if (cfg.tag == "L3" && p == 3 && r_max >= 3)
                expected.emplace_back(speq::EquationTag::L3, std::vector<mpz_class>{5, 3, 3, 1});
            if (cfg.tag == "L3" && p == 5 && r_max >= 3)
                expected.emplace_back(speq::EquationTag::L3, std::vector<mpz_class>{11, 5, 3, 1});
        }
    } else if (cfg.tag == "L4") {
        const unsigned r_max = cfg.r_max ? cfg.r_max : 14;
        rep.config["w_max"] = cfg.w_max;
        rep.config["r_max"] = r_max;
        found = speq::lemma4_scan(cfg.w_max, r_max);
    } else if (cfg.tag == "L6") {
        const unsigned r_max = cfg.r_max ? cfg.r_max : 16;
        rep.config["r_max"] = r_max;
        found = speq::solve_2_minus(r_max);
        expected = speq::lemma6_expected(r_max);
    } else if (cfg.tag == "L7") {
        const unsigned r_max = cfg.r_max ? cfg.r_max : 10;
        rep.config["r_max"] = r_max;
        found = speq::solve_2_plus(r_max);
        expected = speq::lemma7_expected(r_max);
    } else {
        throw std::invalid_argument("unknown equation tag: " + cfg.tag);
    }
    compare_records(rep, found, expected);
    rep.duration_ms = timer.ms();
    return rep;
}

Report run_theorem4(const Theorem4Config& cfg) {
    Timer timer;
    Report rep;
    rep.campaign = "theorem4";
    rep.config["x_max"] = json_int(cfg.x_max);

    std::vector<mpz_class> cs;
    if (cfg.c) {
        rep.config["c"] = json_int(*cfg.c);
        cs.push_back(*cfg.c);
    } else {
        rep.config["c_range"] = cfg.c_range_lo.get_str() + ".." + cfg.c_range_hi.get_str();
        mpz_class lo = cfg.c_range_lo;
        if (lo < 2) lo = 2;
        if (mpz_odd_p(lo.get_mpz_t())) ++lo;
        for (mpz_class C = lo; C <= cfg.c_range_hi; C += 2) cs.push_back(C);
    }

    std::size_t violations = 0, exceptions = 0, solutions = 0;
    for (const auto& C : cs) {
        const speq::Theorem4Bound bound = speq::theorem4_bound(C);  // rejects odd C
        json jb;
        jb["C"] = json_int(C);
        jb["P"] = json_int(bound.split.P);
        jb["Q"] = json_int(bound.split.Q);
        jb["u"] = bound.u_flag;
        jb["h"] = bound.h;
        jb["lcm"] = json_int(bound.lcm_part);
        jb["N"] = json_int(bound.N);
        std::ostringstream disp;
        disp << "C=" << C << ": P=" << bound.split.P << " Q=" << bound.split.Q
             << " u=" << bound.u_flag << " h=" << bound.h << " N=" << bound.N;
        json sols = json::array();
        for (const auto& sol : speq::theorem4_enumerate(C, cfg.x_max)) {
            json js;
            js["x"] = json_int(sol.x);
            js["y"] = json_int(sol.y);
            js["n"] = sol.n;
            js["status"] = speq::status_name(sol.status);
            sols.push_back(js);
            ++solutions;
            if (sol.status == speq::Theorem4Status::violation) ++violations;
            if (sol.status == speq::Theorem4Status::listed_exception) ++exceptions;
        }
        jb["solutions"] = sols;
        jb["display"] = disp.str();
        rep.items.push_back(jb);
    }
    rep.summary["C_values"] = cs.size();
    rep.summary["solutions"] = solutions;
    rep.summary["violations"] = violations;
    rep.summary["listed_exceptions"] = exceptions;
    rep.pass = violations == 0;
    rep.duration_ms = timer.ms();
    return rep;
}

Report run_bound(const BoundConfig& cfg) {
    Timer timer;
    Report rep;
    rep.campaign = "bound";
    rep.config = {{"a", json_int(cfg.a)}, {"b", json_int(cfg.b)}, {"c", json_int(cfg.c)}};
    BoundCertificate cert = mignotte_bound(cfg.a, cfg.b, cfg.c);
    json item = certificate_json(cert);
    const double rhs = mignotte_rhs(cert.G_star, cfg.a, cfg.b, cfg.c);
    item["rhs_at_G_star"] = rhs;
    const bool ok = cert.G_star >= 2409.08 && cert.G_star >= rhs;
    item["self_consistent"] = ok;
    std::ostringstream disp;
    disp << "G* = " << cert.G_star << ", x <= " << cert.x_max << ", y <= " << cert.y_max;
    item["display"] = disp.str();
    rep.items.push_back(item);
    rep.pass = ok;
    rep.duration_ms = timer.ms();
    return rep;
}

namespace {

void table_report_items(Report& rep, const TableReport& tr, const std::string& section) {
    for (const auto& check : tr.checks) {
        json j;
        j["section"] = section;
        j["p"] = json_int(check.row.p);
        j["q"] = json_int(check.row.q);
        j["c"] = json_int(check.row.c);
        if (!check.row.family.empty()) j["family"] = check.row.family;
        j["status"] = check.skipped ? "skipped" : (check.verified ? "verified" : "FAILED");
        if (!check.row.identity.empty()) j["identity"] = check.row.identity;
        if (!check.note.empty()) j["note"] = check.note;
        std::ostringstream disp;
        disp << "(" << check.row.p << "," << check.row.q << "," << check.row.c << ") "
             << j["status"].get<std::string>();
        if (!check.row.identity.empty()) disp << ": " << check.row.identity;
        if (!check.note.empty()) disp << " [" << check.note << "]";
        j["display"] = disp.str();
        rep.items.push_back(j);
    }
}

}  // namespace

Report run_verify_tables(const TablesConfig& cfg) {
    Timer timer;
    Report rep;
    rep.campaign = "verify-tables";
    rep.config["fermat_max"] = json_int(cfg.windows.fermat_max);
    rep.config["mersenne_max"] = json_int(cfg.windows.mersenne_max);
    rep.config["n_max"] = cfg.windows.n_max;
    rep.config["t_max"] = cfg.windows.t_max;
    rep.config["lemma9_t_max"] = cfg.lemma9_t_max;

    TableReport table = verify_theorem3_table(cfg.windows);
    TableReport families = verify_lemma9_families(cfg.lemma9_t_max);
    table_report_items(rep, table, "table");
    table_report_items(rep, families, "families");

    rep.summary["table_verified"] = table.verified;
    rep.summary["table_skipped"] = table.skipped;
    rep.summary["table_failed"] = table.failed;
    rep.summary["families_verified"] = families.verified;
    rep.summary["families_failed"] = families.failed;
    rep.pass = table.pass && families.pass;
    rep.duration_ms = timer.ms();
    return rep;
}

}
