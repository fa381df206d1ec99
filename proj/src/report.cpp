#include "pillai/report.hpp"

#include <map>
#include <sstream>
#include <vector>

#include <gmpxx.h>

#include "pillai/version.hpp"

namespace pillai::cli {

using nlohmann::json;

json json_int(const mpz_class& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json Report::to_json() const {
    json doc;
    doc["schema_version"] = report_schema_version;
    doc["artifact_version"] = artifact_version;
    doc["campaign"] = campaign;
    doc["config"] = config;
    doc["items"] = items;
    doc["summary"] = summary;
    doc["pass"] = pass;
    doc["duration_ms"] = duration_ms;
    return doc;
}

std::string Report::deterministic_dump() const {
    json doc = to_json();
    doc.erase("duration_ms");
    return doc.dump(2);
}

namespace {

void flatten(const json& v, const std::string& prefix, std::map<std::string, std::string>& out) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (v.is_array()) {
        std::ostringstream os;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << "|";
            os << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
        }
        out[prefix] = os.str();
    } else if (v.is_string()) {
        out[prefix] = v.get<std::string>();
    } else {
        out[prefix] = v.dump();
    }
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    q += "\"";
    return q;
}

}  // namespace

std::string Report::to_csv() const {
    // union of flattened item keys, sorted, one row per item
    std::vector<std::map<std::string, std::string>> rows;
    std::map<std::string, int> keys;
    for (const auto& item : items) {
        std::map<std::string, std::string> row;
        flatten(item, "", row);
        for (const auto& [k, _] : row) keys[k] = 1;
        rows.push_back(std::move(row));
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, _] : keys) {
        if (!first) os << ",";
        os << csv_quote(k);
        first = false;
    }
    os << "\n";
    for (const auto& row : rows) {
        first = true;
        for (const auto& [k, _] : keys) {
            if (!first) os << ",";
            auto it = row.find(k);
            if (it != row.end()) os << csv_quote(it->second);
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "campaign: " << campaign << " (v" << artifact_version << ")\n";
    os << "config: " << config.dump() << "\n";
    for (const auto& item : items) {
        if (item.contains("display")) {
            os << "  " << item["display"].get<std::string>() << "\n";
        } else {
            std::map<std::string, std::string> row;
            flatten(item, "", row);
            os << " ";
            for (const auto& [k, v] : row) os << " " << k << "=" << v;
            os << "\n";
        }
    }
    os << "summary: " << summary.dump() << "\n";
    os << (pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}
