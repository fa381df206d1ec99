#pragma once

#include <string>

#include <gmpxx.h>
#include <json.hpp>

namespace pillai::cli {

// Structured campaign result. The JSON document is the report of record;
// CSV and text are flattenings of it. duration_ms is excluded from
// determinism comparisons.
struct Report {
    std::string campaign;
    nlohmann::json config = nlohmann::json::object();
    nlohmann::json items = nlohmann::json::array();
    nlohmann::json summary = nlohmann::json::object();
    double duration_ms = 0.0;
    bool pass = true;

    nlohmann::json to_json() const;
    std::string to_csv() const;
    std::string to_text() const;

    /// Serialization with the duration field erased.
    std::string deterministic_dump() const;
};

/// JSON value for an mpz: number when it fits in 64 bits, decimal string
/// otherwise.
nlohmann::json json_int(const mpz_class& v);

}
