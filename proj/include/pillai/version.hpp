#pragma once

namespace pillai {

inline constexpr const char* artifact_version = "1.0.0";
inline constexpr int report_schema_version = 1;

}
