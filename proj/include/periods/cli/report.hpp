#ifndef PERIODS_CLI_REPORT_HPP
#define PERIODS_CLI_REPORT_HPP

#include "periods/verify/registry.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace periods::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// One row of the JSON report. Numbers that carry precision are decimal
// strings; elapsed time is a plain double.
struct ReportEntry {
    std::string name;
    std::string status;
    std::string defect;
    std::string tolerance;
    double elapsed_s = 0;
};

struct Summary {
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};

struct Report {
    std::string tool_version = kToolVersion;
    std::string timestamp;
    int prec = 0;
    std::vector<ReportEntry> results;
    Summary summary;
};

// Current time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

// Defect and tolerance are written with the check's effective precision in
// significant digits. The summary is tallied from the results.
Report make_report(int prec, const std::vector<verify::CheckResult>& results, std::string timestamp);

nlohmann::json to_json(const Report& r);
// Throws nlohmann::json exceptions on schema mismatch and std::invalid_argument
// when the summary disagrees with the results.
Report report_from_json(const nlohmann::json& j);

// Pretty-printed with two-space indentation and a trailing newline.
std::string serialize(const Report& r);

} // namespace periods::cli

#endif
