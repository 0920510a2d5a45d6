#include "periods/cli/report.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

namespace periods::cli {

std::string utc_timestamp()
{
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Report make_report(int prec, const std::vector<verify::CheckResult>& results, std::string timestamp)
{
    Report r;
    r.timestamp = std::move(timestamp);
    r.prec = prec;
    for (const auto& c : results) {
        r.results.push_back({c.name, matrices::to_string(c.status), c.defect.to_string(c.prec), c.tolerance.to_string(c.prec),
                             c.elapsed});
        switch (c.status) {
        case verify::Status::pass:
            ++r.summary.passed;
            break;
        case verify::Status::fail:
            ++r.summary.failed;
            break;
        case verify::Status::skipped:
            ++r.summary.skipped;
            break;
        }
    }
    return r;
}

nlohmann::json to_json(const Report& r)
{
    nlohmann::json results = nlohmann::json::array();
    for (const auto& e : r.results)
        results.push_back({{"name", e.name},
                           {"status", e.status},
                           {"defect", e.defect},
                           {"tolerance", e.tolerance},
                           {"elapsed_s", e.elapsed_s}});
    return {{"tool_version", r.tool_version},
            {"timestamp", r.timestamp},
            {"prec", r.prec},
            {"results", results},
            {"summary", {{"passed", r.summary.passed}, {"failed", r.summary.failed}, {"skipped", r.summary.skipped}}}};
}

Report report_from_json(const nlohmann::json& j)
{
    Report r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    r.prec = j.at("prec").get<int>();
    Summary tally;
    for (const auto& e : j.at("results")) {
        ReportEntry x{e.at("name").get<std::string>(), e.at("status").get<std::string>(), e.at("defect").get<std::string>(),
                      e.at("tolerance").get<std::string>(), e.at("elapsed_s").get<double>()};
        if (x.status == "pass")
            ++tally.passed;
        else if (x.status == "fail")
            ++tally.failed;
        else if (x.status == "skipped")
            ++tally.skipped;
        else
            throw std::invalid_argument("unknown status: " + x.status);
        r.results.push_back(std::move(x));
    }
    const auto& s = j.at("summary");
    r.summary = {s.at("passed").get<int>(), s.at("failed").get<int>(), s.at("skipped").get<int>()};
    if (r.summary.passed != tally.passed || r.summary.failed != tally.failed || r.summary.skipped != tally.skipped)
        throw std::invalid_argument("report summary does not match its results");
    return r;
}

std::string serialize(const Report& r) { return to_json(r).dump(2) + "\n"; }

} // namespace periods::cli
