#include "quatgrad/report/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quatgrad::report {

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skip: return "skip";
    }
    return "fail";
}

Status parse_status(const std::string& s) {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "skip") return Status::skip;
    throw std::invalid_argument("unknown status: " + s);
}

void Report::check(const std::string& id, const Json& expected, const Json& actual, Json witness) {
    checks.push_back({id, expected == actual ? Status::pass : Status::fail, expected, actual, std::move(witness)});
}

void Report::check_true(const std::string& id, bool ok, Json witness) {
    check(id, true, ok, std::move(witness));
}

void Report::skip(const std::string& id, const std::string& reason) {
    checks.push_back({id, Status::skip, nullptr, nullptr, reason});
}

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const CheckRecord& c) { return c.status == s; }));
}

Json to_json(const Report& r) {
    Json j;
    j["schema"] = kSchema;
    j["suite"] = r.suite;
    j["config"] = r.config;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["id"] = c.id;
        cj["status"] = status_name(c.status);
        cj["expected"] = c.expected;
        cj["actual"] = c.actual;
        cj["witness"] = c.witness;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["summary"] = {{"pass", r.count(Status::pass)}, {"fail", r.count(Status::fail)}, {"skip", r.count(Status::skip)},
                    {"ok", r.ok()}};
    j["data"] = r.data;
    return j;
}

Report from_json(const Json& j) {
    if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchema)
        throw std::invalid_argument("report: missing or unknown schema");
    Report r;
    try {
        r.suite = j.at("suite").get<std::string>();
        r.config = j.at("config");
        for (const auto& cj : j.at("checks"))
            r.checks.push_back({cj.at("id").get<std::string>(), parse_status(cj.at("status").get<std::string>()), cj.at("expected"),
                                cj.at("actual"), cj.at("witness")});
        r.data = j.at("data");
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report: malformed: ") + e.what());
    }
    return r;
}

namespace {

std::string cell(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += "\\|";
        else if (ch == '\n') out += ' ';
        else out += ch;
    }
    return out;
}

}  // namespace

std::string to_markdown(const Report& r) {
    std::ostringstream md;
    md << "# quatgrad report: " << r.suite << "\n\n";
    md << "schema: `" << kSchema << "`\n\n";
    md << "## Config\n\n| key | value |\n| --- | --- |\n";
    for (const auto& [k, v] : r.config.items()) md << "| " << k << " | " << cell(v) << " |\n";
    md << "\n## Summary\n\n| pass | fail | skip | ok |\n| --- | --- | --- | --- |\n";
    md << "| " << r.count(Status::pass) << " | " << r.count(Status::fail) << " | " << r.count(Status::skip) << " | "
       << (r.ok() ? "true" : "false") << " |\n";
    md << "\n## Checks\n\n| id | status | expected | actual | witness |\n| --- | --- | --- | --- | --- |\n";
    for (const auto& c : r.checks)
        md << "| " << cell(c.id) << " | " << status_name(c.status) << " | " << cell(c.expected) << " | " << cell(c.actual)
           << " | " << cell(c.witness) << " |\n";
    md << "\n## Data\n\n```json\n" << r.data.dump(2) << "\n```\n";
    return md.str();
}

std::string dump(const Report& r) { return to_json(r).dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << contents;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace quatgrad::report
