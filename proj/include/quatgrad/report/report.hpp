#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace quatgrad::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "quatgrad/1";

enum class Status { pass, fail, skip };
std::string status_name(Status s);
Status parse_status(const std::string& s);

struct CheckRecord {
    std::string id;
    Status status = Status::pass;
    Json expected;
    Json actual;
    Json witness;
};

struct Report {
    std::string suite;
    Json config = Json::object();
    std::vector<CheckRecord> checks;
    Json data = Json::object();  // suite payload (SweepReport, CSSReport, ...)

    // expected == actual decides the status.
    void check(const std::string& id, const Json& expected, const Json& actual, Json witness = nullptr);
    void check_true(const std::string& id, bool ok, Json witness = nullptr);
    void skip(const std::string& id, const std::string& reason);
    std::size_t count(Status s) const;
    bool ok() const { return count(Status::fail) == 0; }
};

Json to_json(const Report& r);
// Throws std::invalid_argument on a schema mismatch or malformed record.
Report from_json(const Json& j);
std::string to_markdown(const Report& r);

// Stable text: two-space indentation and a trailing newline.
std::string dump(const Report& r);

// Throws std::runtime_error when the file cannot be written.
void write_file(const std::string& path, const std::string& contents);

}  // namespace quatgrad::report
