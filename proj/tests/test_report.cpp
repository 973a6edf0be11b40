#include "quatgrad/report/report.hpp"
#include "quatgrad/report/suites.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace quatgrad::report;

namespace {

SuiteConfig cfg(const std::string& suite) {
    SuiteConfig c;
    c.suite = suite;
    return c;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

// Every table row has as many cells as its header; escaped pipes do not count.
bool tables_well_formed(const std::string& md) {
    std::size_t width = 0;
    bool in_table = false, in_fence = false;
    for (const auto& l : lines(md)) {
        if (l.rfind("```", 0) == 0) {
            in_fence = !in_fence;
            continue;
        }
        if (in_fence) continue;
        if (l.empty() || l[0] != '|') {
            in_table = false;
            continue;
        }
        std::size_t cells = 0;
        for (std::size_t i = 0; i < l.size(); ++i)
            if (l[i] == '|' && (i == 0 || l[i - 1] != '\\')) ++cells;
        if (!in_table) width = cells;
        in_table = true;
        if (cells != width || l.back() != '|') return false;
    }
    return !in_fence;
}

std::size_t rows_after(const std::string& md, const std::string& heading) {
    auto ls = lines(md);
    std::size_t i = 0;
    while (i < ls.size() && ls[i] != heading) ++i;
    i += 2;  // blank line, header
    if (i >= ls.size() || ls[i].rfind("| ", 0) != 0) return 0;
    i += 2;  // header, separator
    std::size_t n = 0;
    while (i < ls.size() && !ls[i].empty() && ls[i][0] == '|') ++n, ++i;
    return n;
}

}  // namespace

TEST_CASE("check records decide status by equality") {
    Report r;
    r.check("a", 2, 2);
    r.check("b", 2, 3, "w");
    r.check_true("c", true);
    r.skip("d", "not applicable");
    CHECK(r.count(Status::pass) == 2);
    CHECK(r.count(Status::fail) == 1);
    CHECK(r.count(Status::skip) == 1);
    CHECK_FALSE(r.ok());
    CHECK(r.checks[3].witness == "not applicable");
    for (auto s : {Status::pass, Status::fail, Status::skip}) CHECK(parse_status(status_name(s)) == s);
    CHECK_THROWS_AS(parse_status("maybe"), std::invalid_argument);
}

TEST_CASE("json round trip") {
    Report r;
    r.suite = "demo";
    r.config["seed"] = 4;
    r.config["pair"] = "sl-so";
    r.check("x", Json::array({1, 2}), Json::array({1, 2}), {{"k", "v|w"}});
    r.check("y", "a", "b");
    r.skip("z", "why not");
    r.data = {{"rows", Json::array({1, 2, 3})}};
    Json j = to_json(r);
    CHECK(j["schema"] == kSchema);
    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["summary"]["fail"] == 1);
    CHECK(j["summary"]["ok"] == false);
    Report back = from_json(j);
    CHECK(dump(back) == dump(r));

    Json bad = j;
    bad["schema"] = "quatgrad/0";
    CHECK_THROWS_AS(from_json(bad), std::invalid_argument);
    bad = j;
    bad["checks"][0]["status"] = "odd";
    CHECK_THROWS_AS(from_json(bad), std::invalid_argument);
    bad = j;
    bad.erase("data");
    CHECK_THROWS_AS(from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(from_json(Json::array()), std::invalid_argument);
}

TEST_CASE("key order is fixed") {
    Report r;
    r.suite = "s";
    const Json j = to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"schema", "suite", "config", "checks", "summary", "data"});
    CHECK(dump(r).back() == '\n');
}

TEST_CASE("empty report is valid markdown") {
    Report r;
    r.suite = "empty";
    std::string md = to_markdown(r);
    CHECK(tables_well_formed(md));
    CHECK(rows_after(md, "## Checks") == 0);
    CHECK(rows_after(md, "## Config") == 0);
    CHECK(rows_after(md, "## Summary") == 1);
    CHECK(md.find("| 0 | 0 | 0 | true |") != std::string::npos);
    CHECK(md.find("```json\n{}\n```") != std::string::npos);
}

TEST_CASE("markdown mirrors json") {
    Report r = run_suite([] {
        auto c = cfg("partitions");
        c.pair = "sp-gl";
        c.max_n = 5;
        return c;
    }());
    std::string md = to_markdown(r);
    CHECK(tables_well_formed(md));
    CHECK(rows_after(md, "## Checks") == r.checks.size());
    CHECK(rows_after(md, "## Config") == r.config.size());
    for (const auto& c : r.checks) CHECK(md.find("| " + c.id + " | " + status_name(c.status) + " |") != std::string::npos);
    auto pos = md.find("```json\n");
    REQUIRE(pos != std::string::npos);
    auto end = md.find("\n```", pos + 8);
    CHECK(Json::parse(md.substr(pos + 8, end - pos - 8)) == r.data);

    Report pipes;
    pipes.suite = "p";
    pipes.check("a|b", "x|y", "x|y", "line\nbreak");
    std::string pm = to_markdown(pipes);
    CHECK(tables_well_formed(pm));
    CHECK(pm.find("a\\|b") != std::string::npos);
}

TEST_CASE("list names every suite") {
    Report r = run_suite(cfg("list"));
    std::set<std::string> names;
    for (const auto& row : r.data["suites"]) names.insert(row["name"].get<std::string>());
    for (const char* s : {"partitions", "inequality", "css", "roots", "bounds", "jordan", "triad"}) CHECK(names.count(s) == 1);
    CHECK(names.size() == suites().size());
    CHECK(r.ok());
}

TEST_CASE("same seed gives byte identical reports") {
    for (const char* s : {"css", "jordan", "roots"}) {
        auto c = cfg(s);
        c.seed = 11;
        if (std::string(s) == "jordan") c.trials = 20;
        std::string a = dump(run_suite(c)), b = dump(run_suite(c));
        CHECK_MESSAGE(a == b, s);
        CHECK(Json::parse(a)["schema"] == kSchema);
        CHECK(Json::parse(a)["config"]["seed"] == 11);
    }
}

TEST_CASE("usage errors") {
    CHECK_THROWS_AS(run_suite(cfg("nosuch")), UsageError);
    auto c = cfg("partitions");
    c.pair = "xx";
    CHECK_THROWS_AS(run_suite(c), UsageError);
    c = cfg("partitions");
    c.max_n = 0;
    CHECK_THROWS_AS(run_suite(c), UsageError);
    c = cfg("jordan");
    c.n = 9;
    CHECK_THROWS_AS(run_suite(c), UsageError);
    c = cfg("jordan");
    c.family = "octonion";
    CHECK_THROWS_AS(run_suite(c), UsageError);
    c = cfg("roots");
    c.pair = "nope";
    CHECK_THROWS_AS(run_suite(c), UsageError);
    CHECK_THROWS_AS(write_file("/nonexistent/dir/report.json", "{}"), std::runtime_error);
}

TEST_CASE("documented examples") {
    auto c = cfg("partitions");
    c.pair = "sl-so";
    c.max_n = 10;
    Report p = run_suite(c);
    CHECK(p.ok());
    CHECK(p.data["min_defect"] == 2);

    c = cfg("jordan");
    c.family = "full";
    c.n = 3;
    c.trials = 20;
    Report j = run_suite(c);
    CHECK(j.ok());
    CHECK(j.data["centralizer_dim"] == 3);
    CHECK(j.data["bound"] == 10);

    c = cfg("roots");
    c.pair = "sp4-gl2";
    Report rt = run_suite(c);
    CHECK(rt.ok());
    const std::string d = rt.data.dump();
    CHECK(d.find("\"C2\"") != std::string::npos);
}
