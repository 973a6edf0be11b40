#pragma once

#include "quatgrad/report/report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quatgrad::report {

// Bad suite name or parameter; the CLI maps it to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
    std::string suite;
    std::optional<std::string> pair;    // pair tag, catalog grading or decomposition id
    std::optional<int> max_n;
    std::optional<int> n;
    std::optional<std::string> family;  // jordan suite
    std::uint64_t seed = 1;
    std::optional<int> trials;
};

struct SuiteInfo {
    std::string name;
    std::string description;
};
const std::vector<SuiteInfo>& suites();

Report run_suite(const SuiteConfig& config);
Report list_report();

}  // namespace quatgrad::report
