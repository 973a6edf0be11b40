#include "quatgrad/report/suites.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace quatgrad::report;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

std::string suite_list() {
    std::string s;
    for (const auto& info : suites()) s += "  " + info.name + "  " + info.description + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quatgrad: exact checks for commuting involutions of classical Lie algebras"};
    app.footer("usage: quatgrad_cli [verify] <suite> [options] | quatgrad_cli list\n\nsuites:\n" + suite_list());

    std::vector<std::string> words;
    std::string suite_flag, out_json, out_md;
    std::optional<std::string> pair, catalog, family;
    std::optional<int> max_n, n, trials;
    std::uint64_t seed = 1;

    app.add_option("command", words, "verify <suite>, <suite> or list")->expected(0, 2);
    app.add_option("--suite", suite_flag, "suite name");
    app.add_option("--pair", pair, "pair tag (sl-so, sp-gl, ...) or catalog id");
    app.add_option("--catalog", catalog, "catalog grading or decomposition id (same as --pair)");
    app.add_option("--max-n", max_n, "size bound of a sweep");
    app.add_option("--n", n, "size parameter of the jordan suite");
    app.add_option("--family", family, "jordan family: full, sym, skew, spin");
    app.add_option("--seed", seed, "seed for every random search");
    app.add_option("--trials", trials, "number of random samples");
    app.add_option("--out-json", out_json, "write the JSON report here");
    app.add_option("--out-md", out_md, "write the markdown report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    std::string suite;
    if (!words.empty() && words[0] == "verify") {
        if (words.size() == 2) suite = words[1];
    } else if (words.size() == 1) {
        suite = words[0];
    } else if (words.size() > 1) {
        std::cerr << "error: unexpected arguments after " << words[0] << "\n";
        return kUsage;
    }
    if (!suite_flag.empty()) {
        if (!suite.empty() && suite != suite_flag) {
            std::cerr << "error: --suite " << suite_flag << " conflicts with " << suite << "\n";
            return kUsage;
        }
        suite = suite_flag;
    }
    if (suite.empty()) {
        std::cerr << "error: no suite given\n" << app.help();
        return kUsage;
    }
    if (pair && catalog && *pair != *catalog) {
        std::cerr << "error: --pair and --catalog disagree\n";
        return kUsage;
    }

    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.pair = pair ? pair : catalog;
    cfg.max_n = max_n;
    cfg.n = n;
    cfg.family = family;
    cfg.seed = seed;
    cfg.trials = trials;

    Report report;
    try {
        report = run_suite(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFail;
    }

    try {
        if (!out_json.empty()) write_file(out_json, dump(report));
        if (!out_md.empty()) write_file(out_md, to_markdown(report));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (out_json.empty()) std::cout << dump(report);
    else
        std::cout << report.suite << ": " << report.count(Status::pass) << " pass, " << report.count(Status::fail) << " fail, "
                  << report.count(Status::skip) << " skip\n";
    return report.ok() ? kPass : kFail;
}
