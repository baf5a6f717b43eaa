// Batch verification front-end: runs a named suite over its built-in corpus
// (plus optional extra inputs) and writes a machine-readable JSON report.
//
//   schwarz-verify --suite burns-krantz --seed 7 --output report.json
//   schwarz-verify --list-suites
//   schwarz-verify describe spec.json
//
// Exit codes: 0 all verdicts as expected, 2 a bound was violated or a
// classification came out unexpected, 1 configuration or input errors.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schwarzkit/errors.hpp"
#include "schwarzkit/json_io.hpp"
#include "schwarzkit/kernels.hpp"
#include "schwarzkit/suites.hpp"

namespace {

int run_describe(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return 1;
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << schwarz::describe_document(doc);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification suites for boundary rigidity of disc and ball self-maps"};
    app.require_subcommand(0, 1);

    std::string suite, output, input;
    std::uint64_t seed = 0;
    std::vector<std::string> tolerance_args;
    bool list_suites = false, serial = false;
    app.add_option("--suite", suite, "suite to run")->type_name("NAME");
    app.add_option("--seed", seed, "seed for the suite's random corpora");
    app.add_option("--input", input, "JSON file with extra function specs / measures");
    app.add_option("--output", output, "report file to write")->type_name("PATH");
    app.add_option("--tolerance", tolerance_args, "override, KEY=VALUE (repeatable)")
        ->type_name("KEY=VALUE");
    app.add_flag("--list-suites", list_suites, "print the suite names and exit");
    app.add_flag("--serial", serial, "run scan kernels on the serial reference path");

    CLI::App* describe = app.add_subcommand("describe", "summarize a function spec or measure file");
    std::string describe_path;
    describe->add_option("path", describe_path, "JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (serial) schwarz::set_default_exec(schwarz::Exec::serial);

    if (describe->parsed()) return run_describe(describe_path);

    if (list_suites) {
        for (const std::string& name : schwarz::suite_names()) std::cout << name << "\n";
        return 0;
    }

    if (suite.empty() || output.empty()) {
        std::cerr << "error: --suite and --output are required (or use --list-suites / describe)\n";
        return 1;
    }

    schwarz::SuiteConfig config;
    config.suite = suite;
    config.seed = seed;
    if (!input.empty()) config.input_path = input;
    for (const std::string& arg : tolerance_args) {
        auto eq = arg.find('=');
        if (eq == std::string::npos || eq == 0) {
            std::cerr << "error: --tolerance expects KEY=VALUE, got \"" << arg << "\"\n";
            return 1;
        }
        try {
            config.tolerances.values[arg.substr(0, eq)] = std::stod(arg.substr(eq + 1));
        } catch (const std::exception&) {
            std::cerr << "error: bad tolerance value in \"" << arg << "\"\n";
            return 1;
        }
    }

    try {
        schwarz::SuiteResult result = schwarz::run_suite(config);
        std::ofstream out(output);
        if (!out) {
            std::cerr << "error: cannot write " << output << "\n";
            return 1;
        }
        out << schwarz::render_report(result.report);
        std::cout << "suite " << suite << ": " << (result.report.size() - 1) << " checks, exit "
                  << result.exit_code << ", " << result.wall_ms << " ms\n";
        return result.exit_code;
    } catch (const schwarz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
