#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schwarzkit/report.hpp"

namespace schwarz {

inline constexpr const char* kVersion = "0.1.0";

// Batch suite configuration. Reports are deterministic in (suite, seed,
// tolerances, input): all randomness flows from one generator split per
// instance, and entries are assembled in instance order no matter how the
// parallel loop schedules them.
struct SuiteConfig {
    std::string suite;
    std::uint64_t seed = 0;
    ToleranceMap tolerances;
    std::optional<std::string> input_path;
};

struct SuiteResult {
    nlohmann::json report; // array: [metadata, entry, entry, ...]
    int exit_code = 0;     // 0 all as expected, 2 any violation/unexpected verdict
    double wall_ms = 0.0;  // not serialized into the report
};

std::vector<std::string> suite_names();

SuiteResult run_suite(const SuiteConfig& config);

// Serialization used for the output file; fixed two-space indentation so
// identical configurations produce byte-identical files.
std::string render_report(const nlohmann::json& report);

} // namespace schwarz
