#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schwarzkit/types.hpp"

namespace schwarz {

// Named tolerance overrides (CLI --tolerance KEY=VALUE). Verifiers read
// through get() so every tolerance they actually used lands in the report.
struct ToleranceMap {
    std::map<std::string, double> values;

    double get(std::string_view key, double fallback) const {
        auto it = values.find(std::string(key));
        return it == values.end() ? fallback : it->second;
    }
};

enum class Verdict { holds, violated, equality };

std::string_view verdict_name(Verdict v);

// Structured outcome of one verifier invocation. Slack lists are capped at
// the worst few entries; min_slack always reflects the full scan.
struct VerificationReport {
    static constexpr std::size_t kMaxStoredSlacks = 8;

    std::string verifier;
    std::string inputs_digest;
    std::vector<std::pair<Complex, double>> slacks; // (probe point, slack)
    double min_slack = std::numeric_limits<double>::infinity();
    Verdict verdict = Verdict::holds;
    std::optional<Complex> witness; // set iff violated
    std::map<std::string, double> tolerances;
    nlohmann::json details = nlohmann::json::object();

    void record_slack(Complex point, double slack);
    void use_tolerance(const ToleranceMap& tol, std::string_view key, double fallback,
                       double* out = nullptr);

    nlohmann::json to_json() const;
};

// FNV-1a over a printable description of the inputs; keeps reports
// self-identifying without embedding whole specs.
std::string digest(std::string_view text);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

} // namespace schwarz
