#include "schwarzkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "schwarzkit/errors.hpp"

namespace schwarz {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::equality: return "equality";
    }
    return "holds";
}

void VerificationReport::record_slack(Complex point, double slack) {
    min_slack = std::min(min_slack, slack);
    slacks.emplace_back(point, slack);
    if (slacks.size() > kMaxStoredSlacks) {
        // keep the worst entries
        std::sort(slacks.begin(), slacks.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        slacks.resize(kMaxStoredSlacks);
    }
}

void VerificationReport::use_tolerance(const ToleranceMap& tol, std::string_view key,
                                       double fallback, double* out) {
    double v = tol.get(key, fallback);
    tolerances[std::string(key)] = v;
    if (out) *out = v;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["verifier"] = verifier;
    j["inputs_digest"] = inputs_digest;
    j["verdict"] = std::string(verdict_name(verdict));
    j["min_slack"] = std::isfinite(min_slack) ? nlohmann::json(min_slack) : nlohmann::json();
    j["witness"] = witness ? complex_to_json(*witness) : nlohmann::json();
    j["tolerances"] = tolerances;
    nlohmann::json sl = nlohmann::json::array();
    for (const auto& [p, s] : slacks) sl.push_back({complex_to_json(p), s});
    j["slacks"] = sl;
    if (!details.empty()) j["details"] = details;
    return j;
}

std::string digest(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

Complex complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(Error::Code::bad_input, "complex numbers are encoded as [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

} // namespace schwarz
