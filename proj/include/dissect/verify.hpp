#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dissect {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0.0;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

struct VerifyOptions {
    int max_degree = -1; // -1: each suite's spec default
    std::uint64_t seed = 20240801ull;
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts = {});

} // namespace dissect
