#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace isolab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::string detail;    // one line for the table
    std::string data_json; // criterion-specific numbers
};

struct SuiteOptions {
    uint64_t seed = 0;
    std::vector<int> only;                        // empty = all 14
    std::function<void(const CriterionResult&)> on_result; // progress hook
};

struct SuiteReport {
    std::vector<CriterionResult> results;
    bool all_pass() const;
};

inline constexpr int kCriterionCount = 14;

SuiteReport run_acceptance(const SuiteOptions& opts = {});

std::string report_json(const SuiteReport& r);
std::string report_table(const SuiteReport& r);

} // namespace isolab
