#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gprod {

// Randomized cross-checks of the structural results against brute force on
// concrete instances. Every suite is deterministic in the seed.

enum class VerifyStatus {
    confirmed,        // hypotheses held and the claimed property checked out
    hypothesis_unmet, // the drawn instance missed a hypothesis; nothing claimed
    violation,        // the claimed property failed on this instance
};

struct VerifyReport {
    std::string suite;
    uint64_t seed = 0;
    VerifyStatus status = VerifyStatus::confirmed;
    std::string details;       // cause, empty when confirmed
    std::string instance_doc;  // offending instance, serialized, when violated
};

struct SuiteResult {
    std::string suite;
    long long checked = 0;
    long long skipped = 0;
    std::vector<VerifyReport> violations;
    bool passed() const { return violations.empty(); }
};

std::vector<std::string> suite_names();
VerifyReport run_case(const std::string& suite, uint64_t seed);
SuiteResult run_suite(const std::string& suite, uint64_t seed_begin, uint64_t seed_end);

}  // namespace gprod
