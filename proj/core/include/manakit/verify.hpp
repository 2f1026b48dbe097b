#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace manakit {

// A computed cross-check failed (as opposed to bad input).
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct VerifyOptions {
    long max_d = 31;           // operator-algebra checks run for odd d in [3, max_d]
    std::uint64_t seed = 20260810;
    int threads = 0;
    bool inject_fault = false;  // testing aid: corrupt one phase-point operator
};

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Executes every module's invariant suite at desk scale and reports one
// residual per named check.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace manakit
