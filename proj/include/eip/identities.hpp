#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eip {

struct IdentityReport {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    bool passed() const { return failures == 0; }
};

/// Exhaustive exact-identity suites:
///   scaling          subsample == sample_system o scale, all systems/vectors, n <= max_n
///   composition      two-step vs composed subsample, n=5 with (m,k)=(3,2)
///   three-route      sequential_delete vs subsample vs relabel/restrict, n=4
///   deletion-vector  delete_point vs one-point-less subsample, n <= max_n
/// max_n is clamped to [1,6] (the scaling suite is exponential in C(n,2)).
std::vector<IdentityReport> run_identity_suites(int max_n);

bool all_passed(const std::vector<IdentityReport>& reports);

} // namespace eip
