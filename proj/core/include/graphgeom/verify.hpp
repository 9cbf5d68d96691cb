#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace graphgeom::verify {

/// One numerically verified claim. `worst` is the least favorable margin seen
/// (its meaning is criterion-specific and spelled out in `detail`), `tolerance`
/// the threshold it was checked against.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double tolerance = 0.0;
    double worst = 0.0;
    std::string detail;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    std::vector<CriterionResult> criteria;
    bool all_passed() const {
        for (const auto& c : criteria) {
            if (!c.passed) return false;
        }
        return true;
    }
};

// The ten checks, in the order the report lists them. Every tolerance and
// trial count is fixed inside the implementation; the seed only moves the
// sampled instances.
CriterionResult spectral_identity(std::uint64_t seed);     // 1
CriterionResult attenuation_law(std::uint64_t seed);       // 2
CriterionResult mixing_reduction(std::uint64_t seed);      // 3
CriterionResult lappe_residual(std::uint64_t seed);        // 4
CriterionResult wl_suite(std::uint64_t seed);              // 5
CriterionResult rewiring_termination(std::uint64_t seed);  // 6
CriterionResult perturbation_bounds(std::uint64_t seed);   // 7
CriterionResult information_identity(std::uint64_t seed);  // 8
CriterionResult metric_fixtures(std::uint64_t seed);       // 9
CriterionResult directional_trend(std::uint64_t seed);     // 10

std::vector<std::string> suite_names();

/// Runs the named checks ("all" for every one) with sub-seeds derived from
/// `seed`. Unknown names throw InputError.
SuiteReport run_suite(const std::vector<std::string>& which, std::uint64_t seed);

}  // namespace graphgeom::verify
