#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gmclab {

/// One numerical comparison. pass means residual <= tolerance.
struct Check {
    std::string name;
    double value = 0.0;
    double reference = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool timing = false;  // wall-clock limit; excluded from max_residual
};

struct SuiteReport {
    std::string name;
    std::string title;
    std::vector<Check> checks;
    std::vector<std::string> notes;
    double seconds = 0.0;
    bool demo = false;  // informational; never fails

    bool pass() const;
    /// Largest residual over the non-timing checks.
    double max_residual() const;
};

struct VerifyOptions {
    std::uint64_t seed = 20251016;
    int threads = 0;
    /// Multiplies every Monte Carlo sample count; 1 is the acceptance size.
    double mc_scale = 1.0;
};

/// Acceptance criterion k = 1..13 (13 is the maximum-of-field demo).
SuiteReport acceptance_criterion(int k, const VerifyOptions& opt = {});

/// multigamma, barnesbeta, selberg, morris, critical, complex, involution, mc.
const std::vector<std::string>& suite_names();
/// Throws DomainError for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {});

}  // namespace gmclab
