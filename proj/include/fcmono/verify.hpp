#ifndef FCMONO_VERIFY_HPP
#define FCMONO_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fcmono/classify.hpp"

namespace fcmono {

enum class Backing { exact, numeric };

struct CheckResult {
    enum class Status { exact_pass, numeric_pass, fail };
    std::string name;
    std::string detail;       // what identity is being checked
    Status status = Status::exact_pass;
    double residual = 0.0;    // 0 for exact checks
    std::string witness;      // first offending entry on failure
    double elapsed_seconds = 0.0;
};

struct VerificationReport {
    int m = 0;
    Backing backing = Backing::exact;
    std::uint64_t seed = 0;
    std::vector<CheckResult> results;

    bool all_passed() const {
        for (const auto& r : results)
            if (r.status == CheckResult::Status::fail) return false;
        return true;
    }
};

struct SuiteOptions {
    double tol = 1e-9;
    // flips the sign of one entry of v before the eigenstructure checks;
    // used to confirm the suite actually detects a broken build
    bool mutate_v = false;
};

// Runs every registered identity check for the given backing. Exact
// backing is restricted to m <= 3, numeric to m <= 5. Never aborts
// early; failures are report entries.
VerificationReport run_suite(int m, Backing backing, std::uint64_t seed,
                             const SuiteOptions& opts = {});

// Random rational parameter tuple whose exponentials avoid all the
// irreducibility violations by at least `margin`, with gamma_k bounded
// away from 1 so the plain-basis matrices are well conditioned.
ParameterPoint random_admissible_point(int m, std::mt19937_64& rng, double margin = 1e-6);

}  // namespace fcmono

#endif
