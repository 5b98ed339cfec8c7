#pragma once

#include "ggms/crystal.hpp"

namespace ggms {

struct SuiteResult {
    std::string name;
    bool pass = true;
    double seconds = 0;
    std::vector<std::string> failures;
    std::vector<std::pair<std::string, std::string>> stats;

    void fail(const std::string& msg) {
        pass = false;
        if (failures.size() < 200) failures.push_back(msg);
    }
    void note(const std::string& k, const std::string& v) { stats.emplace_back(k, v); }
};

struct VerifyOptions {
    std::string data_dir;               // catalog directory
    std::string cartan;                 // optional override where meaningful
    int height = 0;                     // optional cutoff override
    std::vector<StabilityParam> thetas; // optional stability overrides
    unsigned seed = 8591;
};

// Suites, one per acceptance criterion:
//   pbw, factorization, expansion, duality, politeness, hn-polytope,
//   zeta, ggms-injectivity, a4-remark, slope-subalgebra, transition,
//   splitting
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

// Default stability samples used by the factorization/expansion suites:
// an alternating vector, the tied all-ones vector, a (2,-1,...) vector,
// zero, and a regular sample with pairwise distinct root slopes.
std::vector<StabilityParam> suite_theta_samples(const CartanData& cartan);

} // namespace ggms
