#pragma once

#include <string>
#include <vector>

#include "twinrep/json_io.hpp"

namespace twinrep {

struct SuiteCheck {
    std::string id;
    std::string label;  // the claim being validated
    bool pass;
    json detail;
    long millis;
};

struct SuiteReport {
    int n_max;
    std::vector<SuiteCheck> checks;

    bool overall_pass() const;
};

struct SuiteOptions {
    unsigned long seed = 20260810UL;
    /// Test-harness hook: corrupts one eta1 entry before the relation
    /// checks, to exercise the failure path end to end.
    bool inject_fault = false;
};

/// Runs the full verification suite for 2 <= n <= n_max: Jacobian
/// reconstruction, relation suites, reducibility and irreducibility,
/// bounded faithfulness evidence, the eta2 kernel witness, the T_2
/// involution classification round-trip, the welded obstruction, and the
/// fundamental Fox identity. Deterministic given the seed.
/// Throws BadArgument when n_max < 3.
SuiteReport verify_paper_suite(int n_max, const SuiteOptions& options = {});

} // namespace twinrep
