#pragma once

#include <string>
#include <vector>

#include "mvkt/scenario.hpp"

namespace mvkt {

struct VerifyOutcome {
    bool ok = true;
    std::vector<std::string> lines;  // one line per oracle check
};

/**
 * Re-derives key results of a run with independent methods: the E2 page row
 * against mod-p simplicial homology whenever a coefficient degree is a prime
 * cyclic group, and the cocycle class against an exhaustive coboundary
 * search when the nerve has at most 16 edges. inject_corruption damages the
 * computed E2 page first, to demonstrate that disagreements are caught.
 */
VerifyOutcome verify_scenario(const Scenario& sc, bool inject_corruption = false);

}  // namespace mvkt
