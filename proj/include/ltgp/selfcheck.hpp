// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ltgp {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Built-in verification suite: oracle equivalence, determinism and
// thread-count invariance, rng isolation and draw accounting, reduction-order
// sensitivity, protected division, stack discipline, memory accounting.
std::vector<CheckResult> run_selfchecks(std::uint64_t seed, int genome_count);

} // namespace ltgp
