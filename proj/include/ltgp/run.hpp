// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "ltgp/evolve.hpp"
#include "ltgp/stats.hpp"

namespace ltgp {

struct RunSinks {
    std::function<void(const GenerationStats&)> on_generation;
    // Set only when the determinism dump is requested.
    std::function<void(std::uint32_t, std::span<const Individual>)> on_population;
};

struct RunResult {
    TerminationReason reason = TerminationReason::kMaxGenerations;
    std::uint32_t generations_completed = 0; // index of the last recorded generation
    RunSummary summary;
    std::uint64_t nodes_evaluated = 0;
    double elapsed_seconds = 0.0;
    std::int64_t genome_high_water = 0;

    double gpops() const {
        GpopsCounter c{nodes_evaluated, elapsed_seconds};
        return c.gpops();
    }
};

// Full generational loop: ramped initialization, generation-0 evaluation,
// then plan (sequential) / execute (parallel) until max_generations, a
// crossover reaching the node limit, or the memory budget.
RunResult run(const RunConfig& config, const TestSuite& suite, const RunSinks& sinks);

} // namespace ltgp
