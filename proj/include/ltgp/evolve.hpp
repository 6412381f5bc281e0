// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ltgp/eval.hpp"
#include "ltgp/genome.hpp"
#include "ltgp/rng.hpp"
#include "ltgp/sextic.hpp"

namespace ltgp {

struct Individual {
    Genome genome;
    float fitness = std::numeric_limits<float>::quiet_NaN();
    std::int32_t hits = 0;
    std::uint32_t size = 0;
    std::uint32_t depth = 0;
};

// Everything a worker needs to materialize one child later: parent indices
// and crossover points. Created strictly sequentially in child order.
struct CrossoverPlan {
    std::uint32_t mum_index = 0;
    std::uint32_t dad_index = 0;
    std::uint32_t mum_pt = 0;
    std::uint32_t dad_pt = 0;
};

enum class TerminationReason { kMaxGenerations, kSizeLimitHit, kMemoryBudgetExceeded };
const char* to_string(TerminationReason reason);

struct RunConfig {
    std::uint32_t population_size = 4000;
    std::uint32_t max_generations = 10000;
    std::uint64_t node_limit = 15'000'000; // genome capacity; child >= limit stops the run
    std::uint32_t tournament_size = 7;
    std::uint32_t worker_count = 1;
    std::uint64_t seed = 1;
    std::uint64_t memory_budget_bytes = 0; // 0 disables the budget check
    bool streaming_memory = false;         // default is plain double buffering
    double stack_safety = 2.0;             // multiplier on the random-tree depth bound
};

// Throws std::invalid_argument on an unusable configuration.
void validate(const RunConfig& config);

// Live-genome accounting for the memory contract tests.
class MemoryGauge {
public:
    void add(std::int64_t n = 1) noexcept {
        const std::int64_t now = live_.fetch_add(n, std::memory_order_relaxed) + n;
        std::int64_t seen = high_water_.load(std::memory_order_relaxed);
        while (now > seen &&
               !high_water_.compare_exchange_weak(seen, now, std::memory_order_relaxed)) {
        }
    }
    void sub(std::int64_t n = 1) noexcept { live_.fetch_sub(n, std::memory_order_relaxed); }
    std::int64_t live() const noexcept { return live_.load(std::memory_order_relaxed); }
    std::int64_t high_water() const noexcept {
        return high_water_.load(std::memory_order_relaxed);
    }

private:
    std::atomic<std::int64_t> live_{0};
    std::atomic<std::int64_t> high_water_{0};
};

// Per-worker read-write state, padded to its own cache lines.
struct alignas(kCacheLineBytes) WorkerState {
    EvalStack stack;
    GpopsCounter counter;
};

// k entrants drawn uniformly with replacement; lowest fitness wins; tied best
// entrants are resolved uniformly via the same sequential stream (incumbent
// replaced with probability 1/(ties so far + 1)).
std::size_t tournament(Rng& rng, std::span<const Individual> population, std::uint32_t k);

// One plan per child slot in index order; per slot the draws are exactly
// mum tournament, dad tournament, mum point, dad point.
std::vector<CrossoverPlan> plan_generation(Rng& rng, std::span<const Individual> population,
                                           std::uint32_t tournament_size);

// Bytes of genome buffer the next generation needs (parents plus all planned
// children, sizes from the crossover size algebra). Used by the budget check
// before anything is materialized.
std::uint64_t planned_generation_bytes(std::span<const CrossoverPlan> plans,
                                       std::span<const Individual> parents);

struct ExecContext {
    const TestSuite& suite;
    const RunConfig& config;
    std::vector<WorkerState>& pool;
    MemoryGauge& gauge;
};

struct ExecOutcome {
    bool size_limit_hit = false;
};

void evaluate_individual(Individual& ind, const TestSuite& suite, WorkerState& worker);

// Evaluates fitness of every slot in parallel (used for generation 0).
void evaluate_population(std::vector<Individual>& population, ExecContext ctx);

// Materializes and evaluates every planned child with a dynamically scheduled
// worker pool. Workers consume no random numbers and write only their own
// child slot, so the result is bit-identical for any worker count. In
// streaming mode parents are retired as their last planned use completes.
ExecOutcome execute_generation(std::span<const CrossoverPlan> plans,
                               std::vector<Individual>& parents,
                               std::vector<Individual>& children, ExecContext ctx);

} // namespace ltgp
