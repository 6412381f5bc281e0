// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ltgp/genome.hpp"
#include "ltgp/rng.hpp"

namespace ltgp {

// Random tree of exactly the requested (odd) node count, built by uniform
// prefix splits; shapes skew balanced, which keeps the stack shallow.
Genome random_tree_of_size(Rng& rng, std::size_t nodes);

struct BenchCell {
    std::size_t tree_size = 0;
    std::uint32_t workers = 0;
    std::uint64_t nodes = 0;       // node visits per pass over the corpus
    double scalar_gpops = 0.0;     // per-case reference interpreter
    double batch_gpops = 0.0;      // single worker, lane-batched
    double parallel_gpops = 0.0;   // `workers` workers over the corpus
    double vector_speedup = 0.0;   // batch vs scalar
    double parallel_speedup = 0.0; // parallel vs single-worker batch
    bool counters_consistent = false;
};

struct BenchReport {
    std::vector<BenchCell> cells;
};

BenchReport run_bench(const std::vector<std::size_t>& tree_sizes,
                      const std::vector<std::uint32_t>& worker_counts, std::uint64_t seed,
                      std::size_t min_corpus_nodes, int repeats);

} // namespace ltgp
