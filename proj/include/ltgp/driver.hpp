// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "ltgp/evolve.hpp"

namespace ltgp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitVerify = 4;

// The test-case/constant stream is decoupled from the evolution stream so a
// run behaves identically whether its suite was generated or loaded back.
std::uint64_t suite_seed(std::uint64_t run_seed);

struct RunOptions {
    RunConfig config;
    std::filesystem::path out_dir;        // empty: runs/s<seed>_<timestamp>
    std::filesystem::path cases_path;     // empty: generate from seed
    std::filesystem::path constants_path; // empty: generate from seed
    bool determinism_dump = false;
    bool quiet = false;
};
int cmd_run(const RunOptions& options);

struct GenCasesOptions {
    std::uint64_t seed = 1;
    std::filesystem::path cases_out = "cases.txt";
    std::filesystem::path constants_out = "constants.txt";
};
int cmd_gen_cases(const GenCasesOptions& options);

struct VerifyOptions {
    std::uint64_t seed = 1;
    int genome_count = 2000; // oracle-equivalence sample size
};
int cmd_verify(const VerifyOptions& options);

struct BenchOptions {
    std::vector<std::size_t> tree_sizes = {1001, 10001, 100001, 1000001};
    std::vector<std::uint32_t> worker_counts = {1, 2, 4, 8};
    std::uint64_t seed = 1;
    std::size_t min_corpus_nodes = 4'000'000; // per size cell
    int repeats = 3;
};
int cmd_bench(const BenchOptions& options);

} // namespace ltgp
