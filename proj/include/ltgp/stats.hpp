// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ltgp/evolve.hpp"

namespace ltgp {

struct GenerationStats {
    std::uint32_t generation = 0;
    float best_fitness = 0.0f;
    float mean_fitness = 0.0f;
    std::int32_t best_hits = 0;
    std::uint32_t best_size = 0;
    std::uint32_t max_size = 0;
    double mean_size = 0.0;
    std::uint32_t best_depth = 0;
    double mean_depth = 0.0;
    std::uint32_t convergence = 0; // individuals bit-equal to the best fitness
    bool improved_vs_parents = false;
    bool improved_vs_history = false;
};

struct RunHistory {
    bool has_prev = false;
    float prev_best = 0.0f;
    bool has_best_ever = false;
    float best_ever = 0.0f;
};

// First slot holding the generation's best fitness (deterministic reporting).
std::size_t best_index(std::span<const Individual> population);

// Count of individuals whose fitness bit pattern equals the best's.
std::uint32_t convergence(std::span<const Individual> population);

GenerationStats generation_stats(std::uint32_t generation, std::span<const Individual> population,
                                 const RunHistory& history);

struct PowerLawFit {
    bool valid = false; // false renders as "na"
    double coefficient = 0.0;
    double exponent = 0.0;
    double rms_log_error = 0.0;
    std::uint32_t fit_begin = 0;
    std::uint32_t fit_end = 0;
};

// Least-squares line in log-log space over generations [g0, g1] intersected
// with the series domain; series[g] is the size statistic of generation g.
// Invalid ("na") when fewer than two usable points remain.
PowerLawFit power_law_fit(std::span<const double> series, std::uint32_t g0 = 10,
                          std::uint32_t g1 = 1000);

// 2*sqrt(pi*ceil(size/2)); for even sizes identical to sqrt(2*pi*size), the
// simplification quoted alongside depth plots.
double flajolet_depth(std::uint64_t tree_size);

struct RunSummary {
    std::uint32_t generations = 0;
    float smallest_error = 0.0f;
    std::uint32_t improvements = 0; // strictly-better-than-anything-before count
    std::int32_t hits = 0;          // hits of the best-ever individual
    std::uint64_t max_tree_size = 0;
    PowerLawFit power_law;
    std::uint32_t peak_convergence = 0;
};

// "gens error impr hits size/1e6 power-law conv" in fixed column order.
std::string summary_table_line(const RunSummary& summary);

// Accumulates per-generation records into the end-of-run summary and keeps
// the mean-size series for the power-law fit.
class SummaryTracker {
public:
    RunHistory history() const { return history_; }
    void observe(const GenerationStats& stats);
    std::span<const double> mean_size_series() const { return mean_size_; }
    RunSummary finish() const;

private:
    RunHistory history_;
    RunSummary summary_;
    std::vector<double> mean_size_;
};

// Streaming per-generation CSV with a fixed header.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out);
    void row(const GenerationStats& stats);

private:
    std::ostream& out_;
};

extern const char* const kCsvHeader;

// Determinism-harness dump: one line per individual, fixed field order, the
// fitness printed as its raw bit pattern.
void write_population_dump(std::ostream& out, std::uint32_t generation,
                           std::span<const Individual> population);

} // namespace ltgp
