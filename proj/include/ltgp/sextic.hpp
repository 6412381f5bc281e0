// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "ltgp/common.hpp"
#include "ltgp/opcodes.hpp"
#include "ltgp/rng.hpp"

namespace ltgp {

struct TestCase {
    float x = 0.0f;
    float y = 0.0f;
    friend bool operator==(const TestCase&, const TestCase&) = default;
};

// The 48 fixed cases plus the 250-entry constant terminal table, laid out
// lane-wise for the batched evaluator. Immutable after creation.
struct TestSuite {
    alignas(kCacheLineBytes) std::array<float, kLaneWidth> inputs{};
    alignas(kCacheLineBytes) std::array<float, kLaneWidth> targets{};
    std::array<float, kConstantCount> constants{};

    TestCase case_at(std::size_t i) const { return {inputs[i], targets[i]}; }
};

// y = x*x*(x-1)*(x-1)*(x+1)*(x+1), evaluated in exactly that factored order,
// single precision.
float target(float x);

// Canonical decimal text for a float: 9 significant digits, which round-trips
// single precision losslessly.
std::string float_text(float v);
float parse_float(std::string_view text); // throws std::invalid_argument

// x drawn uniformly from [-1, 1]; stored x and y are the values after a round
// trip through the canonical text form, so files and memory cannot diverge.
std::array<TestCase, kLaneWidth> gen_test_cases(Rng& rng);

// 250 distinct values sampled without replacement from the millesimal grid
// -1.000 .. +1.000, parsed from their 3-decimal text form, sorted ascending.
std::array<float, kConstantCount> gen_constants(Rng& rng);

TestSuite make_suite(Rng& rng); // cases first, then constants
TestSuite make_suite(std::uint64_t seed);

// Text persistence: one case per line, "x y". Loading parses and recomputes
// nothing; exactly kLaneWidth cases are required.
void save_cases(std::span<const TestCase> cases, const std::filesystem::path& path);
std::array<TestCase, kLaneWidth> load_cases(const std::filesystem::path& path);

// Sidecar constant table: one "index value" line per constant.
void save_constants(std::span<const float> constants, const std::filesystem::path& path);
std::array<float, kConstantCount> load_constants(const std::filesystem::path& path);

TestSuite suite_from_files(const std::filesystem::path& cases_path,
                           const std::filesystem::path& constants_path);

void save_suite(const TestSuite& suite, const std::filesystem::path& cases_path,
                const std::filesystem::path& constants_path);

} // namespace ltgp
