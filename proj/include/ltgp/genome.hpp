// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ltgp/opcodes.hpp"
#include "ltgp/rng.hpp"

namespace ltgp {

// One tree, flattened into a prefix-order opcode buffer with the root first.
// The buffer is exactly tree-sized; the per-run node limit (capacity) is
// enforced by the constructing operations, not stored here.
class Genome {
public:
    Genome() = default;
    explicit Genome(std::vector<std::uint8_t> ops) : ops_(std::move(ops)) {}
    static Genome leaf(std::uint8_t opcode) { return Genome(std::vector<std::uint8_t>{opcode}); }

    std::size_t size() const noexcept { return ops_.size(); }
    bool empty() const noexcept { return ops_.empty(); }
    std::uint8_t operator[](std::size_t i) const noexcept { return ops_[i]; }
    const std::uint8_t* data() const noexcept { return ops_.data(); }
    std::span<const std::uint8_t> ops() const noexcept { return {ops_.data(), ops_.size()}; }

    // Frees the buffer; used when a parent is retired mid-generation.
    void release() noexcept { std::vector<std::uint8_t>().swap(ops_); }

    friend bool operator==(const Genome&, const Genome&) = default;

private:
    std::vector<std::uint8_t> ops_;
};

// Counter-scan well-formedness: scanning left to right with c starting at 1,
// every node adds arity-1; c must stay positive and reach 0 at the last node.
bool validate(std::span<const std::uint8_t> ops) noexcept;
inline bool validate(const Genome& g) noexcept { return validate(g.ops()); }

// Depth with the single-node-tree-has-depth-1 convention, one prefix scan.
std::size_t depth(std::span<const std::uint8_t> ops);
inline std::size_t depth(const Genome& g) { return depth(g.ops()); }

struct SubtreeExtent {
    std::size_t start = 0;
    std::size_t end = 0; // exclusive
    std::size_t length() const noexcept { return end - start; }
    friend bool operator==(const SubtreeExtent&, const SubtreeExtent&) = default;
};

// Extent of the complete subtree rooted at index. Throws std::out_of_range.
SubtreeExtent subtree_extent(const Genome& g, std::size_t index);

// Every leaf at exactly depth target_depth. Throws std::length_error when the
// full tree (2^d - 1 nodes) would exceed capacity.
Genome gen_full(Rng& rng, int target_depth, std::size_t capacity);

// Uniform over all primitives below the depth cap, terminal at the cap.
Genome gen_grow(Rng& rng, int max_depth, std::size_t capacity);

// Depths cycle over [min_depth, max_depth]; full and grow alternate so each
// depth gets one of each per pair of individuals. No duplicate filtering.
std::vector<Genome> ramped_half_and_half(Rng& rng, std::size_t count, std::size_t capacity,
                                         int min_depth = 2, int max_depth = 6);

struct CrossoverResult {
    bool size_limit_hit = false;
    Genome child;
};

// Child size before materializing anything (size algebra only).
std::size_t crossover_child_size(const Genome& mum, const Genome& dad, std::size_t mum_pt,
                                 std::size_t dad_pt);

// mum with the subtree at mum_pt replaced by dad's subtree at dad_pt.
// size_limit_hit is set (and no child built) when the offspring would reach
// capacity; that is the run-terminating condition, not a fault.
CrossoverResult crossover(const Genome& mum, const Genome& dad, std::size_t mum_pt,
                          std::size_t dad_pt, std::size_t capacity);

// S-expression text for fixtures and docs, e.g. "(ADD X C12=-0.987)".
std::string to_text(const Genome& g, std::span<const float> constants);

// Inverse of to_text; constant values after '=' are ignored (the index binds).
// Throws std::invalid_argument on malformed input.
Genome parse_text(std::string_view text);

} // namespace ltgp
