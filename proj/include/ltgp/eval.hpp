// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>

#include "ltgp/common.hpp"
#include "ltgp/genome.hpp"

namespace ltgp {

// One GP operation = interpreting one tree node on one test case.
struct GpopsCounter {
    std::uint64_t nodes_evaluated = 0;
    double elapsed_seconds = 0.0;

    double gpops() const {
        return elapsed_seconds > 0.0
                   ? static_cast<double>(nodes_evaluated) * static_cast<double>(kLaneWidth) /
                         elapsed_seconds
                   : 0.0;
    }
};

// Frame stack for the batched interpreter; each frame holds one value per
// lane. Grows on demand, so the reservation heuristic is a fast path, never a
// correctness limit. peak_frames() reports the high-water of live frames.
class EvalStack {
public:
    EvalStack() = default;
    explicit EvalStack(std::size_t frames) { reserve_frames(frames); }

    void reserve_frames(std::size_t frames);
    std::size_t frame_capacity() const noexcept { return frames_; }
    float* data() noexcept { return data_.get(); }

    // Reallocates to at least min_frames, preserving the first live frames.
    void grow(std::size_t live, std::size_t min_frames);

    std::size_t peak_frames() const noexcept { return peak_; }
    void reset_peak() noexcept { peak_ = 0; }
    void note_frames(std::size_t live) noexcept {
        if (live > peak_) peak_ = live;
    }

private:
    AlignedFloats data_;
    std::size_t frames_ = 0;
    std::size_t peak_ = 0;
};

inline float protected_div(float a, float b) { return b != 0.0f ? a / b : 1.0f; }

inline float apply_op(std::uint8_t op, float a, float b) {
    switch (op) {
    case kOpAdd: return a + b;
    case kOpSub: return a - b;
    case kOpMul: return a * b;
    default: return protected_div(a, b);
    }
}

// Reference interpreter: one test case per call, forward walk of the prefix
// buffer with an explicit operator stack (the classic recursive-call order,
// made iterative). Kept as the correctness oracle for the batched kernel.
float eval_scalar(const Genome& g, float x, std::span<const float> constants);

// Single-pass batched interpreter: reverse scan of the prefix buffer, all
// lanes processed at each node before moving on. Returns the result frame
// (valid until the stack is next used). Bit-identical per lane to eval_scalar.
const float* eval_batch_raw(const Genome& g, const float* inputs, std::span<const float> constants,
                            EvalStack& stack, GpopsCounter* counter = nullptr);

using LaneResult = std::array<float, kLaneWidth>;

LaneResult eval_batch(const Genome& g, const LaneResult& inputs, std::span<const float> constants,
                      EvalStack& stack, GpopsCounter* counter = nullptr);

// Mean absolute error over the lanes, accumulated by a strictly sequential
// left-to-right loop in single precision. Lower is better; non-finite values
// propagate untouched.
float fitness(const float* outputs, const float* targets);

// Lanes within threshold of the target. Reporting only, never selection.
int hits(const float* outputs, const float* targets, float threshold = 0.01f);

// Total desirability order used by selection: NaN is worse than everything.
inline bool fitness_better(float a, float b) {
    if (std::isnan(a)) return false;
    if (std::isnan(b)) return true;
    return a < b;
}

inline bool fitness_tied(float a, float b) {
    return (std::isnan(a) && std::isnan(b)) || a == b;
}

// Expected depth limit of large random binary trees, 2*sqrt(pi*ceil(n/2)),
// scaled by a safety factor. Used to size the initial stack reservation.
double flajolet_stack_bound(std::uint64_t capacity, double safety = 1.0);

} // namespace ltgp
