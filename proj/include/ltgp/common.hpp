// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <new>

namespace ltgp {

// Number of fitness cases evaluated together; one lane per test case.
inline constexpr std::size_t kLaneWidth = 48;

inline constexpr std::size_t kCacheLineBytes = 64;

#define LTGP_RESTRICT __restrict__

namespace detail {
struct AlignedDelete {
    void operator()(float* p) const noexcept {
        ::operator delete[](p, std::align_val_t{kCacheLineBytes});
    }
};
} // namespace detail

using AlignedFloats = std::unique_ptr<float[], detail::AlignedDelete>;

// Cache-line aligned frame storage; frames hold kLaneWidth floats each.
inline AlignedFloats alloc_lane_frames(std::size_t frames) {
    auto* p = static_cast<float*>(
        ::operator new[](frames * kLaneWidth * sizeof(float), std::align_val_t{kCacheLineBytes}));
    return AlignedFloats(p);
}

} // namespace ltgp
