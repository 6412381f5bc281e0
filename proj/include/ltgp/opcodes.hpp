// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace ltgp {

// One byte per tree node. Layout: 0..3 binary functions, 4 the input X,
// 5..254 constant-table indices 0..249, 255 unused and invalid.
inline constexpr std::uint8_t kOpAdd = 0;
inline constexpr std::uint8_t kOpSub = 1;
inline constexpr std::uint8_t kOpMul = 2;
inline constexpr std::uint8_t kOpDiv = 3;
inline constexpr std::uint8_t kOpX = 4;
inline constexpr std::uint8_t kOpFirstConstant = 5;

inline constexpr int kFunctionCount = 4;
inline constexpr int kConstantCount = 250;
inline constexpr int kTerminalCount = kConstantCount + 1; // X plus the constants
inline constexpr int kPrimitiveCount = kFunctionCount + kTerminalCount;

constexpr bool is_function(std::uint8_t op) { return op < kFunctionCount; }
constexpr bool is_terminal(std::uint8_t op) {
    return op >= kOpX && op < kOpFirstConstant + kConstantCount;
}
constexpr bool is_constant(std::uint8_t op) {
    return op >= kOpFirstConstant && op < kOpFirstConstant + kConstantCount;
}
constexpr bool is_valid_opcode(std::uint8_t op) { return is_function(op) || is_terminal(op); }
constexpr int arity(std::uint8_t op) { return is_function(op) ? 2 : 0; }

constexpr int constant_index(std::uint8_t op) { return op - kOpFirstConstant; }
constexpr std::uint8_t constant_opcode(int index) {
    return static_cast<std::uint8_t>(kOpFirstConstant + index);
}

constexpr const char* function_name(std::uint8_t op) {
    switch (op) {
    case kOpAdd: return "ADD";
    case kOpSub: return "SUB";
    case kOpMul: return "MUL";
    case kOpDiv: return "DIV";
    default: return "?";
    }
}

} // namespace ltgp
