// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dsort {

enum class ErrorKind {
    InvalidBounds,
    RangeTooLarge,
    EmptyInput,
    KeyOutOfRange,
    DuplicateKey,
    DomainMismatch,
    InvalidWorkerCount,
    UndefinedExponent,
    InvalidRatio,
    NonPowerOfTwoWorkers,
    InvalidWeights,
    InfeasibleGeneration,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `value` and `position` are filled in
/// when the failure concerns a particular input key.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what,
          std::optional<std::int64_t> value = std::nullopt,
          std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(what), kind_(kind), value_(value), position_(position) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::int64_t> value() const noexcept { return value_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    ErrorKind kind_;
    std::optional<std::int64_t> value_;
    std::optional<std::size_t> position_;
};

} // namespace dsort
