// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dsort/error.hpp"

namespace dsort {

// Closed-form cost model. Sizes are taken as doubles so that domains beyond
// 2^64 (e.g. k = 1e22) can be analysed; nothing here allocates per element.

struct SequentialCost {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t iterations = 0; // n + k
    std::uint64_t steps = 0;      // 2n + k
};

/// Throws InvalidArgument when k == 0.
SequentialCost sequential_cost(std::uint64_t n, std::uint64_t k);

/// a with k = n^a, i.e. ln k / ln n. Throws UndefinedExponent for n < 2 or k < n.
double exponent(double n, double k);

/// n / k. Throws InvalidRatio unless k >= n >= 1.
double hit_probability(double n, double k);

/// P * n^(a-1). Constant across n for k = c * n^a, where it equals 1/c.
double tradeoff_constant(double n, double k, double a);

enum class Regime { Linear, Linearithmic, Polynomial, Unfavorable };

std::string_view to_string(Regime regime) noexcept;

struct RegimeConfig {
    double linear_factor = 8.0; // k <= linear_factor * n counts as linear
    double max_exponent = 1.7;  // polynomial growth still acceptable below this
};

struct RegimeReport {
    double n = 0;
    double k = 0;
    double exponent_a = 0;
    double hit_probability = 0;
    Regime regime = Regime::Linear;
};

RegimeReport classify_regime(double n, double k, const RegimeConfig& config = {});

struct ParallelEstimate {
    double n = 0;
    double k = 0;
    std::uint64_t p = 1;
    double time_T = 0;
    double processor_time_R = 0;
    double speedup_S = 0;
    double efficiency_E = 0;
};

bool is_power_of_two(std::uint64_t p) noexcept;

/// Hypercube model with base-2 logarithms:
///   T = n/p + 2 log p + k/p,  R = p T,
///   S = p (n+k) / (n + k + 2 p log p),  E = 1 / (1 + 2 p log p / (n+k)).
/// Throws NonPowerOfTwoWorkers, or InvalidArgument when n or k is below 1.
ParallelEstimate parallel_estimate(double n, double k, std::uint64_t p);

struct ParallelizableCheck {
    bool parallelizable = false;
    double margin = 0; // 2 p log p / k
};

/// 2 p log p < k^a_par, a point proxy for "2 p log p grows slower than k".
ParallelizableCheck parallelizable_check(double n, double k, std::uint64_t p,
                                         double a_par = 1.0);

struct ModelRow {
    double n = 0;
    double k = 0;
    std::uint64_t p = 1;
};

struct RowError {
    ErrorKind kind;
    std::string message;
};

struct SpeedupEntry {
    ModelRow row;
    std::variant<ParallelEstimate, RowError> outcome;

    bool ok() const noexcept { return std::holds_alternative<ParallelEstimate>(outcome); }
};

/// One entry per row; a failing row is recorded and the rest still computed.
std::vector<SpeedupEntry> speedup_table(std::span<const ModelRow> rows);

} // namespace dsort
