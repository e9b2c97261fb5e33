// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>

#include "dsort/baselines.hpp"
#include "dsort/core_sort.hpp"
#include "dsort/cost_model.hpp"

namespace dsort {

enum class Format { Text, Json };

/// Shortest decimal form that round-trips. Used for every number in both
/// formats so text and JSON carry identical values.
std::string format_number(double value);

/// Single-line JSON object.
std::string counters_json(const OpCounters& counters);

struct AnalysisReport {
    RegimeReport regime;
    std::optional<SequentialCost> cost; // absent when 2n + k overflows 64 bits
    std::optional<double> tradeoff_exponent;
    std::optional<double> tradeoff_constant;
};

std::string render(const AnalysisReport& report, Format format);
std::string render(const ParallelEstimate& estimate, const ParallelizableCheck& check,
                   Format format);
std::string render(std::span<const SpeedupEntry> table, Format format);
std::string render(const ComparisonReport& report, Format format);

} // namespace dsort
