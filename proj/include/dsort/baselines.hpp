// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsort/domain.hpp"

namespace dsort {

struct BaselineCounters {
    std::uint64_t comparisons = 0;
    std::uint64_t swaps = 0;
};

struct BaselineResult {
    std::vector<Key> keys;
    BaselineCounters counters;
};

/// Bubble sort making full passes until a pass performs no swap.
BaselineResult instrumented_bubble(std::span<const Key> keys);

/// Quicksort with Lomuto partitioning around the last element. Swapping an
/// element with itself is skipped and not counted.
BaselineResult instrumented_quick(std::span<const Key> keys);

struct CostWeights {
    double swap_weight = 3.0;
    double rw_weight = 1.0;
    double compare_weight = 1.0;

    /// Throws InvalidWeights unless every weight is positive and finite.
    void validate() const;
};

struct ComparisonRow {
    std::string algorithm;
    std::uint64_t comparisons = 0;
    std::uint64_t writes = 0;
    std::uint64_t comparisons_writes = 0; // comparisons + writes
    std::uint64_t swaps = 0;
    double weighted_total = 0;
};

/// Published counts for the seven-key worked example, kept for side-by-side
/// display only. swaps is empty where the source printed none.
struct ReferenceRow {
    std::string algorithm;
    std::uint64_t comparisons_writes = 0;
    std::optional<std::uint64_t> swaps;
    double weighted_total = 0;
};

struct ComparisonReport {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    CostWeights weights;
    std::vector<ComparisonRow> rows;        // Bubble, Quick, Decision
    std::vector<ReferenceRow> reference;    // only for the worked example
};

double weighted_total(const ComparisonRow& row, const CostWeights& weights) noexcept;

/// The worked example: keys {4,2,7,9,1,13,15} over [1, 15].
bool is_worked_example(std::span<const Key> keys, const KeyDomain& domain);

/// Measured counts for all three sorts. The Decision row charges one write
/// per marked key and one comparison per domain slot (n + k). Throws what
/// decision_sort_unique() throws.
ComparisonReport comparison_report(std::span<const Key> keys, const KeyDomain& domain,
                                   const CostWeights& weights = {});

} // namespace dsort
