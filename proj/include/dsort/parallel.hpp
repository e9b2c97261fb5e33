// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dsort/core_sort.hpp"
#include "dsort/decision_string.hpp"
#include "dsort/domain.hpp"

namespace dsort {

struct IndexRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;

    std::uint64_t size() const noexcept { return end - begin; }
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Balanced split of the input (blocks) and of the domain (slices) over
/// workers; range sizes differ by at most one, earlier ranks take the extra.
struct ParallelPlan {
    std::size_t workers = 1;
    std::vector<IndexRange> block_ranges;
    std::vector<IndexRange> slice_ranges;
};

/// Throws InvalidWorkerCount when workers == 0.
ParallelPlan plan(std::uint64_t n, std::uint64_t k, std::size_t workers);

/// Number of pairwise combine rounds for p workers: ceil(log2 p).
std::size_t reduction_rounds(std::size_t workers);

/// Bitwise OR of two decision strings over the same domain.
/// Throws DomainMismatch.
DecisionString combine(const DecisionString& a, const DecisionString& b);

struct ParallelSortResult {
    std::vector<Key> keys;
    /// Worker r emitted keys[run_offsets[r], run_offsets[r + 1]).
    std::vector<std::size_t> run_offsets;
    std::size_t combine_rounds = 0;
    /// Summed over all workers.
    OpCounters counters;
    ParallelPlan plan;
};

/// Each worker marks its block into a private decision string; the strings
/// are OR-reduced pairwise in ceil(log2 p) rounds; after a barrier every
/// worker emits the keys of its domain slice straight into its slot of the
/// output. Errors match what decision_sort_unique() raises for the same
/// input.
ParallelSortResult parallel_decision_sort_detailed(std::span<const Key> keys,
                                                   const KeyDomain& domain,
                                                   std::size_t workers);

std::vector<Key> parallel_decision_sort(std::span<const Key> keys, const KeyDomain& domain,
                                        std::size_t workers);

/// Hardware parallelism, at least 1.
std::size_t default_worker_count() noexcept;

} // namespace dsort
