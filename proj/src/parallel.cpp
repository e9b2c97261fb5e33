// SPDX-License-Identifier: Apache-2.0
#include "dsort/parallel.hpp"

#include <atomic>
#include <barrier>
#include <exception>
#include <optional>
#include <stdexcept>
#include <thread>

#include "dsort/error.hpp"

namespace dsort {

namespace {

std::vector<IndexRange> split(std::uint64_t total, std::size_t parts) {
    std::vector<IndexRange> ranges;
    ranges.reserve(parts);
    const std::uint64_t base = total / parts;
    const std::uint64_t extra = total % parts;
    std::uint64_t begin = 0;
    for (std::size_t r = 0; r < parts; ++r) {
        const std::uint64_t len = base + (r < extra ? 1 : 0);
        ranges.push_back({begin, begin + len});
        begin += len;
    }
    return ranges;
}

} // namespace

ParallelPlan plan(std::uint64_t n, std::uint64_t k, std::size_t workers) {
    if (workers == 0) {
        throw Error(ErrorKind::InvalidWorkerCount, "worker count must be at least 1");
    }
    return ParallelPlan{workers, split(n, workers), split(k, workers)};
}

std::size_t reduction_rounds(std::size_t workers) {
    std::size_t rounds = 0;
    for (std::size_t reach = 1; reach < workers; reach *= 2) ++rounds;
    return rounds;
}

DecisionString combine(const DecisionString& a, const DecisionString& b) {
    DecisionString out = a;
    out.merge_from(b);
    return out;
}

ParallelSortResult parallel_decision_sort_detailed(std::span<const Key> keys,
                                                   const KeyDomain& domain,
                                                   std::size_t workers) {
    ParallelSortResult result;
    result.plan = plan(keys.size(), domain.size(), workers);
    const ParallelPlan& layout = result.plan;
    const std::size_t p = workers;

    std::vector<std::optional<DecisionString>> local(p);
    std::vector<OpCounters> counters(p);
    std::vector<std::exception_ptr> failures(p);
    std::vector<std::uint64_t> run_sizes(p, 0);
    std::atomic<bool> failed{false};
    // Latched once per phase while every worker is parked, so all workers
    // agree on whether to stop even if `failed` flips during the next phase.
    bool stop = false;
    std::size_t rounds_done = 0;
    std::barrier sync(static_cast<std::ptrdiff_t>(p), [&]() noexcept { stop = failed.load(); });

    std::vector<Key>& out = result.keys;
    out.resize(keys.size());

    auto worker = [&](std::size_t rank) {
        try {
            const IndexRange block = layout.block_ranges[rank];
            MarkResult marked = mark_phase(keys.subspan(block.begin, block.size()), domain);
            local[rank].emplace(std::move(marked.bits));
            counters[rank] = marked.counters;
        } catch (...) {
            failures[rank] = std::current_exception();
            failed.store(true);
        }
        sync.arrive_and_wait();
        if (stop) return;

        // Round s pairs rank r with r + s for r divisible by 2s.
        for (std::size_t stride = 1; stride < p; stride *= 2) {
            if (rank % (2 * stride) == 0 && rank + stride < p) {
                DecisionString& mine = *local[rank];
                const DecisionString& theirs = *local[rank + stride];
                // Overlap means a key was marked by two different blocks.
                if (mine.first_common(theirs) != mine.size()) failed.store(true);
                mine.merge_from(theirs);
            }
            if (rank == 0) ++rounds_done;
            sync.arrive_and_wait();
            if (stop) return;
        }

        const DecisionString& combined = *local[0];
        const IndexRange slice = layout.slice_ranges[rank];
        run_sizes[rank] = combined.count(slice.begin, slice.end);
        sync.arrive_and_wait();

        std::size_t offset = 0;
        for (std::size_t r = 0; r < rank; ++r) offset += run_sizes[r];
        combined.for_each_set(slice.begin, slice.end, [&](std::uint64_t bit) {
            out[offset++] = domain.key_at(bit);
        });
        counters[rank].emit_comparisons = slice.size();
        counters[rank].emit_writes = run_sizes[rank];
        counters[rank].iterations += slice.size();
    };

    {
        std::vector<std::jthread> threads;
        threads.reserve(p - 1);
        for (std::size_t rank = 1; rank < p; ++rank) threads.emplace_back(worker, rank);
        worker(0);
    }

    if (failed.load()) {
        for (const auto& f : failures) {
            if (!f) continue;
            try {
                std::rethrow_exception(f);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::KeyOutOfRange && e.kind() != ErrorKind::DuplicateKey) throw;
            }
        }
        // Re-run the sequential mark so the reported key and position are
        // exactly those of the sequential sort.
        mark_phase(keys, domain);
        throw std::logic_error("parallel mark failed but sequential mark succeeded");
    }

    result.combine_rounds = rounds_done;
    result.run_offsets.assign(p + 1, 0);
    for (std::size_t r = 0; r < p; ++r) {
        result.run_offsets[r + 1] = result.run_offsets[r] + run_sizes[r];
        result.counters += counters[r];
    }
    return result;
}

std::vector<Key> parallel_decision_sort(std::span<const Key> keys, const KeyDomain& domain,
                                        std::size_t workers) {
    return parallel_decision_sort_detailed(keys, domain, workers).keys;
}

std::size_t default_worker_count() noexcept {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace dsort
