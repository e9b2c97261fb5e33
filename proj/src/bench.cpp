// SPDX-License-Identifier: Apache-2.0
#include "dsort/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>

#include "dsort/baselines.hpp"
#include "dsort/core_sort.hpp"
#include "dsort/decision_string.hpp"
#include "dsort/error.hpp"

namespace dsort {

std::uint64_t bench_domain_size(std::uint64_t n, double range_factor) {
    if (!(range_factor >= 1.0) || !std::isfinite(range_factor)) {
        throw Error(ErrorKind::InfeasibleGeneration,
                    "range factor must be at least 1 to place n distinct keys");
    }
    const auto k = static_cast<std::uint64_t>(std::llround(range_factor * static_cast<double>(n)));
    return std::max(k, n);
}

std::vector<Key> generate_distinct_keys(std::uint64_t n, std::uint64_t k, std::uint64_t seed,
                                        std::uint64_t max_domain_bits) {
    if (n > k) {
        throw Error(ErrorKind::InfeasibleGeneration,
                    "cannot draw " + std::to_string(n) + " distinct keys from a domain of " +
                        std::to_string(k));
    }
    std::vector<Key> keys;
    if (n == 0) return keys;
    keys.reserve(n);
    std::mt19937_64 rng(seed);
    // Floyd's sampling, with a decision string as the membership set.
    DecisionString taken(domain_from_bounds(0, static_cast<Key>(k - 1), max_domain_bits));
    for (std::uint64_t j = k - n; j < k; ++j) {
        std::uniform_int_distribution<std::uint64_t> pick(0, j);
        std::uint64_t t = pick(rng);
        if (taken.test(t)) t = j;
        taken.set(t);
        keys.push_back(static_cast<Key>(t));
    }
    std::shuffle(keys.begin(), keys.end(), rng);
    return keys;
}

namespace {

template <class Fn>
double time_seconds(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

} // namespace

std::vector<BenchRow> run_bench(std::span<const std::uint64_t> sizes, double range_factor,
                                std::uint64_t seed, std::uint64_t bubble_limit,
                                std::uint64_t max_domain_bits) {
    std::vector<BenchRow> rows;
    for (std::uint64_t n : sizes) {
        const std::uint64_t k = bench_domain_size(n, range_factor);
        const KeyDomain domain = domain_from_bounds(0, static_cast<Key>(k - 1), max_domain_bits);
        const std::vector<Key> keys = generate_distinct_keys(n, k, seed, max_domain_bits);

        SortResult decision;
        const double t_decision = time_seconds([&] { decision = decision_sort_unique(keys, domain); });
        const OpCounters& c = decision.counters;
        rows.push_back({n, k, "decision", t_decision, c.emit_comparisons,
                        c.mark_writes + c.emit_writes, c.swaps, c.iterations});

        if (n <= bubble_limit) {
            BaselineResult bubble;
            const double t = time_seconds([&] { bubble = instrumented_bubble(keys); });
            rows.push_back({n, k, "bubble", t, bubble.counters.comparisons, 0,
                            bubble.counters.swaps, bubble.counters.comparisons});
        }

        BaselineResult quick;
        const double t_quick = time_seconds([&] { quick = instrumented_quick(keys); });
        rows.push_back({n, k, "quick", t_quick, quick.counters.comparisons, 0,
                        quick.counters.swaps, quick.counters.comparisons});
    }
    return rows;
}

void write_bench_csv(std::ostream& os, std::span<const BenchRow> rows) {
    os << "n,k,algorithm,wall_time_s,comparisons,writes,swaps,iterations\n";
    for (const BenchRow& r : rows) {
        os << r.n << ',' << r.k << ',' << r.algorithm << ',' << r.wall_seconds << ','
           << r.comparisons << ',' << r.writes << ',' << r.swaps << ',' << r.iterations << '\n';
    }
}

} // namespace dsort
