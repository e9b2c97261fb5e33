// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dsort/domain.hpp"

namespace dsort {

inline constexpr std::uint64_t kDefaultBenchSeed = 1;
inline constexpr std::uint64_t kBubbleSizeLimit = 20000;

/// round(range_factor * n). Throws InfeasibleGeneration when the result is
/// smaller than n or range_factor < 1.
std::uint64_t bench_domain_size(std::uint64_t n, double range_factor);

/// n distinct keys drawn uniformly from [0, k) in random order, a pure
/// function of (n, k, seed). Throws InfeasibleGeneration when n > k.
std::vector<Key> generate_distinct_keys(std::uint64_t n, std::uint64_t k, std::uint64_t seed,
                                        std::uint64_t max_domain_bits = kDefaultMaxDomainBits);

struct BenchRow {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::string algorithm;
    double wall_seconds = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t writes = 0;
    std::uint64_t swaps = 0;
    std::uint64_t iterations = 0;
};

/// Times decision, bubble (only for n <= bubble_limit) and quick on the same
/// generated key set for each size.
std::vector<BenchRow> run_bench(std::span<const std::uint64_t> sizes, double range_factor,
                                std::uint64_t seed,
                                std::uint64_t bubble_limit = kBubbleSizeLimit,
                                std::uint64_t max_domain_bits = kDefaultMaxDomainBits);

void write_bench_csv(std::ostream& os, std::span<const BenchRow> rows);

} // namespace dsort
