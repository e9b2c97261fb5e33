// SPDX-License-Identifier: Apache-2.0
#include "dsort/baselines.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "dsort/core_sort.hpp"
#include "dsort/error.hpp"

namespace dsort {

BaselineResult instrumented_bubble(std::span<const Key> keys) {
    BaselineResult result{{keys.begin(), keys.end()}, {}};
    std::vector<Key>& a = result.keys;
    if (a.size() < 2) return result;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t j = 0; j + 1 < a.size(); ++j) {
            ++result.counters.comparisons;
            if (a[j] > a[j + 1]) {
                std::swap(a[j], a[j + 1]);
                ++result.counters.swaps;
                swapped = true;
            }
        }
    }
    return result;
}

namespace {

class CountingQuicksort {
public:
    CountingQuicksort(std::vector<Key>& a, BaselineCounters& counters) : a_(a), c_(counters) {}

    void sort(std::ptrdiff_t lo, std::ptrdiff_t hi) {
        // Recurse into the smaller side so stack depth stays logarithmic.
        while (lo < hi) {
            const std::ptrdiff_t mid = partition(lo, hi);
            if (mid - lo < hi - mid) {
                sort(lo, mid - 1);
                lo = mid + 1;
            } else {
                sort(mid + 1, hi);
                hi = mid - 1;
            }
        }
    }

private:
    std::ptrdiff_t partition(std::ptrdiff_t lo, std::ptrdiff_t hi) {
        const Key pivot = a_[hi];
        std::ptrdiff_t store = lo;
        for (std::ptrdiff_t j = lo; j < hi; ++j) {
            ++c_.comparisons;
            if (a_[j] < pivot) {
                exchange(store, j);
                ++store;
            }
        }
        exchange(store, hi);
        return store;
    }

    void exchange(std::ptrdiff_t i, std::ptrdiff_t j) {
        if (i == j) return;
        std::swap(a_[i], a_[j]);
        ++c_.swaps;
    }

    std::vector<Key>& a_;
    BaselineCounters& c_;
};

} // namespace

BaselineResult instrumented_quick(std::span<const Key> keys) {
    BaselineResult result{{keys.begin(), keys.end()}, {}};
    CountingQuicksort(result.keys, result.counters)
        .sort(0, static_cast<std::ptrdiff_t>(result.keys.size()) - 1);
    return result;
}

void CostWeights::validate() const {
    for (double w : {swap_weight, rw_weight, compare_weight}) {
        if (!(w > 0) || !std::isfinite(w)) {
            throw Error(ErrorKind::InvalidWeights, "cost weights must be positive and finite");
        }
    }
}

double weighted_total(const ComparisonRow& row, const CostWeights& weights) noexcept {
    return weights.swap_weight * static_cast<double>(row.swaps) +
           weights.compare_weight * static_cast<double>(row.comparisons) +
           weights.rw_weight * static_cast<double>(row.writes);
}

bool is_worked_example(std::span<const Key> keys, const KeyDomain& domain) {
    static constexpr std::array<Key, 7> kExample{4, 2, 7, 9, 1, 13, 15};
    return domain.lower() == 1 && domain.upper() == 15 &&
           std::equal(keys.begin(), keys.end(), kExample.begin(), kExample.end());
}

ComparisonReport comparison_report(std::span<const Key> keys, const KeyDomain& domain,
                                   const CostWeights& weights) {
    weights.validate();
    const SortResult decision = decision_sort_unique(keys, domain);
    const BaselineResult bubble = instrumented_bubble(keys);
    const BaselineResult quick = instrumented_quick(keys);

    ComparisonReport report;
    report.n = keys.size();
    report.k = domain.size();
    report.weights = weights;

    auto add = [&](std::string name, std::uint64_t comparisons, std::uint64_t writes,
                   std::uint64_t swaps) {
        ComparisonRow row{std::move(name), comparisons, writes, comparisons + writes, swaps, 0};
        row.weighted_total = weighted_total(row, weights);
        report.rows.push_back(std::move(row));
    };
    add("Bubble", bubble.counters.comparisons, 0, bubble.counters.swaps);
    add("Quick", quick.counters.comparisons, 0, quick.counters.swaps);
    add("Decision", decision.counters.emit_comparisons, decision.counters.mark_writes,
        decision.counters.swaps);

    if (is_worked_example(keys, domain)) {
        report.reference = {
            {"Bubble", 15, 15, 60},
            {"Quick", 15, 5, 30},
            {"Decision", 22, std::nullopt, 22},
        };
    }
    return report;
}

} // namespace dsort
