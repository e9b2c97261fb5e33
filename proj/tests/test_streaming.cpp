// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "dsort/core_sort.hpp"
#include "dsort/streaming.hpp"

using namespace dsort;

TEST_CASE("new sorter is empty") {
    const IncrementalSorter s = sorter_new(1, 15);
    CHECK(s.total_ingested() == 0);
    CHECK(s.batches_seen() == 0);
    CHECK(s.snapshot().empty());

    const IncrementalSorter tiny = sorter_new(0, 0);
    CHECK(tiny.domain().size() == 1);

    CHECK_THROWS_AS(sorter_new(0, 1000, 100), Error);
    try {
        sorter_new(0, 1000, 100);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RangeTooLarge);
    }
}

TEST_CASE("ingest and snapshot") {
    IncrementalSorter s = sorter_new(1, 15);
    s.ingest(std::vector<Key>{4, 2});
    CHECK(s.snapshot() == std::vector<Key>{2, 4});
    s.ingest(std::vector<Key>{7, 1});
    CHECK(s.total_ingested() == 4);
    CHECK(s.batches_seen() == 2);
    CHECK(s.snapshot() == std::vector<Key>{1, 2, 4, 7});
    CHECK(s.snapshot() == s.snapshot());

    s.ingest(std::vector<Key>{});
    CHECK(s.total_ingested() == 4);
    CHECK(s.batches_seen() == 2);
}

TEST_CASE("failed ingest is atomic") {
    IncrementalSorter s = sorter_new(1, 15);
    s.ingest(std::vector<Key>{4, 2});
    const CountString before = s.counts();
    try {
        s.ingest(std::vector<Key>{5, 6, 99});
        FAIL("expected KeyOutOfRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::KeyOutOfRange);
        CHECK(e.value() == 99);
        CHECK(e.position() == 2);
    }
    CHECK(s.counts() == before);
    CHECK(s.total_ingested() == 2);
    CHECK(s.batches_seen() == 1);
    CHECK(s.snapshot() == std::vector<Key>{2, 4});
}

TEST_CASE("worked example in three batches") {
    IncrementalSorter s = sorter_new(1, 15);
    s.ingest(std::vector<Key>{13, 4});
    s.ingest(std::vector<Key>{15, 2, 9});
    s.ingest(std::vector<Key>{1, 7});
    CHECK(s.snapshot() == std::vector<Key>{1, 2, 4, 7, 9, 13, 15});
}

TEST_CASE("property: batch partition and order do not matter") {
    std::mt19937_64 rng(5);
    const KeyDomain d = domain_from_bounds(-50, 50);
    std::uniform_int_distribution<Key> pick(-50, 50);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Key> all(std::uniform_int_distribution<std::size_t>(0, 300)(rng));
        for (Key& k : all) k = pick(rng);

        std::vector<std::vector<Key>> batches;
        for (std::size_t i = 0; i < all.size();) {
            const auto len = std::uniform_int_distribution<std::size_t>(0, 40)(rng);
            const std::size_t end = std::min(all.size(), i + len);
            batches.emplace_back(all.begin() + static_cast<std::ptrdiff_t>(i),
                                 all.begin() + static_cast<std::ptrdiff_t>(end));
            i = end;
        }

        IncrementalSorter forward(d);
        for (const auto& b : batches) forward.ingest(b);
        std::shuffle(batches.begin(), batches.end(), rng);
        IncrementalSorter shuffled(d);
        for (const auto& b : batches) shuffled.ingest(b);

        const std::vector<Key> expected = decision_sort_multiset(all, d).keys;
        CHECK(forward.snapshot() == expected);
        CHECK(shuffled.snapshot() == expected);
        CHECK(forward.total_ingested() == all.size());
    }
}
