// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "dsort/core_sort.hpp"
#include "dsort/cost_model.hpp"

using namespace dsort;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected dsort::Error");
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("sequential_cost") {
    const SequentialCost c = sequential_cost(7, 15);
    CHECK(c.iterations == 22);
    CHECK(c.steps == 29);
    const SequentialCost empty = sequential_cost(0, 15);
    CHECK(empty.iterations == 15);
    CHECK(empty.steps == 15);
    CHECK(kind_of([] { sequential_cost(3, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("sequential_cost agrees with measured counters") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const Key hi = std::uniform_int_distribution<Key>(0, 5000)(rng);
        const KeyDomain d = domain_from_bounds(0, hi);
        std::vector<Key> keys;
        std::bernoulli_distribution keep(0.2);
        for (Key v = 0; v <= hi; ++v) {
            if (keep(rng)) keys.push_back(v);
        }
        std::shuffle(keys.begin(), keys.end(), rng);
        const SortResult r = decision_sort_unique(keys, d);
        const SequentialCost model = sequential_cost(keys.size(), d.size());
        CHECK(model.iterations == r.counters.iterations);
        CHECK(model.steps == r.counters.elementary_steps());
    }
}

TEST_CASE("exponent") {
    CHECK(std::abs(exponent(100, 400) - 1.30) <= 0.05);
    CHECK(std::abs(exponent(100000, 10000000) - 1.40) <= 0.05);
    CHECK(exponent(1000, 1000) == 1.0);
    CHECK(exponent(2, 2) == 1.0);
    CHECK(kind_of([] { exponent(1, 10); }) == ErrorKind::UndefinedExponent);
    CHECK(kind_of([] { exponent(10, 5); }) == ErrorKind::UndefinedExponent);
}

TEST_CASE("hit_probability") {
    CHECK(hit_probability(100, 400) == 0.25);
    CHECK(hit_probability(37, 37) == 1.0);
    CHECK(hit_probability(1e16, 1e22) == doctest::Approx(1e-6).epsilon(1e-12));
    CHECK(kind_of([] { hit_probability(10, 5); }) == ErrorKind::InvalidRatio);
    CHECK(kind_of([] { hit_probability(0, 5); }) == ErrorKind::InvalidRatio);
}

TEST_CASE("tradeoff_constant is invariant within a family") {
    struct Family {
        double c, a, expected;
    };
    // P * n^(a-1) = (n / (c n^a)) * n^(a-1) = 1/c.
    for (const Family f : {Family{4, 1.3, 0.25}, Family{1, 1.0, 1.0}, Family{2, 1.5, 0.5}}) {
        for (double n : {1e2, 1e3, 1e4}) {
            const double k = f.c * std::pow(n, f.a);
            CHECK(std::abs(tradeoff_constant(n, k, f.a) - f.expected) <= 1e-9 * f.expected);
        }
    }
    CHECK(kind_of([] { tradeoff_constant(1, 4, 1.3); }) == ErrorKind::UndefinedExponent);
}

TEST_CASE("classify_regime") {
    const RegimeReport small = classify_regime(100, 400);
    CHECK(small.regime == Regime::Linear);
    CHECK(small.exponent_a < 1.7);
    CHECK(small.hit_probability == 0.25);

    CHECK(classify_regime(1000, 1000).regime == Regime::Linear);

    const RegimeReport huge = classify_regime(100, 1e10);
    CHECK(huge.regime == Regime::Unfavorable);
    CHECK(huge.exponent_a == doctest::Approx(5.0));

    // 8 n < k <= 8 n log2 n
    CHECK(classify_regime(1024, 8 * 1024 * 5).regime == Regime::Linearithmic);
    // beyond 8 n log2 n = 1.06e6 but a = ln(2e6)/ln(1e4) = 1.575 < 1.7
    CHECK(classify_regime(1e4, 2e6).regime == Regime::Polynomial);

    RegimeConfig strict;
    strict.linear_factor = 2;
    CHECK(classify_regime(100, 400, strict).regime == Regime::Linearithmic);

    CHECK(kind_of([] { classify_regime(1, 10); }) == ErrorKind::UndefinedExponent);
}

TEST_CASE("parallel_estimate rows") {
    const ParallelEstimate r1 = parallel_estimate(100, 400, 8);
    CHECK(std::abs(r1.speedup_S - 7.30) <= 0.01);
    CHECK(std::abs(r1.efficiency_E - 0.92) <= 0.01);
    CHECK(r1.time_T == 100.0 / 8 + 6 + 400.0 / 8);
    CHECK(r1.processor_time_R == 548);

    const ParallelEstimate r2 = parallel_estimate(1000, 5000, 8);
    CHECK(std::abs(r2.speedup_S - 7.94) <= 0.01);
    CHECK(std::abs(r2.efficiency_E - 0.99) <= 0.01);

    const ParallelEstimate r3 = parallel_estimate(100000, 1000000, 16);
    CHECK(std::abs(r3.speedup_S - 15.998) <= 0.001);
    CHECK(std::abs(r3.efficiency_E - 0.9999) <= 0.0001);

    const ParallelEstimate single = parallel_estimate(123, 456, 1);
    CHECK(single.speedup_S == 1.0);
    CHECK(single.efficiency_E == 1.0);

    CHECK(kind_of([] { parallel_estimate(100, 400, 6); }) == ErrorKind::NonPowerOfTwoWorkers);
    CHECK(kind_of([] { parallel_estimate(100, 400, 0); }) == ErrorKind::NonPowerOfTwoWorkers);
    CHECK(kind_of([] { parallel_estimate(0, 400, 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("property: estimate algebra") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> log_p(0, 10);
    std::uniform_int_distribution<std::int64_t> size(1, std::int64_t{1} << 30);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint64_t p = std::uint64_t{1} << log_p(rng);
        const double n = static_cast<double>(size(rng));
        const double k = static_cast<double>(size(rng));
        const ParallelEstimate e = parallel_estimate(n, k, p);
        const double pd = static_cast<double>(p);
        const double overhead = 2 * pd * std::log2(pd);
        CHECK(e.processor_time_R - (n + k) == overhead);
        CHECK(e.speedup_S == doctest::Approx(pd / (1 + overhead / (n + k))).epsilon(1e-12));
        CHECK(e.efficiency_E == doctest::Approx(e.speedup_S / pd).epsilon(1e-12));
        CHECK(e.efficiency_E > 0);
        CHECK(e.efficiency_E <= 1);
        if (p >= 2) CHECK(e.speedup_S < pd);
    }
}

TEST_CASE("property: monotonicity and limit") {
    for (std::uint64_t p : {2, 4, 8, 64}) {
        double previous = 0;
        for (double total = 10; total < 1e12; total *= 3.7) {
            const double s = parallel_estimate(total / 2, total / 2, p).speedup_S;
            CHECK(s > previous);
            previous = s;
        }
        const double pd = static_cast<double>(p);
        const double big = 1e6 * pd * std::log2(pd);
        CHECK(pd - parallel_estimate(big / 2, big / 2, p).speedup_S < 0.01 * pd);
    }
    double previous_e = 2;
    for (std::uint64_t p = 2; p <= 1024; p *= 2) {
        const double e = parallel_estimate(5000, 20000, p).efficiency_E;
        CHECK(e < previous_e);
        previous_e = e;
    }
}

TEST_CASE("parallelizable_check") {
    const ParallelizableCheck ok = parallelizable_check(100, 400, 8);
    CHECK(ok.parallelizable);
    CHECK(ok.margin == doctest::Approx(0.12));

    CHECK_FALSE(parallelizable_check(4, 4, 64).parallelizable);
    CHECK_FALSE(parallelizable_check(1000, 4, 64).parallelizable);

    const ParallelizableCheck one = parallelizable_check(10, 10, 1);
    CHECK(one.parallelizable);
    CHECK(one.margin == 0);

    // 2*8*3 = 48 against 400^0.5 = 20
    CHECK_FALSE(parallelizable_check(100, 400, 8, 0.5).parallelizable);
    CHECK(kind_of([] { parallelizable_check(100, 400, 3); }) == ErrorKind::NonPowerOfTwoWorkers);
}

TEST_CASE("speedup_table") {
    const std::vector<ModelRow> rows{{100, 400, 8}, {1000, 5000, 8}, {100000, 1000000, 16}};
    const auto table = speedup_table(rows);
    REQUIRE(table.size() == 3);
    const double expected_s[] = {7.3, 7.94, 15.998};
    const double tol_s[] = {0.01, 0.01, 0.001};
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(table[i].ok());
        CHECK(std::abs(std::get<ParallelEstimate>(table[i].outcome).speedup_S - expected_s[i]) <=
              tol_s[i]);
    }

    CHECK(speedup_table(std::vector<ModelRow>{}).empty());

    const std::vector<ModelRow> mixed{{100, 400, 8}, {100, 400, 6}, {1000, 5000, 8}};
    const auto partial = speedup_table(mixed);
    REQUIRE(partial.size() == 3);
    CHECK(partial[0].ok());
    CHECK_FALSE(partial[1].ok());
    CHECK(std::get<RowError>(partial[1].outcome).kind == ErrorKind::NonPowerOfTwoWorkers);
    CHECK(partial[2].ok());
}
