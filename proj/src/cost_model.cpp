// SPDX-License-Identifier: Apache-2.0
#include "dsort/cost_model.hpp"

#include <cmath>
#include <cstdio>

namespace dsort {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void require_exponent_domain(double n, double k) {
    if (!(n >= 2) || !(k >= n)) {
        throw Error(ErrorKind::UndefinedExponent,
                    "exponent needs n >= 2 and k >= n (n=" + num(n) + ", k=" + num(k) + ")");
    }
}

} // namespace

SequentialCost sequential_cost(std::uint64_t n, std::uint64_t k) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "domain size k must be at least 1");
    return SequentialCost{n, k, n + k, 2 * n + k};
}

double exponent(double n, double k) {
    require_exponent_domain(n, k);
    return std::log(k) / std::log(n);
}

double hit_probability(double n, double k) {
    if (!(n >= 1) || !(k >= n)) {
        throw Error(ErrorKind::InvalidRatio,
                    "hit probability needs k >= n >= 1 (n=" + num(n) + ", k=" + num(k) + ")");
    }
    return n / k;
}

double tradeoff_constant(double n, double k, double a) {
    require_exponent_domain(n, k);
    return (n / k) * std::pow(n, a - 1.0);
}

std::string_view to_string(Regime regime) noexcept {
    switch (regime) {
    case Regime::Linear: return "LINEAR";
    case Regime::Linearithmic: return "LINEARITHMIC";
    case Regime::Polynomial: return "POLYNOMIAL";
    case Regime::Unfavorable: return "UNFAVORABLE";
    }
    return "UNKNOWN";
}

RegimeReport classify_regime(double n, double k, const RegimeConfig& config) {
    RegimeReport report;
    report.n = n;
    report.k = k;
    report.exponent_a = exponent(n, k);
    report.hit_probability = hit_probability(n, k);
    if (k <= config.linear_factor * n) {
        report.regime = Regime::Linear;
    } else if (k <= config.linear_factor * n * std::log2(n)) {
        report.regime = Regime::Linearithmic;
    } else if (report.exponent_a < config.max_exponent) {
        report.regime = Regime::Polynomial;
    } else {
        report.regime = Regime::Unfavorable;
    }
    return report;
}

bool is_power_of_two(std::uint64_t p) noexcept {
    return p != 0 && (p & (p - 1)) == 0;
}

ParallelEstimate parallel_estimate(double n, double k, std::uint64_t p) {
    if (!is_power_of_two(p)) {
        throw Error(ErrorKind::NonPowerOfTwoWorkers,
                    "worker count " + std::to_string(p) + " is not a power of two");
    }
    if (!(n >= 1) || !(k >= 1)) {
        throw Error(ErrorKind::InvalidArgument, "n and k must both be at least 1");
    }
    const double workers = static_cast<double>(p);
    const double log_p = std::log2(workers);
    const double overhead = 2.0 * workers * log_p;

    ParallelEstimate e;
    e.n = n;
    e.k = k;
    e.p = p;
    e.time_T = n / workers + 2.0 * log_p + k / workers;
    e.processor_time_R = workers * e.time_T;
    e.speedup_S = workers * (n + k) / (n + k + overhead);
    e.efficiency_E = 1.0 / (1.0 + overhead / (n + k));
    return e;
}

ParallelizableCheck parallelizable_check(double n, double k, std::uint64_t p, double a_par) {
    // Same preconditions as the estimate.
    parallel_estimate(n, k, p);
    const double workers = static_cast<double>(p);
    const double overhead = 2.0 * workers * std::log2(workers);
    return ParallelizableCheck{overhead < std::pow(k, a_par), overhead / k};
}

std::vector<SpeedupEntry> speedup_table(std::span<const ModelRow> rows) {
    std::vector<SpeedupEntry> table;
    table.reserve(rows.size());
    for (const ModelRow& row : rows) {
        try {
            table.push_back({row, parallel_estimate(row.n, row.k, row.p)});
        } catch (const Error& e) {
            table.push_back({row, RowError{e.kind(), e.what()}});
        }
    }
    return table;
}

} // namespace dsort
