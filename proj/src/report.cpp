// SPDX-License-Identifier: Apache-2.0
#include "dsort/report.hpp"

#include <algorithm>
#include <charconv>
#include <json.hpp>
#include <sstream>
#include <vector>

namespace dsort {

namespace {

using nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Column-aligned plain-text table; the first row is the header.
std::string aligned(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width;
    for (const auto& row : cells) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << line << '\n';
    }
    return os.str();
}

std::string key_values(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& [k, v] : pairs) cells.push_back({k, v});
    return aligned(cells);
}

std::string u64(std::uint64_t v) { return std::to_string(v); }

} // namespace

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string counters_json(const OpCounters& c) {
    ordered_json j;
    j["mark_writes"] = c.mark_writes;
    j["emit_comparisons"] = c.emit_comparisons;
    j["emit_writes"] = c.emit_writes;
    j["iterations"] = c.iterations;
    j["elementary_steps"] = c.elementary_steps();
    j["swaps"] = c.swaps;
    return j.dump();
}

std::string render(const AnalysisReport& r, Format format) {
    if (format == Format::Json) {
        ordered_json j;
        j["n"] = r.regime.n;
        j["k"] = r.regime.k;
        j["exponent_a"] = r.regime.exponent_a;
        j["hit_probability"] = r.regime.hit_probability;
        j["regime"] = std::string(to_string(r.regime.regime));
        if (r.cost) {
            j["iterations"] = r.cost->iterations;
            j["steps"] = r.cost->steps;
        }
        if (r.tradeoff_constant) {
            j["tradeoff_exponent"] = *r.tradeoff_exponent;
            j["tradeoff_constant"] = *r.tradeoff_constant;
        }
        return dump(j);
    }
    std::vector<std::pair<std::string, std::string>> kv{
        {"n", format_number(r.regime.n)},
        {"k", format_number(r.regime.k)},
        {"exponent_a", format_number(r.regime.exponent_a)},
        {"hit_probability", format_number(r.regime.hit_probability)},
        {"regime", std::string(to_string(r.regime.regime))},
    };
    if (r.cost) {
        kv.emplace_back("iterations", u64(r.cost->iterations));
        kv.emplace_back("steps", u64(r.cost->steps));
    }
    if (r.tradeoff_constant) {
        kv.emplace_back("tradeoff_exponent", format_number(*r.tradeoff_exponent));
        kv.emplace_back("tradeoff_constant", format_number(*r.tradeoff_constant));
    }
    return key_values(kv);
}

std::string render(const ParallelEstimate& e, const ParallelizableCheck& check, Format format) {
    if (format == Format::Json) {
        ordered_json j;
        j["n"] = e.n;
        j["k"] = e.k;
        j["p"] = e.p;
        j["T"] = e.time_T;
        j["R"] = e.processor_time_R;
        j["S"] = e.speedup_S;
        j["E"] = e.efficiency_E;
        j["parallelizable"] = check.parallelizable;
        j["overhead_margin"] = check.margin;
        return dump(j);
    }
    return key_values({
        {"n", format_number(e.n)},
        {"k", format_number(e.k)},
        {"p", u64(e.p)},
        {"T", format_number(e.time_T)},
        {"R", format_number(e.processor_time_R)},
        {"S", format_number(e.speedup_S)},
        {"E", format_number(e.efficiency_E)},
        {"parallelizable", check.parallelizable ? "true" : "false"},
        {"overhead_margin", format_number(check.margin)},
    });
}

std::string render(std::span<const SpeedupEntry> table, Format format) {
    if (format == Format::Json) {
        ordered_json rows = ordered_json::array();
        for (const SpeedupEntry& entry : table) {
            ordered_json j;
            j["n"] = entry.row.n;
            j["k"] = entry.row.k;
            j["p"] = entry.row.p;
            if (const auto* e = std::get_if<ParallelEstimate>(&entry.outcome)) {
                j["S"] = e->speedup_S;
                j["E"] = e->efficiency_E;
            } else {
                const auto& err = std::get<RowError>(entry.outcome);
                j["error"] = std::string(to_string(err.kind));
                j["message"] = err.message;
            }
            rows.push_back(std::move(j));
        }
        return dump(rows);
    }
    std::vector<std::vector<std::string>> cells{{"n", "k", "p", "S", "E"}};
    for (const SpeedupEntry& entry : table) {
        std::vector<std::string> row{format_number(entry.row.n), format_number(entry.row.k),
                                     u64(entry.row.p)};
        if (const auto* e = std::get_if<ParallelEstimate>(&entry.outcome)) {
            row.push_back(format_number(e->speedup_S));
            row.push_back(format_number(e->efficiency_E));
        } else {
            row.push_back("error: " + std::string(to_string(std::get<RowError>(entry.outcome).kind)));
        }
        cells.push_back(std::move(row));
    }
    return aligned(cells);
}

std::string render(const ComparisonReport& r, Format format) {
    if (format == Format::Json) {
        ordered_json j;
        j["n"] = r.n;
        j["k"] = r.k;
        j["weights"] = {{"swap", r.weights.swap_weight},
                        {"read_write", r.weights.rw_weight},
                        {"compare", r.weights.compare_weight}};
        ordered_json rows = ordered_json::array();
        for (const ComparisonRow& row : r.rows) {
            rows.push_back({{"algorithm", row.algorithm},
                            {"comparisons", row.comparisons},
                            {"writes", row.writes},
                            {"comparisons_writes", row.comparisons_writes},
                            {"swaps", row.swaps},
                            {"weighted_total", row.weighted_total}});
        }
        j["measured"] = std::move(rows);
        if (!r.reference.empty()) {
            ordered_json ref = ordered_json::array();
            for (const ReferenceRow& row : r.reference) {
                ordered_json e{{"algorithm", row.algorithm},
                               {"comparisons_writes", row.comparisons_writes}};
                e["swaps"] = row.swaps ? ordered_json(*row.swaps) : ordered_json(nullptr);
                e["weighted_total"] = row.weighted_total;
                ref.push_back(std::move(e));
            }
            j["reference"] = std::move(ref);
        }
        return dump(j);
    }
    const bool with_ref = !r.reference.empty();
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"algorithm", "comparisons/writes", "swaps", "weighted_total"};
    if (with_ref) {
        header.insert(header.end(), {"ref_comparisons/writes", "ref_swaps", "ref_total"});
    }
    cells.push_back(header);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const ComparisonRow& row = r.rows[i];
        std::vector<std::string> line{row.algorithm, u64(row.comparisons_writes), u64(row.swaps),
                                      format_number(row.weighted_total)};
        if (with_ref && i < r.reference.size()) {
            const ReferenceRow& ref = r.reference[i];
            line.push_back(u64(ref.comparisons_writes));
            line.push_back(ref.swaps ? u64(*ref.swaps) : "-");
            line.push_back(format_number(ref.weighted_total));
        }
        cells.push_back(std::move(line));
    }
    std::string out = "n " + u64(r.n) + ", k " + u64(r.k) + ", swap weight " +
                      format_number(r.weights.swap_weight) + "\n";
    return out + aligned(cells);
}

} // namespace dsort
