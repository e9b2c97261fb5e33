// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "dsort/report.hpp"

using namespace dsort;
using nlohmann::json;

namespace {

// "name value" lines of a text report.
std::map<std::string, std::string> text_fields(const std::string& text) {
    std::map<std::string, std::string> fields;
    std::istringstream is(text);
    std::string name, value;
    while (is >> name >> value) fields[name] = value;
    return fields;
}

} // namespace

TEST_CASE("format_number round-trips") {
    for (double v : {0.25, 7.299270072992701, 1e22, 1.0, 15.998138042042627, 1e-6}) {
        CHECK(std::stod(format_number(v)) == v);
    }
    CHECK(format_number(22) == "22");
}

TEST_CASE("counters_json") {
    OpCounters c{7, 15, 7, 22, 0};
    const json j = json::parse(counters_json(c));
    CHECK(j["iterations"] == 22);
    CHECK(j["elementary_steps"] == 29);
    CHECK(j["swaps"] == 0);
}

TEST_CASE("analysis report: text and json carry the same numbers") {
    AnalysisReport r{classify_regime(100, 400), sequential_cost(100, 400), 1.3,
                     tradeoff_constant(100, 400, 1.3)};
    const json j = json::parse(render(r, Format::Json));
    const auto t = text_fields(render(r, Format::Text));
    for (const char* key : {"n", "k", "exponent_a", "hit_probability", "iterations", "steps",
                            "tradeoff_exponent", "tradeoff_constant"}) {
        CAPTURE(key);
        CHECK(std::stod(t.at(key)) == j[key].get<double>());
    }
    CHECK(t.at("regime") == j["regime"].get<std::string>());
}

TEST_CASE("estimate report: text and json carry the same numbers") {
    const ParallelEstimate e = parallel_estimate(1000, 5000, 8);
    const ParallelizableCheck c = parallelizable_check(1000, 5000, 8);
    const json j = json::parse(render(e, c, Format::Json));
    const auto t = text_fields(render(e, c, Format::Text));
    for (const char* key : {"n", "k", "p", "T", "R", "S", "E", "overhead_margin"}) {
        CAPTURE(key);
        CHECK(std::stod(t.at(key)) == j[key].get<double>());
    }
    CHECK(j["parallelizable"] == true);
}

TEST_CASE("speedup table report") {
    const std::vector<ModelRow> rows{{100, 400, 8}, {100, 400, 6}};
    const auto table = speedup_table(rows);
    const json j = json::parse(render(table, Format::Json));
    REQUIRE(j.size() == 2);
    CHECK(j[0]["S"].get<double>() == std::get<ParallelEstimate>(table[0].outcome).speedup_S);
    CHECK(j[1]["error"] == "NonPowerOfTwoWorkers");
    const std::string text = render(table, Format::Text);
    CHECK(text.find(format_number(j[0]["S"].get<double>())) != std::string::npos);
    CHECK(text.find("error: NonPowerOfTwoWorkers") != std::string::npos);
}

TEST_CASE("comparison report renders measured and reference columns") {
    const std::vector<Key> keys{4, 2, 7, 9, 1, 13, 15};
    const ComparisonReport r = comparison_report(keys, domain_from_bounds(1, 15));
    const json j = json::parse(render(r, Format::Json));
    CHECK(j["measured"][2]["algorithm"] == "Decision");
    CHECK(j["measured"][2]["weighted_total"] == 22);
    CHECK(j["reference"][0]["weighted_total"] == 60);
    CHECK(j["reference"][1]["weighted_total"] == 30);
    CHECK(j["reference"][2]["swaps"].is_null());

    const std::string text = render(r, Format::Text);
    CHECK(text.find("ref_total") != std::string::npos);
    std::istringstream is(text);
    std::string line;
    bool saw_decision = false;
    while (std::getline(is, line)) {
        if (line.rfind("Decision", 0) == 0) {
            std::istringstream fields(line);
            std::string name, cw, swaps, total;
            fields >> name >> cw >> swaps >> total;
            CHECK(cw == "22");
            CHECK(swaps == "0");
            CHECK(total == "22");
            saw_decision = true;
        }
    }
    CHECK(saw_decision);
}
