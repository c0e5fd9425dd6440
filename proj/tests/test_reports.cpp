#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>

#include "ramify/report.hpp"

using namespace ramify;

namespace {

RunConfig quick_config() {
    RunConfig cfg;
    cfg.primes = {32003, 1000003};
    cfg.trials_per_prime = 2;
    cfg.seed = 9;
    cfg.record_timing = false;
    return cfg;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("format names parse exactly") {
    CHECK(parse_format("json") == ReportFormat::json);
    CHECK(parse_format("csv") == ReportFormat::csv);
    CHECK(parse_format("text") == ReportFormat::text);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
    CHECK_THROWS_AS(parse_format("JSON"), std::invalid_argument);
    CHECK_THROWS_AS(parse_format(""), std::invalid_argument);
}

TEST_CASE("degree json carries the schema keys in order") {
    const DegreeReport rep = phi(Partition({1, 1}), quick_config());
    const std::string js = render_degree_report(rep, ReportFormat::json);
    CHECK(js.rfind("{\"partition\":[1,1],\"degree\":1,\"trials\":[", 0) == 0);
    CHECK(contains(js, "\"prime\":32003"));
    CHECK(contains(js, "\"prime\":1000003"));
    CHECK(contains(js, "\"zero_dim\":true"));
    CHECK(contains(js, "\"ms\":0.0"));
    CHECK(contains(js, "\"agreement\":true"));
    CHECK(js.back() == '\n');
}

TEST_CASE("geometries without a partition are labeled by name") {
    RunConfig cfg = quick_config();
    const DegreeReport rep = veronese_degree(cfg);
    const std::string js = render_degree_report(rep, ReportFormat::json);
    CHECK(js.rfind("{\"geometry\":\"veronese\",\"degree\":3,", 0) == 0);
    CHECK(!contains(js, "\"partition\""));
    const std::string csv = render_degree_report(rep, ReportFormat::csv);
    CHECK(csv.rfind("label,degree,agreement,prime,seed,value,zero_dim,ms\n", 0) == 0);
    CHECK(contains(csv, "\nveronese,3,true,32003,"));
}

TEST_CASE("budgeted trials serialize as null values") {
    RunConfig cfg = quick_config();
    cfg.trials_per_prime = 1;
    cfg.budget.max_steps = 10;
    const DegreeReport rep = phi(Partition({2, 2}), cfg);
    REQUIRE(rep.any_budget_hit());
    const std::string js = render_degree_report(rep, ReportFormat::json);
    CHECK(contains(js, "\"degree\":null"));
    CHECK(contains(js, "\"value\":null"));
    CHECK(contains(js, "\"agreement\":false"));
    const std::string csv = render_degree_report(rep, ReportFormat::csv);
    CHECK(contains(csv, "2+2,,false,32003,")); // empty degree and value cells
    const std::string text = render_degree_report(rep, ReportFormat::text);
    CHECK(contains(text, "no consensus"));
    CHECK(contains(text, "value=budget"));
}

TEST_CASE("csv rows repeat the verdict next to each trial") {
    const DegreeReport rep = phi(Partition({1, 2}), quick_config());
    const std::string csv = render_degree_report(rep, ReportFormat::csv);
    std::size_t rows = 0;
    for (char c : csv) rows += c == '\n';
    CHECK(rows == 1 + rep.trials.size());
    CHECK(contains(csv, "1+2,1,true,"));
}

TEST_CASE("text form is a short human summary") {
    const DegreeReport rep = phi(Partition({1, 1}), quick_config());
    const std::string text = render_degree_report(rep, ReportFormat::text);
    CHECK(text.rfind("(1,1): degree 1 [4 trials, agreement yes]\n", 0) == 0);
    CHECK(contains(text, "p=32003"));
}

TEST_CASE("rank reports mirror the degree wire forms") {
    const RankReport rep = is_maximal_variation(Partition({1, 1, 2}), quick_config());
    const std::string js = render_rank_report(rep, ReportFormat::json);
    CHECK(js.rfind("{\"partition\":[1,1,2],\"dim_gr\":12,\"rank\":12,\"maximal_variation\":true,\"trials\":[", 0) == 0);
    CHECK(contains(js, "\"rank\":12"));
    const std::string csv = render_rank_report(rep, ReportFormat::csv);
    CHECK(csv.rfind("label,dim_gr,rank,maximal_variation,prime,seed,trial_rank,ms\n", 0) == 0);
    CHECK(contains(csv, "1+1+2,12,12,true,"));
    const std::string text = render_rank_report(rep, ReportFormat::text);
    CHECK(text.rfind("(1,1,2): rank 12 of 12, maximal variation yes", 0) == 0);
}

TEST_CASE("replays with timing off are byte identical") {
    const RunConfig cfg = quick_config();
    const DegreeReport a = phi(Partition({1, 1}), cfg);
    const DegreeReport b = phi(Partition({1, 1}), cfg);
    for (const auto fmt : {ReportFormat::json, ReportFormat::csv, ReportFormat::text})
        CHECK(render_degree_report(a, fmt) == render_degree_report(b, fmt));

    const RankReport ra = is_maximal_variation(Partition({2, 2}), cfg);
    const RankReport rb = is_maximal_variation(Partition({2, 2}), cfg);
    for (const auto fmt : {ReportFormat::json, ReportFormat::csv, ReportFormat::text})
        CHECK(render_rank_report(ra, fmt) == render_rank_report(rb, fmt));
}
