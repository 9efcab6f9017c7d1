#include "critlab/census.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "critlab/canonical.hpp"
#include "critlab/criticality.hpp"
#include "critlab/errors.hpp"
#include "critlab/generate.hpp"
#include "critlab/graph6.hpp"
#include "doctest.h"

using namespace critlab;

namespace {

Graph join(const Graph& a, const Graph& b)
{
    Graph g(a.order() + b.order());
    for (auto e : a.edges()) g.add_edge(e.u, e.v);
    for (auto e : b.edges()) g.add_edge(a.order() + e.u, a.order() + e.v);
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < b.order(); ++j) g.add_edge(i, a.order() + j);
    return g;
}

Graph with_isolated(const Graph& g)
{
    auto rows = g.rows();
    rows.push_back(0);
    return Graph::from_rows(rows);
}

CensusConfig config(int k, int n_min, int n_max)
{
    CensusConfig cfg;
    cfg.k = k;
    cfg.n_min = n_min;
    cfg.n_max = n_max;
    return cfg;
}

} // namespace

TEST_CASE("each filter stage rejects its own witness")
{
    CHECK(filter_critical(complete_graph(4), 4) == Rejection::none);
    CHECK(filter_critical(construct_W({5, 1}), 4) == Rejection::none);

    CHECK(filter_critical(with_isolated(complete_graph(4)), 4) == Rejection::isolated_vertex);

    Graph pendant(5);
    for (auto e : complete_graph(4).edges()) pendant.add_edge(e.u, e.v);
    pendant.add_edge(0, 4);
    CHECK(filter_critical(pendant, 4) == Rejection::low_degree);

    CHECK(filter_critical(complete_graph(5), 4) == Rejection::proper_clique);

    CHECK(filter_critical(join(Graph(3), Graph(3)), 4) == Rejection::greedy_colorable); // K_{3,3}

    CHECK(filter_critical(join(cycle_graph(5), cycle_graph(5)), 5) == Rejection::chi_not_k); // chi = 6, no K5

    Graph extra = with_isolated(construct_W({5, 1}));
    for (int v : {1, 3, 5}) extra.add_edge(6, v);
    CHECK(filter_critical(extra, 4) == Rejection::edge_not_critical);
}

TEST_CASE("filter agrees with the full criticality check")
{
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : generate_all(n))
            for (int k = 3; k <= 6; ++k)
                REQUIRE((filter_critical(g, k) == Rejection::none) == is_k_critical(g, k).critical());
}

TEST_CASE("config validation")
{
    CHECK_NOTHROW(validate(config(4, 1, 10)));
    CHECK_THROWS_AS(validate(config(3, 1, 5)), ArgumentError);
    CHECK_THROWS_AS(validate(config(4, 0, 5)), ArgumentError);
    CHECK_THROWS_AS(validate(config(4, 6, 5)), ArgumentError);
    CHECK_THROWS_AS(validate(config(4, 1, 11)), ArgumentError);
    auto stream = config(4, 1, 64);
    stream.source = Source::graph6_stream;
    CHECK_NOTHROW(validate(stream));
    stream.n_max = 65;
    CHECK_THROWS_AS(validate(stream), ArgumentError);
    auto jobs = config(4, 1, 5);
    jobs.jobs = 0;
    CHECK_THROWS_AS(validate(jobs), ArgumentError);
}

TEST_CASE("check names round trip")
{
    for (Check c : default_checks()) CHECK(parse_check(to_string(c)) == c);
    CHECK(default_checks().size() == 9);
    CHECK_FALSE(parse_check("bogus").has_value());
}

TEST_CASE("audit of the odd wheel on six vertices")
{
    const auto a = audit_critical_graph(construct_W({5, 1}), 4, default_checks());
    CHECK(a.t == 5);
    CHECK(a.failed.empty());
    CHECK(a.equality);
    CHECK(a.su_d == 1);
    CHECK_FALSE(a.su_finding);

    const auto b = audit_critical_graph(complete_graph(4), 4, default_checks());
    CHECK(b.t == 4);
    CHECK(b.failed.empty());
    CHECK_FALSE(b.equality);
    CHECK_FALSE(b.su_d.has_value());
}

TEST_CASE("internal census for k = 4 at n = 5 and n = 6")
{
    const auto report = run_census(config(4, 5, 6));
    CHECK(report.passed());
    const auto* five = report.row(5);
    REQUIRE(five != nullptr);
    CHECK(five->scanned == 34);
    CHECK(five->critical == 0);
    CHECK(five->equality.empty());

    const auto* six = report.row(6);
    REQUIRE(six != nullptr);
    CHECK(six->scanned == 156);
    CHECK(six->critical >= 1);
    CHECK(six->violations.empty());
    CHECK(six->max_t == 5);
    const std::string wheel = report_graph6(construct_W({5, 1}));
    CHECK(std::find(six->equality.begin(), six->equality.end(), wheel) != six->equality.end());

    const auto summary = equality_census(report, 4);
    REQUIRE(summary.by_n.count(6) == 1);
    CHECK(summary.by_n.at(6) == std::vector<std::string>{wheel});
    CHECK(summary.flagged.empty());
}

TEST_CASE("no equality graphs for k = 4 at n = 7")
{
    const auto report = run_census(config(4, 7, 7));
    CHECK(report.passed());
    CHECK(report.row(7)->equality.empty());
    CHECK(equality_census(report, 4).by_n.empty());
}

TEST_CASE("stream census of W(7,2) for k = 5")
{
    auto cfg = config(5, 9, 9);
    cfg.source = Source::graph6_stream;
    std::istringstream in(graph6_encode(construct_W({7, 2})) + "\n");
    const auto report = run_census(cfg, in);
    CHECK(report.passed());
    const auto* row = report.row(9);
    REQUIRE(row != nullptr);
    CHECK(row->critical == 1);
    CHECK(row->max_t == 7);
    REQUIRE(row->equality.size() == 1);
    CHECK(is_isomorphic(graph6_decode(row->equality[0]), construct_W({7, 2})));
    CHECK(equality_census(report, 5).by_n.at(9) == row->equality);
}

TEST_CASE("stream input: skipping, blank lines and errors")
{
    auto cfg = config(4, 4, 6);
    cfg.source = Source::graph6_stream;
    std::istringstream in("C~\r\n\n@\n" + graph6_encode(construct_W({7, 1})) + "\n");
    const auto report = run_census(cfg, in);
    CHECK(report.skipped == 2);
    CHECK(report.row(4)->critical == 1);

    std::istringstream bad("C~\n\nC~~\n");
    try {
        run_census(cfg, bad);
        FAIL("expected a stream error");
    } catch (const StreamError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("results do not depend on jobs or input order")
{
    const auto serial = report_to_json(run_census(config(4, 4, 7)), false);
    auto parallel_cfg = config(4, 4, 7);
    parallel_cfg.jobs = 3;
    CHECK(report_to_json(run_census(parallel_cfg), false) == serial);

    std::vector<Graph> graphs;
    for (int n = 4; n <= 7; ++n)
        for (auto& g : generate_all(n)) graphs.push_back(std::move(g));
    std::mt19937_64 rng(79);
    std::shuffle(graphs.begin(), graphs.end(), rng);
    auto span_cfg = config(4, 4, 7);
    span_cfg.source = Source::graph6_stream;
    auto shuffled = report_to_json(run_census(span_cfg, graphs), false);
    shuffled["config"]["source"] = "gen";
    CHECK(shuffled == serial);
}

TEST_CASE("report JSON shape")
{
    const auto j = report_to_json(run_census(config(4, 6, 6)));
    CHECK(j["config"]["k"] == 4);
    CHECK(j["config"]["source"] == "gen");
    CHECK(j["passed"] == true);
    CHECK(j.contains("elapsed_ms"));
    REQUIRE(j["per_n"].size() == 1);
    const auto& row = j["per_n"][0];
    CHECK(row["n"] == 6);
    CHECK(row["violations"].empty());
    CHECK(row["max_t"] == 5);
    CHECK_FALSE(report_to_json(run_census(config(4, 6, 6)), false).contains("elapsed_ms"));
}

TEST_CASE("a disabled check is never reported")
{
    auto cfg = config(4, 6, 6);
    cfg.checks = {Check::thm2};
    const auto report = run_census(cfg);
    CHECK(report.row(6)->equality.empty());
    CHECK_FALSE(report.row(6)->su_min.has_value());
}
