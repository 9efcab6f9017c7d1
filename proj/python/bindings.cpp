#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "critlab/canonical.hpp"
#include "critlab/census.hpp"
#include "critlab/cliques.hpp"
#include "critlab/coloring.hpp"
#include "critlab/criticality.hpp"
#include "critlab/errors.hpp"
#include "critlab/generate.hpp"
#include "critlab/gf2.hpp"
#include "critlab/graph6.hpp"
#include "critlab/trace.hpp"

namespace py = pybind11;
using namespace critlab;

namespace {

Graph decode(const std::string& g6) { return graph6_decode(g6); }

std::vector<std::vector<int>> cliques(const std::string& g6, int size)
{
    std::vector<std::vector<int>> out;
    for (auto s : enumerate_cliques(decode(g6), size).members) out.push_back(s.to_vector());
    return out;
}

py::dict criticality(const std::string& g6, int k)
{
    const auto r = is_k_critical(decode(g6), k);
    py::dict d;
    d["k"] = r.k;
    d["chi"] = r.chi;
    d["min_degree"] = r.min_degree;
    d["verdict"] = to_string(r.verdict);
    d["critical"] = r.critical();
    if (r.failing_edge) d["edge"] = py::make_tuple(r.failing_edge->u, r.failing_edge->v);
    if (r.isolated) d["vertex"] = *r.isolated;
    return d;
}

std::set<Check> parse_checks(const std::optional<std::vector<std::string>>& names)
{
    if (!names) return default_checks();
    std::set<Check> out;
    for (const auto& n : *names) {
        const auto c = parse_check(n);
        if (!c) throw ArgumentError("unknown check '" + n + "'");
        out.insert(*c);
    }
    return out;
}

std::string census_json(int k, int n_min, int n_max, const std::optional<std::vector<std::string>>& graphs,
                        const std::optional<std::vector<std::string>>& checks, int jobs, bool timing)
{
    CensusConfig cfg;
    cfg.k = k;
    cfg.n_min = n_min;
    cfg.n_max = n_max;
    cfg.checks = parse_checks(checks);
    cfg.jobs = jobs;
    CensusReport report;
    {
        py::gil_scoped_release release;
        if (graphs) {
            cfg.source = Source::graph6_stream;
            std::ostringstream lines;
            for (const auto& g6 : *graphs) lines << g6 << '\n';
            std::istringstream in(lines.str());
            report = run_census(cfg, in);
        } else {
            report = run_census(cfg);
        }
    }
    return report_to_json(report, timing).dump();
}

std::string trace_json(const std::string& g6, int k)
{
    const Graph g = decode(g6);
    return certificate_to_json(g, k, build_trace(g, k)).dump();
}

std::pair<bool, std::vector<std::string>> check_json(const std::string& certificate)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(certificate);
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(e.what());
    }
    const auto parsed = certificate_from_json(j);
    const auto verdict = check_trace(parsed.graph, parsed.k, parsed.cert);
    return {verdict.ok, verdict.reasons};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Compiled core of critlab; graphs cross the boundary as graph6 strings.";

    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<DecodeError>(m, "DecodeError", PyExc_ValueError);
    py::register_exception<StreamError>(m, "StreamError", PyExc_ValueError);
    py::register_exception<UnsupportedSize>(m, "UnsupportedSize", PyExc_ValueError);
    py::register_exception<FalsificationError>(m, "FalsificationError", PyExc_RuntimeError);

    m.def("construct_w", [](int ell, int d) { return graph6_encode(construct_W({ell, d})); }, py::arg("ell"),
          py::arg("d"));
    m.def("complete", [](int n) { return graph6_encode(complete_graph(n)); }, py::arg("n"));
    m.def("cycle", [](int ell) { return graph6_encode(cycle_graph(ell)); }, py::arg("ell"));
    m.def("wheel", [](int ell) { return graph6_encode(wheel_graph(ell)); }, py::arg("ell"));
    m.def("from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              Graph g(n);
              for (auto [u, v] : edges) g.add_edge(u, v);
              return graph6_encode(g);
          },
          py::arg("n"), py::arg("edges"));
    m.def("edges",
          [](const std::string& g6) {
              std::vector<std::pair<int, int>> out;
              for (auto e : decode(g6).edges()) out.emplace_back(e.u, e.v);
              return out;
          },
          py::arg("graph6"));
    m.def("order", [](const std::string& g6) { return decode(g6).order(); }, py::arg("graph6"));

    m.def("canonical", [](const std::string& g6) { return graph6_encode(canonical_form(decode(g6))); },
          py::arg("graph6"));
    m.def("is_isomorphic", [](const std::string& a, const std::string& b) { return is_isomorphic(decode(a), decode(b)); },
          py::arg("a"), py::arg("b"));

    m.def("chromatic_number", [](const std::string& g6) { return chromatic_number(decode(g6)); }, py::arg("graph6"));
    m.def("coloring",
          [](const std::string& g6, int k) -> std::optional<std::vector<int>> {
              auto c = k_colorable(decode(g6), k);
              if (!c) return std::nullopt;
              return c->assignment;
          },
          py::arg("graph6"), py::arg("k"));
    m.def("criticality", &criticality, py::arg("graph6"), py::arg("k"));

    m.def("cliques", &cliques, py::arg("graph6"), py::arg("size"));
    m.def("clique_count", [](const std::string& g6, int size) { return enumerate_cliques(decode(g6), size).count(); },
          py::arg("graph6"), py::arg("size"));
    m.def("clique_rank",
          [](const std::string& g6, int size, const std::vector<int>& singletons) {
              return rank(incidence_matrix(enumerate_cliques(decode(g6), size), singletons));
          },
          py::arg("graph6"), py::arg("size"), py::arg("singletons") = std::vector<int>{});

    m.def("generate",
          [](int n, int jobs) {
              std::vector<std::string> out;
              py::gil_scoped_release release;
              generate_batches(n, jobs, [&](std::vector<Graph>&& batch) {
                  for (const auto& g : batch) out.push_back(graph6_encode(g));
              });
              return out;
          },
          py::arg("n"), py::arg("jobs") = 1);

    m.def("census_json", &census_json, py::arg("k"), py::arg("n_min"), py::arg("n_max"), py::arg("graphs") = py::none(),
          py::arg("checks") = py::none(), py::arg("jobs") = 1, py::arg("timing") = false);
    m.def("trace_json", &trace_json, py::arg("graph6"), py::arg("k"));
    m.def("check_certificate_json", &check_json, py::arg("certificate"));
}
