#include "critlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
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

namespace critlab::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Calls f(graph, graph6) per non-blank line; decode failures become StreamError.
void for_each_graph(std::istream& in, const std::function<void(const Graph&, const std::string&)>& f)
{
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Graph g;
        try {
            g = graph6_decode(line);
        } catch (const DecodeError& e) {
            throw StreamError(e.what(), line_no);
        }
        f(g, line);
    }
}

std::vector<int> parse_index_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad index '" + item + "' in list");
        }
    }
    return out;
}

int default_jobs()
{
    if (const char* env = std::getenv("CRITLAB_JOBS")) {
        const int jobs = std::atoi(env);
        if (jobs >= 1) return jobs;
    }
    return 1;
}

json stats_to_json(const Graph& g, const CliqueStats& stats)
{
    json per_edge = json::array();
    for (auto e : g.edges()) per_edge.push_back({e.u, e.v, stats.edge_count(e)});
    return {{"size", stats.ell()}, {"total", stats.total()}, {"per_vertex", stats.per_vertex()}, {"per_edge", per_edge}};
}

json criticality_to_json(const std::string& g6, const CriticalityReport& r)
{
    json edge_chi = json::array();
    for (const auto& [e, chi] : r.edge_chi) edge_chi.push_back({e.u, e.v, chi});
    json j = {{"graph6", g6},          {"k", r.k},           {"chi", r.chi},
              {"min_degree", r.min_degree}, {"edge_chi", edge_chi}, {"verdict", to_string(r.verdict)}};
    if (r.failing_edge) j["edge"] = {r.failing_edge->u, r.failing_edge->v};
    if (r.isolated) j["vertex"] = *r.isolated;
    return j;
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in_default, std::ostream& out_default, std::ostream& err)
{
    CLI::App app{"Audit clique counts of k-critical graphs", "critlab"};
    app.require_subcommand(1, 1);

    std::string input_path;
    std::string output_path;
    const auto add_io = [&](CLI::App* sub) {
        sub->add_option("-i,--input", input_path, "graph6 input file (default stdin)");
        sub->add_option("-o,--output", output_path, "output file (default stdout)");
    };

    std::string family;
    int ell = 0, d = 0, size = 0;
    auto* construct = app.add_subcommand("construct", "emit graph6 of a constructed graph");
    construct->add_option("--family", family, "W, complete, cycle or wheel")
        ->required()
        ->check(CLI::IsMember({"W", "complete", "cycle", "wheel"}));
    construct->add_option("--ell", ell, "cycle or rim length");
    construct->add_option("--d", d, "clique size of W(ell, d)");
    construct->add_option("--n", size, "order of the complete graph");
    construct->add_option("-o,--output", output_path, "output file (default stdout)");

    auto* chi = app.add_subcommand("chi", "chromatic number per graph");
    add_io(chi);

    int k = 0;
    bool report_flag = false;
    bool filter_flag = false;
    auto* critical = app.add_subcommand("critical", "k-criticality verdict per graph");
    critical->add_option("--k", k)->required()->check(CLI::Range(2, 64));
    critical->add_flag("--report", report_flag, "emit the full JSON report");
    critical->add_flag("--filter", filter_flag, "pass through only the k-critical graphs");
    add_io(critical);

    int clique_size = 0;
    bool stats_flag = false;
    auto* cliques = app.add_subcommand("cliques", "count cliques per graph");
    cliques->add_option("--size", clique_size)->required()->check(CLI::Range(1, 64));
    cliques->add_flag("--stats", stats_flag, "emit per-vertex and per-edge counts as JSON");
    add_io(cliques);

    std::string singletons_text;
    auto* rank_cmd = app.add_subcommand("rank", "GF(2) rank of clique incidence vectors");
    rank_cmd->add_option("--clique-size", clique_size)->required()->check(CLI::Range(1, 64));
    rank_cmd->add_option("--singletons", singletons_text, "extra unit rows, e.g. 0,3");
    add_io(rank_cmd);

    int n_min = 1, n_max = 8, jobs = default_jobs();
    std::string source = "gen";
    std::string checks_text;
    std::string findings_path;
    bool no_timing = false;
    auto* audit = app.add_subcommand("audit", "run the census audits");
    audit->add_option("--k", k)->required();
    audit->add_option("--n-min", n_min);
    audit->add_option("--n-max", n_max);
    audit->add_option("--source", source, "gen, stdin or a graph6 file");
    audit->add_option("--checks", checks_text, "comma-separated checks (default: all)");
    audit->add_option("--out", output_path, "report file (default stdout)");
    audit->add_option("--jobs", jobs, "worker threads (fallback: CRITLAB_JOBS)")->check(CLI::PositiveNumber);
    audit->add_option("--findings", findings_path, "write graphs failing the report-only su check here");
    audit->add_flag("--no-timing", no_timing, "omit elapsed times for byte-identical reports");

    std::string check_path;
    auto* trace = app.add_subcommand("trace", "build or verify clique-bound certificates");
    trace->add_option("--k", k)->required();
    trace->add_option("--check", check_path, "JSON-lines certificate file to verify ('-' = stdin)");
    add_io(trace);

    auto* canon = app.add_subcommand("canon", "canonical graph6 per graph");
    add_io(canon);

    int gen_n = 0;
    auto* generate = app.add_subcommand("generate", "all non-isomorphic graphs on n vertices (n <= 10)");
    generate->add_option("--n", gen_n)->required()->check(CLI::Range(0, kMaxGeneratedVertices));
    generate->add_option("--jobs", jobs, "worker threads (fallback: CRITLAB_JOBS)")->check(CLI::PositiveNumber);
    generate->add_option("-o,--output", output_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out_default, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        std::ifstream in_file;
        std::istream* in = &in_default;
        if (!input_path.empty()) {
            in_file.open(input_path);
            if (!in_file) throw UsageError("cannot open input '" + input_path + "'");
            in = &in_file;
        }
        std::ofstream out_file;
        std::ostream* out = &out_default;
        if (!output_path.empty()) {
            out_file.open(output_path);
            if (!out_file) throw UsageError("cannot open output '" + output_path + "'");
            out = &out_file;
        }

        if (*construct) {
            Graph g;
            if (family == "W") g = construct_W({ell, d});
            else if (family == "complete") g = complete_graph(size);
            else if (family == "cycle") g = cycle_graph(ell);
            else g = wheel_graph(ell);
            *out << graph6_encode(g) << '\n';
            return kSuccess;
        }
        if (*chi) {
            for_each_graph(*in, [&](const Graph& g, const std::string& g6) {
                *out << g6 << '\t' << chromatic_number(g) << '\n';
            });
            return kSuccess;
        }
        if (*critical) {
            for_each_graph(*in, [&](const Graph& g, const std::string& g6) {
                const auto r = is_k_critical(g, k);
                if (filter_flag) {
                    if (r.critical()) *out << g6 << '\n';
                } else if (report_flag) {
                    *out << criticality_to_json(g6, r).dump() << '\n';
                } else {
                    *out << g6 << '\t' << to_string(r.verdict) << '\n';
                }
            });
            return kSuccess;
        }
        if (*cliques) {
            for_each_graph(*in, [&](const Graph& g, const std::string&) {
                const auto catalog = enumerate_cliques(g, clique_size);
                if (stats_flag)
                    *out << stats_to_json(g, CliqueStats(catalog)).dump() << '\n';
                else
                    *out << catalog.count() << '\n';
            });
            return kSuccess;
        }
        if (*rank_cmd) {
            const auto singles = parse_index_list(singletons_text);
            for_each_graph(*in, [&](const Graph& g, const std::string&) {
                *out << rank(incidence_matrix(enumerate_cliques(g, clique_size), singles)) << '\n';
            });
            return kSuccess;
        }
        if (*canon) {
            for_each_graph(*in, [&](const Graph& g, const std::string&) {
                *out << graph6_encode(canonical_form(g)) << '\n';
            });
            return kSuccess;
        }
        if (*audit) {
            CensusConfig cfg;
            cfg.k = k;
            cfg.n_min = n_min;
            cfg.n_max = n_max;
            cfg.jobs = jobs;
            if (!checks_text.empty()) {
                cfg.checks.clear();
                std::stringstream ss(checks_text);
                std::string name;
                while (std::getline(ss, name, ',')) {
                    const auto c = parse_check(name);
                    if (!c) throw UsageError("unknown check '" + name + "'");
                    cfg.checks.insert(*c);
                }
            }
            CensusReport report;
            if (source == "gen") {
                cfg.source = Source::internal_generator;
                report = run_census(cfg);
            } else {
                cfg.source = Source::graph6_stream;
                if (source == "stdin" || source == "-") {
                    report = run_census(cfg, in_default);
                } else {
                    std::ifstream src(source);
                    if (!src) throw UsageError("cannot open source '" + source + "'");
                    report = run_census(cfg, src);
                }
            }
            *out << report_to_json(report, !no_timing).dump(2) << '\n';
            if (!findings_path.empty()) {
                std::ofstream findings(findings_path);
                if (!findings) throw UsageError("cannot open findings file '" + findings_path + "'");
                for (const auto& row : report.rows)
                    for (const auto& g6 : row.su_findings) findings << g6 << '\n';
            }
            return report.passed() ? kSuccess : kViolation;
        }
        if (*generate) {
            generate_batches(gen_n, jobs, [&](std::vector<Graph>&& batch) {
                for (const auto& g : batch) *out << graph6_encode(g) << '\n';
            });
            return kSuccess;
        }
        if (*trace) {
            if (check_path.empty()) {
                int status = kSuccess;
                for_each_graph(*in, [&](const Graph& g, const std::string& g6) {
                    try {
                        *out << certificate_to_json(g, k, build_trace(g, k)).dump() << '\n';
                    } catch (const FalsificationError& e) {
                        err << "critlab: falsification: " << e.what() << '\n';
                        status = kViolation;
                    } catch (const ArgumentError& e) {
                        throw UsageError(g6 + ": " + e.what());
                    }
                });
                return status;
            }
            std::ifstream cert_file;
            std::istream* certs = in;
            if (check_path != "-") {
                cert_file.open(check_path);
                if (!cert_file) throw UsageError("cannot open certificate file '" + check_path + "'");
                certs = &cert_file;
            }
            int status = kSuccess;
            std::string line;
            std::size_t line_no = 0;
            while (std::getline(*certs, line)) {
                ++line_no;
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                ParsedCertificate parsed;
                try {
                    parsed = certificate_from_json(json::parse(line));
                } catch (const std::exception& e) {
                    throw StreamError(e.what(), line_no);
                }
                const auto verdict = check_trace(parsed.graph, parsed.k, parsed.cert);
                *out << graph6_encode(parsed.graph) << '\t' << (verdict.ok ? "ok" : "rejected");
                for (std::size_t i = 0; i < verdict.reasons.size(); ++i)
                    *out << (i == 0 ? "\t" : "; ") << verdict.reasons[i];
                *out << '\n';
                if (!verdict.ok || parsed.k != k) status = kViolation;
            }
            return status;
        }
    } catch (const UsageError& e) {
        err << "critlab: " << e.what() << '\n';
        return kUsage;
    } catch (const StreamError& e) {
        err << "critlab: parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const DecodeError& e) {
        err << "critlab: parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const ArgumentError& e) {
        err << "critlab: " << e.what() << '\n';
        return kUsage;
    } catch (const UnsupportedSize& e) {
        err << "critlab: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace critlab::cli
