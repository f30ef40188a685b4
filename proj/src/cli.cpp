#include "bdd/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bdd/kernelizer.hpp"
#include "bdd/random_graph.hpp"
#include "bdd/solver.hpp"

namespace bdd {

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitScale = 4;

GraphFormat parse_format(const std::string& name) {
    return name == "edge-list" ? GraphFormat::edge_list : GraphFormat::dimacs;
}

Graph read_graph(const std::string& path, GraphFormat format, std::istream& in) {
    if (path == "-") {
        return parse_graph(in, format);
    }
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error("cannot open " + path);
    }
    return parse_graph(file, format);
}

void write_ids(std::ostream& out, const char* label, const VertexSet& s) {
    out << label << ':';
    for (int v : s) {
        out << ' ' << v;
    }
    out << '\n';
}

void dump_traces(const std::vector<ExtremalTrace>& traces, std::ostream& err) {
    for (std::size_t call = 0; call < traces.size(); ++call) {
        const auto& rounds = traces[call].rounds;
        for (std::size_t r = 0; r < rounds.size(); ++r) {
            err << "trace call=" << call + 1 << " round=" << r
                << " forbidden_witness=" << rounds[r].forbidden_witness.size()
                << " forbidden_residual=" << rounds[r].forbidden_residual.size()
                << " packing_edges=" << rounds[r].packing.edge_count()
                << " fixpoint_steps=" << rounds[r].fixpoint_steps << '\n';
        }
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"bounded-degree deletion: kernelization, exact solving, s-plex detection"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format_name = "dimacs";
    int d = 0;
    int k = 0;
    int s = 1;
    bool trace = false;
    int gen_n = 0;
    double gen_p = 0.0;
    std::uint64_t seed = 1;

    auto format_check = CLI::IsMember({"edge-list", "dimacs"});

    CLI::App* kernelize = app.add_subcommand("kernelize", "reduce a graph, report A/B");
    kernelize->add_option("input", input, "input path, - for stdin");
    kernelize->add_option("--d", d, "degree bound")->check(CLI::NonNegativeNumber);
    kernelize->add_option("--format", format_name)->check(format_check);
    kernelize->add_flag("--trace", trace, "dump per-round trace to stderr");

    CLI::App* solve = app.add_subcommand("solve", "decide if k deletions suffice");
    solve->add_option("input", input, "input path, - for stdin");
    solve->add_option("--d", d, "degree bound")->check(CLI::NonNegativeNumber);
    solve->add_option("--k", k, "deletion budget")->required()->check(CLI::NonNegativeNumber);
    solve->add_option("--format", format_name)->check(format_check);

    CLI::App* splex = app.add_subcommand("splex", "maximum s-plex via the complement");
    splex->add_option("input", input, "input path, - for stdin");
    splex->add_option("--s", s, "plex slack, 1 = clique")
        ->required()
        ->check(CLI::PositiveNumber);
    splex->add_option("--format", format_name)->check(format_check);

    CLI::App* verify = app.add_subcommand("verify", "kernelize and check against brute force");
    verify->add_option("input", input, "input path, - for stdin");
    verify->add_option("--d", d, "degree bound")->check(CLI::NonNegativeNumber);
    verify->add_option("--format", format_name)->check(format_check);

    CLI::App* gen = app.add_subcommand("gen", "emit a reproducible random graph");
    gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--p", gen_p, "edge probability")->required()
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--format", format_name)->check(format_check);

    std::vector<const char*> argv;
    argv.push_back("bddtool");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    const GraphFormat format = parse_format(format_name);

    try {
        if (gen->parsed()) {
            serialize_graph(erdos_renyi(gen_n, gen_p, seed), out, format);
            return kExitSuccess;
        }

        Graph g = read_graph(input, format, in);

        if (kernelize->parsed()) {
            std::vector<ExtremalTrace> traces;
            KernelResult res = compute_ab(g, d, trace ? &traces : nullptr);
            if (trace) {
                dump_traces(traces, err);
            }
            out << serialize_kernel_result(res);
            out << g.vertex_count() << ' ' << g.edge_count() << ' ' << d << ' '
                << res.forced.size() << ' ' << res.discardable.size() << ' '
                << res.reduced.vertex_count() << ' ' << res.constant << ' ' << res.rounds
                << '\n';
            return kExitSuccess;
        }
        if (solve->parsed()) {
            SolveOutcome outcome = fpt_solve(g, d, k);
            if (outcome.feasible) {
                out << "YES\n";
                write_ids(out, "solution", *outcome.solution);
                out << "nodes: " << outcome.nodes_explored << '\n';
                return kExitSuccess;
            }
            out << "NO\n";
            out << "nodes: " << outcome.nodes_explored << '\n';
            return kExitNegative;
        }
        if (splex->parsed()) {
            VertexSet plex = splex_max(g, s);
            write_ids(out, "splex", plex);
            out << "size: " << plex.size() << '\n';
            return kExitSuccess;
        }
        if (verify->parsed()) {
            KernelResult res = compute_ab(g, d);
            TheoremReport report = verify_theorem(g, d, res);
            out << "P1: " << to_string(report.property1) << '\n';
            out << "P2: " << to_string(report.property2) << '\n';
            out << "P3: " << to_string(report.property3) << '\n';
            if (report.any_fail()) {
                return kExitNegative;
            }
            return report.all_pass() ? kExitSuccess : kExitScale;
        }
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ScaleLimitError& e) {
        err << "refused: " << e.what() << '\n';
        return kExitScale;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitUsage;
}

}  // namespace bdd
