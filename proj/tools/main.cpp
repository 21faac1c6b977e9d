#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "elps/generators.hpp"
#include "elps/parser.hpp"
#include "elps/run.hpp"

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitError = 1;
constexpr int kExitDisagreement = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* yn(bool b) { return b ? "yes" : "no"; }

int run_solve(const std::string& file, const elps::RunConfig& config, const std::string& stats,
              const std::string& dump_graph, const std::string& graph_kind) {
    std::string text = read_file(file);

    if (!dump_graph.empty()) {
        if (graph_kind != "primal" && graph_kind != "incidence" && graph_kind != "epistemic")
            throw std::runtime_error("unknown graph kind: " + graph_kind);
        elps::Program p = elps::parse_program(text);
        elps::Graph g = graph_kind == "primal"      ? elps::primal_graph(p)
                        : graph_kind == "incidence" ? elps::incidence_graph(p)
                                                    : elps::epistemic_primal_graph(p);
        std::ofstream out(dump_graph);
        if (!out)
            throw std::runtime_error("cannot write graph file: " + dump_graph);
        elps::write_graph(out, g);
    }

    elps::RunReport report = elps::run(config, text);

    if (report.brute_answer)
        std::cout << "brute: wv " << yn(*report.brute_answer) << "\n";
    if (report.eprim_answer)
        std::cout << "eprim: wv " << yn(*report.eprim_answer) << " (" << report.oracle_calls
                  << " oracle calls)\n";
    if (report.prim_answer)
        std::cout << "prim:  wv " << yn(*report.prim_answer) << "\n";
    if (report.formula_answer)
        std::cout << "formula: " << yn(*report.formula_answer) << "\n";
    std::cout << "wv exists: " << yn(report.wv_exists) << "\n";
    if (config.verbosity >= 1)
        std::cout << "atoms " << report.atoms << ", rules " << report.rules << ", epistemic "
                  << report.epistemic_atoms << ", tw primal " << report.tw_primal
                  << ", tw epistemic-primal " << report.tw_epistemic_primal << ", tw incidence "
                  << report.tw_incidence << "\n";
    if (config.verbosity >= 2)
        for (auto [node, calls] : report.per_node_calls)
            std::cout << "node " << node << ": " << calls << " oracle calls\n";

    if (!stats.empty())
        elps::emit_stats(report, stats);

    if (!report.agreement) {
        std::cerr << "DISAGREEMENT between algorithms on this program:\n" << text;
        return kExitDisagreement;
    }
    bool verdict = report.formula_answer ? *report.formula_answer : report.wv_exists;
    return verdict ? kExitSat : kExitUnsat;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver for ground epistemic logic programs: world-view existence by "
                 "brute-force enumeration or dynamic programming over tree decompositions"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "decide world-view existence for a program file");
    std::string file, alg = "all", td = "min-fill", stats, formula;
    std::string dump_graph, graph_kind = "epistemic";
    std::uint64_t seed = 0;
    std::size_t budget_atoms = 20;
    int verbosity = 0;
    solve->add_option("file", file, "program file")->required();
    solve->add_option("--alg", alg, "brute|eprim|prim|all")->default_val("all");
    solve->add_option("--formula", formula, "propositional query (brute only)");
    solve->add_option("--td", td, "min-fill|min-degree")->default_val("min-fill");
    solve->add_option("--seed", seed, "decomposition seed");
    solve->add_option("--stats", stats, "write a JSON stats report here");
    solve->add_option("--budget-atoms", budget_atoms, "exhaustive-oracle atom limit");
    solve->add_option("--dump-graph", dump_graph, "write the chosen graph as an edge list");
    solve->add_option("--graph-kind", graph_kind, "primal|epistemic|incidence")
        ->default_val("epistemic");
    solve->add_flag("-v", verbosity, "increase verbosity (repeatable)");

    // gen
    auto* gen = app.add_subcommand("gen", "emit generated program text on stdout");
    gen->require_subcommand(1);
    auto* sch = gen->add_subcommand("scholarship", "n disjoint scholarship-eligibility blocks");
    std::size_t students = 1;
    std::uint64_t gen_seed = 0;
    sch->add_option("n", students, "number of students")->required()->check(CLI::PositiveNumber);
    sch->add_option("--seed", gen_seed, "generator seed");
    auto* rnd = gen->add_subcommand("random", "random program");
    elps::RandomProgramParams params;
    rnd->add_option("--atoms", params.n_atoms)->default_val(4);
    rnd->add_option("--rules", params.n_rules)->default_val(4);
    rnd->add_option("--max-head", params.max_head)->default_val(2);
    rnd->add_option("--max-body", params.max_body)->default_val(3);
    rnd->add_option("--p-epistemic", params.p_epistemic)->default_val(0.3);
    rnd->add_option("--p-neg", params.p_neg)->default_val(0.3);
    rnd->add_option("--seed", params.seed)->default_val(0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // keep the exit protocol: anything but clean help output is an error
        return app.exit(e) == 0 ? 0 : kExitError;
    }

    try {
        if (solve->parsed()) {
            auto algorithm = elps::algorithm_from_string(alg);
            if (!algorithm)
                throw std::runtime_error("unknown algorithm: " + alg);
            elps::RunConfig config;
            config.algorithm = *algorithm;
            if (!formula.empty())
                config.formula = formula;
            if (td == "min-degree")
                config.heuristic = elps::Heuristic::MinDegree;
            else if (td != "min-fill")
                throw std::runtime_error("unknown td heuristic: " + td);
            config.seed = seed;
            config.limits.max_atoms = budget_atoms;
            config.verbosity = verbosity;
            config.dump = &std::cerr;
            return run_solve(file, config, stats, dump_graph, graph_kind);
        }
        if (sch->parsed()) {
            std::cout << elps::generate_scholarship(students, gen_seed);
            return 0;
        }
        if (rnd->parsed()) {
            std::cout << elps::generate_random(params);
            return 0;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
