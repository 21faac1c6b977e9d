#include "elps/run.hpp"

#include <chrono>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "elps/formula.hpp"
#include "elps/graphs.hpp"
#include "elps/parser.hpp"

namespace elps {

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Brute: return "brute";
        case Algorithm::Eprim: return "eprim";
        case Algorithm::Prim: return "prim";
        case Algorithm::All: return "all";
    }
    return "?";
}

std::optional<Algorithm> algorithm_from_string(std::string_view s) {
    if (s == "brute")
        return Algorithm::Brute;
    if (s == "eprim")
        return Algorithm::Eprim;
    if (s == "prim")
        return Algorithm::Prim;
    if (s == "all")
        return Algorithm::All;
    return std::nullopt;
}

RunReport run(const RunConfig& config, std::string_view program_text) {
    if (config.formula && config.algorithm != Algorithm::Brute)
        throw std::invalid_argument("--formula requires the brute algorithm");

    auto start = std::chrono::steady_clock::now();
    Program p = parse_program(program_text);

    RunReport report;
    report.algorithm = to_string(config.algorithm);
    report.atoms = p.atom_table().size();
    report.rules = p.rules().size();
    report.epistemic_atoms = p.elit().size();
    report.tw_primal = decompose(primal_graph(p), config.heuristic, config.seed).width();
    report.tw_epistemic_primal =
        decompose(epistemic_primal_graph(p), config.heuristic, config.seed).width();
    report.tw_incidence = decompose(incidence_graph(p), config.heuristic, config.seed).width();

    bool want_brute = config.algorithm == Algorithm::Brute || config.algorithm == Algorithm::All;
    bool want_eprim = config.algorithm == Algorithm::Eprim || config.algorithm == Algorithm::All;
    bool want_prim = config.algorithm == Algorithm::Prim || config.algorithm == Algorithm::All;

    if (want_brute) {
        report.brute_answer = wv_exists(p, config.limits);
        if (config.formula) {
            Formula f = parse_formula(*config.formula, p.atom_table());
            report.formula_answer = evaluate_formula_problem(p, f, config.limits);
        }
    }
    if (want_eprim) {
        EprimConfig ec;
        ec.heuristic = config.heuristic;
        ec.seed = config.seed;
        ec.limits = config.limits;
        ec.max_table_rows = config.max_table_rows;
        EprimResult res = solve_eprim(p, ec);
        report.eprim_answer = res.exists;
        report.oracle_calls = res.stats.calls;
        report.max_table_rows = std::max(report.max_table_rows, res.max_table_rows);
        report.td_nodes = res.td_nodes;
        if (config.verbosity >= 2)
            report.per_node_calls = res.stats.per_node;
    }
    if (want_prim) {
        PrimConfig pc;
        pc.heuristic = config.heuristic;
        pc.seed = config.seed;
        pc.max_table_rows = config.max_table_rows;
        pc.table_dump = config.verbosity >= 3 ? config.dump : nullptr;
        PrimResult res = solve_prim(p, pc);
        report.prim_answer = res.exists;
        report.max_table_rows = std::max(report.max_table_rows, res.max_table_rows);
        report.td_nodes = res.td_nodes;
    }

    // headline answer: the brute-force result when available, otherwise the DP's
    report.wv_exists = report.brute_answer.value_or(
        report.prim_answer.value_or(report.eprim_answer.value_or(false)));
    for (const auto& answer : {report.brute_answer, report.eprim_answer, report.prim_answer})
        if (answer && *answer != report.wv_exists)
            report.agreement = false;

    auto end = std::chrono::steady_clock::now();
    report.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return report;
}

std::string stats_json(const RunReport& report) {
    nlohmann::ordered_json j;
    j["algorithm"] = report.algorithm;
    j["wv_exists"] = report.wv_exists;
    j["agreement"] = report.agreement;
    j["atoms"] = report.atoms;
    j["rules"] = report.rules;
    j["epistemic_atoms"] = report.epistemic_atoms;
    j["tw_primal"] = report.tw_primal;
    j["tw_epistemic_primal"] = report.tw_epistemic_primal;
    j["tw_incidence"] = report.tw_incidence;
    j["td_nodes"] = report.td_nodes;
    j["oracle_calls"] = report.oracle_calls;
    j["max_table_rows"] = report.max_table_rows;
    j["wall_time_ms"] = report.wall_time_ms;
    return j.dump(2) + "\n";
}

void emit_stats(const RunReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write stats file: " + path);
    out << stats_json(report);
}

}  // namespace elps
