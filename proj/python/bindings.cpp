#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "elps/formula.hpp"
#include "elps/generators.hpp"
#include "elps/parser.hpp"
#include "elps/run.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> names(const elps::Program& p, const elps::AtomSet& set) {
    std::vector<std::string> out;
    out.reserve(set.size());
    for (elps::AtomId a : set)
        out.push_back(p.atom_name(a));
    return out;
}

py::dict view_to_dict(const elps::Program& p, const elps::Cwi& w) {
    py::dict d;
    d["p"] = names(p, w.p_atoms());
    d["n"] = names(p, w.n_atoms());
    d["u"] = names(p, w.u_atoms());
    return d;
}

py::dict report_to_dict(const elps::RunReport& r) {
    py::dict d;
    d["algorithm"] = r.algorithm;
    d["wv_exists"] = r.wv_exists;
    d["agreement"] = r.agreement;
    d["atoms"] = r.atoms;
    d["rules"] = r.rules;
    d["epistemic_atoms"] = r.epistemic_atoms;
    d["tw_primal"] = r.tw_primal;
    d["tw_epistemic_primal"] = r.tw_epistemic_primal;
    d["tw_incidence"] = r.tw_incidence;
    d["td_nodes"] = r.td_nodes;
    d["oracle_calls"] = r.oracle_calls;
    d["max_table_rows"] = r.max_table_rows;
    d["wall_time_ms"] = r.wall_time_ms;
    if (r.formula_answer)
        d["formula"] = *r.formula_answer;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Epistemic logic program solving: world views by brute force or "
              "treewidth-based dynamic programming";

    py::class_<elps::Program>(m, "Program")
        .def_property_readonly("num_atoms",
                               [](const elps::Program& p) { return p.atom_table().size(); })
        .def_property_readonly("num_rules",
                               [](const elps::Program& p) { return p.rules().size(); })
        .def_property_readonly("atoms",
                               [](const elps::Program& p) { return names(p, p.universe()); })
        .def_property_readonly("epistemic_atoms",
                               [](const elps::Program& p) { return names(p, p.elit()); })
        .def("__repr__", [](const elps::Program& p) {
            return "<Program atoms=" + std::to_string(p.atom_table().size()) +
                   " rules=" + std::to_string(p.rules().size()) + ">";
        });

    m.def("parse", &elps::parse_program, py::arg("text"), "Parse program text.");

    m.def(
        "wv_exists",
        [](const std::string& text) { return elps::wv_exists(elps::parse_program(text)); },
        py::arg("text"), "Brute-force world-view existence.");

    m.def(
        "world_views",
        [](const std::string& text) {
            elps::Program p = elps::parse_program(text);
            py::list out;
            for (const elps::Cwi& w : elps::world_views(p))
                out.append(view_to_dict(p, w));
            return out;
        },
        py::arg("text"), "All world views, each as {'p': [...], 'n': [...], 'u': [...]}.");

    m.def(
        "evaluate_formula",
        [](const std::string& text, const std::string& formula) {
            elps::Program p = elps::parse_program(text);
            elps::Formula f = elps::parse_formula(formula, p.atom_table());
            return elps::evaluate_formula_problem(p, f);
        },
        py::arg("text"), py::arg("formula"),
        "True iff some world view cautiously entails the formula.");

    m.def(
        "solve",
        [](const std::string& text, const std::string& algorithm, const std::string& heuristic,
           std::uint64_t seed, std::size_t budget_atoms) {
            auto alg = elps::algorithm_from_string(algorithm);
            if (!alg)
                throw std::invalid_argument("unknown algorithm: " + algorithm);
            elps::RunConfig config;
            config.algorithm = *alg;
            config.heuristic =
                heuristic == "min-degree" ? elps::Heuristic::MinDegree : elps::Heuristic::MinFill;
            config.seed = seed;
            config.limits.max_atoms = budget_atoms;
            return report_to_dict(elps::run(config, text));
        },
        py::arg("text"), py::arg("algorithm") = "all", py::arg("heuristic") = "min-fill",
        py::arg("seed") = 0, py::arg("budget_atoms") = 20,
        "Run the selected algorithm(s) and return the stats report as a dict.");

    m.def("generate_scholarship", &elps::generate_scholarship, py::arg("n"), py::arg("seed") = 0);

    m.def(
        "generate_random",
        [](std::size_t atoms, std::size_t rules, std::size_t max_head, std::size_t max_body,
           double p_epistemic, double p_neg, std::uint64_t seed) {
            elps::RandomProgramParams params{atoms, rules, max_head, max_body,
                                             p_epistemic, p_neg, seed};
            return elps::generate_random(params);
        },
        py::arg("atoms") = 4, py::arg("rules") = 4, py::arg("max_head") = 2,
        py::arg("max_body") = 3, py::arg("p_epistemic") = 0.3, py::arg("p_neg") = 0.3,
        py::arg("seed") = 0);
}
