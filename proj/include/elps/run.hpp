#ifndef ELPS_RUN_HPP
#define ELPS_RUN_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "elps/dp_eprim.hpp"
#include "elps/dp_prim.hpp"
#include "elps/oracle.hpp"

namespace elps {

enum class Algorithm : std::uint8_t { Brute, Eprim, Prim, All };

std::string to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_string(std::string_view s);

struct RunConfig {
    Algorithm algorithm = Algorithm::All;
    std::optional<std::string> formula;  // brute only
    Heuristic heuristic = Heuristic::MinFill;
    std::uint64_t seed = 0;
    OracleLimits limits{};
    std::size_t max_table_rows = 1u << 20;
    int verbosity = 0;
    std::ostream* dump = nullptr;  // receives table dumps at verbosity >= 3
};

struct RunReport {
    std::string algorithm;
    bool wv_exists = false;
    bool agreement = true;
    std::optional<bool> brute_answer;
    std::optional<bool> eprim_answer;
    std::optional<bool> prim_answer;
    std::optional<bool> formula_answer;
    std::size_t atoms = 0;
    std::size_t rules = 0;
    std::size_t epistemic_atoms = 0;
    int tw_primal = -1;
    int tw_epistemic_primal = -1;
    int tw_incidence = -1;
    int td_nodes = 0;
    std::uint64_t oracle_calls = 0;
    std::size_t max_table_rows = 0;
    std::int64_t wall_time_ms = 0;
    std::vector<std::pair<int, std::uint64_t>> per_node_calls;  // verbosity >= 2
};

/// Parses and solves with the selected algorithm(s). With Algorithm::All the
/// three answers are all recorded and compared; `agreement` goes false on any
/// mismatch (the caller decides how loudly to fail).
RunReport run(const RunConfig& config, std::string_view program_text);

/// Fixed-key JSON for the report. Everything except wall_time_ms is
/// bit-stable for fixed inputs and seeds.
std::string stats_json(const RunReport& report);
void emit_stats(const RunReport& report, const std::string& path);

}  // namespace elps

#endif
