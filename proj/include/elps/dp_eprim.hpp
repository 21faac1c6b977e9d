#ifndef ELPS_DP_EPRIM_HPP
#define ELPS_DP_EPRIM_HPP

#include <compare>
#include <optional>

#include "elps/oracle.hpp"
#include "elps/program.hpp"
#include "elps/tree_decomposition.hpp"

namespace elps {

/// Row of an EPRIM table: the P/N/U status of each bag atom, aligned with
/// the node's sorted bag.
struct EprimRow {
    std::vector<Truth> status;

    auto operator<=>(const EprimRow&) const = default;
};

using EprimTable = std::vector<EprimRow>;  // sorted, duplicate-free

/// Rules grouped per TD node. Every rule lands in exactly one node; each
/// node's induced bag program covers whole atom-connected rule groups, so
/// bag programs of distinct nodes never share an atom and the per-node
/// compatibility checks compose to the global one.
struct BagAssignment {
    std::vector<std::vector<std::size_t>> rules_per_node;
    std::vector<std::optional<Program>> bag_programs;  // built for nodes with rules
};

/// Assigns every rule to the post-order-minimal intr node whose
/// subset-maximal bag covers the epistemic atoms of the rule's
/// atom-connected group. Throws when some group has no hosting node
/// (signals a decomposition of the wrong graph).
BagAssignment assign_bag_rules(const Program& p, const TreeDecomposition& td, const Graph& ep);

/// Compatibility check of one row against the node's bag program via
/// constrained answer-set queries: one existence call, then per bag atom of
/// the program one call (P/N) or two (U), short-circuiting on the first
/// failure. Never more than 2 + 2·|bag| calls; recorded in the oracle stats.
bool check_row(const AtomSet& bag, const EprimRow& row, const Program& bag_program,
               AspOracle& oracle);

struct EprimNodeInput {
    NodeType type = NodeType::Leaf;
    AtomSet bag;                              // atom ids, sorted
    AtomId special = 0;                       // introduced/removed atom
    std::vector<const EprimTable*> children;  // child tables in order
    const Program* bag_program = nullptr;     // nullptr when no rules assigned
};

/// One bag-algorithm step: leaf seeds the empty row, intr branches each row
/// three ways and filters against the bag program, rem projects, join
/// intersects.
EprimTable eprim_node(const EprimNodeInput& in, AspOracle& oracle);

struct EprimConfig {
    Heuristic heuristic = Heuristic::MinFill;
    std::uint64_t seed = 0;
    OracleLimits limits{};
    std::size_t max_table_rows = 1u << 22;
};

struct EprimResult {
    bool exists = false;
    OracleStats stats;
    int td_width = -1;  // width of the decomposition the DP ran on
    int td_nodes = 0;
    std::size_t max_table_rows = 0;
};

/// World-view existence via dynamic programming over a nice TD of the
/// epistemic primal graph (augmented so every rule group has a hosting bag).
/// Degenerate case: no epistemic literals at all collapses to a single
/// answer-set existence call.
EprimResult solve_eprim(const Program& p, const EprimConfig& cfg = {});

}  // namespace elps

#endif
