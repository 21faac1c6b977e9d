#ifndef ELPS_TREE_DECOMPOSITION_HPP
#define ELPS_TREE_DECOMPOSITION_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "elps/graphs.hpp"

namespace elps {

enum class NodeType : std::uint8_t { Plain, Leaf, Intr, Rem, Join };

struct TdNode {
    std::vector<std::uint32_t> bag;  // sorted vertex ids of the decomposed graph
    int parent = -1;
    std::vector<int> children;
    NodeType type = NodeType::Plain;
    std::uint32_t special = 0;  // introduced/removed vertex for Intr/Rem
    int post_order = -1;
};

struct TreeDecomposition {
    std::vector<TdNode> nodes;
    int root = -1;

    int width() const;
    bool is_nice() const;
    /// Node indices in post order (children before parents).
    std::vector<int> post_order_traversal() const;
};

enum class Heuristic : std::uint8_t { MinFill, MinDegree };

/// Heuristic tree decomposition from an elimination ordering. Ties between
/// candidate vertices break toward the smallest id, which together with the
/// fixed heuristic makes the result reproducible; `seed` is carried through
/// run reports but does not perturb the ordering.
TreeDecomposition decompose(const Graph& g, Heuristic heuristic = Heuristic::MinFill,
                            std::uint64_t seed = 0);

/// Equivalent nice decomposition: empty root and leaf bags, single-vertex
/// intr/rem steps, binary joins. Width is preserved; post-order indices are
/// assigned.
TreeDecomposition make_nice(const TreeDecomposition& td);

struct TdDiagnostics {
    bool ok = false;
    int violated = 0;        // 1..3 = decomposition conditions, 4 = nice typing
    std::string detail;      // witness description
    int width = -1;

    explicit operator bool() const { return ok; }
};

/// Checks the three decomposition conditions (vertex coverage, edge
/// coverage, connected occurrence sets) and, for typed nodes, the nice-shape
/// constraints. Reports the first violation with a witness.
TdDiagnostics validate(const TreeDecomposition& td, const Graph& g);

/// Line-based exchange format: "s td <#nodes> <width+1> <#vertices>",
/// "b <node> <v...>" bag lines, then one "<u> <v>" line per tree edge
/// (all ids 1-based).
void write_td(std::ostream& out, const TreeDecomposition& td, std::size_t n_vertices);
TreeDecomposition read_td(std::istream& in);

}  // namespace elps

#endif
