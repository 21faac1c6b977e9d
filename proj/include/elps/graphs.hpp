#ifndef ELPS_GRAPHS_HPP
#define ELPS_GRAPHS_HPP

#include <iosfwd>
#include <vector>

#include "elps/program.hpp"

namespace elps {

/// Simple undirected graph without self-loops. Vertices are dense indices;
/// `label[v]` maps a vertex back to the domain object it stands for (an atom
/// id, or atom-count + rule index for incidence graphs). Neighbor lists are
/// kept sorted for deterministic iteration.
struct Graph {
    std::size_t vertex_count = 0;
    std::vector<std::vector<std::uint32_t>> adj;
    std::vector<std::uint32_t> label;

    void init(std::size_t n);
    void add_edge(std::uint32_t u, std::uint32_t v);
    bool has_edge(std::uint32_t u, std::uint32_t v) const;
    std::size_t edge_count() const;
    void finish();  // sort + dedup neighbor lists
};

/// Atoms as vertices; an edge joins two atoms that occur together in a rule.
Graph primal_graph(const Program& p);

/// Atoms non-epistemically reachable from `x`: members of `x` plus every
/// non-epistemic atom connected to one of them through non-epistemic
/// vertices. `x` must contain epistemic atoms only.
AtomSet conn(const Program& p, const AtomSet& x);

/// Vertices are the atoms of epistemic literals; an edge joins two of them
/// when they are connected in the primal graph through a path whose interior
/// vertices are all non-epistemic.
Graph epistemic_primal_graph(const Program& p);

/// Bipartite atom-rule occurrence graph. Atom vertices come first (label =
/// atom id), then one vertex per rule (label = |universe| + rule index).
Graph incidence_graph(const Program& p);

/// Edge-list dump: header "p tw <|V|> <|E|>", one "v u" line per edge
/// (1-based), consumable by external decomposition tools.
void write_graph(std::ostream& out, const Graph& g);

}  // namespace elps

#endif
