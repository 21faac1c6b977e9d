#include "elps/graphs.hpp"

#include <algorithm>
#include <ostream>
#include <queue>

namespace elps {

void Graph::init(std::size_t n) {
    vertex_count = n;
    adj.assign(n, {});
    label.resize(n);
    for (std::uint32_t v = 0; v < n; ++v)
        label[v] = v;
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u == v)
        return;
    adj[u].push_back(v);
    adj[v].push_back(u);
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adj)
        twice += nbrs.size();
    return twice / 2;
}

void Graph::finish() {
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
}

namespace {

// position of atom a within the sorted universe
std::uint32_t universe_index(const AtomSet& universe, AtomId a) {
    auto it = std::lower_bound(universe.begin(), universe.end(), a);
    return static_cast<std::uint32_t>(it - universe.begin());
}

}  // namespace

Graph primal_graph(const Program& p) {
    const AtomSet& universe = p.universe();
    Graph g;
    g.init(universe.size());
    for (std::uint32_t v = 0; v < universe.size(); ++v)
        g.label[v] = universe[v];
    for (const Rule& r : p.rules()) {
        const AtomSet& at = r.atoms();
        for (std::size_t i = 0; i < at.size(); ++i)
            for (std::size_t j = i + 1; j < at.size(); ++j)
                g.add_edge(universe_index(universe, at[i]), universe_index(universe, at[j]));
    }
    g.finish();
    return g;
}

AtomSet conn(const Program& p, const AtomSet& x) {
    for (AtomId a : x)
        if (!sorted_contains(p.elit(), a))
            throw ScopeError("conn: atom " + p.atom_name(a) + " is not epistemic");
    Graph primal = primal_graph(p);
    const AtomSet& universe = p.universe();
    std::vector<char> seen(universe.size(), 0);
    std::queue<std::uint32_t> queue;
    AtomSet out = x;
    for (AtomId a : x) {
        std::uint32_t v = universe_index(universe, a);
        if (!seen[v]) {
            seen[v] = 1;
            queue.push(v);
        }
    }
    // BFS that only walks through non-epistemic vertices; epistemic atoms
    // other than the sources block every path.
    while (!queue.empty()) {
        std::uint32_t v = queue.front();
        queue.pop();
        for (std::uint32_t w : primal.adj[v]) {
            if (seen[w] || sorted_contains(p.elit(), universe[w]))
                continue;
            seen[w] = 1;
            out.push_back(universe[w]);
            queue.push(w);
        }
    }
    sort_unique(out);
    return out;
}

Graph epistemic_primal_graph(const Program& p) {
    const AtomSet& elit = p.elit();
    const AtomSet& universe = p.universe();
    Graph primal = primal_graph(p);
    Graph g;
    g.init(elit.size());
    for (std::uint32_t v = 0; v < elit.size(); ++v)
        g.label[v] = elit[v];
    // from each epistemic atom, flood through non-epistemic vertices and
    // connect to every epistemic atom adjacent to the flooded region
    for (std::uint32_t src = 0; src < elit.size(); ++src) {
        std::vector<char> seen(universe.size(), 0);
        std::queue<std::uint32_t> queue;
        std::uint32_t start = universe_index(universe, elit[src]);
        seen[start] = 1;
        queue.push(start);
        while (!queue.empty()) {
            std::uint32_t v = queue.front();
            queue.pop();
            for (std::uint32_t w : primal.adj[v]) {
                if (seen[w])
                    continue;
                seen[w] = 1;
                AtomId atom = universe[w];
                if (sorted_contains(elit, atom)) {
                    std::uint32_t dst = universe_index(elit, atom);
                    if (dst > src)
                        g.add_edge(src, dst);
                } else {
                    queue.push(w);
                }
            }
        }
    }
    g.finish();
    return g;
}

Graph incidence_graph(const Program& p) {
    const AtomSet& universe = p.universe();
    std::size_t n_atoms = universe.size();
    Graph g;
    g.init(n_atoms + p.rules().size());
    for (std::uint32_t v = 0; v < n_atoms; ++v)
        g.label[v] = universe[v];
    for (std::uint32_t r = 0; r < p.rules().size(); ++r) {
        g.label[n_atoms + r] = static_cast<std::uint32_t>(n_atoms + r);
        for (AtomId a : p.rules()[r].atoms())
            g.add_edge(universe_index(universe, a), static_cast<std::uint32_t>(n_atoms + r));
    }
    g.finish();
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p tw " << g.vertex_count << " " << g.edge_count() << "\n";
    for (std::uint32_t v = 0; v < g.vertex_count; ++v)
        for (std::uint32_t w : g.adj[v])
            if (v < w)
                out << (v + 1) << " " << (w + 1) << "\n";
}

}  // namespace elps
