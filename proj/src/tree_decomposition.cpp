#include "elps/tree_decomposition.hpp"

#include <algorithm>
#include <climits>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace elps {

int TreeDecomposition::width() const {
    std::size_t largest = 0;
    for (const TdNode& n : nodes)
        largest = std::max(largest, n.bag.size());
    return static_cast<int>(largest) - 1;
}

bool TreeDecomposition::is_nice() const {
    return std::all_of(nodes.begin(), nodes.end(),
                       [](const TdNode& n) { return n.type != NodeType::Plain; });
}

std::vector<int> TreeDecomposition::post_order_traversal() const {
    std::vector<int> order;
    order.reserve(nodes.size());
    // iterative post-order; children pushed in reverse keeps left-to-right order
    std::vector<std::pair<int, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [node, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            order.push_back(node);
            continue;
        }
        stack.emplace_back(node, true);
        const auto& kids = nodes[node].children;
        for (auto it = kids.rbegin(); it != kids.rend(); ++it)
            stack.emplace_back(*it, false);
    }
    return order;
}

TreeDecomposition decompose(const Graph& g, Heuristic heuristic, std::uint64_t /*seed*/) {
    std::size_t n = g.vertex_count;
    TreeDecomposition td;
    if (n == 0) {
        td.nodes.push_back(TdNode{});
        td.root = 0;
        return td;
    }

    std::vector<std::set<std::uint32_t>> adj(n);
    for (std::uint32_t v = 0; v < n; ++v)
        adj[v].insert(g.adj[v].begin(), g.adj[v].end());
    std::vector<char> gone(n, 0);
    std::vector<int> elim_pos(n, -1);
    std::vector<std::uint32_t> order;

    auto fill_count = [&](std::uint32_t v) {
        std::size_t fill = 0;
        for (auto i = adj[v].begin(); i != adj[v].end(); ++i)
            for (auto j = std::next(i); j != adj[v].end(); ++j)
                if (!adj[*i].count(*j))
                    ++fill;
        return fill;
    };

    std::vector<TdNode> nodes(n + 1);  // one bag per vertex + empty root
    int synthetic_root = static_cast<int>(n);

    for (std::size_t step = 0; step < n; ++step) {
        std::uint32_t best = 0;
        std::size_t best_score = SIZE_MAX;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (gone[v])
                continue;
            std::size_t score =
                heuristic == Heuristic::MinFill ? fill_count(v) : adj[v].size();
            if (score < best_score) {
                best_score = score;
                best = v;
            }
        }
        std::uint32_t v = best;
        nodes[v].bag.assign(adj[v].begin(), adj[v].end());
        nodes[v].bag.push_back(v);
        std::sort(nodes[v].bag.begin(), nodes[v].bag.end());
        // connect the neighborhood into a clique
        for (auto i = adj[v].begin(); i != adj[v].end(); ++i)
            for (auto j = std::next(i); j != adj[v].end(); ++j) {
                adj[*i].insert(*j);
                adj[*j].insert(*i);
            }
        for (std::uint32_t u : adj[v])
            adj[u].erase(v);
        gone[v] = 1;
        elim_pos[v] = static_cast<int>(step);
        order.push_back(v);
    }

    // attach each bag to the bag of its earliest-eliminated surviving neighbor
    for (std::uint32_t v = 0; v < n; ++v) {
        int best_pos = INT_MAX;
        std::uint32_t parent_vertex = 0;
        for (std::uint32_t u : nodes[v].bag) {
            if (u == v)
                continue;
            if (elim_pos[u] > elim_pos[v] && elim_pos[u] < best_pos) {
                best_pos = elim_pos[u];
                parent_vertex = u;
            }
        }
        int parent = (best_pos == INT_MAX) ? synthetic_root : static_cast<int>(parent_vertex);
        nodes[v].parent = parent;
        nodes[parent].children.push_back(static_cast<int>(v));
    }
    nodes[synthetic_root].parent = -1;

    td.nodes = std::move(nodes);
    td.root = synthetic_root;
    return td;
}

namespace {

class NiceBuilder {
  public:
    explicit NiceBuilder(const TreeDecomposition& td) : src_(td) {}

    TreeDecomposition build() {
        int top = transform(src_.root);
        // lift the old root's bag up to the empty root bag
        int root = chain_to(top, src_.nodes[src_.root].bag, {});
        if (out_.nodes[root].bag.empty() && out_.nodes[root].children.empty())
            out_.nodes[root].type = NodeType::Leaf;
        out_.root = root;
        finalize_links();
        assign_post_order();
        return std::move(out_);
    }

  private:
    int add_node(std::vector<std::uint32_t> bag, NodeType type, std::uint32_t special,
                 std::vector<int> children) {
        TdNode n;
        n.bag = std::move(bag);
        n.type = type;
        n.special = special;
        n.children = std::move(children);
        out_.nodes.push_back(std::move(n));
        return static_cast<int>(out_.nodes.size()) - 1;
    }

    // rem/intr chain transforming bag `from` into bag `to` on top of `below`
    int chain_to(int below, std::vector<std::uint32_t> from, const std::vector<std::uint32_t>& to) {
        int cur = below;
        for (std::uint32_t v : std::vector<std::uint32_t>(from)) {
            if (!std::binary_search(to.begin(), to.end(), v)) {
                std::vector<std::uint32_t> bag(from);
                bag.erase(std::remove(bag.begin(), bag.end(), v), bag.end());
                cur = add_node(bag, NodeType::Rem, v, {cur});
                from = std::move(bag);
            }
        }
        for (std::uint32_t v : to) {
            if (!std::binary_search(from.begin(), from.end(), v)) {
                std::vector<std::uint32_t> bag(from);
                bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
                cur = add_node(bag, NodeType::Intr, v, {cur});
                from = std::move(bag);
            }
        }
        return cur;
    }

    // leaf-to-bag intr chain
    int build_up(const std::vector<std::uint32_t>& bag) {
        int cur = add_node({}, NodeType::Leaf, 0, {});
        std::vector<std::uint32_t> cur_bag;
        for (std::uint32_t v : bag) {
            cur_bag.insert(std::lower_bound(cur_bag.begin(), cur_bag.end(), v), v);
            cur = add_node(cur_bag, NodeType::Intr, v, {cur});
        }
        return cur;
    }

    // returns a nice node whose bag equals the source node's bag
    int transform(int src_node) {
        const TdNode& n = src_.nodes[src_node];
        if (n.children.empty())
            return build_up(n.bag);
        std::vector<int> lifted;
        lifted.reserve(n.children.size());
        for (int c : n.children)
            lifted.push_back(chain_to(transform(c), src_.nodes[c].bag, n.bag));
        int cur = lifted[0];
        for (std::size_t i = 1; i < lifted.size(); ++i)
            cur = add_node(n.bag, NodeType::Join, 0, {cur, lifted[i]});
        return cur;
    }

    void finalize_links() {
        for (int i = 0; i < static_cast<int>(out_.nodes.size()); ++i)
            for (int c : out_.nodes[i].children)
                out_.nodes[c].parent = i;
    }

    void assign_post_order() {
        std::vector<int> order = out_.post_order_traversal_for(out_.root);
        for (std::size_t i = 0; i < order.size(); ++i)
            out_.nodes[order[i]].post_order = static_cast<int>(i);
    }

    struct Out : TreeDecomposition {
        std::vector<int> post_order_traversal_for(int r) {
            root = r;
            return post_order_traversal();
        }
    };

    const TreeDecomposition& src_;
    Out out_;
};

}  // namespace

TreeDecomposition make_nice(const TreeDecomposition& td) {
    if (td.root < 0)
        throw std::invalid_argument("make_nice: decomposition has no root");
    return NiceBuilder(td).build();
}

TdDiagnostics validate(const TreeDecomposition& td, const Graph& g) {
    TdDiagnostics diag;
    if (td.root < 0 || td.nodes.empty()) {
        diag.violated = 1;
        diag.detail = "decomposition has no nodes";
        return diag;
    }
    std::size_t n = g.vertex_count;
    // (i) every vertex in some bag
    std::vector<char> covered(n, 0);
    for (const TdNode& node : td.nodes)
        for (std::uint32_t v : node.bag)
            covered.at(v) = 1;
    for (std::uint32_t v = 0; v < n; ++v)
        if (!covered[v]) {
            diag.violated = 1;
            diag.detail = "vertex " + std::to_string(v) + " occurs in no bag";
            return diag;
        }
    // (ii) every edge inside some bag
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v : g.adj[u]) {
            if (v < u)
                continue;
            bool ok = std::any_of(td.nodes.begin(), td.nodes.end(), [&](const TdNode& node) {
                return std::binary_search(node.bag.begin(), node.bag.end(), u) &&
                       std::binary_search(node.bag.begin(), node.bag.end(), v);
            });
            if (!ok) {
                diag.violated = 2;
                diag.detail =
                    "edge {" + std::to_string(u) + "," + std::to_string(v) + "} covered by no bag";
                return diag;
            }
        }
    // (iii) occurrence sets connected
    for (std::uint32_t v = 0; v < n; ++v) {
        std::vector<int> holding;
        for (int i = 0; i < static_cast<int>(td.nodes.size()); ++i)
            if (std::binary_search(td.nodes[i].bag.begin(), td.nodes[i].bag.end(), v))
                holding.push_back(i);
        if (holding.empty())
            continue;
        std::set<int> member(holding.begin(), holding.end());
        std::set<int> reached;
        std::queue<int> queue;
        queue.push(holding[0]);
        reached.insert(holding[0]);
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop();
            std::vector<int> nbrs = td.nodes[cur].children;
            if (td.nodes[cur].parent >= 0)
                nbrs.push_back(td.nodes[cur].parent);
            for (int nb : nbrs)
                if (member.count(nb) && !reached.count(nb)) {
                    reached.insert(nb);
                    queue.push(nb);
                }
        }
        if (reached.size() != member.size()) {
            diag.violated = 3;
            diag.detail = "occurrence set of vertex " + std::to_string(v) + " is disconnected";
            return diag;
        }
    }
    // nice-shape checks for typed nodes
    for (int i = 0; i < static_cast<int>(td.nodes.size()); ++i) {
        const TdNode& node = td.nodes[i];
        std::string where = "node " + std::to_string(i);
        switch (node.type) {
            case NodeType::Plain: break;
            case NodeType::Leaf:
                if (!node.children.empty() || !node.bag.empty()) {
                    diag.violated = 4;
                    diag.detail = where + ": malformed leaf";
                    return diag;
                }
                break;
            case NodeType::Intr:
            case NodeType::Rem: {
                if (node.children.size() != 1) {
                    diag.violated = 4;
                    diag.detail = where + ": intr/rem node must have one child";
                    return diag;
                }
                const auto& child = td.nodes[node.children[0]].bag;
                std::vector<std::uint32_t> expected = child;
                if (node.type == NodeType::Intr) {
                    expected.insert(
                        std::lower_bound(expected.begin(), expected.end(), node.special),
                        node.special);
                } else {
                    expected.erase(std::remove(expected.begin(), expected.end(), node.special),
                                   expected.end());
                    if (expected.size() == child.size()) {
                        diag.violated = 4;
                        diag.detail = where + ": removed vertex not in child bag";
                        return diag;
                    }
                }
                if (expected != node.bag) {
                    diag.violated = 4;
                    diag.detail = where + ": bag does not match single-vertex change";
                    return diag;
                }
                break;
            }
            case NodeType::Join:
                if (node.children.size() != 2 || td.nodes[node.children[0]].bag != node.bag ||
                    td.nodes[node.children[1]].bag != node.bag) {
                    diag.violated = 4;
                    diag.detail = where + ": join children must repeat the bag";
                    return diag;
                }
                break;
        }
    }
    diag.ok = true;
    diag.width = td.width();
    return diag;
}

void write_td(std::ostream& out, const TreeDecomposition& td, std::size_t n_vertices) {
    out << "s td " << td.nodes.size() << " " << (td.width() + 1) << " " << n_vertices << "\n";
    for (std::size_t i = 0; i < td.nodes.size(); ++i) {
        out << "b " << (i + 1);
        for (std::uint32_t v : td.nodes[i].bag)
            out << " " << (v + 1);
        out << "\n";
    }
    for (std::size_t i = 0; i < td.nodes.size(); ++i)
        if (td.nodes[i].parent >= 0)
            out << (td.nodes[i].parent + 1) << " " << (i + 1) << "\n";
}

TreeDecomposition read_td(std::istream& in) {
    TreeDecomposition td;
    std::string line;
    std::size_t n_nodes = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        if (line[0] == 's') {
            std::string s, t;
            std::size_t width_plus_1 = 0, n_vertices = 0;
            ls >> s >> t >> n_nodes >> width_plus_1 >> n_vertices;
            td.nodes.assign(n_nodes, TdNode{});
        } else if (line[0] == 'b') {
            char b;
            std::size_t idx;
            ls >> b >> idx;
            std::uint32_t v;
            while (ls >> v)
                td.nodes.at(idx - 1).bag.push_back(v - 1);
            std::sort(td.nodes[idx - 1].bag.begin(), td.nodes[idx - 1].bag.end());
        } else {
            int u, v;
            if (ls >> u >> v)
                edges.emplace_back(u - 1, v - 1);
        }
    }
    for (auto [u, v] : edges) {
        td.nodes.at(v).parent = u;
        td.nodes.at(u).children.push_back(v);
    }
    for (int i = 0; i < static_cast<int>(td.nodes.size()); ++i)
        if (td.nodes[i].parent == -1)
            td.root = i;
    return td;
}

}  // namespace elps
