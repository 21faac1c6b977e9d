#include "elps/dp_eprim.hpp"

#include <algorithm>
#include <numeric>

namespace elps {

namespace {

std::size_t position_of(const AtomSet& sorted, AtomId a) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), a);
    if (it == sorted.end() || *it != a)
        throw std::logic_error("atom not present in bag");
    return static_cast<std::size_t>(it - sorted.begin());
}

// connected components of the primal graph, restricted to atoms that occur
// in rules; represented as one rule list + elit set per component
struct RuleGroup {
    std::vector<std::size_t> rules;
    AtomSet elit;
};

std::vector<RuleGroup> rule_groups(const Program& p) {
    std::vector<AtomId> uf(p.atom_table().size());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](AtomId a) {
        while (uf[a] != a)
            a = uf[a] = uf[uf[a]];
        return a;
    };
    for (const Rule& r : p.rules())
        for (std::size_t i = 1; i < r.atoms().size(); ++i) {
            AtomId ra = find(r.atoms()[0]), rb = find(r.atoms()[i]);
            if (ra != rb)
                uf[std::max(ra, rb)] = std::min(ra, rb);
        }
    std::vector<int> group_of(p.atom_table().size(), -1);
    std::vector<RuleGroup> groups;
    for (std::size_t ri = 0; ri < p.rules().size(); ++ri) {
        const AtomSet& at = p.rules()[ri].atoms();
        if (at.empty())
            throw std::invalid_argument("rule without atoms cannot be assigned");
        AtomId root = find(at[0]);
        if (group_of[root] < 0) {
            group_of[root] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[group_of[root]].rules.push_back(ri);
    }
    for (RuleGroup& g : groups) {
        for (std::size_t ri : g.rules)
            g.elit.insert(g.elit.end(), p.rules()[ri].elit().begin(), p.rules()[ri].elit().end());
        sort_unique(g.elit);
    }
    return groups;
}

AtomSet bag_atoms(const TdNode& node, const Graph& g) {
    AtomSet out;
    out.reserve(node.bag.size());
    for (std::uint32_t v : node.bag)
        out.push_back(g.label[v]);
    sort_unique(out);
    return out;
}

}  // namespace

BagAssignment assign_bag_rules(const Program& p, const TreeDecomposition& td, const Graph& ep) {
    std::vector<AtomSet> bags(td.nodes.size());
    for (std::size_t i = 0; i < td.nodes.size(); ++i)
        bags[i] = bag_atoms(td.nodes[i], ep);

    std::vector<char> subset_maximal(td.nodes.size(), 1);
    for (std::size_t i = 0; i < td.nodes.size(); ++i)
        for (std::size_t j = 0; j < td.nodes.size(); ++j)
            if (i != j && bags[i] != bags[j] && sorted_subset(bags[i], bags[j])) {
                subset_maximal[i] = 0;
                break;
            }

    BagAssignment out;
    out.rules_per_node.assign(td.nodes.size(), {});
    out.bag_programs.assign(td.nodes.size(), std::nullopt);

    for (const RuleGroup& group : rule_groups(p)) {
        int best = -1;
        for (std::size_t i = 0; i < td.nodes.size(); ++i) {
            if (td.nodes[i].type != NodeType::Intr || !subset_maximal[i])
                continue;
            if (!sorted_subset(group.elit, bags[i]))
                continue;
            if (best < 0 || td.nodes[i].post_order < td.nodes[best].post_order)
                best = static_cast<int>(i);
        }
        if (best < 0)
            throw std::runtime_error(
                "assign_bag_rules: no compatible intr node for a rule group (invalid TD)");
        auto& slot = out.rules_per_node[best];
        slot.insert(slot.end(), group.rules.begin(), group.rules.end());
    }
    for (std::size_t i = 0; i < td.nodes.size(); ++i) {
        if (out.rules_per_node[i].empty())
            continue;
        std::sort(out.rules_per_node[i].begin(), out.rules_per_node[i].end());
        out.bag_programs[i] = p.subprogram(out.rules_per_node[i]);
    }
    return out;
}

bool check_row(const AtomSet& bag, const EprimRow& row, const Program& bag_program,
               AspOracle& oracle) {
    if (bag_program.rules().empty())
        return true;  // nothing to evaluate, zero calls
    Cwi scratch(bag_program.atom_table().size(), Truth::Unset);
    for (std::size_t i = 0; i < bag.size(); ++i)
        scratch.set(bag[i], row.status[i]);
    PlainProgram q = epistemic_reduct(bag_program, scratch);

    std::uint32_t calls = 0;
    auto query = [&](const AtomSet& ft, const AtomSet& ff) {
        ++calls;
        return oracle.has_answer_set(q, ft, ff);
    };
    auto finish = [&](bool verdict) {
        oracle.stats().record_row(calls, bag.size());
        return verdict;
    };

    if (!query({}, {}))
        return finish(false);
    AtomSet checked = sorted_intersection(bag, bag_program.universe());
    for (AtomId a : checked)  // always-true atoms: no answer set may avoid them
        if (scratch.value(a) == Truth::True && query({a}, {}))
            return finish(false);
    for (AtomId a : checked)  // always-false atoms: no answer set may contain them
        if (scratch.value(a) == Truth::False && query({}, {a}))
            return finish(false);
    for (AtomId a : checked)  // unknown atoms: must occur both ways
        if (scratch.value(a) == Truth::Unknown && (!query({a}, {}) || !query({}, {a})))
            return finish(false);
    return finish(true);
}

EprimTable eprim_node(const EprimNodeInput& in, AspOracle& oracle) {
    switch (in.type) {
        case NodeType::Leaf:
            return {EprimRow{}};
        case NodeType::Intr: {
            std::size_t pos = position_of(in.bag, in.special);
            EprimTable out;
            static constexpr Truth kStatuses[3] = {Truth::True, Truth::False, Truth::Unknown};
            for (const EprimRow& child : *in.children.at(0)) {
                for (Truth t : kStatuses) {
                    EprimRow ext = child;
                    ext.status.insert(ext.status.begin() + static_cast<long>(pos), t);
                    if (!in.bag_program || check_row(in.bag, ext, *in.bag_program, oracle))
                        out.push_back(std::move(ext));
                }
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }
        case NodeType::Rem: {
            // the removed atom's position in the child bag
            auto it = std::lower_bound(in.bag.begin(), in.bag.end(), in.special);
            std::size_t pos = static_cast<std::size_t>(it - in.bag.begin());
            EprimTable out;
            for (const EprimRow& child : *in.children.at(0)) {
                EprimRow projected = child;
                projected.status.erase(projected.status.begin() + static_cast<long>(pos));
                out.push_back(std::move(projected));
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }
        case NodeType::Join: {
            const EprimTable& left = *in.children.at(0);
            const EprimTable& right = *in.children.at(1);
            EprimTable out;
            std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                                  std::back_inserter(out));
            return out;
        }
        case NodeType::Plain: break;
    }
    throw std::invalid_argument("eprim_node: node is not nice");
}

EprimResult solve_eprim(const Program& p, const EprimConfig& cfg) {
    EprimResult result;
    // a rule with empty head and body is unsatisfiable outright
    for (const Rule& r : p.rules())
        if (r.atoms().empty())
            return result;

    AspOracle oracle(cfg.limits);
    if (p.elit().empty()) {
        // empty epistemic primal graph: one existence call decides, the
        // statuses of all atoms are then forced by the answer-set family
        Cwi none(p.atom_table().size(), Truth::Unset);
        result.exists = oracle.has_answer_set(epistemic_reduct(p, none));
        result.stats = oracle.stats();
        result.td_nodes = 0;
        return result;
    }

    Graph ep = epistemic_primal_graph(p);
    // host every rule group: clique over the group's epistemic atoms
    for (const RuleGroup& group : rule_groups(p)) {
        for (std::size_t i = 0; i < group.elit.size(); ++i)
            for (std::size_t j = i + 1; j < group.elit.size(); ++j)
                ep.add_edge(static_cast<std::uint32_t>(position_of(p.elit(), group.elit[i])),
                            static_cast<std::uint32_t>(position_of(p.elit(), group.elit[j])));
    }
    ep.finish();

    TreeDecomposition td = make_nice(decompose(ep, cfg.heuristic, cfg.seed));
    BagAssignment assignment = assign_bag_rules(p, td, ep);

    std::vector<EprimTable> tables(td.nodes.size());
    for (int node : td.post_order_traversal()) {
        const TdNode& n = td.nodes[node];
        oracle.stats().set_node(n.post_order);
        EprimNodeInput in;
        in.type = n.type;
        in.bag = bag_atoms(n, ep);
        in.special = (n.type == NodeType::Intr || n.type == NodeType::Rem) ? ep.label[n.special] : 0;
        for (int c : n.children)
            in.children.push_back(&tables[c]);
        in.bag_program =
            assignment.bag_programs[node] ? &*assignment.bag_programs[node] : nullptr;
        tables[node] = eprim_node(in, oracle);
        result.max_table_rows = std::max(result.max_table_rows, tables[node].size());
        if (tables[node].size() > cfg.max_table_rows)
            throw BudgetError("eprim: table exceeds the row budget");
        for (int c : n.children)
            tables[c].clear();
    }
    result.exists = !tables[td.root].empty();
    result.stats = oracle.stats();
    result.td_width = td.width();
    result.td_nodes = static_cast<int>(td.nodes.size());
    return result;
}

}  // namespace elps
