#include "elps/dp_prim.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "elps/graphs.hpp"
#include "elps/reducts.hpp"

namespace elps {

namespace {

std::size_t position_of(const AtomSet& sorted, AtomId a) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), a);
    if (it == sorted.end() || *it != a)
        throw std::logic_error("atom not present in bag");
    return static_cast<std::size_t>(it - sorted.begin());
}

BagMask insert_bit(BagMask m, std::size_t pos) {
    BagMask low = m & ((BagMask(1) << pos) - 1);
    BagMask high = (m >> pos) << (pos + 1);
    return low | high;
}

BagMask remove_bit(BagMask m, std::size_t pos) {
    BagMask low = m & ((BagMask(1) << pos) - 1);
    BagMask high = (m >> (pos + 1)) << pos;
    return low | high;
}

void sort_unique_masks(std::vector<BagMask>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_unique_tuples(TupleSet& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_unique_rows(PrimTable& t) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
}

AtomSet bag_elit(const AtomSet& bag, const AtomSet& elit) {
    return sorted_intersection(bag, elit);
}

// keeps, per witness, only the tuples whose counter sets are ⊆-minimal:
// their counters are filtered identically and empty out no later, so they
// prove whenever a dropped sibling would
TupleSet minimal_per_witness(TupleSet tuples) {
    sort_unique_tuples(tuples);
    TupleSet out;
    for (const AnswerSetTuple& t : tuples) {
        bool dominated = false;
        for (const AnswerSetTuple& other : tuples) {
            if (other.witness != t.witness || other.counters == t.counters)
                continue;
            if (std::includes(t.counters.begin(), t.counters.end(), other.counters.begin(),
                              other.counters.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            out.push_back(t);
    }
    return out;
}

// true when discharging slot `a` forces slot `b` to discharge too: every
// alternative of `a` has a witness-equal alternative in `b` whose counters
// are no larger
bool slot_implies(const SurvivalSlot& a, const SurvivalSlot& b) {
    for (const AnswerSetTuple& ta : a) {
        bool matched = false;
        for (const AnswerSetTuple& tb : b)
            if (tb.witness == ta.witness &&
                std::includes(ta.counters.begin(), ta.counters.end(), tb.counters.begin(),
                              tb.counters.end())) {
                matched = true;
                break;
            }
        if (!matched)
            return false;
    }
    return true;
}

// alternatives reduced to their minimal antichains, implied slots dropped,
// deterministic order; false when a slot ran out of alternatives
bool normalize_slots(std::vector<SurvivalSlot>& slots) {
    for (SurvivalSlot& slot : slots) {
        slot = minimal_per_witness(std::move(slot));
        if (slot.empty())
            return false;
    }
    std::sort(slots.begin(), slots.end());
    slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
    std::vector<char> drop(slots.size(), 0);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (drop[i])
            continue;
        for (std::size_t j = 0; j < slots.size(); ++j)
            if (i != j && !drop[j] && slot_implies(slots[i], slots[j]))
                drop[j] = 1;
    }
    std::vector<SurvivalSlot> kept;
    kept.reserve(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (!drop[i])
            kept.push_back(std::move(slots[i]));
    slots = std::move(kept);
    return true;
}

}  // namespace

bool CompiledBag::sat(BagMask m) const {
    for (const BagRule& r : rules) {
        bool body = (r.pos & ~m) == 0 && (r.neg & m) == 0 && (r.negneg & ~m) == 0;
        if (body && (r.head & m) == 0)
            return false;
    }
    return true;
}

bool CompiledBag::models_reduct(BagMask c, BagMask m) const {
    for (const BagRule& r : rules) {
        if ((r.neg & m) != 0 || (r.negneg & ~m) != 0)
            continue;  // deleted by the reduct
        if ((r.pos & ~c) == 0 && (r.head & c) == 0)
            return false;
    }
    return true;
}

CompiledBag compile_bag(const PlainProgram& q, const AtomSet& bag) {
    CompiledBag out;
    out.bag_size = bag.size();
    out.rules.reserve(q.rules().size());
    for (const PlainRule& r : q.rules()) {
        CompiledBag::BagRule cr;
        for (AtomId a : r.head)
            cr.head |= BagMask(1) << position_of(bag, a);
        for (const PlainLiteral& lit : r.body) {
            BagMask bit = BagMask(1) << position_of(bag, lit.atom);
            if (lit.negations == 0)
                cr.pos |= bit;
            else if (lit.negations == 1)
                cr.neg |= bit;
            else
                cr.negneg |= bit;
        }
        out.rules.push_back(cr);
    }
    return out;
}

TupleSet updt_cand(BagMask witness, const std::vector<BagMask>& counters, const CompiledBag& q) {
    if (!q.sat(witness))
        return {};
    AnswerSetTuple t;
    t.witness = witness;
    for (BagMask c : counters)
        if (q.models_reduct(c, witness))
            t.counters.push_back(c);
    sort_unique_masks(t.counters);
    return {std::move(t)};
}

TupleSet intr_cand(std::size_t a_pos, const AnswerSetTuple& t, const CompiledBag& q) {
    BagMask bit = BagMask(1) << a_pos;
    if (t.witness & bit)
        throw std::logic_error("intr_cand: introduced atom already in witness");
    std::vector<BagMask> extended;
    extended.reserve(2 * t.counters.size() + 1);
    extended.push_back(t.witness);  // the old witness is a strict subset of witness ∪ {a}
    for (BagMask c : t.counters) {
        if (c & bit)
            throw std::logic_error("intr_cand: introduced atom already in a counterwitness");
        extended.push_back(c);
        extended.push_back(c | bit);
    }
    sort_unique_masks(extended);
    TupleSet out = updt_cand(t.witness | bit, extended, q);
    for (AnswerSetTuple& f : updt_cand(t.witness, t.counters, q))
        out.push_back(std::move(f));
    sort_unique_tuples(out);
    return out;
}

std::vector<TupleSet> survival_sets(std::size_t a_pos, const TupleSet& pool, const TupleSet& s,
                                    const CompiledBag& q) {
    if (s.empty())
        return {TupleSet{}};
    std::vector<TupleSet> successors;
    successors.reserve(s.size());
    for (const AnswerSetTuple& obligation : s)
        successors.push_back(intr_cand(a_pos, obligation, q));

    std::vector<TupleSet> out;
    std::size_t n = pool.size(), k = s.size();
    if (n < k)
        return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        TupleSet chosen;
        chosen.reserve(k);
        for (std::size_t i : idx)
            chosen.push_back(pool[i]);
        bool hits_all = true;
        for (const TupleSet& succ : successors) {
            bool hit = std::any_of(chosen.begin(), chosen.end(), [&](const AnswerSetTuple& t) {
                return std::binary_search(succ.begin(), succ.end(), t);
            });
            if (!hit) {
                hits_all = false;
                break;
            }
        }
        if (hits_all)
            out.push_back(std::move(chosen));
        // next k-combination of {0..n-1}
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

namespace {

std::vector<BagMask> merge_counters(BagMask witness, const std::vector<BagMask>& c1,
                                    const std::vector<BagMask>& c2) {
    std::vector<BagMask> out;
    std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(out));
    // a counterwitness may coincide with the witness on one side's bag
    if (std::binary_search(c1.begin(), c1.end(), witness))
        out.push_back(witness);
    if (std::binary_search(c2.begin(), c2.end(), witness))
        out.push_back(witness);
    sort_unique_masks(out);
    return out;
}

AnswerSetTuple merge_tuples(const AnswerSetTuple& a, const AnswerSetTuple& b) {
    return {a.witness, merge_counters(a.witness, a.counters, b.counters)};
}

PrimRow remap_row_insert(const PrimRow& row, std::size_t pos) {
    PrimRow out;
    out.cwi = row.cwi;
    auto remap_set = [&](const TupleSet& in) {
        TupleSet mapped;
        mapped.reserve(in.size());
        for (const AnswerSetTuple& t : in) {
            AnswerSetTuple nt;
            nt.witness = insert_bit(t.witness, pos);
            nt.counters.reserve(t.counters.size());
            for (BagMask c : t.counters)
                nt.counters.push_back(insert_bit(c, pos));
            mapped.push_back(std::move(nt));
        }
        return mapped;  // bit insertion is order-preserving, stays sorted
    };
    out.m = remap_set(row.m);
    out.k = remap_set(row.k);
    out.s.reserve(row.s.size());
    for (const SurvivalSlot& slot : row.s)
        out.s.push_back(remap_set(slot));
    return out;
}

class QCache {
  public:
    QCache(const Program& bag_program, AtomSet scope, AtomSet bag)
        : prog_(bag_program), scope_(std::move(scope)), bag_(std::move(bag)) {}

    const CompiledBag& get(const std::vector<Truth>& cwi) {
        auto it = cache_.find(cwi);
        if (it != cache_.end())
            return it->second;
        Cwi scratch(prog_.atom_table().size(), Truth::Unset);
        for (std::size_t i = 0; i < scope_.size(); ++i)
            scratch.set(scope_[i], cwi[i]);
        CompiledBag compiled = compile_bag(epistemic_reduct(prog_, scratch), bag_);
        return cache_.emplace(cwi, std::move(compiled)).first->second;
    }

  private:
    const Program& prog_;
    AtomSet scope_;
    AtomSet bag_;
    std::map<std::vector<Truth>, CompiledBag> cache_;
};

PrimTable intr_node(const PrimNodeInput& in) {
    std::size_t pos = position_of(in.bag, in.special);
    BagMask bit = BagMask(1) << pos;
    bool epistemic = sorted_contains(*in.elit, in.special);
    AtomSet scope = bag_elit(in.bag, *in.elit);
    std::size_t elit_pos = epistemic ? position_of(scope, in.special) : 0;
    QCache qcache(*in.bag_program, scope, in.bag);

    static constexpr Truth kStatuses[3] = {Truth::True, Truth::False, Truth::Unknown};
    PrimTable out;
    for (const PrimRow& child : *in.children.at(0)) {
        PrimRow base = remap_row_insert(child, pos);
        std::size_t branch_count = epistemic ? 3 : 1;
        for (std::size_t b = 0; b < branch_count; ++b) {
            std::vector<Truth> cwi = base.cwi;
            if (epistemic)
                cwi.insert(cwi.begin() + static_cast<long>(elit_pos), kStatuses[b]);
            const CompiledBag& q = qcache.get(cwi);

            TupleSet m2;
            for (const AnswerSetTuple& t : base.m)
                for (AnswerSetTuple& u : intr_cand(pos, t, q))
                    m2.push_back(std::move(u));
            m2 = minimal_per_witness(std::move(m2));
            if (m2.empty())
                continue;

            TupleSet k2;
            for (const AnswerSetTuple& t : base.k)
                for (AnswerSetTuple& u : intr_cand(pos, t, q))
                    k2.push_back(std::move(u));
            if (epistemic && kStatuses[b] == Truth::True) {
                for (const AnswerSetTuple& t : m2)  // witness misses an always-true atom
                    if (!(t.witness & bit))
                        k2.push_back(t);
            } else if (epistemic && kStatuses[b] == Truth::False) {
                for (const AnswerSetTuple& t : m2)  // witness contains an always-false atom
                    if (t.witness & bit)
                        k2.push_back(t);
            }
            k2 = minimal_per_witness(std::move(k2));

            // every obligation advances through all of its successors at once
            std::vector<SurvivalSlot> slots;
            slots.reserve(base.s.size() + 2);
            for (const SurvivalSlot& slot : base.s) {
                SurvivalSlot next;
                for (const AnswerSetTuple& t : slot)
                    for (AnswerSetTuple& u : intr_cand(pos, t, q))
                        next.push_back(std::move(u));
                slots.push_back(std::move(next));
            }
            if (epistemic && kStatuses[b] == Truth::Unknown) {
                // the unknown status needs a surviving answer set on each side
                SurvivalSlot with_a, without_a;
                for (const AnswerSetTuple& t : m2)
                    (t.witness & bit ? with_a : without_a).push_back(t);
                slots.push_back(std::move(with_a));
                slots.push_back(std::move(without_a));
            }
            if (!normalize_slots(slots))
                continue;

            PrimRow row;
            row.cwi = std::move(cwi);
            row.m = std::move(m2);
            row.k = std::move(k2);
            row.s = std::move(slots);
            out.push_back(std::move(row));
        }
    }
    sort_unique_rows(out);
    return out;
}

PrimTable rem_node(const PrimNodeInput& in) {
    std::size_t pos = position_of(in.child_bag, in.special);
    bool epistemic = sorted_contains(*in.elit, in.special);
    std::size_t elit_pos =
        epistemic ? position_of(bag_elit(in.child_bag, *in.elit), in.special) : 0;

    auto project_set = [&](const TupleSet& tuples) {
        TupleSet out;
        out.reserve(tuples.size());
        for (const AnswerSetTuple& t : tuples) {
            AnswerSetTuple nt;
            nt.witness = remove_bit(t.witness, pos);
            for (BagMask c : t.counters)
                nt.counters.push_back(remove_bit(c, pos));
            sort_unique_masks(nt.counters);
            out.push_back(std::move(nt));
        }
        return out;
    };

    PrimTable out;
    for (const PrimRow& child : *in.children.at(0)) {
        PrimRow row;
        row.cwi = child.cwi;
        if (epistemic)
            row.cwi.erase(row.cwi.begin() + static_cast<long>(elit_pos));
        row.m = minimal_per_witness(project_set(child.m));
        row.k = minimal_per_witness(project_set(child.k));
        row.s.reserve(child.s.size());
        for (const SurvivalSlot& slot : child.s)
            row.s.push_back(project_set(slot));
        if (!normalize_slots(row.s))
            continue;
        out.push_back(std::move(row));
    }
    sort_unique_rows(out);
    return out;
}

PrimTable join_node(const PrimNodeInput& in) {
    const PrimTable& left = *in.children.at(0);
    const PrimTable& right = *in.children.at(1);
    PrimTable out;
    for (const PrimRow& r1 : left) {
        for (const PrimRow& r2 : right) {
            if (r1.cwi != r2.cwi)
                continue;
            TupleSet m2;
            for (const AnswerSetTuple& a : r1.m)
                for (const AnswerSetTuple& b : r2.m)
                    if (a.witness == b.witness)
                        m2.push_back(merge_tuples(a, b));
            m2 = minimal_per_witness(std::move(m2));
            if (m2.empty())
                continue;

            // a kill candidate stays one when merged with any matching tuple
            // of the partner row, witness or kill alike
            TupleSet right_mk = r2.m;
            right_mk.insert(right_mk.end(), r2.k.begin(), r2.k.end());
            sort_unique_tuples(right_mk);
            TupleSet left_mk = r1.m;
            left_mk.insert(left_mk.end(), r1.k.begin(), r1.k.end());
            sort_unique_tuples(left_mk);
            TupleSet k2;
            for (const AnswerSetTuple& a : r1.k)
                for (const AnswerSetTuple& b : right_mk)
                    if (a.witness == b.witness)
                        k2.push_back(merge_tuples(a, b));
            for (const AnswerSetTuple& a : left_mk)
                for (const AnswerSetTuple& b : r2.k)
                    if (a.witness == b.witness)
                        k2.push_back(merge_tuples(a, b));
            k2 = minimal_per_witness(std::move(k2));

            // an obligation continues through every witness-equal partner
            std::vector<SurvivalSlot> slots;
            slots.reserve(r1.s.size() + r2.s.size());
            auto continue_through = [&](const std::vector<SurvivalSlot>& own,
                                        const TupleSet& partners) {
                for (const SurvivalSlot& slot : own) {
                    SurvivalSlot next;
                    for (const AnswerSetTuple& t : slot)
                        for (const AnswerSetTuple& partner : partners)
                            if (t.witness == partner.witness)
                                next.push_back(merge_tuples(t, partner));
                    slots.push_back(std::move(next));
                }
            };
            continue_through(r1.s, r2.m);
            continue_through(r2.s, r1.m);
            if (!normalize_slots(slots))
                continue;

            PrimRow row;
            row.cwi = r1.cwi;
            row.m = std::move(m2);
            row.k = std::move(k2);
            row.s = std::move(slots);
            out.push_back(std::move(row));
        }
    }
    sort_unique_rows(out);
    return out;
}

}  // namespace

PrimTable prim_node(const PrimNodeInput& in) {
    switch (in.type) {
        case NodeType::Leaf:
            return {PrimRow{{}, {AnswerSetTuple{0, {}}}, {}, {}}};
        case NodeType::Intr:
            return intr_node(in);
        case NodeType::Rem:
            return rem_node(in);
        case NodeType::Join:
            return join_node(in);
        case NodeType::Plain:
            break;
    }
    throw std::invalid_argument("prim_node: node is not nice");
}

bool is_proving(const PrimRow& row) {
    if (!row.cwi.empty())
        throw ScopeError("is_proving: row is not scoped to the empty root bag");
    auto check_scope = [](const TupleSet& ts) {
        for (const AnswerSetTuple& t : ts) {
            if (t.witness != 0)
                throw ScopeError("is_proving: witness outside the empty root bag");
            for (BagMask c : t.counters)
                if (c != 0)
                    throw ScopeError("is_proving: counterwitness outside the empty root bag");
        }
    };
    check_scope(row.m);
    check_scope(row.k);
    for (const SurvivalSlot& slot : row.s)
        check_scope(slot);
    bool witness_proving = std::any_of(row.m.begin(), row.m.end(),
                                       [](const AnswerSetTuple& t) { return t.counters.empty(); });
    bool kill_proving = std::any_of(row.k.begin(), row.k.end(),
                                    [](const AnswerSetTuple& t) { return t.counters.empty(); });
    bool survivors_ok = std::all_of(row.s.begin(), row.s.end(), [](const SurvivalSlot& slot) {
        return std::any_of(slot.begin(), slot.end(),
                           [](const AnswerSetTuple& t) { return t.counters.empty(); });
    });
    return witness_proving && !kill_proving && survivors_ok;
}

namespace {

void dump_table(std::ostream& out, const TdNode& n, const AtomSet& bag, const PrimTable& table,
                const Program& p) {
    const char* type = n.type == NodeType::Leaf   ? "leaf"
                       : n.type == NodeType::Intr ? "intr"
                       : n.type == NodeType::Rem  ? "rem"
                                                  : "join";
    out << "node " << n.post_order << " (" << type << ") bag {";
    for (std::size_t i = 0; i < bag.size(); ++i)
        out << (i ? "," : "") << p.atom_name(bag[i]);
    out << "} rows " << table.size() << "\n";
    auto dump_tuples = [&](const char* tag, const TupleSet& ts) {
        out << tag << "{";
        for (std::size_t i = 0; i < ts.size(); ++i) {
            out << (i ? " " : "") << "<" << ts[i].witness << "|";
            for (std::size_t j = 0; j < ts[i].counters.size(); ++j)
                out << (j ? "," : "") << ts[i].counters[j];
            out << ">";
        }
        out << "}";
    };
    for (const PrimRow& row : table) {
        out << "  I=";
        for (Truth t : row.cwi)
            out << (t == Truth::True ? 'P' : t == Truth::False ? 'N' : 'U');
        dump_tuples(" M=", row.m);
        dump_tuples(" K=", row.k);
        out << " S=[";
        for (std::size_t i = 0; i < row.s.size(); ++i)
            dump_tuples(i ? " ;" : "", row.s[i]);
        out << "]\n";
    }
}

}  // namespace

PrimResult solve_prim(const Program& p, const PrimConfig& cfg) {
    PrimResult result;
    for (const Rule& r : p.rules())
        if (r.atoms().empty())
            return result;  // an empty rule has no models at all

    Graph g = primal_graph(p);
    TreeDecomposition td = make_nice(decompose(g, cfg.heuristic, cfg.seed));
    result.td_width = td.width();
    result.td_nodes = static_cast<int>(td.nodes.size());

    auto atoms_of = [&](const TdNode& n) {
        AtomSet bag;
        bag.reserve(n.bag.size());
        for (std::uint32_t v : n.bag)
            bag.push_back(g.label[v]);
        sort_unique(bag);
        return bag;
    };

    std::vector<PrimTable> tables(td.nodes.size());
    for (int node : td.post_order_traversal()) {
        const TdNode& n = td.nodes[node];
        PrimNodeInput in;
        in.type = n.type;
        in.bag = atoms_of(n);
        in.elit = &p.elit();
        if (n.type == NodeType::Intr || n.type == NodeType::Rem) {
            in.special = g.label[n.special];
            in.child_bag = atoms_of(td.nodes[n.children[0]]);
        }
        for (int c : n.children)
            in.children.push_back(&tables[c]);
        std::optional<Program> bag_program;
        if (n.type == NodeType::Intr) {
            std::vector<std::size_t> covered;
            for (std::size_t ri = 0; ri < p.rules().size(); ++ri)
                if (sorted_subset(p.rules()[ri].atoms(), in.bag))
                    covered.push_back(ri);
            bag_program = p.subprogram(covered);
            in.bag_program = &*bag_program;
        }
        tables[node] = prim_node(in);
        result.max_table_rows = std::max(result.max_table_rows, tables[node].size());
        if (tables[node].size() > cfg.max_table_rows)
            throw BudgetError("prim: table exceeds the row budget");
        if (cfg.table_dump)
            dump_table(*cfg.table_dump, n, in.bag, tables[node], p);
        for (int c : n.children)
            tables[c].clear();
    }
    const PrimTable& root = tables[td.root];
    result.exists =
        std::any_of(root.begin(), root.end(), [](const PrimRow& r) { return is_proving(r); });
    return result;
}

}  // namespace elps
