#ifndef ELPS_DP_PRIM_HPP
#define ELPS_DP_PRIM_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>

#include "elps/oracle.hpp"
#include "elps/program.hpp"
#include "elps/tree_decomposition.hpp"

namespace elps {

/// Interpretations local to a bag, one bit per position in the sorted bag.
using BagMask = std::uint64_t;

/// Witness model plus the counterwitness models threatening its minimality.
/// A tuple with no counterwitnesses is proving: the witness extends to an
/// answer set of the part of the program seen so far.
struct AnswerSetTuple {
    BagMask witness = 0;
    std::vector<BagMask> counters;  // sorted, duplicate-free

    auto operator<=>(const AnswerSetTuple&) const = default;
};

using TupleSet = std::vector<AnswerSetTuple>;  // sorted, duplicate-free

/// Rules of the bag program compiled to bit masks over bag positions.
/// This is PRIM's own evaluation kernel, deliberately separate from the
/// oracle's, so the two stay independent cross-checks.
struct CompiledBag {
    struct BagRule {
        BagMask head = 0;
        BagMask pos = 0;
        BagMask neg = 0;
        BagMask negneg = 0;
    };
    std::vector<BagRule> rules;
    std::size_t bag_size = 0;

    bool sat(BagMask m) const;
    bool models_reduct(BagMask c, BagMask m) const;  // c ⊨ reduct w.r.t. m
};

/// Compiles a plain program whose atoms all lie inside `bag`.
CompiledBag compile_bag(const PlainProgram& q, const AtomSet& bag);

/// Keeps the tuple when the witness still models the bag program, filtering
/// the counterwitnesses down to models of the reduct w.r.t. the witness.
TupleSet updt_cand(BagMask witness, const std::vector<BagMask>& counters, const CompiledBag& q);

/// Introduction of the atom at bit `a_pos`: the a-true branch adopts the old
/// witness and both extensions of every counterwitness as counter
/// candidates, the a-false branch continues unchanged; both are then
/// filtered through updt_cand. Precondition: bit `a_pos` unused in `t`.
TupleSet intr_cand(std::size_t a_pos, const AnswerSetTuple& t, const CompiledBag& q);

/// All ways to pick |s| successors from `pool` such that every obligation in
/// `s` keeps at least one. Empty result = some obligation has no successor.
std::vector<TupleSet> survival_sets(std::size_t a_pos, const TupleSet& pool, const TupleSet& s,
                                    const CompiledBag& q);

/// One survival obligation, kept in factored form: the set of answer-set
/// tuples any one of which may discharge it. Branching over "exactly one
/// successor per obligation" choices expands to the cartesian product of the
/// slots; the slots evolve independently, so the product is never built.
using SurvivalSlot = TupleSet;

/// Table row: CWI statuses for the bag's epistemic atoms plus the witness
/// tuples, the kill candidates, and one survival slot per obligation.
struct PrimRow {
    std::vector<Truth> cwi;  // aligned with sorted bag ∩ elit
    TupleSet m;
    TupleSet k;
    std::vector<SurvivalSlot> s;

    auto operator<=>(const PrimRow&) const = default;
};

using PrimTable = std::vector<PrimRow>;  // sorted, duplicate-free

struct PrimNodeInput {
    NodeType type = NodeType::Leaf;
    AtomSet bag;        // sorted atom ids of this node
    AtomSet child_bag;  // sorted atom ids of the (first) child, for remapping
    AtomId special = 0;
    std::vector<const PrimTable*> children;
    const Program* bag_program = nullptr;  // rules fully covered by `bag`
    const AtomSet* elit = nullptr;         // epistemic atoms of the full program
};

PrimTable prim_node(const PrimNodeInput& in);

/// Root-row verdict: a proving witness exists, no kill candidate is proving,
/// and every survival obligation has a proving tuple left. Requires
/// empty-bag scope.
bool is_proving(const PrimRow& row);

struct PrimConfig {
    Heuristic heuristic = Heuristic::MinFill;
    std::uint64_t seed = 0;
    std::size_t max_table_rows = 1u << 20;
    std::ostream* table_dump = nullptr;  // per-node table listing when set
};

struct PrimResult {
    bool exists = false;
    int td_width = -1;
    int td_nodes = 0;
    std::size_t max_table_rows = 0;
};

/// World-view existence by self-contained dynamic programming over a nice
/// TD of the primal graph; no answer-set oracle involved.
PrimResult solve_prim(const Program& p, const PrimConfig& cfg = {});

}  // namespace elps

#endif
