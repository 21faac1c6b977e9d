#ifndef ELPS_ORACLE_HPP
#define ELPS_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "elps/formula.hpp"
#include "elps/program.hpp"
#include "elps/reducts.hpp"

namespace elps {

class BudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive-enumeration limits. The oracle is meant for desk-scale
/// verification; these bounds keep it from wandering off.
struct OracleLimits {
    std::size_t max_atoms = 20;          // universe size for answer-set enumeration
    std::uint64_t max_guesses = 531441;  // 3^12 epistemic status combinations
};

/// Exact counters for answer-set-existence queries. Every has_answer_set
/// call increments `calls` by one; per-node attribution is filled in by the
/// DP driver via set_node.
struct OracleStats {
    std::uint64_t calls = 0;
    std::vector<std::pair<int, std::uint64_t>> per_node;  // (node post-order, calls)
    int current_node = -1;

    // per-row accounting: every row check must stay within 2 + 2·|bag| calls
    std::uint32_t max_row_calls = 0;
    std::uint64_t row_checks = 0;
    std::uint64_t row_bound_violations = 0;

    void set_node(int node);
    void count_call();
    void record_row(std::uint32_t calls_used, std::size_t bag_size);
};

/// Antichain of interpretations, sorted for deterministic iteration.
class AnswerSetFamily {
  public:
    AnswerSetFamily() = default;
    explicit AnswerSetFamily(std::vector<AtomSet> sets);

    const std::vector<AtomSet>& sets() const { return sets_; }
    bool empty() const { return sets_.empty(); }
    std::size_t size() const { return sets_.size(); }

  private:
    std::vector<AtomSet> sets_;
};

/// All answer sets of `p` over its universe, by enumeration.
AnswerSetFamily answer_sets(const PlainProgram& p, const OracleLimits& limits = {});

/// True iff some answer set M of `p` has M ∩ forbidden_true = ∅ and
/// forbidden_false ⊆ M. Counts as exactly one oracle call.
bool has_answer_set(const PlainProgram& p, const AtomSet& forbidden_true,
                    const AtomSet& forbidden_false, OracleStats& stats,
                    const OracleLimits& limits = {});

/// Compatibility of a full CWI with a family of interpretations: the family
/// is nonempty, P-atoms appear everywhere, N-atoms nowhere, U-atoms both ways.
bool is_compatible(const Cwi& i, const AnswerSetFamily& fam);

std::vector<Cwi> candidate_world_views(const Program& p, const OracleLimits& limits = {});
std::vector<Cwi> world_views(const Program& p, const OracleLimits& limits = {});
bool wv_exists(const Program& p, const OracleLimits& limits = {});

/// True iff every answer set of the epistemic reduct w.r.t. `w` satisfies `f`.
bool cautiously_entails(const Program& p, const Cwi& w, const Formula& f,
                        const OracleLimits& limits = {});

/// True iff some world view of `p` cautiously entails `f`.
bool evaluate_formula_problem(const Program& p, const Formula& f, const OracleLimits& limits = {});

/// Thin handle bundling limits and stats; the DP modules talk to the
/// answer-set oracle through this, which is also the seam where an external
/// solver could be plugged in later.
class AspOracle {
  public:
    explicit AspOracle(OracleLimits limits = {}) : limits_(limits) {}

    bool has_answer_set(const PlainProgram& p, const AtomSet& forbidden_true = {},
                        const AtomSet& forbidden_false = {}) {
        return elps::has_answer_set(p, forbidden_true, forbidden_false, stats_, limits_);
    }

    OracleStats& stats() { return stats_; }
    const OracleStats& stats() const { return stats_; }
    const OracleLimits& limits() const { return limits_; }

  private:
    OracleLimits limits_;
    OracleStats stats_;
};

}  // namespace elps

#endif
