#include "elps/oracle.hpp"

#include <algorithm>

namespace elps {

void OracleStats::set_node(int node) { current_node = node; }

void OracleStats::count_call() {
    ++calls;
    if (current_node >= 0) {
        if (!per_node.empty() && per_node.back().first == current_node)
            ++per_node.back().second;
        else
            per_node.emplace_back(current_node, 1);
    }
}

void OracleStats::record_row(std::uint32_t calls_used, std::size_t bag_size) {
    ++row_checks;
    max_row_calls = std::max(max_row_calls, calls_used);
    if (calls_used > 2 + 2 * bag_size)
        ++row_bound_violations;
}

AnswerSetFamily::AnswerSetFamily(std::vector<AtomSet> sets) : sets_(std::move(sets)) {
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

namespace {

using Mask = std::uint64_t;

// Rules compiled to bit masks over positions in the program universe. Kept
// local to the oracle; the DP modules carry their own evaluation kernel so
// that oracle and DP stay independent cross-checks of each other.
struct MaskRule {
    Mask head = 0;
    Mask pos = 0;      // plain atoms
    Mask neg = 0;      // ~a
    Mask negneg = 0;   // ~~a
};

struct MaskProgram {
    std::vector<MaskRule> rules;
    const AtomSet* atoms = nullptr;  // universe, position i <-> (*atoms)[i]
    std::size_t k = 0;

    Mask to_mask(const AtomSet& set) const {
        Mask m = 0;
        for (AtomId a : set) {
            auto it = std::lower_bound(atoms->begin(), atoms->end(), a);
            if (it == atoms->end() || *it != a)
                throw ScopeError("atom outside program universe");
            m |= Mask(1) << (it - atoms->begin());
        }
        return m;
    }

    AtomSet to_set(Mask m) const {
        AtomSet out;
        for (std::size_t i = 0; i < k; ++i)
            if (m & (Mask(1) << i))
                out.push_back((*atoms)[i]);
        return out;
    }
};

MaskProgram compile(const PlainProgram& p, const OracleLimits& limits) {
    if (p.universe().size() > limits.max_atoms)
        throw BudgetError("oracle: universe of " + std::to_string(p.universe().size()) +
                          " atoms exceeds the exhaustive limit of " +
                          std::to_string(limits.max_atoms));
    MaskProgram mp;
    mp.atoms = &p.universe();
    mp.k = p.universe().size();
    mp.rules.reserve(p.rules().size());
    for (const PlainRule& r : p.rules()) {
        MaskRule mr;
        for (AtomId a : r.head)
            mr.head |= mp.to_mask({a});
        for (const PlainLiteral& lit : r.body) {
            Mask bit = mp.to_mask({lit.atom});
            if (lit.negations == 0)
                mr.pos |= bit;
            else if (lit.negations == 1)
                mr.neg |= bit;
            else
                mr.negneg |= bit;
        }
        mp.rules.push_back(mr);
    }
    return mp;
}

bool is_model(const MaskProgram& p, Mask m) {
    for (const MaskRule& r : p.rules) {
        bool body = (r.pos & ~m) == 0 && (r.neg & m) == 0 && (r.negneg & ~m) == 0;
        if (body && (r.head & m) == 0)
            return false;
    }
    return true;
}

// c ⊨ reduct of p w.r.t. m (rules whose negated elements m does not refute,
// reduced to their positive bodies).
bool models_reduct(const MaskProgram& p, Mask c, Mask m) {
    for (const MaskRule& r : p.rules) {
        if ((r.neg & m) != 0 || (r.negneg & ~m) != 0)
            continue;  // rule deleted by the reduct
        if ((r.pos & ~c) == 0 && (r.head & c) == 0)
            return false;
    }
    return true;
}

bool is_answer_set(const MaskProgram& p, Mask m) {
    if (!is_model(p, m))
        return false;
    if (m == 0)
        return true;  // no strict subsets
    // strict submask enumeration, largest first, down to and including 0
    for (Mask sub = (m - 1) & m;; sub = (sub - 1) & m) {
        if (models_reduct(p, sub, m))
            return false;
        if (sub == 0)
            break;
    }
    return true;
}

template <typename Fn>
void for_each_answer_set(const MaskProgram& p, Fn&& fn) {
    Mask end = (p.k >= 64) ? 0 : (Mask(1) << p.k);
    Mask m = 0;
    do {
        if (is_answer_set(p, m))
            if (!fn(m))
                return;
        ++m;
    } while (m != end);
}

}  // namespace

AnswerSetFamily answer_sets(const PlainProgram& p, const OracleLimits& limits) {
    MaskProgram mp = compile(p, limits);
    std::vector<AtomSet> out;
    for_each_answer_set(mp, [&](Mask m) {
        out.push_back(mp.to_set(m));
        return true;
    });
    return AnswerSetFamily(std::move(out));
}

bool has_answer_set(const PlainProgram& p, const AtomSet& forbidden_true,
                    const AtomSet& forbidden_false, OracleStats& stats,
                    const OracleLimits& limits) {
    stats.count_call();
    MaskProgram mp = compile(p, limits);
    Mask ft = mp.to_mask(forbidden_true);
    Mask ff = mp.to_mask(forbidden_false);
    bool found = false;
    for_each_answer_set(mp, [&](Mask m) {
        if ((m & ft) == 0 && (ff & ~m) == 0) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

bool is_compatible(const Cwi& i, const AnswerSetFamily& fam) {
    if (!i.is_full())
        throw ScopeError("is_compatible: CWI is not full");
    for (const AtomSet& as : fam.sets())
        for (AtomId a : as)
            if (a >= i.size())
                throw ScopeError("is_compatible: answer set mentions atom outside the CWI scope");
    if (fam.empty())
        return false;
    for (AtomId a = 0; a < i.size(); ++a) {
        bool in_some = false, out_some = false;
        for (const AtomSet& as : fam.sets()) {
            if (sorted_contains(as, a))
                in_some = true;
            else
                out_some = true;
        }
        switch (i.value(a)) {
            case Truth::True:
                if (out_some)
                    return false;
                break;
            case Truth::False:
                if (in_some)
                    return false;
                break;
            case Truth::Unknown:
                if (!in_some || !out_some)
                    return false;
                break;
            case Truth::Unset: break;  // unreachable, is_full checked
        }
    }
    return true;
}

namespace {

// The epistemic reduct depends only on the P/N/U statuses of elit(p), so a
// full CWI compatible with the reduct's answer sets exists iff the statuses
// forced by that family extend the guess over elit(p). Enumerates base-3.
template <typename Fn>
void for_each_cwv(const Program& p, const OracleLimits& limits, Fn&& fn) {
    const AtomSet& elit = p.elit();
    std::uint64_t guesses = 1;
    for (std::size_t i = 0; i < elit.size(); ++i) {
        guesses *= 3;
        if (guesses > limits.max_guesses)
            throw BudgetError("oracle: 3^" + std::to_string(elit.size()) +
                              " epistemic guesses exceed the budget");
    }
    static constexpr Truth kDigits[3] = {Truth::True, Truth::False, Truth::Unknown};
    for (std::uint64_t g = 0; g < guesses; ++g) {
        Cwi guess(p.atom_table().size(), Truth::Unset);
        std::uint64_t rem = g;
        for (AtomId a : elit) {
            guess.set(a, kDigits[rem % 3]);
            rem /= 3;
        }
        AnswerSetFamily fam = answer_sets(epistemic_reduct(p, guess), limits);
        if (fam.empty())
            continue;
        // forced trichotomy: each atom's status is determined by the family
        Cwi full(p.atom_table().size(), Truth::Unset);
        for (AtomId a : p.universe()) {
            bool in_some = false, out_some = false;
            for (const AtomSet& as : fam.sets()) {
                if (sorted_contains(as, a))
                    in_some = true;
                else
                    out_some = true;
            }
            full.set(a, in_some ? (out_some ? Truth::Unknown : Truth::True) : Truth::False);
        }
        bool consistent = true;
        for (AtomId a : elit)
            if (full.value(a) != guess.value(a)) {
                consistent = false;
                break;
            }
        if (consistent)
            if (!fn(std::move(full)))
                return;
    }
}

}  // namespace

std::vector<Cwi> candidate_world_views(const Program& p, const OracleLimits& limits) {
    std::vector<Cwi> out;
    for_each_cwv(p, limits, [&](Cwi cwi) {
        out.push_back(std::move(cwi));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cwi> world_views(const Program& p, const OracleLimits& limits) {
    std::vector<Cwi> cwvs = candidate_world_views(p, limits);
    std::vector<Cwi> out;
    for (const Cwi& w : cwvs) {
        bool minimal = true;
        for (const Cwi& other : cwvs)
            if (other.literal_subset_of(w)) {
                minimal = false;
                break;
            }
        if (minimal)
            out.push_back(w);
    }
    return out;
}

bool wv_exists(const Program& p, const OracleLimits& limits) {
    bool found = false;
    for_each_cwv(p, limits, [&](Cwi&&) {
        found = true;
        return false;
    });
    return found;
}

bool cautiously_entails(const Program& p, const Cwi& w, const Formula& f,
                        const OracleLimits& limits) {
    AnswerSetFamily fam = answer_sets(epistemic_reduct(p, w), limits);
    return std::all_of(fam.sets().begin(), fam.sets().end(),
                       [&](const AtomSet& as) { return f.evaluate(as); });
}

bool evaluate_formula_problem(const Program& p, const Formula& f, const OracleLimits& limits) {
    for (const Cwi& w : world_views(p, limits))
        if (cautiously_entails(p, w, f, limits))
            return true;
    return false;
}

}  // namespace elps
