#include "elps/reducts.hpp"

#include <algorithm>

namespace elps {

PlainProgram epistemic_reduct(const Program& p, const Cwi& i) {
    std::vector<PlainRule> out;
    out.reserve(p.rules().size());
    for (const Rule& r : p.rules()) {
        PlainRule reduced;
        reduced.head = r.head;
        bool drop_rule = false;
        for (const BodyLiteral& lit : r.body) {
            if (!lit.epistemic) {
                reduced.body.push_back({lit.atom, static_cast<std::uint8_t>(lit.outer_neg ? 1 : 0)});
                continue;
            }
            if (lit.atom >= i.size() || i.value(lit.atom) == Truth::Unset)
                throw ScopeError("epistemic reduct: no value for atom " + p.atom_name(lit.atom));
            Truth v = i.value(lit.atom);
            bool inner_holds = lit.inner_neg ? (v == Truth::False) : (v == Truth::True);
            if (inner_holds) {
                // not l  ->  ~l; stacked negations collapse mod 2 above one.
                int negs = (lit.outer_neg ? 1 : 0) + 1 + (lit.inner_neg ? 1 : 0);
                if (negs == 3)
                    negs = 1;
                reduced.body.push_back({lit.atom, static_cast<std::uint8_t>(negs)});
            } else if (lit.outer_neg) {
                drop_rule = true;  // ~true falsifies the body
                break;
            }
            // a positive true constant is simply dropped from the body
        }
        if (drop_rule)
            continue;
        std::sort(reduced.body.begin(), reduced.body.end());
        reduced.body.erase(std::unique(reduced.body.begin(), reduced.body.end()), reduced.body.end());
        out.push_back(std::move(reduced));
    }
    return PlainProgram(p.atom_table_ptr(), std::move(out), p.universe());
}

PlainProgram gl_reduct(const PlainProgram& p, const AtomSet& m) {
    std::vector<PlainRule> out;
    for (const PlainRule& r : p.rules()) {
        bool survives = true;
        for (const PlainLiteral& lit : r.body) {
            if (lit.negations == 1 && sorted_contains(m, lit.atom)) {
                survives = false;
                break;
            }
            if (lit.negations == 2 && !sorted_contains(m, lit.atom)) {
                survives = false;
                break;
            }
        }
        if (!survives)
            continue;
        PlainRule reduced;
        reduced.head = r.head;
        for (const PlainLiteral& lit : r.body)
            if (lit.negations == 0)
                reduced.body.push_back(lit);
        out.push_back(std::move(reduced));
    }
    return PlainProgram(p.atom_table_ptr(), std::move(out), p.universe());
}

bool satisfies(const AtomSet& m, const PlainRule& r) {
    bool body_holds = true;
    for (const PlainLiteral& lit : r.body) {
        bool atom_in = sorted_contains(m, lit.atom);
        bool lit_true = (lit.negations == 1) ? !atom_in : atom_in;
        if (!lit_true) {
            body_holds = false;
            break;
        }
    }
    if (!body_holds)
        return true;
    return std::any_of(r.head.begin(), r.head.end(),
                       [&](AtomId a) { return sorted_contains(m, a); });
}

bool satisfies(const AtomSet& m, const PlainProgram& p) {
    return std::all_of(p.rules().begin(), p.rules().end(),
                       [&](const PlainRule& r) { return satisfies(m, r); });
}

namespace {

PlainRule to_plain(const Rule& r) {
    PlainRule out;
    out.head = r.head;
    for (const BodyLiteral& lit : r.body) {
        if (lit.epistemic)
            throw ScopeError("satisfies: epistemic literal encountered");
        out.body.push_back({lit.atom, static_cast<std::uint8_t>(lit.outer_neg ? 1 : 0)});
    }
    return out;
}

}  // namespace

bool satisfies(const AtomSet& m, const Rule& r) { return satisfies(m, to_plain(r)); }

bool satisfies(const AtomSet& m, const Program& p) {
    return std::all_of(p.rules().begin(), p.rules().end(),
                       [&](const Rule& r) { return satisfies(m, r); });
}

}  // namespace elps
