#include "elps/program.hpp"

#include <algorithm>
#include <sstream>

namespace elps {

void sort_unique(AtomSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool sorted_contains(const AtomSet& s, AtomId a) {
    return std::binary_search(s.begin(), s.end(), a);
}

AtomSet sorted_union(const AtomSet& a, const AtomSet& b) {
    AtomSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

AtomSet sorted_intersection(const AtomSet& a, const AtomSet& b) {
    AtomSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool sorted_subset(const AtomSet& sub, const AtomSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

AtomId AtomTable::intern(std::string_view name) {
    auto it = index_.find(std::string(name));
    if (it != index_.end())
        return it->second;
    AtomId id = static_cast<AtomId>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return id;
}

bool AtomTable::contains(std::string_view name) const {
    return index_.count(std::string(name)) != 0;
}

AtomId AtomTable::id_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        throw std::out_of_range("unknown atom: " + std::string(name));
    return it->second;
}

bool Cwi::is_full() const {
    return std::none_of(vals_.begin(), vals_.end(), [](Truth t) { return t == Truth::Unset; });
}

AtomSet Cwi::collect(Truth t) const {
    AtomSet out;
    for (AtomId a = 0; a < vals_.size(); ++a)
        if (vals_[a] == t)
            out.push_back(a);
    return out;
}

AtomSet Cwi::scope() const {
    AtomSet out;
    for (AtomId a = 0; a < vals_.size(); ++a)
        if (vals_[a] != Truth::Unset)
            out.push_back(a);
    return out;
}

bool Cwi::literal_subset_of(const Cwi& other) const {
    if (vals_.size() != other.vals_.size())
        throw ScopeError("literal_subset_of: mismatched universes");
    bool strict = false;
    for (std::size_t a = 0; a < vals_.size(); ++a) {
        Truth mine = vals_[a], theirs = other.vals_[a];
        if (mine == Truth::True || mine == Truth::False) {
            if (theirs != mine)
                return false;
        } else if (theirs == Truth::True || theirs == Truth::False) {
            strict = true;
        }
    }
    return strict;
}

void Rule::finalize() {
    sort_unique(head);
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
    atoms_ = head;
    elit_.clear();
    for (const BodyLiteral& lit : body) {
        atoms_.push_back(lit.atom);
        if (lit.epistemic)
            elit_.push_back(lit.atom);
    }
    sort_unique(atoms_);
    sort_unique(elit_);
}

Program::Program(std::shared_ptr<const AtomTable> table, std::vector<Rule> rules, AtomSet universe)
    : atoms_(std::move(table)), rules_(std::move(rules)), universe_(std::move(universe)) {
    for (const Rule& r : rules_)
        elit_.insert(elit_.end(), r.elit().begin(), r.elit().end());
    sort_unique(elit_);
}

Program Program::from_table(std::shared_ptr<AtomTable> table, std::vector<Rule> rules) {
    AtomSet universe;
    universe.reserve(table->size());
    for (AtomId a = 0; a < table->size(); ++a)
        universe.push_back(a);
    return Program(std::move(table), std::move(rules), std::move(universe));
}

Program Program::subprogram(const std::vector<std::size_t>& rule_indices) const {
    std::vector<Rule> sub;
    AtomSet universe;
    sub.reserve(rule_indices.size());
    for (std::size_t idx : rule_indices) {
        const Rule& r = rules_.at(idx);
        sub.push_back(r);
        universe.insert(universe.end(), r.atoms().begin(), r.atoms().end());
    }
    sort_unique(universe);
    return Program(atoms_, std::move(sub), std::move(universe));
}

AtomSet PlainRule::atoms() const {
    AtomSet out = head;
    for (const PlainLiteral& lit : body)
        out.push_back(lit.atom);
    sort_unique(out);
    return out;
}

PlainProgram::PlainProgram(std::shared_ptr<const AtomTable> table, std::vector<PlainRule> rules,
                           AtomSet universe)
    : atoms_(std::move(table)), rules_(std::move(rules)), universe_(std::move(universe)) {}

bool PlainProgram::has_negation() const {
    for (const PlainRule& r : rules_)
        for (const PlainLiteral& lit : r.body)
            if (lit.negations > 0)
                return true;
    return false;
}

namespace {

void print_head(std::ostringstream& out, const AtomSet& head, const AtomTable& table) {
    for (std::size_t i = 0; i < head.size(); ++i) {
        if (i > 0)
            out << " | ";
        out << table.name(head[i]);
    }
}

}  // namespace

std::string print_program(const Program& p) {
    std::ostringstream out;
    for (const Rule& r : p.rules()) {
        print_head(out, r.head, p.atom_table());
        if (!r.body.empty()) {
            out << (r.head.empty() ? ":- " : " :- ");
            for (std::size_t i = 0; i < r.body.size(); ++i) {
                if (i > 0)
                    out << ", ";
                const BodyLiteral& lit = r.body[i];
                if (lit.outer_neg)
                    out << "~";
                if (lit.epistemic)
                    out << "not ";
                if (lit.inner_neg)
                    out << "~";
                out << p.atom_name(lit.atom);
            }
        }
        out << ".\n";
    }
    return out.str();
}

std::string print_program(const PlainProgram& p) {
    std::ostringstream out;
    for (const PlainRule& r : p.rules()) {
        print_head(out, r.head, p.atom_table());
        if (!r.body.empty()) {
            out << (r.head.empty() ? ":- " : " :- ");
            for (std::size_t i = 0; i < r.body.size(); ++i) {
                if (i > 0)
                    out << ", ";
                for (int n = 0; n < r.body[i].negations; ++n)
                    out << "~";
                out << p.atom_name(r.body[i].atom);
            }
        }
        out << ".\n";
    }
    return out.str();
}

std::string print_cwi(const Cwi& cwi, const AtomTable& table) {
    std::ostringstream out;
    auto dump = [&](const char* tag, const AtomSet& set) {
        out << tag << "{";
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (i > 0)
                out << ",";
            out << table.name(set[i]);
        }
        out << "}";
    };
    dump("P=", cwi.p_atoms());
    out << " ";
    dump("N=", cwi.n_atoms());
    out << " ";
    dump("U=", cwi.u_atoms());
    return out.str();
}

}  // namespace elps
