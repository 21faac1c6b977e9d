#ifndef ELPS_PROGRAM_HPP
#define ELPS_PROGRAM_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace elps {

using AtomId = std::uint32_t;

/// Sorted, duplicate-free vector of atom ids. All set-valued data in the
/// solver uses this representation for deterministic iteration.
using AtomSet = std::vector<AtomId>;

void sort_unique(AtomSet& s);
bool sorted_contains(const AtomSet& s, AtomId a);
AtomSet sorted_union(const AtomSet& a, const AtomSet& b);
AtomSet sorted_intersection(const AtomSet& a, const AtomSet& b);
bool sorted_subset(const AtomSet& sub, const AtomSet& super);

/// Interns atom names and hands out dense ids in first-occurrence order,
/// so ids are reproducible for a fixed input.
class AtomTable {
  public:
    AtomId intern(std::string_view name);
    bool contains(std::string_view name) const;
    AtomId id_of(std::string_view name) const;
    const std::string& name(AtomId id) const { return names_.at(id); }
    std::size_t size() const { return names_.size(); }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomId> index_;
};

/// Three-valued truth status of an atom in a candidate world interpretation.
/// Unset marks atoms outside the scope of a partial interpretation.
enum class Truth : std::uint8_t { True, False, Unknown, Unset };

/// Candidate world interpretation: a consistent three-valued assignment
/// ⟨P, N, U⟩ over an atom universe. Atoms may be Unset (partial CWI).
class Cwi {
  public:
    Cwi() = default;
    explicit Cwi(std::size_t n_atoms, Truth fill = Truth::Unset) : vals_(n_atoms, fill) {}

    Truth value(AtomId a) const { return vals_.at(a); }
    void set(AtomId a, Truth t) { vals_.at(a) = t; }
    std::size_t size() const { return vals_.size(); }
    bool is_full() const;

    AtomSet p_atoms() const { return collect(Truth::True); }
    AtomSet n_atoms() const { return collect(Truth::False); }
    AtomSet u_atoms() const { return collect(Truth::Unknown); }
    AtomSet scope() const;

    /// Literal-set ordering used for world-view minimality:
    /// this ⊂ other iff P ⊆ P', N ⊆ N' and the pair differs somewhere.
    bool literal_subset_of(const Cwi& other) const;

    bool operator==(const Cwi& other) const { return vals_ == other.vals_; }
    bool operator<(const Cwi& other) const { return vals_ < other.vals_; }

  private:
    AtomSet collect(Truth t) const;
    std::vector<Truth> vals_;
};

/// One body element of an ELP rule. The four flags encode the six legal
/// shapes: a, ~a, not a, not ~a, ~not a, ~not ~a (inner_neg implies epistemic).
struct BodyLiteral {
    AtomId atom = 0;
    bool outer_neg = false;
    bool epistemic = false;
    bool inner_neg = false;

    auto operator<=>(const BodyLiteral&) const = default;
};

struct Rule {
    AtomSet head;                   // empty head = constraint
    std::vector<BodyLiteral> body;  // sorted, duplicate-free

    const AtomSet& atoms() const { return atoms_; }
    const AtomSet& elit() const { return elit_; }
    void finalize();  // sorts body/head, rebuilds atom caches

  private:
    AtomSet atoms_;
    AtomSet elit_;
};

/// Ground epistemic logic program. Immutable after construction; safe to
/// share across threads. The atom table is shared between a program and
/// everything derived from it (subprograms, reducts), so atom ids line up.
class Program {
  public:
    Program() : atoms_(std::make_shared<AtomTable>()) {}
    Program(std::shared_ptr<const AtomTable> table, std::vector<Rule> rules, AtomSet universe);

    static Program from_table(std::shared_ptr<AtomTable> table, std::vector<Rule> rules);

    const AtomTable& atom_table() const { return *atoms_; }
    std::shared_ptr<const AtomTable> atom_table_ptr() const { return atoms_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const AtomSet& universe() const { return universe_; }
    const AtomSet& elit() const { return elit_; }

    /// Program restricted to the given rules; its universe shrinks to the
    /// atoms of those rules (the induced bag program construction).
    Program subprogram(const std::vector<std::size_t>& rule_indices) const;

    std::string atom_name(AtomId a) const { return atoms_->name(a); }

  private:
    std::shared_ptr<const AtomTable> atoms_;
    std::vector<Rule> rules_;
    AtomSet universe_;
    AtomSet elit_;
};

/// Body literal of a plain (epistemic-free) program: `negations` counts the
/// default negations in front of the atom (0, 1 or 2).
struct PlainLiteral {
    AtomId atom = 0;
    std::uint8_t negations = 0;

    auto operator<=>(const PlainLiteral&) const = default;
};

struct PlainRule {
    AtomSet head;
    std::vector<PlainLiteral> body;  // sorted, duplicate-free

    AtomSet atoms() const;
};

/// Ground logic program with nested negation (no epistemic literals).
class PlainProgram {
  public:
    PlainProgram() : atoms_(std::make_shared<AtomTable>()) {}
    PlainProgram(std::shared_ptr<const AtomTable> table, std::vector<PlainRule> rules, AtomSet universe);

    const AtomTable& atom_table() const { return *atoms_; }
    std::shared_ptr<const AtomTable> atom_table_ptr() const { return atoms_; }
    const std::vector<PlainRule>& rules() const { return rules_; }
    const AtomSet& universe() const { return universe_; }

    bool has_negation() const;
    std::string atom_name(AtomId a) const { return atoms_->name(a); }

  private:
    std::shared_ptr<const AtomTable> atoms_;
    std::vector<PlainRule> rules_;
    AtomSet universe_;
};

std::string print_program(const Program& p);
std::string print_program(const PlainProgram& p);
std::string print_cwi(const Cwi& cwi, const AtomTable& table);

class ScopeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace elps

#endif
