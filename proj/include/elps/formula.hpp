#ifndef ELPS_FORMULA_HPP
#define ELPS_FORMULA_HPP

#include <string>
#include <string_view>
#include <vector>

#include "elps/program.hpp"

namespace elps {

/// Propositional formula over atoms with connectives !, &, | stored as a
/// flat node vector (index-linked tree).
class Formula {
  public:
    enum class Kind : std::uint8_t { Atom, Not, And, Or };

    struct Node {
        Kind kind;
        AtomId atom = 0;  // Kind::Atom
        int lhs = -1;
        int rhs = -1;
    };

    int add_atom(AtomId a);
    int add_not(int child);
    int add_binary(Kind k, int lhs, int rhs);
    void set_root(int idx) { root_ = idx; }

    bool evaluate(const AtomSet& interpretation) const;
    AtomSet atoms() const;
    bool empty() const { return nodes_.empty(); }

  private:
    bool eval_node(int idx, const AtomSet& m) const;
    std::vector<Node> nodes_;
    int root_ = -1;
};

/// Parses `!`/`&`/`|` formulas with precedence ! > & > |; atom names must
/// already exist in `table`. Throws ParseError-compatible runtime errors.
Formula parse_formula(std::string_view text, const AtomTable& table);

}  // namespace elps

#endif
