#include "elps/formula.hpp"

#include <cctype>
#include <stdexcept>

namespace elps {

int Formula::add_atom(AtomId a) {
    nodes_.push_back({Kind::Atom, a, -1, -1});
    return static_cast<int>(nodes_.size()) - 1;
}

int Formula::add_not(int child) {
    nodes_.push_back({Kind::Not, 0, child, -1});
    return static_cast<int>(nodes_.size()) - 1;
}

int Formula::add_binary(Kind k, int lhs, int rhs) {
    nodes_.push_back({k, 0, lhs, rhs});
    return static_cast<int>(nodes_.size()) - 1;
}

bool Formula::evaluate(const AtomSet& m) const {
    if (root_ < 0)
        throw std::logic_error("evaluate: empty formula");
    return eval_node(root_, m);
}

bool Formula::eval_node(int idx, const AtomSet& m) const {
    const Node& n = nodes_.at(idx);
    switch (n.kind) {
        case Kind::Atom: return sorted_contains(m, n.atom);
        case Kind::Not: return !eval_node(n.lhs, m);
        case Kind::And: return eval_node(n.lhs, m) && eval_node(n.rhs, m);
        case Kind::Or: return eval_node(n.lhs, m) || eval_node(n.rhs, m);
    }
    return false;
}

AtomSet Formula::atoms() const {
    AtomSet out;
    for (const Node& n : nodes_)
        if (n.kind == Kind::Atom)
            out.push_back(n.atom);
    sort_unique(out);
    return out;
}

namespace {

class FormulaParser {
  public:
    FormulaParser(std::string_view text, const AtomTable& table) : text_(text), table_(table) {}

    Formula parse() {
        int root = parse_or();
        skip_ws();
        if (pos_ < text_.size())
            throw std::runtime_error("formula: trailing input at position " + std::to_string(pos_));
        formula_.set_root(root);
        return std::move(formula_);
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    int parse_or() {
        int lhs = parse_and();
        while (eat('|'))
            lhs = formula_.add_binary(Formula::Kind::Or, lhs, parse_and());
        return lhs;
    }

    int parse_and() {
        int lhs = parse_unary();
        while (eat('&'))
            lhs = formula_.add_binary(Formula::Kind::And, lhs, parse_unary());
        return lhs;
    }

    int parse_unary() {
        if (eat('!'))
            return formula_.add_not(parse_unary());
        if (eat('(')) {
            int inner = parse_or();
            if (!eat(')'))
                throw std::runtime_error("formula: expected ')'");
            return inner;
        }
        return parse_atom();
    }

    int parse_atom() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == ')' ||
                c == ',') {
                // allow parenthesised argument lists inside atom names
                if (c == ')' && depth_ == 0)
                    break;
                if (c == '(')
                    ++depth_;
                if (c == ')')
                    --depth_;
                ++pos_;
            } else {
                break;
            }
        }
        if (start == pos_)
            throw std::runtime_error("formula: expected atom at position " + std::to_string(start));
        std::string name(text_.substr(start, pos_ - start));
        if (!table_.contains(name))
            throw std::runtime_error("formula: unknown atom '" + name + "'");
        return formula_.add_atom(table_.id_of(name));
    }

    std::string_view text_;
    const AtomTable& table_;
    std::size_t pos_ = 0;
    int depth_ = 0;
    Formula formula_;
};

}  // namespace

Formula parse_formula(std::string_view text, const AtomTable& table) {
    return FormulaParser(text, table).parse();
}

}  // namespace elps
