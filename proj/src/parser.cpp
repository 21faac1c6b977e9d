#include "elps/parser.hpp"

#include <cctype>

namespace elps {

namespace {

enum class Tok { Word, Pipe, Comma, Arrow, Dot, Tilde, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= text_.size())
            return {Tok::End, "", line, col};
        char c = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                word.push_back(text_[pos_]);
                advance();
            }
            return {Tok::Word, word, line, col};
        }
        switch (c) {
            case '|': advance(); return {Tok::Pipe, "|", line, col};
            case ',': advance(); return {Tok::Comma, ",", line, col};
            case '.': advance(); return {Tok::Dot, ".", line, col};
            case '~': advance(); return {Tok::Tilde, "~", line, col};
            case '(': advance(); return {Tok::LParen, "(", line, col};
            case ')': advance(); return {Tok::RParen, ")", line, col};
            case ':':
                advance();
                if (pos_ < text_.size() && text_[pos_] == '-') {
                    advance();
                    return {Tok::Arrow, ":-", line, col};
                }
                throw ParseError("expected '-' after ':'", line_, col_);
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

  private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : lexer_(text), table_(std::make_shared<AtomTable>()) {
        consume();
    }

    Program parse() {
        std::vector<Rule> rules;
        while (cur_.kind != Tok::End)
            rules.push_back(parse_rule());
        return Program::from_table(std::move(table_), std::move(rules));
    }

  private:
    void consume() { cur_ = lexer_.next(); }

    void expect(Tok kind, const char* what) {
        if (cur_.kind != kind)
            throw ParseError(std::string("expected ") + what, cur_.line, cur_.column);
        consume();
    }

    bool word_is(const char* w) const { return cur_.kind == Tok::Word && cur_.text == w; }

    AtomId parse_atom() {
        if (cur_.kind != Tok::Word)
            throw ParseError("expected atom", cur_.line, cur_.column);
        if (cur_.text == "not")
            throw ParseError("reserved word 'not' used as atom name", cur_.line, cur_.column);
        validate_atom_name(cur_.text, cur_.line, cur_.column);
        std::string name = cur_.text;
        consume();
        if (cur_.kind == Tok::LParen) {
            consume();
            name.push_back('(');
            name += parse_const();
            while (cur_.kind == Tok::Comma) {
                consume();
                name.push_back(',');
                name += parse_const();
            }
            expect(Tok::RParen, "')'");
            name.push_back(')');
        }
        return table_->intern(name);
    }

    std::string parse_const() {
        if (cur_.kind != Tok::Word)
            throw ParseError("expected constant", cur_.line, cur_.column);
        for (char c : cur_.text)
            if (!(std::islower(static_cast<unsigned char>(c)) ||
                  std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
                throw ParseError("invalid constant '" + cur_.text + "'", cur_.line, cur_.column);
        std::string s = cur_.text;
        consume();
        return s;
    }

    static void validate_atom_name(const std::string& name, int line, int col) {
        if (!std::islower(static_cast<unsigned char>(name[0])))
            throw ParseError("atom must start with a lowercase letter", line, col);
    }

    BodyLiteral parse_body_literal() {
        BodyLiteral lit;
        if (cur_.kind == Tok::Tilde) {
            consume();
            lit.outer_neg = true;
        }
        if (word_is("not")) {
            consume();
            lit.epistemic = true;
            if (cur_.kind == Tok::Tilde) {
                consume();
                lit.inner_neg = true;
            }
        } else if (cur_.kind == Tok::Tilde) {
            throw ParseError("inner '~' without preceding 'not'", cur_.line, cur_.column);
        }
        lit.atom = parse_atom();
        return lit;
    }

    Rule parse_rule() {
        Rule rule;
        if (cur_.kind == Tok::Word) {
            rule.head.push_back(parse_atom());
            while (cur_.kind == Tok::Pipe) {
                consume();
                rule.head.push_back(parse_atom());
            }
        }
        if (cur_.kind == Tok::Arrow) {
            consume();
            rule.body.push_back(parse_body_literal());
            while (cur_.kind == Tok::Comma) {
                consume();
                rule.body.push_back(parse_body_literal());
            }
        }
        expect(Tok::Dot, "'.'");
        rule.finalize();
        return rule;
    }

    Lexer lexer_;
    Token cur_{Tok::End, "", 0, 0};
    std::shared_ptr<AtomTable> table_;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).parse(); }

}  // namespace elps
