#ifndef ELPS_PARSER_HPP
#define ELPS_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "elps/program.hpp"

namespace elps {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, int line, int column)
        : std::runtime_error(message + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line(line),
          column(column) {}

    int line;
    int column;
};

/// Parses program text. Atoms are interned in first textual occurrence
/// order; duplicate rules are preserved as written.
///
/// Grammar ('%' starts a comment, whitespace-insensitive):
///   program  := { rule }
///   rule     := [ head ] [ ":-" body ] "."
///   head     := atom { "|" atom }
///   body     := bodylit { "," bodylit }
///   bodylit  := [ "~" ] [ "not" ] [ "~" ] atom    (trailing "~" only after "not")
///   atom     := /[a-z][A-Za-z0-9_]*/ [ "(" const { "," const } ")" ]
///   const    := /[a-z0-9_]+/
Program parse_program(std::string_view text);

}  // namespace elps

#endif
