/*
 * literals.hpp
 * ------------
 * Text literals for engine values and their canonical printers.
 *
 * Grammar (whitespace separated):
 *   element := term (('+'|'-') term)*
 *   term    := '-'? rational? factor*          (at least one of the two)
 *   rational:= int ('/' nat)?
 *   factor  := 'h^'int | 'u^'int | 'y'idx('^'nat)? | 'dy'idx
 *   matrix  := 'mat' rank '[' row (',' row)* ']'   row := '[' element (',' element)* ']'
 *   chain   := 'chain' '[' matrix (';' matrix)* ']'
 *   args    := 'args' '[' matrix (';' matrix)* ']'
 *
 * Canonical printing round-trips through the parser.
 */
#pragma once

#include <stdexcept>
#include <string>

#include "weyltrace/cyclic.hpp"

namespace weyltrace {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(l) + ":" + std::to_string(c) +
                             ": " + msg),
          line(l),
          col(c) {}
};

Form parse_form(const std::string& text, int dim);
Matrix parse_matrix(const std::string& text, int dim);
Chain parse_chain(const std::string& text, int dim);
std::vector<Matrix> parse_args(const std::string& text, int dim);

std::string to_string(const Form& f);
std::string to_string(const Matrix& m);
// Readable (not literal-grammar) rendering of a chain, for reports.
std::string to_string(const Chain& c);

}  // namespace weyltrace
