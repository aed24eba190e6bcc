#pragma once

/*
  parse.hpp

  Text grammar for symbols:

      symbol     := kind? '[' row '|' row ']' decoration?
      kind       := 'X' | 'Y'          (Springer symbols)
      row        := eps | int (',' int)*
      decoration := '+' | '-'

  Rows need not be pre-sorted on input; they are sorted and validated on
  parse.  Parsing is the left inverse of formatting.
*/

#include <stdexcept>
#include <string>
#include <variant>

#include "chsym/springer.hpp"
#include "chsym/symbol.hpp"

namespace chsym {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  size_t pos;
};

using ParsedSymbol = std::variant<Symbol, SpringerSymbol>;

ParsedSymbol parse_any_symbol(const std::string& text);
Symbol parse_symbol(const std::string& text);
SpringerSymbol parse_springer(const std::string& text);

std::string format_symbol(const Symbol& s);
std::string format_springer(const SpringerSymbol& s);

}  // namespace chsym
