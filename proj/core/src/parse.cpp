#include "chsym/parse.hpp"

#include <cctype>

namespace chsym {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  bool done() const { return pos >= text.size(); }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  int integer() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected an integer", pos);
    long long v = 0;
    for (size_t i = start; i < pos; ++i) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw ParseError("entry out of range", start);
    }
    return static_cast<int>(v);
  }
  std::vector<int> row(char terminator1, char terminator2) {
    std::vector<int> out;
    if (peek() == terminator1 || peek() == terminator2) return out;
    out.push_back(integer());
    while (peek() == ',') {
      ++pos;
      out.push_back(integer());
    }
    return out;
  }
};

}  // namespace

ParsedSymbol parse_any_symbol(const std::string& text) {
  Cursor cur{text};
  bool springer = false;
  SpringerKind kind = SpringerKind::X;
  if (cur.peek() == 'X' || cur.peek() == 'Y') {
    springer = true;
    kind = cur.peek() == 'X' ? SpringerKind::X : SpringerKind::Y;
    ++cur.pos;
  }
  cur.expect('[');
  std::vector<int> top = cur.row('|', ']');
  cur.expect('|');
  std::vector<int> bottom = cur.row(']', ']');
  cur.expect(']');
  Decoration dec = Decoration::None;
  if (cur.peek() == '+') { dec = Decoration::Plus; ++cur.pos; }
  else if (cur.peek() == '-') { dec = Decoration::Minus; ++cur.pos; }
  if (!cur.done()) throw ParseError("trailing characters", cur.pos);

  try {
    if (springer) {
      if (dec != Decoration::None)
        throw ParseError("springer symbols carry no decoration", text.size());
      return validate_springer(kind, std::move(top), std::move(bottom));
    }
    if (dec != Decoration::None) {
      Symbol s(BetaSet(std::move(top)), BetaSet(std::move(bottom)),
               /*ordered=*/false, dec);
      return s;
    }
    return Symbol(BetaSet(std::move(top)), BetaSet(std::move(bottom)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

Symbol parse_symbol(const std::string& text) {
  ParsedSymbol p = parse_any_symbol(text);
  if (!std::holds_alternative<Symbol>(p))
    throw ParseError("expected a two-row symbol, got a Springer symbol", 0);
  return std::get<Symbol>(p);
}

SpringerSymbol parse_springer(const std::string& text) {
  ParsedSymbol p = parse_any_symbol(text);
  if (!std::holds_alternative<SpringerSymbol>(p))
    throw ParseError("expected a Springer symbol (X[...] or Y[...])", 0);
  return std::get<SpringerSymbol>(p);
}

std::string format_symbol(const Symbol& s) { return to_string(s); }
std::string format_springer(const SpringerSymbol& s) { return to_string(s); }

}  // namespace chsym
