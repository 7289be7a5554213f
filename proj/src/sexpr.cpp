#include "piso/sexpr.hpp"

#include "piso/errors.hpp"

namespace piso {

namespace {

struct Reader {
  std::string_view src;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(std::to_string(line) + ":" + std::to_string(col) + ": " +
                     msg);
  }

  bool eof() const { return pos >= src.size(); }

  char peek() const { return src[pos]; }

  char take() {
    char c = src[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == ';') {  // comment to end of line
        while (!eof() && peek() != '\n') take();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        take();
      } else {
        break;
      }
    }
  }

  static bool symbol_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '-' || c == '_' || c == ':';
  }

  SExpr read() {
    skip_ws();
    if (eof()) fail("unexpected end of input");
    SExpr e;
    e.line = line;
    e.col = col;
    char c = peek();
    if (c == '(') {
      take();
      e.kind = SExpr::Kind::list;
      for (;;) {
        skip_ws();
        if (eof()) fail("unterminated list");
        if (peek() == ')') {
          take();
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (c == '"') {
      take();
      e.kind = SExpr::Kind::string;
      while (!eof() && peek() != '"') {
        if (peek() == '\n') fail("newline in string literal");
        e.text.push_back(take());
      }
      if (eof()) fail("unterminated string literal");
      take();
      return e;
    }
    if (c == ')') fail("unexpected ')'");
    if (!symbol_char(c)) fail(std::string("unexpected character '") + c + "'");
    e.kind = SExpr::Kind::symbol;
    while (!eof() && symbol_char(peek())) e.text.push_back(take());
    return e;
  }
};

}  // namespace

SExpr parse_sexpr(std::string_view src) {
  Reader r{src};
  SExpr e = r.read();
  r.skip_ws();
  if (!r.eof()) r.fail("trailing input after expression");
  return e;
}

std::string print_sexpr(const SExpr& e) {
  switch (e.kind) {
    case SExpr::Kind::symbol:
      return e.text;
    case SExpr::Kind::string:
      return "\"" + e.text + "\"";
    case SExpr::Kind::list: {
      std::string out = "(";
      for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) out += " ";
        out += print_sexpr(e.items[i]);
      }
      return out + ")";
    }
  }
  return "";
}

}  // namespace piso
