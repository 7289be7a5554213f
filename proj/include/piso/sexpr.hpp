#ifndef PISO_SEXPR_HPP
#define PISO_SEXPR_HPP

#include <string>
#include <string_view>
#include <vector>

namespace piso {

// Minimal S-expression reader: symbols, quoted strings, and lists.
struct SExpr {
  enum class Kind { symbol, string, list };
  Kind kind = Kind::symbol;
  std::string text;          // symbol or string payload
  std::vector<SExpr> items;  // list payload
  int line = 0;
  int col = 0;

  bool is_symbol(std::string_view s) const {
    return kind == Kind::symbol && text == s;
  }
  std::string where() const {
    return std::to_string(line) + ":" + std::to_string(col);
  }
};

// Parses exactly one expression; ParseError carries line:column.
SExpr parse_sexpr(std::string_view src);

std::string print_sexpr(const SExpr& e);

}  // namespace piso

#endif  // PISO_SEXPR_HPP
