#include "piso/termlang.hpp"

#include <utility>

#include "piso/errors.hpp"
#include "piso/matrix.hpp"
#include "piso/sexpr.hpp"

namespace piso {

namespace {

Tree tree_from_sexpr(const SExpr& e) {
  if (e.kind == SExpr::Kind::symbol || e.kind == SExpr::Kind::string) {
    try {
      return Tree::parse(e.text);
    } catch (const ParseError& ex) {
      throw ParseError(e.where() + ": " + ex.what());
    }
  }
  if (e.items.size() != 2)
    throw ParseError(e.where() + ": a tree node has exactly two children");
  return Tree::pair(tree_from_sexpr(e.items[0]), tree_from_sexpr(e.items[1]));
}

std::string string_payload(const SExpr& e, const char* what) {
  if (e.kind != SExpr::Kind::string)
    throw ParseError(e.where() + ": expected a quoted " + std::string(what));
  return e.text;
}

RewriteTerm term_from_sexpr(const SExpr& e) {
  if (e.kind != SExpr::Kind::list || e.items.size() != 2 ||
      e.items[0].kind != SExpr::Kind::list || e.items[0].items.size() != 2 ||
      e.items[1].kind != SExpr::Kind::list || e.items[1].items.size() != 2)
    throw ParseError(e.where() +
                     ": a rewrite term is ((LEAF WORD) (LEAF WORD))");
  return {string_payload(e.items[0].items[0], "leaf path"),
          string_payload(e.items[0].items[1], "word"),
          string_payload(e.items[1].items[0], "leaf path"),
          string_payload(e.items[1].items[1], "word")};
}

Expr arrow_from_sexpr(const SExpr& e) {
  Tree dom, cod;
  bool have_dom = false, have_cod = false;
  std::vector<RewriteTerm> terms;
  bool have_terms = false;
  for (std::size_t i = 1; i + 1 < e.items.size(); i += 2) {
    const SExpr& key = e.items[i];
    const SExpr& val = e.items[i + 1];
    if (key.is_symbol(":dom")) {
      dom = tree_from_sexpr(val);
      have_dom = true;
    } else if (key.is_symbol(":cod")) {
      cod = tree_from_sexpr(val);
      have_cod = true;
    } else if (key.is_symbol(":terms")) {
      if (val.kind != SExpr::Kind::list)
        throw ParseError(val.where() + ": :terms takes a list");
      for (const SExpr& t : val.items) terms.push_back(term_from_sexpr(t));
      have_terms = true;
    } else {
      throw ParseError(key.where() + ": unknown arrow key");
    }
  }
  if (!have_dom || !have_cod || !have_terms || e.items.size() % 2 == 0)
    throw ParseError(e.where() + ": arrow needs :dom, :cod and :terms");
  Expr out;
  out.kind = Expr::Kind::arrow_lit;
  try {
    out.literal = PrefixArrow(std::move(dom), std::move(cod), std::move(terms));
  } catch (const Error& ex) {
    throw ParseError(e.where() + ": bad arrow literal: " + ex.what());
  }
  return out;
}

Expr expr_from_sexpr(const SExpr& e) {
  if (e.kind == SExpr::Kind::symbol) {
    Expr out;
    if (e.text == "code")
      out.kind = Expr::Kind::code;
    else if (e.text == "decode")
      out.kind = Expr::Kind::decode;
    else if (e.text == "p")
      out.kind = Expr::Kind::gen_p;
    else if (e.text == "q")
      out.kind = Expr::Kind::gen_q;
    else if (e.text == "tau-int")
      out.kind = Expr::Kind::assoc_internal;
    else if (e.text == "sigma-int")
      out.kind = Expr::Kind::sym_internal;
    else
      throw ParseError(e.where() + ": unknown term symbol '" + e.text + "'");
    return out;
  }
  if (e.kind != SExpr::Kind::list || e.items.empty() ||
      e.items[0].kind != SExpr::Kind::symbol)
    throw ParseError(e.where() + ": expected a term");
  const std::string& head = e.items[0].text;
  auto arity = [&](std::size_t n, const std::string& shape) {
    if (e.items.size() != n + 1)
      throw ParseError(e.where() + ": expected " + shape);
  };
  Expr out;
  if (head == "arrow") return arrow_from_sexpr(e);
  if (head == "id") {
    arity(1, "(id TREE)");
    out.kind = Expr::Kind::id;
    out.trees = {tree_from_sexpr(e.items[1])};
    return out;
  }
  if (head == "tau" || head == "tau-inv") {
    arity(3, "(tau A B C)");
    out.kind = head == "tau" ? Expr::Kind::assoc : Expr::Kind::assoc_inv;
    out.trees = {tree_from_sexpr(e.items[1]), tree_from_sexpr(e.items[2]),
                 tree_from_sexpr(e.items[3])};
    return out;
  }
  if (head == "sigma") {
    arity(2, "(sigma A B)");
    out.kind = Expr::Kind::sym;
    out.trees = {tree_from_sexpr(e.items[1]), tree_from_sexpr(e.items[2])};
    return out;
  }
  if (head == "zero" || head == "iota-l" || head == "iota-r" ||
      head == "pi-l" || head == "pi-r") {
    arity(2, "(" + head + " A B)");
    out.kind = head == "zero"     ? Expr::Kind::zero
               : head == "iota-l" ? Expr::Kind::iota_l
               : head == "iota-r" ? Expr::Kind::iota_r
               : head == "pi-l"   ? Expr::Kind::pi_l
                                  : Expr::Kind::pi_r;
    out.trees = {tree_from_sexpr(e.items[1]), tree_from_sexpr(e.items[2])};
    return out;
  }
  if (head == "comp" || head == "tensor" || head == "join" ||
      head == "tensor-int") {
    arity(2, "(" + head + " a b)");
    out.kind = head == "comp"     ? Expr::Kind::compose
               : head == "tensor" ? Expr::Kind::tensor
               : head == "join"   ? Expr::Kind::join
                                  : Expr::Kind::tensor_internal;
    out.args = {expr_from_sexpr(e.items[1]), expr_from_sexpr(e.items[2])};
    return out;
  }
  if (head == "dag") {
    arity(1, "(dag a)");
    out.kind = Expr::Kind::dagger;
    out.args = {expr_from_sexpr(e.items[1])};
    return out;
  }
  throw ParseError(e.where() + ": unknown term head '" + head + "'");
}

}  // namespace

Expr parse_expr(std::string_view src) {
  return expr_from_sexpr(parse_sexpr(src));
}

PrefixArrow eval_expr(const Expr& e, const SelfSimilarStructure& ambient) {
  using K = Expr::Kind;
  const Tree S = Tree::leaf();
  switch (e.kind) {
    case K::arrow_lit:
      return *e.literal;
    case K::id:
      return PrefixArrow::identity(e.trees[0]);
    case K::assoc:
      return PrefixArrow::assoc(e.trees[0], e.trees[1], e.trees[2]);
    case K::assoc_inv:
      return PrefixArrow::assoc_inv(e.trees[0], e.trees[1], e.trees[2]);
    case K::sym:
      return PrefixArrow::sym(e.trees[0], e.trees[1]);
    case K::tensor:
      return tensor(eval_expr(e.args[0], ambient), eval_expr(e.args[1], ambient));
    case K::compose:
      return compose(eval_expr(e.args[0], ambient), eval_expr(e.args[1], ambient));
    case K::dagger:
      return eval_expr(e.args[0], ambient).dagger();
    case K::join:
      return join(eval_expr(e.args[0], ambient), eval_expr(e.args[1], ambient));
    case K::assoc_internal:
      return induced_isos(ambient).tau;
    case K::sym_internal:
      return induced_isos(ambient).sigma;
    case K::tensor_internal:
      return internalize(eval_expr(e.args[0], ambient),
                         eval_expr(e.args[1], ambient), ambient);
    case K::code:
      return ambient.code();
    case K::decode:
      return ambient.decode();
    case K::gen_p:
      return embed_p2(ambient).p;
    case K::gen_q:
      return embed_p2(ambient).q;
    case K::iota_l:
      return PrefixArrow::incl_left(e.trees[0], e.trees[1]);
    case K::iota_r:
      return PrefixArrow::incl_right(e.trees[0], e.trees[1]);
    case K::pi_l:
      return PrefixArrow::proj_left(e.trees[0], e.trees[1]);
    case K::pi_r:
      return PrefixArrow::proj_right(e.trees[0], e.trees[1]);
    case K::zero:
      return PrefixArrow::zero(e.trees[0], e.trees[1]);
  }
  throw TypeError("unknown expression");
}

std::optional<CanonicalTerm> to_canonical(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::id:
      return CanonicalTerm::make_id(e.trees[0]);
    case K::assoc:
      return CanonicalTerm::make_assoc(e.trees[0], e.trees[1], e.trees[2]);
    case K::assoc_inv:
      return CanonicalTerm::make_assoc_inv(e.trees[0], e.trees[1], e.trees[2]);
    case K::sym:
      return CanonicalTerm::make_sym(e.trees[0], e.trees[1]);
    case K::tensor:
    case K::tensor_internal: {
      auto a = to_canonical(e.args[0]);
      auto b = to_canonical(e.args[1]);
      if (!a || !b) return std::nullopt;
      return e.kind == K::tensor
                 ? CanonicalTerm::make_tensor(std::move(*a), std::move(*b))
                 : CanonicalTerm::make_tensor_internal(std::move(*a),
                                                       std::move(*b));
    }
    case K::compose: {
      auto a = to_canonical(e.args[0]);
      auto b = to_canonical(e.args[1]);
      if (!a || !b) return std::nullopt;
      return CanonicalTerm::make_compose(std::move(*a), std::move(*b));
    }
    case K::dagger: {
      auto a = to_canonical(e.args[0]);
      if (!a) return std::nullopt;
      return CanonicalTerm::make_dagger(std::move(*a));
    }
    case K::assoc_internal:
      return CanonicalTerm::make_internal(CanonicalTerm::Kind::assoc_internal);
    case K::sym_internal:
      return CanonicalTerm::make_internal(CanonicalTerm::Kind::sym_internal);
    case K::code:
      return CanonicalTerm::make_internal(CanonicalTerm::Kind::code);
    case K::decode:
      return CanonicalTerm::make_internal(CanonicalTerm::Kind::decode);
    default:
      return std::nullopt;
  }
}

std::string arrow_sexpr(const PrefixArrow& a) {
  std::string out = "(arrow :dom " + a.dom().str() + " :cod " + a.cod().str() +
                    " :terms (";
  bool first = true;
  for (const RewriteTerm& t : a.terms()) {
    if (!first) out += " ";
    first = false;
    out += "((\"" + t.target_leaf + "\" \"" + t.target_word + "\") (\"" +
           t.source_leaf + "\" \"" + t.source_word + "\"))";
  }
  return out + "))";
}

}  // namespace piso
