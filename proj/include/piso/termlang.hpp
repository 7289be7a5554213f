#ifndef PISO_TERMLANG_HPP
#define PISO_TERMLANG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "piso/coherence.hpp"

namespace piso {

// The surface term language of the workbench.  It extends the diagram
// term toolkit with arrow literals, joins, the polycyclic generators and
// the quasi-projection/inclusion family, all resolved against an ambient
// self-similar structure at evaluation time.
//
//   tree   := S | (tree tree)
//   expr   := (arrow :dom tree :cod tree :terms (term*))
//           | (id tree) | (tau A B C) | (tau-inv A B C) | (sigma A B)
//           | (tensor e e) | (comp e e) | (dag e) | (join e e)
//           | (zero A B) | (iota-l A B) | (iota-r A B) | (pi-l A B)
//           | (pi-r A B) | (tensor-int e e)
//           | code | decode | p | q | tau-int | sigma-int
//   term   := ((LEAF WORD) (LEAF WORD))     target pair, then source pair
//   LEAF   := quoted word over {L, R}; "" for the lone leaf of S
//   WORD   := quoted binary word
struct Expr {
  enum class Kind {
    arrow_lit,
    id,
    assoc,
    assoc_inv,
    sym,
    tensor,
    compose,
    dagger,
    join,
    assoc_internal,
    sym_internal,
    tensor_internal,
    code,
    decode,
    gen_p,
    gen_q,
    iota_l,
    iota_r,
    pi_l,
    pi_r,
    zero,
  };

  Kind kind = Kind::code;
  std::vector<Tree> trees;
  std::vector<Expr> args;
  std::optional<PrefixArrow> literal;
};

Expr parse_expr(std::string_view src);

PrefixArrow eval_expr(const Expr& e, const SelfSimilarStructure& ambient);

// The embedding into the diagram toolkit; empty for the constructors that
// only exist in the surface language (literals, joins, p/q, iota/pi, 0).
std::optional<CanonicalTerm> to_canonical(const Expr& e);

// Serialization of an arrow as an S-expression literal; parsing it back
// and evaluating reproduces the arrow exactly.
std::string arrow_sexpr(const PrefixArrow& a);

}  // namespace piso

#endif  // PISO_TERMLANG_HPP
