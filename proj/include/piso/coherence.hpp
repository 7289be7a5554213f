#ifndef PISO_COHERENCE_HPP
#define PISO_COHERENCE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "piso/errors.hpp"
#include "piso/selfsim.hpp"

namespace piso {

// AST of arrows over the mixed toolkit: the typed canonical isomorphisms
// of the free category on binary trees, the code/decode pair, and the
// untyped (one-object) internalised tensor with its induced associator
// and symmetry.
struct CanonicalTerm {
  enum class Kind {
    id,               // Id(A)
    assoc,            // A□(B□C) -> (A□B)□C
    assoc_inv,        // (A□B)□C -> A□(B□C)
    sym,              // A□B -> B□A
    tensor,           // typed □ on arrows
    compose,          // args[0] ∘ args[1]
    dagger,           //
    assoc_internal,   // induced associator, S -> S
    sym_internal,     // induced symmetry, S -> S
    tensor_internal,  // internalised tensor of two endo-arrows
    code,             // S□S -> S
    decode,           // S -> S□S
  };

  Kind kind = Kind::id;
  std::vector<Tree> trees;          // id: 1, assoc/assoc_inv: 3, sym: 2
  std::vector<CanonicalTerm> args;  // tensor/compose/tensor_internal: 2, dagger: 1

  static CanonicalTerm make_id(Tree a);
  static CanonicalTerm make_assoc(Tree a, Tree b, Tree c);
  static CanonicalTerm make_assoc_inv(Tree a, Tree b, Tree c);
  static CanonicalTerm make_sym(Tree a, Tree b);
  static CanonicalTerm make_tensor(CanonicalTerm f, CanonicalTerm g);
  static CanonicalTerm make_compose(CanonicalTerm g, CanonicalTerm f);  // g∘f
  static CanonicalTerm make_dagger(CanonicalTerm f);
  static CanonicalTerm make_internal(Kind k);  // assoc_internal / sym_internal / code / decode
  static CanonicalTerm make_tensor_internal(CanonicalTerm f, CanonicalTerm g);

  std::string str() const;
};

// (domain tree, codomain tree); throws TypeError on ill-typed composites.
std::pair<Tree, Tree> term_type(const CanonicalTerm& t);

// Evaluation in the concrete model, with code/decode and the internal
// constructors read off the given structure.
PrefixArrow eval_term(const CanonicalTerm& t, const SelfSimilarStructure& s);

// The instantiation functor: evaluation restricted to terms without the
// internal (one-object) constructors.  Throws ValueError otherwise.
PrefixArrow inst(const CanonicalTerm& t, const SelfSimilarStructure& s);

// Generalised code arrow X -> S: identity at S, code ∘ (genCode(A) ⊎
// genCode(B)) at A□B; always unitary.
PrefixArrow gen_code(const Tree& x, const SelfSimilarStructure& s);
PrefixArrow gen_decode(const Tree& x, const SelfSimilarStructure& s);

// The convolution functor to endo-arrows at S:
// phi(f: X -> Y) = genCode(Y) ∘ eval(f) ∘ genDecode(X).
PrefixArrow phi(const CanonicalTerm& t, const SelfSimilarStructure& s);

// The bijection of leaves induced by a term of the purely canonical typed
// fragment (id/assoc/assoc_inv/sym/tensor/compose/dagger).  Two parallel
// canonical arrows are equal iff their permutations coincide (MacLane
// coherence for symmetry and associativity).
using LeafPerm = std::map<std::string, std::string>;
LeafPerm leaf_permutation(const CanonicalTerm& t);

// Raised by leaf_permutation on internal / code / decode constructors.
struct NotCanonical : Error {
  using Error::Error;
};

// --- diagrams -------------------------------------------------------------

struct DiagramNode {
  std::string id;
  std::optional<Tree> tree;  // nullopt = the untyped object S
};

struct DiagramEdge {
  std::string src;
  std::string dst;
  CanonicalTerm term;
};

using Path = std::vector<std::size_t>;  // edge indices, first-travelled first

struct DiagramAssert {
  Path lhs;
  Path rhs;
};

struct Diagram {
  std::vector<DiagramNode> nodes;
  std::vector<DiagramEdge> edges;
  std::vector<DiagramAssert> asserts;
};

// Structural validation: ids resolve, paths are nonempty chains, asserted
// path pairs share endpoints.  Throws ValueError.
void validate(const Diagram& d);

enum class Verdict {
  commutes,
  fails,
  not_applicable,
};

struct CheckOutcome {
  Verdict verdict = Verdict::not_applicable;
  std::string detail;
};

// Decision by MacLane coherence on the canonical typed fragment: parallel
// paths commute iff their leaf permutations agree.  Diagrams containing
// untyped nodes or non-canonical edges are reported not_applicable.
CheckOutcome check_free(const Diagram& d);

// Complete decision in the concrete model: evaluates every path to a
// normal form and compares.
CheckOutcome check_model(const Diagram& d, const SelfSimilarStructure& s);

struct LiftResult {
  bool certified = false;
  std::optional<Diagram> witness;  // canonical typed diagram when certified
  std::string detail;
};

// Searches for a typing of the diagram by trees, and canonical typed
// replacements for its edges (internal associator -> assoc, internal
// symmetry -> sym, internalised tensor -> tensor, code/decode -> id),
// such that the resulting free diagram commutes; that certifies the
// original.  Node trees are bounded by `bound` leaves; assignments are
// enumerated by iterative deepening on total leaf count and the first
// certified witness is returned.  Sound but not complete.
LiftResult lift_diagram(const Diagram& d, std::size_t bound);

}  // namespace piso

#endif  // PISO_COHERENCE_HPP
