#ifndef PISO_TEST_DIAGRAMS_HPP
#define PISO_TEST_DIAGRAMS_HPP

#include "piso/coherence.hpp"

namespace piso_test {

using piso::CanonicalTerm;
using piso::Diagram;
using piso::Tree;

// The pentagon for associativity at objects (a, b, c, d).
inline Diagram pentagon_diagram(const Tree& a, const Tree& b, const Tree& c,
                                const Tree& d) {
  using CT = CanonicalTerm;
  Diagram g;
  g.nodes = {
      {"n0", Tree::pair(a, Tree::pair(b, Tree::pair(c, d)))},
      {"n1", Tree::pair(Tree::pair(a, b), Tree::pair(c, d))},
      {"n2", Tree::pair(Tree::pair(Tree::pair(a, b), c), d)},
      {"n3", Tree::pair(a, Tree::pair(Tree::pair(b, c), d))},
      {"n4", Tree::pair(Tree::pair(a, Tree::pair(b, c)), d)},
  };
  g.edges = {
      {"n0", "n1", CT::make_assoc(a, b, Tree::pair(c, d))},
      {"n1", "n2", CT::make_assoc(Tree::pair(a, b), c, d)},
      {"n0", "n3", CT::make_tensor(CT::make_id(a), CT::make_assoc(b, c, d))},
      {"n3", "n4", CT::make_assoc(a, Tree::pair(b, c), d)},
      {"n4", "n2", CT::make_tensor(CT::make_assoc(a, b, c), CT::make_id(d))},
  };
  g.asserts = {{{0, 1}, {2, 3, 4}}};
  return g;
}

// The hexagon for symmetry and associativity at objects (a, b, c).
inline Diagram hexagon_diagram(const Tree& a, const Tree& b, const Tree& c) {
  using CT = CanonicalTerm;
  Diagram g;
  g.nodes = {
      {"n0", Tree::pair(a, Tree::pair(b, c))},
      {"n1", Tree::pair(Tree::pair(a, b), c)},
      {"n2", Tree::pair(c, Tree::pair(a, b))},
      {"n3", Tree::pair(Tree::pair(c, a), b)},
      {"n4", Tree::pair(a, Tree::pair(c, b))},
      {"n5", Tree::pair(Tree::pair(a, c), b)},
  };
  g.edges = {
      {"n0", "n1", CT::make_assoc(a, b, c)},
      {"n1", "n2", CT::make_sym(Tree::pair(a, b), c)},
      {"n2", "n3", CT::make_assoc(c, a, b)},
      {"n0", "n4", CT::make_tensor(CT::make_id(a), CT::make_sym(b, c))},
      {"n4", "n5", CT::make_assoc(a, c, b)},
      {"n5", "n3", CT::make_tensor(CT::make_sym(a, c), CT::make_id(b))},
  };
  g.asserts = {{{0, 1, 2}, {3, 4, 5}}};
  return g;
}

// The lax associativity square of a self-similar structure as a mixed
// diagram: code (code ⊎ 1) assoc = assoc_int code (1 ⊎ code).
inline Diagram lax_assoc_diagram() {
  using CT = CanonicalTerm;
  using K = CanonicalTerm::Kind;
  const Tree S = Tree::leaf();
  const Tree SS = Tree::pair(S, S);
  Diagram g;
  g.nodes = {{"n0", Tree::pair(S, SS)}, {"n1", Tree::pair(SS, S)},
             {"n2", SS},               {"n3", std::nullopt},
             {"n4", std::nullopt},     {"n5", SS}};
  g.edges = {
      {"n0", "n1", CT::make_assoc(S, S, S)},
      {"n1", "n2", CT::make_tensor(CT::make_internal(K::code), CT::make_id(S))},
      {"n2", "n4", CT::make_internal(K::code)},
      {"n0", "n5", CT::make_tensor(CT::make_id(S), CT::make_internal(K::code))},
      {"n5", "n3", CT::make_internal(K::code)},
      {"n3", "n4", CT::make_internal(K::assoc_internal)},
  };
  g.asserts = {{{0, 1, 2}, {3, 4, 5}}};
  return g;
}

// The lax Frobenius square as a mixed diagram:
// decode assoc_int† code = (1 ⊎ code) assoc⁻¹ (decode ⊎ 1).
inline Diagram lax_frobenius_diagram() {
  using CT = CanonicalTerm;
  using K = CanonicalTerm::Kind;
  const Tree S = Tree::leaf();
  const Tree SS = Tree::pair(S, S);
  Diagram g;
  g.nodes = {{"n0", SS},
             {"n1", std::nullopt},
             {"n2", std::nullopt},
             {"n3", SS},
             {"n4", Tree::pair(SS, S)},
             {"n5", Tree::pair(S, SS)}};
  g.edges = {
      {"n0", "n1", CT::make_internal(K::code)},
      {"n1", "n2", CT::make_dagger(CT::make_internal(K::assoc_internal))},
      {"n2", "n3", CT::make_internal(K::decode)},
      {"n0", "n4", CT::make_tensor(CT::make_internal(K::decode), CT::make_id(S))},
      {"n4", "n5", CT::make_assoc_inv(S, S, S)},
      {"n5", "n3", CT::make_tensor(CT::make_id(S), CT::make_internal(K::code))},
  };
  g.asserts = {{{0, 1, 2}, {3, 4, 5}}};
  return g;
}

}  // namespace piso_test

#endif  // PISO_TEST_DIAGRAMS_HPP
