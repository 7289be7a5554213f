#ifndef PISO_ARROW_HPP
#define PISO_ARROW_HPP

#include <string>
#include <vector>

#include "piso/tree.hpp"

namespace piso {

// One prefix-rewrite clause of a partial isomorphism between tree-indexed
// copies of the Cantor space: every point (source_leaf, source_word . w)
// is mapped to (target_leaf, target_word . w).
struct RewriteTerm {
  std::string target_leaf;
  std::string target_word;
  std::string source_leaf;
  std::string source_word;

  friend bool operator==(const RewriteTerm&, const RewriteTerm&) = default;
};

// A point of the typed Cantor space: a leaf of the object tree plus a
// finite binary word (a prefix of the infinite tail).
struct CantorPoint {
  std::string leaf;
  std::string word;

  friend bool operator==(const CantorPoint&, const CantorPoint&) = default;
};

struct ApplyOutcome {
  enum class Status {
    mapped,     // point rewritten
    outside,    // point falls outside the arrow's domain of definition
    truncated,  // word too short to select a rewrite clause
  };
  Status status = Status::outside;
  CantorPoint point;  // meaningful only when status == mapped
};

// A typed arrow of the inverse category of partial isomorphisms, stored
// as a reduced set of pairwise-orthogonal rewrite terms.  Construction
// normalizes: sibling term pairs are merged to a fixpoint and the result
// is sorted by (source_leaf, source_word), so equality of arrows is
// equality of representations.
class PrefixArrow {
 public:
  // Validates leaf paths against dom/cod, checks pairwise orthogonality
  // of the terms on both sides, and reduces.  Throws TypeError on a leaf
  // or alphabet violation, JoinError if the terms are not orthogonal.
  PrefixArrow(Tree dom, Tree cod, std::vector<RewriteTerm> terms);

  static PrefixArrow zero(const Tree& dom, const Tree& cod);
  static PrefixArrow identity(const Tree& at);

  // Canonical isomorphisms and the quasi-projection/inclusion family.
  static PrefixArrow assoc(const Tree& a, const Tree& b, const Tree& c);
  static PrefixArrow assoc_inv(const Tree& a, const Tree& b, const Tree& c);
  static PrefixArrow sym(const Tree& a, const Tree& b);
  static PrefixArrow incl_left(const Tree& x, const Tree& y);   // X -> X□Y
  static PrefixArrow incl_right(const Tree& x, const Tree& y);  // Y -> X□Y
  static PrefixArrow proj_left(const Tree& x, const Tree& y);   // X□Y -> X
  static PrefixArrow proj_right(const Tree& x, const Tree& y);  // X□Y -> Y

  const Tree& dom() const { return dom_; }
  const Tree& cod() const { return cod_; }
  const std::vector<RewriteTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PrefixArrow dagger() const;

  // f is unitary iff f†f and ff† are the two identities; equivalently the
  // source and target sides are complete prefix codes over their trees.
  bool is_unitary() const;

  // Semantic evaluation on a point; the independent oracle for the
  // symbolic operations.
  ApplyOutcome apply(const CantorPoint& p) const;

  std::string str() const;

  friend bool operator==(const PrefixArrow& a, const PrefixArrow& b) = default;

 private:
  Tree dom_;
  Tree cod_;
  std::vector<RewriteTerm> terms_;
};

// g∘f.  Throws TypeError unless cod(f) = dom(g).
PrefixArrow compose(const PrefixArrow& g, const PrefixArrow& f);

// f ⊎ g: f re-rooted under L, g under R, on both sides.
PrefixArrow tensor(const PrefixArrow& f, const PrefixArrow& g);

// Orthogonality by the equational test: g†f = 0 and gf† = 0.
bool orthogonal(const PrefixArrow& f, const PrefixArrow& g);

// f ∨ g for orthogonal f, g; throws JoinError("join undefined") otherwise.
PrefixArrow join(const PrefixArrow& f, const PrefixArrow& g);

// The natural partial order: f ⊴ g iff f = g∘f†∘f.
bool natural_leq(const PrefixArrow& f, const PrefixArrow& g);

}  // namespace piso

#endif  // PISO_ARROW_HPP
