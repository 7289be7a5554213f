#ifndef PISO_SELFSIM_HPP
#define PISO_SELFSIM_HPP

#include <string>
#include <vector>

#include "piso/arrow.hpp"

namespace piso {

// A dagger self-similar structure at S: a unitary code arrow S□S -> S
// together with its dagger as decode.
class SelfSimilarStructure {
 public:
  // Throws TypeError unless code: S□S -> S, ValueError unless unitary.
  explicit SelfSimilarStructure(PrefixArrow code);

  // code 0w <- (L,w), 1w <- (R,w): the evident witness in this model.
  static SelfSimilarStructure standard();

  const PrefixArrow& code() const { return code_; }
  const PrefixArrow& decode() const { return decode_; }

  friend bool operator==(const SelfSimilarStructure&,
                         const SelfSimilarStructure&) = default;

 private:
  PrefixArrow code_;
  PrefixArrow decode_;
};

// (S, U code, decode U†) for a unitary U: S -> S.
SelfSimilarStructure from_unitary(const PrefixArrow& u,
                                  const SelfSimilarStructure& base);

// The unique unitary U with b.code = U ∘ a.code, namely b.code ∘ a.decode.
PrefixArrow unique_unitary(const SelfSimilarStructure& a,
                           const SelfSimilarStructure& b);

// The internalised tensor on endo-arrows at S: code ∘ (f ⊎ g) ∘ decode.
PrefixArrow internalize(const PrefixArrow& f, const PrefixArrow& g,
                        const SelfSimilarStructure& s);

// The associativity and symmetry isomorphisms induced on the endomorphism
// monoid of S by the internalised tensor.
struct InducedIsos {
  PrefixArrow tau;    // code (code ⊎ 1) assoc (1 ⊎ decode) decode
  PrefixArrow sigma;  // code sym decode
};
InducedIsos induced_isos(const SelfSimilarStructure& s);

struct LawCheck {
  std::string name;
  bool ok = false;
  std::string lhs;
  std::string rhs;
};

struct LawReport {
  std::vector<LawCheck> checks;
  bool all_ok() const;
};

// The four classical-structure conditions that a dagger self-similar
// structure satisfies up to its induced isomorphisms: lax associativity,
// lax Frobenius, the classical structure condition code∘decode = 1, and
// lax symmetry.
LawReport check_classical_laws(const SelfSimilarStructure& s);

// True iff the induced associator differs from the identity.  In this
// model S is not a unit object, so this holds for every structure.
bool nontrivial_internal_assoc(const SelfSimilarStructure& s);

// The strict Frobenius square decode∘code = (1 ⊎ code) assoc⁻¹ (decode ⊎ 1),
// which forces the associator to be trivial and so never holds here.
bool restrictive_frobenius_holds(const SelfSimilarStructure& s);

}  // namespace piso

#endif  // PISO_SELFSIM_HPP
