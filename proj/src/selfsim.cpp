#include "piso/selfsim.hpp"

#include <utility>

#include "piso/errors.hpp"

namespace piso {

namespace {

const Tree& leaf_tree() {
  static const Tree t = Tree::leaf();
  return t;
}

const Tree& pair_tree() {
  static const Tree t = Tree::pair(Tree::leaf(), Tree::leaf());
  return t;
}

void require_endo(const PrefixArrow& f, const char* what) {
  if (!(f.dom() == leaf_tree()) || !(f.cod() == leaf_tree()))
    throw TypeError(std::string(what) + " must be an endo-arrow at S, got " +
                    f.dom().str() + " -> " + f.cod().str());
}

}  // namespace

SelfSimilarStructure::SelfSimilarStructure(PrefixArrow code)
    : code_(std::move(code)), decode_(code_.dagger()) {
  if (!(code_.dom() == pair_tree()) || !(code_.cod() == leaf_tree()))
    throw TypeError("code must have type S□S -> S, got " + code_.dom().str() +
                    " -> " + code_.cod().str());
  if (!code_.is_unitary())
    throw ValueError("code arrow is not unitary: " + code_.str());
}

SelfSimilarStructure SelfSimilarStructure::standard() {
  return SelfSimilarStructure(PrefixArrow(
      pair_tree(), leaf_tree(), {{"", "0", "L", ""}, {"", "1", "R", ""}}));
}

SelfSimilarStructure from_unitary(const PrefixArrow& u,
                                  const SelfSimilarStructure& base) {
  require_endo(u, "twisting arrow");
  if (!u.is_unitary())
    throw ValueError("twisting arrow is not unitary: " + u.str());
  return SelfSimilarStructure(compose(u, base.code()));
}

PrefixArrow unique_unitary(const SelfSimilarStructure& a,
                           const SelfSimilarStructure& b) {
  return compose(b.code(), a.decode());
}

PrefixArrow internalize(const PrefixArrow& f, const PrefixArrow& g,
                        const SelfSimilarStructure& s) {
  require_endo(f, "left factor");
  require_endo(g, "right factor");
  return compose(s.code(), compose(tensor(f, g), s.decode()));
}

InducedIsos induced_isos(const SelfSimilarStructure& s) {
  const Tree& S = leaf_tree();
  const PrefixArrow one = PrefixArrow::identity(S);
  PrefixArrow tau = compose(
      s.code(),
      compose(tensor(s.code(), one),
              compose(PrefixArrow::assoc(S, S, S),
                      compose(tensor(one, s.decode()), s.decode()))));
  PrefixArrow sigma =
      compose(s.code(), compose(PrefixArrow::sym(S, S), s.decode()));
  return {std::move(tau), std::move(sigma)};
}

bool LawReport::all_ok() const {
  for (const LawCheck& c : checks)
    if (!c.ok) return false;
  return true;
}

LawReport check_classical_laws(const SelfSimilarStructure& s) {
  const Tree& S = leaf_tree();
  const PrefixArrow one = PrefixArrow::identity(S);
  const InducedIsos ind = induced_isos(s);
  const PrefixArrow tau = PrefixArrow::assoc(S, S, S);

  LawReport report;
  auto record = [&report](std::string name, const PrefixArrow& lhs,
                          const PrefixArrow& rhs) {
    report.checks.push_back({std::move(name), lhs == rhs, lhs.str(), rhs.str()});
  };

  record("lax associativity",
         compose(s.code(), compose(tensor(s.code(), one), tau)),
         compose(ind.tau, compose(s.code(), tensor(one, s.code()))));
  record("lax Frobenius",
         compose(s.decode(), compose(ind.tau.dagger(), s.code())),
         compose(tensor(one, s.code()),
                 compose(tau.dagger(), tensor(s.decode(), one))));
  record("classical structure condition", compose(s.code(), s.decode()), one);
  record("lax symmetry", compose(PrefixArrow::sym(S, S), s.decode()),
         compose(s.decode(), ind.sigma));
  return report;
}

bool nontrivial_internal_assoc(const SelfSimilarStructure& s) {
  return !(induced_isos(s).tau == PrefixArrow::identity(leaf_tree()));
}

bool restrictive_frobenius_holds(const SelfSimilarStructure& s) {
  const Tree& S = leaf_tree();
  const PrefixArrow one = PrefixArrow::identity(S);
  PrefixArrow lhs = compose(s.decode(), s.code());
  PrefixArrow rhs = compose(
      tensor(one, s.code()),
      compose(PrefixArrow::assoc(S, S, S).dagger(), tensor(s.decode(), one)));
  return lhs == rhs;
}

}  // namespace piso
