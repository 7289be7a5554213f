#ifndef PISO_SAMPLER_HPP
#define PISO_SAMPLER_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "piso/coherence.hpp"
#include "piso/selfsim.hpp"

namespace piso {

// Deterministic random source.  Draws avoid std::uniform_int_distribution
// so that streams are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next(std::uint64_t bound) {  // [0, bound)
    return bound == 0 ? 0 : eng_() % bound;
  }
  bool coin() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

// Uniform over tree shapes with the given leaf count (Catalan-weighted
// split); resamples until the depth cap is met.
Tree random_tree(Rng& rng, std::size_t leaf_count, std::size_t max_depth);

// A complete prefix code of the given size: the leaf words of a random
// tree shape, 0 for L and 1 for R.
std::vector<std::string> random_code(Rng& rng, std::size_t size,
                                     std::size_t max_depth);

// A random unitary endo-arrow at S: two complete prefix codes of equal
// size matched by a random permutation.
PrefixArrow random_unitary(Rng& rng, std::size_t min_size = 2,
                           std::size_t max_size = 8,
                           std::size_t max_depth = 4);

// A random self-similar structure: the standard one twisted by a random
// unitary.
SelfSimilarStructure random_sss(Rng& rng);

// A random (generally partial) endo-arrow at S: a randomly matched code
// pair with terms dropped at random.  May be zero or the identity.
PrefixArrow random_endo(Rng& rng);

// A random single canonical rewrite step applicable at `at` (an
// associator, its inverse, or a symmetry, whiskered to some node), plus
// the tree it produces.
CanonicalTerm random_canonical_step(Rng& rng, const Tree& at, Tree* cod_out);

// A composite of `steps` random canonical steps starting at `dom`.
CanonicalTerm random_canonical_term(Rng& rng, const Tree& dom,
                                    std::size_t steps, Tree* cod_out);

// A diagram asserting equality of two random canonical paths with common
// endpoints, for cross-checking the free and model deciders.  Returns an
// empty optional when no parallel pair was found within the retry budget.
std::optional<Diagram> random_parallel_diagram(Rng& rng,
                                               std::size_t max_leaves);

}  // namespace piso

#endif  // PISO_SAMPLER_HPP
