#ifndef PISO_FINITE_HPP
#define PISO_FINITE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace piso {

// Finite ordered set of small naturals; carriers for the brute-force
// model of the inverse category of partial isomorphisms.
struct FiniteSet {
  std::vector<std::uint8_t> elems;  // strictly increasing

  static FiniteSet range(std::size_t n);  // {0, .., n-1}
  bool contains(std::uint8_t x) const;
  std::size_t size() const { return elems.size(); }

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
};

// A partial isomorphism between finite sets: a graph of (target, source)
// pairs that is single-valued and injective in both directions.
class FinPIso {
 public:
  FinPIso(FiniteSet dom, FiniteSet cod,
          std::vector<std::pair<std::uint8_t, std::uint8_t>> graph);

  static FinPIso identity(const FiniteSet& at);
  static FinPIso zero(const FiniteSet& dom, const FiniteSet& cod);

  const FiniteSet& dom() const { return dom_; }
  const FiniteSet& cod() const { return cod_; }
  const std::vector<std::pair<std::uint8_t, std::uint8_t>>& graph() const {
    return graph_;
  }

  FinPIso dagger() const;
  bool is_idempotent() const;
  bool is_iso() const;  // total and surjective
  std::string str() const;

  friend bool operator==(const FinPIso&, const FinPIso&) = default;

 private:
  FiniteSet dom_;
  FiniteSet cod_;
  // sorted by source element
  std::vector<std::pair<std::uint8_t, std::uint8_t>> graph_;
};

FinPIso compose(const FinPIso& g, const FinPIso& f);
FinPIso join(const FinPIso& f, const FinPIso& g);  // throws JoinError
FinPIso meet(const FinPIso& f, const FinPIso& g);
bool natural_leq(const FinPIso& f, const FinPIso& g);  // f = g f† f
bool subset_of(const FinPIso& f, const FinPIso& g);    // graph inclusion
bool orthogonal(const FinPIso& f, const FinPIso& g);   // g†f = 0, gf† = 0

// Every partial isomorphism between the two carriers.
std::vector<FinPIso> all_arrows(const FiniteSet& dom, const FiniteSet& cod);

struct AxiomReport {
  struct Law {
    std::string name;
    std::size_t instances = 0;
    bool ok = true;
    std::string counterexample;
  };
  std::vector<Law> laws;
  bool sampled = false;  // true when carriers beyond the exhaustive cap were drawn

  bool all_ok() const;
};

// Exhaustively checks the inverse-category laws over all partial
// isomorphisms between initial segments of size <= max_size: existence and
// uniqueness of generalised inverses, idempotent commutativity, dagger
// laws, pushing idempotents through arrows, the natural partial order
// being a congruence (and coinciding with graph inclusion), and
// distributivity of composition over orthogonal joins.
//
// Sizes up to 4 are enumerated exhaustively; if max_size exceeds 4 the
// remaining sizes are covered by seeded random sampling.
AxiomReport check_axioms(std::size_t max_size,
                         std::uint64_t seed = 0xC0FFEE,
                         std::size_t samples = 2000);

}  // namespace piso

#endif  // PISO_FINITE_HPP
