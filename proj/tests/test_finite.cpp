#include <doctest.h>

#include "piso/errors.hpp"
#include "piso/finite.hpp"

using namespace piso;

namespace {

FinPIso arr(std::size_t dom, std::size_t cod,
            std::vector<std::pair<std::uint8_t, std::uint8_t>> graph) {
  return FinPIso(FiniteSet::range(dom), FiniteSet::range(cod),
                 std::move(graph));
}

}  // namespace

TEST_SUITE("finite") {
  TEST_CASE("construction enforces the partial isomorphism condition") {
    CHECK_NOTHROW(arr(3, 3, {{2, 1}, {0, 0}}));
    CHECK_THROWS_AS(arr(3, 3, {{2, 1}, {2, 0}}), ValueError);  // not injective
    CHECK_THROWS_AS(arr(3, 3, {{1, 0}, {2, 0}}), ValueError);  // not single-valued
    CHECK_THROWS_AS(arr(2, 2, {{1, 3}}), ValueError);          // outside carrier
  }

  TEST_CASE("relational composition") {
    CHECK(compose(arr(3, 3, {{2, 1}}), arr(3, 3, {{1, 0}})) ==
          arr(3, 3, {{2, 0}}));
    CHECK(compose(arr(6, 6, {{2, 1}}), arr(6, 6, {{1, 5}})) ==
          arr(6, 6, {{2, 5}}));
    CHECK(compose(FinPIso::zero(FiniteSet::range(3), FiniteSet::range(3)),
                  arr(3, 3, {{1, 0}, {0, 1}})) ==
          FinPIso::zero(FiniteSet::range(3), FiniteSet::range(3)));
    CHECK_THROWS_AS(compose(arr(2, 2, {}), arr(3, 3, {})), TypeError);
  }

  TEST_CASE("dagger transposes the graph") {
    CHECK(arr(2, 2, {{1, 0}}).dagger() == arr(2, 2, {{0, 1}}));
    FinPIso id2 = FinPIso::identity(FiniteSet::range(2));
    CHECK(id2.dagger() == id2);
    CHECK(arr(2, 2, {}).dagger() == arr(2, 2, {}));
    FinPIso f = arr(3, 4, {{3, 0}, {1, 2}});
    CHECK(compose(f, compose(f.dagger(), f)) == f);
  }

  TEST_CASE("join and meet are union and intersection when defined") {
    CHECK(join(arr(4, 4, {{1, 0}}), arr(4, 4, {{2, 3}})) ==
          arr(4, 4, {{1, 0}, {2, 3}}));
    CHECK_THROWS_AS(join(arr(4, 4, {{1, 0}}), arr(4, 4, {{2, 0}})), JoinError);
    CHECK(meet(arr(4, 4, {{1, 0}, {2, 3}}), arr(4, 4, {{1, 0}})) ==
          arr(4, 4, {{1, 0}}));
  }

  TEST_CASE("natural order coincides with graph inclusion") {
    CHECK(natural_leq(arr(4, 4, {{1, 0}}), arr(4, 4, {{1, 0}, {2, 3}})));
    CHECK(natural_leq(arr(4, 4, {{1, 0}}), arr(4, 4, {{1, 0}})));
    CHECK(!natural_leq(arr(4, 4, {{1, 0}}), arr(4, 4, {{2, 0}})));
    CHECK(!subset_of(arr(4, 4, {{1, 0}}), arr(4, 4, {{2, 0}})));
  }

  TEST_CASE("orthogonality by the equational test") {
    CHECK(orthogonal(arr(4, 4, {{1, 0}}), arr(4, 4, {{2, 3}})));
    CHECK(!orthogonal(arr(4, 4, {{1, 0}}), arr(4, 4, {{2, 0}})));
    CHECK(!orthogonal(arr(4, 4, {{1, 0}}), arr(4, 4, {{1, 3}})));
  }

  TEST_CASE("hom-set sizes match the partial injection counts") {
    CHECK(all_arrows(FiniteSet::range(0), FiniteSet::range(0)).size() == 1);
    CHECK(all_arrows(FiniteSet::range(1), FiniteSet::range(1)).size() == 2);
    CHECK(all_arrows(FiniteSet::range(2), FiniteSet::range(2)).size() == 7);
    CHECK(all_arrows(FiniteSet::range(3), FiniteSet::range(3)).size() == 34);
    CHECK(all_arrows(FiniteSet::range(4), FiniteSet::range(4)).size() == 209);
    CHECK(all_arrows(FiniteSet::range(2), FiniteSet::range(3)).size() == 13);
  }

  TEST_CASE("exhaustive axiom check passes at small sizes") {
    for (std::size_t n : {1u, 2u}) {
      AxiomReport r = check_axioms(n);
      CHECK(r.all_ok());
      CHECK(!r.sampled);
      for (const auto& law : r.laws) {
        CHECK(law.ok);
        CHECK(law.instances > 0);
        if (!law.ok) MESSAGE(law.name, ": ", law.counterexample);
      }
    }
  }

  TEST_CASE("sampled mode covers carriers past the exhaustive cap") {
    AxiomReport r = check_axioms(5, 0xC0FFEE, 50);
    CHECK(r.sampled);
    CHECK(r.all_ok());
  }
}
