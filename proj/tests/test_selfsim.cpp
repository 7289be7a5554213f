#include <doctest.h>

#include "piso/errors.hpp"
#include "piso/sampler.hpp"
#include "piso/selfsim.hpp"
#include "test_util.hpp"

using namespace piso;
using piso_test::pointwise_equal;
using piso_test::words_up_to;

namespace {

const Tree S = Tree::leaf();

PrefixArrow endo(std::vector<std::pair<std::string, std::string>> pairs) {
  std::vector<RewriteTerm> ts;
  for (auto& [t, s] : pairs) ts.push_back({"", t, "", s});
  return PrefixArrow(S, S, std::move(ts));
}

const PrefixArrow flip = endo({{"1", "0"}, {"0", "1"}});

SelfSimilarStructure swap_sss() {
  return from_unitary(flip, SelfSimilarStructure::standard());
}

}  // namespace

TEST_SUITE("selfsim") {
  TEST_CASE("standard structure") {
    SelfSimilarStructure s = SelfSimilarStructure::standard();
    CHECK(compose(s.code(), s.code().dagger()) == PrefixArrow::identity(S));
    CHECK(compose(s.decode(), s.code()) ==
          PrefixArrow::identity(Tree::pair(S, S)));
    CHECK(compose(PrefixArrow::proj_left(S, S), s.decode()) ==
          endo({{"", "0"}}));
    CHECK(compose(PrefixArrow::proj_right(S, S), s.decode()) ==
          endo({{"", "1"}}));
  }

  TEST_CASE("construction validates type and unitarity") {
    CHECK_THROWS_AS(SelfSimilarStructure(PrefixArrow::identity(S)), TypeError);
    // a non-unitary candidate code: misses the R side
    CHECK_THROWS_AS(SelfSimilarStructure(PrefixArrow(
                        Tree::pair(S, S), S, {{"", "0", "L", ""}})),
                    ValueError);
  }

  TEST_CASE("twisting by a unitary") {
    SelfSimilarStructure s = SelfSimilarStructure::standard();
    CHECK(from_unitary(PrefixArrow::identity(S), s) == s);
    SelfSimilarStructure sw = swap_sss();
    CHECK(sw.code() == PrefixArrow(Tree::pair(S, S), S,
                                   {{"", "1", "L", ""}, {"", "0", "R", ""}}));
    CHECK_THROWS_AS(from_unitary(endo({{"", "0"}}), s), ValueError);
  }

  TEST_CASE("structures are unique up to a unique unitary") {
    SelfSimilarStructure s = SelfSimilarStructure::standard();
    SelfSimilarStructure sw = swap_sss();
    CHECK(unique_unitary(s, s) == PrefixArrow::identity(S));
    CHECK(unique_unitary(s, sw) == flip);
    Rng rng(23);
    for (int i = 0; i < 25; ++i) {
      SelfSimilarStructure a = random_sss(rng);
      SelfSimilarStructure b = random_sss(rng);
      PrefixArrow u = unique_unitary(a, b);
      CHECK(u.is_unitary());
      CHECK(compose(u, a.code()) == b.code());
      CHECK(from_unitary(u, a) == b);
    }
  }

  TEST_CASE("internalised tensor acts blockwise") {
    SelfSimilarStructure s = SelfSimilarStructure::standard();
    PrefixArrow one = PrefixArrow::identity(S);
    CHECK(internalize(one, one, s) == one);
    CHECK(internalize(PrefixArrow::zero(S, S), PrefixArrow::zero(S, S), s)
              .is_zero());
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
      PrefixArrow f = random_endo(rng);
      PrefixArrow g = random_endo(rng);
      PrefixArrow fg = internalize(f, g, s);
      for (const std::string& w : words_up_to(5)) {
        ApplyOutcome out = fg.apply({"", "0" + w});
        ApplyOutcome expect = f.apply({"", w});
        if (expect.status == ApplyOutcome::Status::mapped) {
          REQUIRE(out.status == ApplyOutcome::Status::mapped);
          CHECK(out.point.word == "0" + expect.point.word);
        }
        out = fg.apply({"", "1" + w});
        expect = g.apply({"", w});
        if (expect.status == ApplyOutcome::Status::mapped) {
          REQUIRE(out.status == ApplyOutcome::Status::mapped);
          CHECK(out.point.word == "1" + expect.point.word);
        }
      }
    }
  }

  TEST_CASE("induced isomorphisms of the standard structure") {
    InducedIsos ind = induced_isos(SelfSimilarStructure::standard());
    CHECK(ind.tau == endo({{"00", "0"}, {"01", "10"}, {"1", "11"}}));
    CHECK(ind.sigma == flip);
    CHECK(ind.tau.is_unitary());
    CHECK(ind.sigma.is_unitary());
  }

  TEST_CASE("induced isomorphisms stay unitary across random structures") {
    Rng rng(77);
    for (int i = 0; i < 50; ++i) {
      InducedIsos ind = induced_isos(random_sss(rng));
      CHECK(ind.tau.is_unitary());
      CHECK(ind.sigma.is_unitary());
    }
  }

  TEST_CASE("classical-structure laws hold up to the induced isomorphisms") {
    for (const SelfSimilarStructure& s :
         {SelfSimilarStructure::standard(), swap_sss()}) {
      LawReport r = check_classical_laws(s);
      CHECK(r.checks.size() == 4);
      for (const LawCheck& c : r.checks) {
        CHECK(c.ok);
        if (!c.ok) MESSAGE(c.name, ": ", c.lhs, " != ", c.rhs);
      }
    }
    Rng rng(101);
    for (int i = 0; i < 25; ++i)
      CHECK(check_classical_laws(random_sss(rng)).all_ok());
  }

  TEST_CASE("the induced associator is never the identity") {
    CHECK(nontrivial_internal_assoc(SelfSimilarStructure::standard()));
    CHECK(!restrictive_frobenius_holds(SelfSimilarStructure::standard()));
    Rng rng(13);
    for (int i = 0; i < 25; ++i) {
      SelfSimilarStructure s = random_sss(rng);
      CHECK(nontrivial_internal_assoc(s));
      CHECK(!restrictive_frobenius_holds(s));
    }
  }

  TEST_CASE("internalisation is functorial and dagger-compatible") {
    SelfSimilarStructure s = SelfSimilarStructure::standard();
    Rng rng(31);
    for (int i = 0; i < 25; ++i) {
      PrefixArrow f1 = random_endo(rng), f2 = random_endo(rng);
      PrefixArrow g1 = random_endo(rng), g2 = random_endo(rng);
      CHECK(compose(internalize(f2, g2, s), internalize(f1, g1, s)) ==
            internalize(compose(f2, f1), compose(g2, g1), s));
      CHECK(internalize(f1, g1, s).dagger() ==
            internalize(f1.dagger(), g1.dagger(), s));
    }
  }

  TEST_CASE("naturality of the induced associator") {
    Rng rng(41);
    for (int i = 0; i < 15; ++i) {
      SelfSimilarStructure s = random_sss(rng);
      InducedIsos ind = induced_isos(s);
      PrefixArrow f = random_endo(rng);
      PrefixArrow g = random_endo(rng);
      PrefixArrow h = random_endo(rng);
      CHECK(compose(ind.tau, internalize(f, internalize(g, h, s), s)) ==
            compose(internalize(internalize(f, g, s), h, s), ind.tau));
      CHECK(compose(ind.sigma, internalize(f, g, s)) ==
            compose(internalize(g, f, s), ind.sigma));
    }
  }

  TEST_CASE("one-object pentagon and hexagon for the induced isomorphisms") {
    Rng rng(53);
    for (int i = 0; i < 10; ++i) {
      SelfSimilarStructure s = random_sss(rng);
      InducedIsos ind = induced_isos(s);
      PrefixArrow one = PrefixArrow::identity(S);
      CHECK(compose(internalize(ind.tau, one, s),
                    compose(ind.tau, internalize(one, ind.tau, s))) ==
            compose(ind.tau, ind.tau));
      CHECK(compose(ind.tau, compose(ind.sigma, ind.tau)) ==
            compose(internalize(ind.sigma, one, s),
                    compose(ind.tau, internalize(one, ind.sigma, s))));
    }
  }
}
