#include <doctest.h>

#include "piso/errors.hpp"
#include "piso/matrix.hpp"
#include "piso/sampler.hpp"

using namespace piso;

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

// The depth-two structure that diagonalises the induced symmetry.
SelfSimilarStructure interleave_sss() {
  return SelfSimilarStructure(
      PrefixArrow(Tree::pair(S, S), S,
                  {{"", "00", "L", "0"},
                   {"", "10", "L", "1"},
                   {"", "01", "R", "0"},
                   {"", "11", "R", "1"}}));
}

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("embedding the polycyclic generators") {
    P2Embedding e = embed_p2(SelfSimilarStructure::standard());
    CHECK(e.p == endo({{"", "0"}}));
    CHECK(e.q == endo({{"", "1"}}));
    CHECK(join(compose(e.p.dagger(), e.p), compose(e.q.dagger(), e.q)) ==
          PrefixArrow::identity(S));
    P2Embedding sw = embed_p2(swap_sss());
    CHECK(sw.p == endo({{"", "1"}}));
    CHECK(sw.q == endo({{"", "0"}}));
  }

  TEST_CASE("the embedding recovers the structure") {
    for (const SelfSimilarStructure& s :
         {SelfSimilarStructure::standard(), swap_sss(), interleave_sss()}) {
      P2Embedding e = embed_p2(s);
      PrefixArrow rebuilt =
          join(compose(PrefixArrow::incl_left(S, S), e.p),
               compose(PrefixArrow::incl_right(S, S), e.q));
      CHECK(rebuilt == s.decode());
    }
  }

  TEST_CASE("representation of simple arrows") {
    SelfSimilarStructure s = SelfSimilarStructure::standard();
    CHECK(matrix_rep(PrefixArrow::identity(S), s) == identity_matrix());
    Matrix2 m = matrix_rep(induced_isos(s).sigma, s);
    CHECK(m.e00.is_zero());
    CHECK(m.e01 == PrefixArrow::identity(S));
    CHECK(m.e10 == PrefixArrow::identity(S));
    CHECK(m.e11.is_zero());
    Rng rng(2);
    for (int i = 0; i < 20; ++i) {
      PrefixArrow a = random_endo(rng);
      PrefixArrow b = random_endo(rng);
      Matrix2 d = matrix_rep(internalize(a, b, s), s);
      CHECK(d.e00 == a);
      CHECK(d.e11 == b);
      CHECK(d.e01.is_zero());
      CHECK(d.e10.is_zero());
    }
  }

  TEST_CASE("matrix product with join as sum") {
    SelfSimilarStructure s = SelfSimilarStructure::standard();
    Matrix2 sw = matrix_rep(induced_isos(s).sigma, s);
    CHECK(mat_mul(sw, sw) == identity_matrix());
    CHECK(mat_mul(sw, identity_matrix()) == sw);
    // a non-representation matrix with overlapping summands is rejected
    Matrix2 bad{PrefixArrow::identity(S), PrefixArrow::identity(S),
                PrefixArrow::identity(S), PrefixArrow::identity(S)};
    CHECK_THROWS_AS(mat_mul(bad, bad), JoinError);
  }

  TEST_CASE("representation is a homomorphism and faithful") {
    Rng rng(8);
    for (const SelfSimilarStructure& s :
         {SelfSimilarStructure::standard(), swap_sss()}) {
      for (int i = 0; i < 50; ++i) {
        PrefixArrow f = random_endo(rng);
        PrefixArrow g = random_endo(rng);
        CHECK(mat_mul(matrix_rep(g, s), matrix_rep(f, s)) ==
              matrix_rep(compose(g, f), s));
        CHECK(reconstruct(matrix_rep(f, s), s) == f);
      }
    }
    CHECK(reconstruct(identity_matrix(), SelfSimilarStructure::standard()) ==
          PrefixArrow::identity(S));
    SelfSimilarStructure st = SelfSimilarStructure::standard();
    PrefixArrow sigma = induced_isos(st).sigma;
    CHECK(reconstruct(matrix_rep(sigma, st), st) == sigma);
  }

  TEST_CASE("dagger transposes the representation") {
    SelfSimilarStructure s = SelfSimilarStructure::standard();
    Rng rng(14);
    for (int i = 0; i < 20; ++i) {
      PrefixArrow f = random_endo(rng);
      Matrix2 m = matrix_rep(f, s);
      Matrix2 md = matrix_rep(f.dagger(), s);
      CHECK(md.e00 == m.e00.dagger());
      CHECK(md.e01 == m.e10.dagger());
      CHECK(md.e10 == m.e01.dagger());
      CHECK(md.e11 == m.e11.dagger());
    }
  }

  TEST_CASE("change of representation") {
    SelfSimilarStructure st = SelfSimilarStructure::standard();
    SelfSimilarStructure sw = swap_sss();
    PrefixArrow sigma = induced_isos(st).sigma;

    RebaseResult same = rebase(sigma, st, st);
    CHECK(same.u == identity_matrix());
    CHECK(same.direct == same.conjugated);
    CHECK(same.direct == matrix_rep(sigma, st));

    RebaseResult r = rebase(sigma, st, sw);
    CHECK(r.consistent());
    CHECK(r.direct.e00.is_zero());
    CHECK(r.direct.e01 == PrefixArrow::identity(S));
    CHECK(r.direct.e10 == PrefixArrow::identity(S));
    CHECK(r.direct.e11.is_zero());
    CHECK(mat_mul(r.u_dagger, r.u) == identity_matrix());

    Rng rng(99);
    for (int i = 0; i < 25; ++i) {
      SelfSimilarStructure a = random_sss(rng);
      SelfSimilarStructure b = random_sss(rng);
      PrefixArrow f = random_endo(rng);
      RebaseResult rr = rebase(f, a, b);
      CHECK(rr.consistent());
      CHECK(mat_mul(rr.u_dagger, rr.u) == identity_matrix());
    }
  }

  TEST_CASE("worked diagonalisation of the induced symmetry") {
    SelfSimilarStructure st = SelfSimilarStructure::standard();
    SelfSimilarStructure inter = interleave_sss();
    PrefixArrow sigma = induced_isos(st).sigma;
    CHECK(is_diagonalized_by(sigma, st, inter));
    Matrix2 m = matrix_rep(sigma, inter);
    CHECK(m.e00 == flip);
    CHECK(m.e11 == flip);
    CHECK(m.e01.is_zero());
    CHECK(m.e10.is_zero());
    CHECK(!is_diagonalized_by(sigma, st, st));
  }

  TEST_CASE("diagonal matrices are exactly the internalised direct sums") {
    Rng rng(6);
    for (int i = 0; i < 25; ++i) {
      SelfSimilarStructure from = random_sss(rng);
      SelfSimilarStructure to = random_sss(rng);
      PrefixArrow x = random_endo(rng);
      PrefixArrow y = random_endo(rng);
      PrefixArrow g = internalize(x, y, to);
      CHECK(is_diagonalized_by(g, from, to));
      CHECK(diagonal_form(x, y, from, to) == matrix_rep(g, from));
      DiagonalExtraction ex = extract_diagonal(g, to);
      CHECK(ex.diagonal);
      CHECK(ex.reproduces);
      CHECK(ex.x == x);
      CHECK(ex.y == y);
    }
  }

  TEST_CASE("extraction refutes non-diagonal arrows") {
    SelfSimilarStructure st = SelfSimilarStructure::standard();
    DiagonalExtraction ex = extract_diagonal(induced_isos(st).sigma, st);
    CHECK(!ex.diagonal);
    CHECK(!ex.reproduces);
  }

  TEST_CASE("bounded diagonaliser search finds the interleaving witness") {
    SelfSimilarStructure st = SelfSimilarStructure::standard();
    PrefixArrow sigma = induced_isos(st).sigma;
    auto found = search_diagonalizer(sigma, st, 4, 4);
    REQUIRE(found.has_value());
    CHECK(is_diagonalized_by(sigma, st, *found));
    // nothing smaller than four clauses can split the bit flip
    CHECK(!search_diagonalizer(sigma, st, 4, 3).has_value());
  }
}
