#include <doctest.h>

#include "piso/errors.hpp"
#include "piso/sampler.hpp"
#include "piso/sexpr.hpp"
#include "piso/termlang.hpp"

using namespace piso;

namespace {

const Tree S = Tree::leaf();

PrefixArrow ev(const std::string& src) {
  return eval_expr(parse_expr(src), SelfSimilarStructure::standard());
}

}  // namespace

TEST_SUITE("termlang") {
  TEST_CASE("sexpr reader reports positions") {
    SExpr e = parse_sexpr("(a \"xy\" (b))");
    CHECK(e.kind == SExpr::Kind::list);
    CHECK(e.items.size() == 3);
    CHECK(e.items[1].text == "xy");
    try {
      parse_sexpr("(a\n   \"unterminated");
      FAIL("expected ParseError");
    } catch (const ParseError& ex) {
      CHECK(std::string(ex.what()).find("2:") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_sexpr("(a) b"), ParseError);
    // comments are skipped
    CHECK(parse_sexpr("; head\n(a)").kind == SExpr::Kind::list);
  }

  TEST_CASE("generator identities evaluate") {
    CHECK(ev("(comp p (dag p))") == PrefixArrow::identity(S));
    CHECK(ev("(comp p (dag q))").is_zero());
    CHECK(ev("p") == PrefixArrow(S, S, {{"", "", "", "0"}}));
    CHECK(ev("(comp code decode)") == PrefixArrow::identity(S));
  }

  TEST_CASE("canonical constructors take tree arguments") {
    PrefixArrow t = ev("(tau S S (S S))");
    CHECK(t.dom() == Tree::parse("(S (S (S S)))"));
    CHECK(t.cod() == Tree::parse("((S S) (S S))"));
    CHECK(t == PrefixArrow::assoc(S, S, Tree::pair(S, S)));
    CHECK(ev("(sigma S (S S))") == PrefixArrow::sym(S, Tree::pair(S, S)));
    CHECK(ev("(pi-l S S)") == PrefixArrow::proj_left(S, S));
    CHECK(ev("(zero S (S S))").is_zero());
  }

  TEST_CASE("arrow literals accept quoted or plain trees") {
    PrefixArrow a = ev("(arrow :dom S :cod S :terms (((\"\" \"\") (\"\" \"0\"))))");
    CHECK(a == PrefixArrow(S, S, {{"", "", "", "0"}}));
    PrefixArrow b =
        ev("(arrow :dom \"(S S)\" :cod S :terms"
           " (((\"\" \"0\") (\"L\" \"\")) ((\"\" \"1\") (\"R\" \"\"))))");
    CHECK(b == SelfSimilarStructure::standard().code());
  }

  TEST_CASE("parse and typing failures carry useful errors") {
    CHECK_THROWS_AS(parse_expr("(comp p"), ParseError);
    CHECK_THROWS_AS(parse_expr("(frob S)"), ParseError);
    CHECK_THROWS_AS(parse_expr("(id R)"), ParseError);
    CHECK_THROWS_AS(ev("(comp p (tau S S S))"), TypeError);
    CHECK_THROWS_AS(ev("(join p q)"), JoinError);
  }

  TEST_CASE("serialization round-trips through the parser") {
    Rng rng(17);
    for (int i = 0; i < 40; ++i) {
      PrefixArrow f = random_endo(rng);
      CHECK(ev(arrow_sexpr(f)) == f);
    }
    PrefixArrow typed = PrefixArrow::assoc(S, Tree::pair(S, S), S);
    CHECK(ev(arrow_sexpr(typed)) == typed);
    PrefixArrow z = PrefixArrow::zero(S, Tree::pair(S, S));
    CHECK(ev(arrow_sexpr(z)) == z);
  }

  TEST_CASE("lowering to the diagram toolkit") {
    CHECK(to_canonical(parse_expr("(tensor (id S) tau-int)")).has_value());
    CHECK(to_canonical(parse_expr("code")).has_value());
    CHECK(!to_canonical(parse_expr("p")).has_value());
    CHECK(!to_canonical(parse_expr("(join p (dag q))")).has_value());
    CHECK(!to_canonical(
               parse_expr("(arrow :dom S :cod S :terms ())"))
               .has_value());
  }

  TEST_CASE("canonical terms print back into the term language") {
    Rng rng(29);
    SelfSimilarStructure st = SelfSimilarStructure::standard();
    for (int i = 0; i < 25; ++i) {
      Tree start = random_tree(rng, 1 + rng.next(4), 4);
      Tree end = start;
      CanonicalTerm t = random_canonical_term(rng, start, 2, &end);
      auto back = to_canonical(parse_expr(t.str()));
      REQUIRE(back.has_value());
      CHECK(back->str() == t.str());
      CHECK(eval_term(*back, st) == eval_term(t, st));
    }
    CanonicalTerm mixed = CanonicalTerm::make_tensor_internal(
        CanonicalTerm::make_internal(CanonicalTerm::Kind::sym_internal),
        CanonicalTerm::make_compose(
            CanonicalTerm::make_internal(CanonicalTerm::Kind::code),
            CanonicalTerm::make_internal(CanonicalTerm::Kind::decode)));
    auto back = to_canonical(parse_expr(mixed.str()));
    REQUIRE(back.has_value());
    CHECK(back->str() == mixed.str());
  }
}
