#include <doctest.h>

#include "piso/errors.hpp"
#include "piso/tree.hpp"

using piso::ParseError;
using piso::Tree;

TEST_SUITE("tree") {
  TEST_CASE("leaf basics") {
    Tree s = Tree::leaf();
    CHECK(s.is_leaf());
    CHECK(s.leaf_count() == 1);
    CHECK(s.depth() == 0);
    CHECK(s.str() == "S");
    CHECK(s.leaves() == std::vector<std::string>{""});
  }

  TEST_CASE("pair structure and addressing") {
    Tree t = Tree::pair(Tree::pair(Tree::leaf(), Tree::leaf()), Tree::leaf());
    CHECK(t.leaf_count() == 3);
    CHECK(t.depth() == 2);
    CHECK(t.str() == "((S S) S)");
    CHECK(t.leaves() == std::vector<std::string>{"LL", "LR", "R"});
    CHECK(t.has_leaf("LL"));
    CHECK(!t.has_leaf("L"));   // internal node
    CHECK(!t.has_leaf("RR"));  // runs past a leaf
    CHECK(t.subtree("L").str() == "(S S)");
    CHECK(Tree::parse("(S (S S))").leaves() ==
          std::vector<std::string>{"L", "RL", "RR"});
  }

  TEST_CASE("parse round trip") {
    for (const char* src : {"S", "(S S)", "((S S) S)", "(S ((S S) S))"}) {
      Tree t = Tree::parse(src);
      CHECK(t.str() == src);
      CHECK(Tree::parse(t.str()) == t);
    }
    CHECK(Tree::parse(" ( S  ( S S ) ) ").str() == "(S (S S))");
    CHECK_THROWS_AS(Tree::parse("(S"), ParseError);
    CHECK_THROWS_AS(Tree::parse("X"), ParseError);
    CHECK_THROWS_AS(Tree::parse("(S S) S"), ParseError);
  }

  TEST_CASE("ordering is total and structural") {
    Tree a = Tree::parse("(S (S S))");
    Tree b = Tree::parse("((S S) S)");
    CHECK(a == a);
    CHECK(a != b);
    CHECK(((a < b) != (b < a)));
  }

  TEST_CASE("shape enumeration follows the Catalan numbers") {
    CHECK(piso::trees_with_leaves(1).size() == 1);
    CHECK(piso::trees_with_leaves(2).size() == 1);
    CHECK(piso::trees_with_leaves(3).size() == 2);
    CHECK(piso::trees_with_leaves(4).size() == 5);
    CHECK(piso::trees_with_leaves(5).size() == 14);
  }
}
