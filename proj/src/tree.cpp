#include "piso/tree.hpp"

#include <algorithm>

#include "piso/errors.hpp"

namespace piso {

Tree Tree::pair(const Tree& left, const Tree& right) {
  return Tree(std::make_shared<const Node>(Node{left, right}));
}

const Tree& Tree::left() const {
  if (is_leaf()) throw ValueError("leaf tree has no left subtree");
  return node_->left;
}

const Tree& Tree::right() const {
  if (is_leaf()) throw ValueError("leaf tree has no right subtree");
  return node_->right;
}

std::size_t Tree::leaf_count() const {
  if (is_leaf()) return 1;
  return node_->left.leaf_count() + node_->right.leaf_count();
}

std::size_t Tree::depth() const {
  if (is_leaf()) return 0;
  return 1 + std::max(node_->left.depth(), node_->right.depth());
}

namespace {

void collect_leaves(const Tree& t, std::string& prefix,
                    std::vector<std::string>& out) {
  if (t.is_leaf()) {
    out.push_back(prefix);
    return;
  }
  prefix.push_back('L');
  collect_leaves(t.left(), prefix, out);
  prefix.back() = 'R';
  collect_leaves(t.right(), prefix, out);
  prefix.pop_back();
}

}  // namespace

std::vector<std::string> Tree::leaves() const {
  std::vector<std::string> out;
  std::string prefix;
  collect_leaves(*this, prefix, out);
  return out;
}

bool Tree::has_leaf(std::string_view path) const {
  const Tree* t = this;
  for (char c : path) {
    if (t->is_leaf()) return false;
    if (c == 'L')
      t = &t->left();
    else if (c == 'R')
      t = &t->right();
    else
      return false;
  }
  return t->is_leaf();
}

Tree Tree::subtree(std::string_view path) const {
  const Tree* t = this;
  for (char c : path) {
    if (t->is_leaf()) throw ValueError("path runs past a leaf: " + std::string(path));
    if (c == 'L')
      t = &t->left();
    else if (c == 'R')
      t = &t->right();
    else
      throw ValueError("tree path must use characters L and R");
  }
  return *t;
}

std::string Tree::str() const {
  if (is_leaf()) return "S";
  return "(" + node_->left.str() + " " + node_->right.str() + ")";
}

namespace {

Tree parse_tree(std::string_view text, std::size_t& pos) {
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
  };
  skip_ws();
  if (pos >= text.size()) throw ParseError("unexpected end of tree literal");
  if (text[pos] == 'S') {
    ++pos;
    return Tree::leaf();
  }
  if (text[pos] == '(') {
    ++pos;
    Tree l = parse_tree(text, pos);
    Tree r = parse_tree(text, pos);
    skip_ws();
    if (pos >= text.size() || text[pos] != ')')
      throw ParseError("expected ')' in tree literal");
    ++pos;
    return Tree::pair(l, r);
  }
  throw ParseError("expected 'S' or '(' in tree literal, got '" +
                   std::string(1, text[pos]) + "'");
}

}  // namespace

Tree Tree::parse(std::string_view text) {
  std::size_t pos = 0;
  Tree t = parse_tree(text, pos);
  while (pos < text.size() &&
         (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
          text[pos] == '\r'))
    ++pos;
  if (pos != text.size())
    throw ParseError("trailing characters after tree literal");
  return t;
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() == b.is_leaf();
  return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (a.is_leaf() && b.is_leaf()) return std::strong_ordering::equal;
  if (a.is_leaf()) return std::strong_ordering::less;
  if (b.is_leaf()) return std::strong_ordering::greater;
  auto l = a.node_->left <=> b.node_->left;
  if (l != 0) return l;
  return a.node_->right <=> b.node_->right;
}

std::vector<Tree> trees_with_leaves(std::size_t leaf_count) {
  if (leaf_count == 0) return {};
  if (leaf_count == 1) return {Tree::leaf()};
  std::vector<Tree> out;
  for (std::size_t k = 1; k < leaf_count; ++k) {
    for (const Tree& l : trees_with_leaves(k))
      for (const Tree& r : trees_with_leaves(leaf_count - k))
        out.push_back(Tree::pair(l, r));
  }
  return out;
}

}  // namespace piso
