#ifndef PISO_TREE_HPP
#define PISO_TREE_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace piso {

// Free non-empty binary tree over the single symbol S.  Values are
// immutable and structurally compared; copies share nodes.
class Tree {
 public:
  Tree() = default;  // the leaf S

  static Tree leaf() { return Tree(); }
  static Tree pair(const Tree& left, const Tree& right);

  bool is_leaf() const { return node_ == nullptr; }
  const Tree& left() const;   // throws ValueError on a leaf
  const Tree& right() const;

  std::size_t leaf_count() const;
  std::size_t depth() const;  // 0 for a leaf

  // Leaf addresses as words over {L, R}, in left-to-right order.
  // A leaf tree has the single address "".
  std::vector<std::string> leaves() const;
  bool has_leaf(std::string_view path) const;

  // The subtree rooted at the node addressed by `path`.
  Tree subtree(std::string_view path) const;

  std::string str() const;  // "S" or "(A B)"
  static Tree parse(std::string_view text);

  friend bool operator==(const Tree& a, const Tree& b);
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  explicit Tree(NodePtr node) : node_(std::move(node)) {}

  NodePtr node_;  // null = leaf
};

struct Tree::Node {
  Tree left;
  Tree right;
};

// All trees with exactly `leaf_count` leaves, in a fixed canonical order
// (left subtree size ascending, then recursively).
std::vector<Tree> trees_with_leaves(std::size_t leaf_count);

}  // namespace piso

#endif  // PISO_TREE_HPP
