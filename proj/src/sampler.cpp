#include "piso/sampler.hpp"

#include <algorithm>
#include <string>
#include <string_view>

#include "piso/errors.hpp"

namespace piso {

namespace {

// Numbers of tree shapes by leaf count (Catalan numbers), for uniform
// splits.  Sizes used here stay far below overflow.
std::uint64_t shape_count(std::size_t leaves) {
  static std::vector<std::uint64_t> cache{0, 1};
  while (cache.size() <= leaves) {
    std::size_t n = cache.size();
    std::uint64_t total = 0;
    for (std::size_t k = 1; k < n; ++k) total += cache[k] * cache[n - k];
    cache.push_back(total);
  }
  return cache[leaves];
}

Tree random_tree_unbounded(Rng& rng, std::size_t leaf_count) {
  if (leaf_count == 1) return Tree::leaf();
  std::uint64_t pick = rng.next(shape_count(leaf_count));
  for (std::size_t k = 1; k < leaf_count; ++k) {
    std::uint64_t here = shape_count(k) * shape_count(leaf_count - k);
    if (pick < here) {
      Tree l = random_tree_unbounded(rng, k);
      Tree r = random_tree_unbounded(rng, leaf_count - k);
      return Tree::pair(l, r);
    }
    pick -= here;
  }
  throw ValueError("unreachable: tree split selection");
}

}  // namespace

Tree random_tree(Rng& rng, std::size_t leaf_count, std::size_t max_depth) {
  if (leaf_count == 0) throw ValueError("trees are non-empty");
  if ((std::size_t{1} << max_depth) < leaf_count)
    throw ValueError("depth cap too small for requested leaf count");
  for (;;) {
    Tree t = random_tree_unbounded(rng, leaf_count);
    if (t.depth() <= max_depth) return t;
  }
}

std::vector<std::string> random_code(Rng& rng, std::size_t size,
                                     std::size_t max_depth) {
  std::vector<std::string> code;
  for (std::string& l : random_tree(rng, size, max_depth).leaves()) {
    std::string w;
    for (char c : l) w.push_back(c == 'L' ? '0' : '1');
    code.push_back(std::move(w));
  }
  return code;
}

PrefixArrow random_unitary(Rng& rng, std::size_t min_size,
                           std::size_t max_size, std::size_t max_depth) {
  std::size_t k = min_size + rng.next(max_size - min_size + 1);
  std::vector<std::string> src = random_code(rng, k, max_depth);
  std::vector<std::string> tgt = random_code(rng, k, max_depth);
  // Fisher-Yates pairing of the two codes.
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  for (std::size_t i = k; i > 1; --i)
    std::swap(perm[i - 1], perm[rng.next(i)]);
  std::vector<RewriteTerm> terms;
  for (std::size_t i = 0; i < k; ++i)
    terms.push_back({"", tgt[perm[i]], "", src[i]});
  return PrefixArrow(Tree::leaf(), Tree::leaf(), std::move(terms));
}

SelfSimilarStructure random_sss(Rng& rng) {
  return from_unitary(random_unitary(rng), SelfSimilarStructure::standard());
}

PrefixArrow random_endo(Rng& rng) {
  std::size_t k = 1 + rng.next(6);
  if (k == 1 && rng.coin()) return PrefixArrow::zero(Tree::leaf(), Tree::leaf());
  std::vector<std::string> src = random_code(rng, k, 4);
  std::vector<std::string> tgt = random_code(rng, k, 4);
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  for (std::size_t i = k; i > 1; --i)
    std::swap(perm[i - 1], perm[rng.next(i)]);
  std::vector<RewriteTerm> terms;
  for (std::size_t i = 0; i < k; ++i) {
    if (rng.next(4) == 0) continue;  // drop a quarter of the clauses
    terms.push_back({"", tgt[perm[i]], "", src[i]});
  }
  return PrefixArrow(Tree::leaf(), Tree::leaf(), std::move(terms));
}

namespace {

struct Move {
  std::string at;  // node path
  int kind;        // 0 assoc, 1 assoc_inv, 2 sym
};

void collect_moves(const Tree& t, std::string& path, std::vector<Move>& out) {
  if (t.is_leaf()) return;
  if (!t.right().is_leaf()) out.push_back({path, 0});  // A□(B□C) shape
  if (!t.left().is_leaf()) out.push_back({path, 1});   // (A□B)□C shape
  out.push_back({path, 2});
  path.push_back('L');
  collect_moves(t.left(), path, out);
  path.back() = 'R';
  collect_moves(t.right(), path, out);
  path.pop_back();
}

// The generator at the addressed node, whiskered by identities on the
// surrounding context.
CanonicalTerm whisker(const Tree& here, std::string_view rest,
                      const CanonicalTerm& gen) {
  if (rest.empty()) return gen;
  if (rest[0] == 'L')
    return CanonicalTerm::make_tensor(
        whisker(here.left(), rest.substr(1), gen),
        CanonicalTerm::make_id(here.right()));
  return CanonicalTerm::make_tensor(
      CanonicalTerm::make_id(here.left()),
      whisker(here.right(), rest.substr(1), gen));
}

Tree replace_subtree(const Tree& t, const std::string& path, std::size_t idx,
                     const Tree& with) {
  if (idx == path.size()) return with;
  if (path[idx] == 'L')
    return Tree::pair(replace_subtree(t.left(), path, idx + 1, with),
                      t.right());
  return Tree::pair(t.left(), replace_subtree(t.right(), path, idx + 1, with));
}

}  // namespace

CanonicalTerm random_canonical_step(Rng& rng, const Tree& at, Tree* cod_out) {
  std::vector<Move> moves;
  std::string path;
  collect_moves(at, path, moves);
  if (moves.empty()) {  // a lone leaf: only the identity applies
    if (cod_out) *cod_out = at;
    return CanonicalTerm::make_id(at);
  }
  const Move& m = moves[rng.next(moves.size())];
  Tree sub = at.subtree(m.at);
  CanonicalTerm gen = CanonicalTerm::make_id(sub);
  Tree new_sub = sub;
  switch (m.kind) {
    case 0:
      gen = CanonicalTerm::make_assoc(sub.left(), sub.right().left(),
                                      sub.right().right());
      new_sub = Tree::pair(Tree::pair(sub.left(), sub.right().left()),
                           sub.right().right());
      break;
    case 1:
      gen = CanonicalTerm::make_assoc_inv(sub.left().left(),
                                          sub.left().right(), sub.right());
      new_sub = Tree::pair(sub.left().left(),
                           Tree::pair(sub.left().right(), sub.right()));
      break;
    default:
      gen = CanonicalTerm::make_sym(sub.left(), sub.right());
      new_sub = Tree::pair(sub.right(), sub.left());
      break;
  }
  if (cod_out) *cod_out = replace_subtree(at, m.at, 0, new_sub);
  return whisker(at, m.at, gen);
}

CanonicalTerm random_canonical_term(Rng& rng, const Tree& dom,
                                    std::size_t steps, Tree* cod_out) {
  Tree here = dom;
  CanonicalTerm acc = CanonicalTerm::make_id(dom);
  for (std::size_t i = 0; i < steps; ++i) {
    Tree next = here;
    CanonicalTerm step = random_canonical_step(rng, here, &next);
    acc = CanonicalTerm::make_compose(std::move(step), std::move(acc));
    here = next;
  }
  if (cod_out) *cod_out = here;
  return acc;
}

std::optional<Diagram> random_parallel_diagram(Rng& rng,
                                               std::size_t max_leaves) {
  std::size_t leaves = 1 + rng.next(max_leaves);
  Tree start = random_tree(rng, leaves, 6);
  Tree cod_a = start;
  std::size_t len_a = 1 + rng.next(3);
  CanonicalTerm a = random_canonical_term(rng, start, len_a, &cod_a);
  for (int attempt = 0; attempt < 24; ++attempt) {
    Tree cod_b = start;
    std::size_t len_b = 1 + rng.next(3);
    CanonicalTerm b = random_canonical_term(rng, start, len_b, &cod_b);
    if (!(cod_b == cod_a)) continue;
    Diagram d;
    d.nodes.push_back({"n0", start});
    d.nodes.push_back({"n1", cod_a});
    d.edges.push_back({"n0", "n1", a});
    d.edges.push_back({"n0", "n1", b});
    d.asserts.push_back({{0}, {1}});
    return d;
  }
  return std::nullopt;
}

}  // namespace piso
