#include "piso/coherence.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <utility>

namespace piso {

namespace {

const Tree& leaf_tree() {
  static const Tree t = Tree::leaf();
  return t;
}

}  // namespace

CanonicalTerm CanonicalTerm::make_id(Tree a) {
  CanonicalTerm t;
  t.kind = Kind::id;
  t.trees = {std::move(a)};
  return t;
}

CanonicalTerm CanonicalTerm::make_assoc(Tree a, Tree b, Tree c) {
  CanonicalTerm t;
  t.kind = Kind::assoc;
  t.trees = {std::move(a), std::move(b), std::move(c)};
  return t;
}

CanonicalTerm CanonicalTerm::make_assoc_inv(Tree a, Tree b, Tree c) {
  CanonicalTerm t;
  t.kind = Kind::assoc_inv;
  t.trees = {std::move(a), std::move(b), std::move(c)};
  return t;
}

CanonicalTerm CanonicalTerm::make_sym(Tree a, Tree b) {
  CanonicalTerm t;
  t.kind = Kind::sym;
  t.trees = {std::move(a), std::move(b)};
  return t;
}

CanonicalTerm CanonicalTerm::make_tensor(CanonicalTerm f, CanonicalTerm g) {
  CanonicalTerm t;
  t.kind = Kind::tensor;
  t.args = {std::move(f), std::move(g)};
  return t;
}

CanonicalTerm CanonicalTerm::make_compose(CanonicalTerm g, CanonicalTerm f) {
  CanonicalTerm t;
  t.kind = Kind::compose;
  t.args = {std::move(g), std::move(f)};
  return t;
}

CanonicalTerm CanonicalTerm::make_dagger(CanonicalTerm f) {
  CanonicalTerm t;
  t.kind = Kind::dagger;
  t.args = {std::move(f)};
  return t;
}

CanonicalTerm CanonicalTerm::make_internal(Kind k) {
  CanonicalTerm t;
  t.kind = k;
  return t;
}

CanonicalTerm CanonicalTerm::make_tensor_internal(CanonicalTerm f,
                                                  CanonicalTerm g) {
  CanonicalTerm t;
  t.kind = Kind::tensor_internal;
  t.args = {std::move(f), std::move(g)};
  return t;
}

std::string CanonicalTerm::str() const {
  switch (kind) {
    case Kind::id:
      return "(id " + trees[0].str() + ")";
    case Kind::assoc:
      return "(tau " + trees[0].str() + " " + trees[1].str() + " " +
             trees[2].str() + ")";
    case Kind::assoc_inv:
      return "(tau-inv " + trees[0].str() + " " + trees[1].str() + " " +
             trees[2].str() + ")";
    case Kind::sym:
      return "(sigma " + trees[0].str() + " " + trees[1].str() + ")";
    case Kind::tensor:
      return "(tensor " + args[0].str() + " " + args[1].str() + ")";
    case Kind::compose:
      return "(comp " + args[0].str() + " " + args[1].str() + ")";
    case Kind::dagger:
      return "(dag " + args[0].str() + ")";
    case Kind::assoc_internal:
      return "tau-int";
    case Kind::sym_internal:
      return "sigma-int";
    case Kind::tensor_internal:
      return "(tensor-int " + args[0].str() + " " + args[1].str() + ")";
    case Kind::code:
      return "code";
    case Kind::decode:
      return "decode";
  }
  return "?";
}

std::pair<Tree, Tree> term_type(const CanonicalTerm& t) {
  const Tree& S = leaf_tree();
  using K = CanonicalTerm::Kind;
  switch (t.kind) {
    case K::id:
      return {t.trees[0], t.trees[0]};
    case K::assoc:
      return {Tree::pair(t.trees[0], Tree::pair(t.trees[1], t.trees[2])),
              Tree::pair(Tree::pair(t.trees[0], t.trees[1]), t.trees[2])};
    case K::assoc_inv:
      return {Tree::pair(Tree::pair(t.trees[0], t.trees[1]), t.trees[2]),
              Tree::pair(t.trees[0], Tree::pair(t.trees[1], t.trees[2]))};
    case K::sym:
      return {Tree::pair(t.trees[0], t.trees[1]),
              Tree::pair(t.trees[1], t.trees[0])};
    case K::tensor: {
      auto [d0, c0] = term_type(t.args[0]);
      auto [d1, c1] = term_type(t.args[1]);
      return {Tree::pair(d0, d1), Tree::pair(c0, c1)};
    }
    case K::compose: {
      auto [dg, cg] = term_type(t.args[0]);
      auto [df, cf] = term_type(t.args[1]);
      if (!(cf == dg))
        throw TypeError("composite is ill-typed: " + cf.str() +
                        " does not match " + dg.str());
      return {df, cg};
    }
    case K::dagger: {
      auto [d, c] = term_type(t.args[0]);
      return {c, d};
    }
    case K::assoc_internal:
    case K::sym_internal:
      return {S, S};
    case K::tensor_internal: {
      auto [d0, c0] = term_type(t.args[0]);
      auto [d1, c1] = term_type(t.args[1]);
      if (!(d0 == S) || !(c0 == S) || !(d1 == S) || !(c1 == S))
        throw TypeError("internalised tensor needs endo-arrows at S");
      return {S, S};
    }
    case K::code:
      return {Tree::pair(S, S), S};
    case K::decode:
      return {S, Tree::pair(S, S)};
  }
  throw TypeError("unknown term");
}

PrefixArrow eval_term(const CanonicalTerm& t, const SelfSimilarStructure& s) {
  using K = CanonicalTerm::Kind;
  switch (t.kind) {
    case K::id:
      return PrefixArrow::identity(t.trees[0]);
    case K::assoc:
      return PrefixArrow::assoc(t.trees[0], t.trees[1], t.trees[2]);
    case K::assoc_inv:
      return PrefixArrow::assoc_inv(t.trees[0], t.trees[1], t.trees[2]);
    case K::sym:
      return PrefixArrow::sym(t.trees[0], t.trees[1]);
    case K::tensor:
      return tensor(eval_term(t.args[0], s), eval_term(t.args[1], s));
    case K::compose:
      return compose(eval_term(t.args[0], s), eval_term(t.args[1], s));
    case K::dagger:
      return eval_term(t.args[0], s).dagger();
    case K::assoc_internal:
      return induced_isos(s).tau;
    case K::sym_internal:
      return induced_isos(s).sigma;
    case K::tensor_internal:
      return internalize(eval_term(t.args[0], s), eval_term(t.args[1], s), s);
    case K::code:
      return s.code();
    case K::decode:
      return s.decode();
  }
  throw TypeError("unknown term");
}

namespace {

bool has_internal(const CanonicalTerm& t) {
  using K = CanonicalTerm::Kind;
  if (t.kind == K::assoc_internal || t.kind == K::sym_internal ||
      t.kind == K::tensor_internal)
    return true;
  for (const CanonicalTerm& a : t.args)
    if (has_internal(a)) return true;
  return false;
}

}  // namespace

PrefixArrow inst(const CanonicalTerm& t, const SelfSimilarStructure& s) {
  if (has_internal(t))
    throw ValueError("untyped term has no instantiation: " + t.str());
  return eval_term(t, s);
}

PrefixArrow gen_code(const Tree& x, const SelfSimilarStructure& s) {
  if (x.is_leaf()) return PrefixArrow::identity(x);
  return compose(s.code(),
                 tensor(gen_code(x.left(), s), gen_code(x.right(), s)));
}

PrefixArrow gen_decode(const Tree& x, const SelfSimilarStructure& s) {
  return gen_code(x, s).dagger();
}

PrefixArrow phi(const CanonicalTerm& t, const SelfSimilarStructure& s) {
  auto [d, c] = term_type(t);
  return compose(gen_code(c, s), compose(eval_term(t, s), gen_decode(d, s)));
}

namespace {

LeafPerm identity_perm(const Tree& t) {
  LeafPerm p;
  for (const std::string& l : t.leaves()) p[l] = l;
  return p;
}

LeafPerm invert(const LeafPerm& p) {
  LeafPerm out;
  for (const auto& [k, v] : p) out[v] = k;
  return out;
}

}  // namespace

LeafPerm leaf_permutation(const CanonicalTerm& t) {
  using K = CanonicalTerm::Kind;
  switch (t.kind) {
    case K::id:
      return identity_perm(t.trees[0]);
    case K::assoc: {
      LeafPerm p;
      for (const std::string& l : t.trees[0].leaves()) p["L" + l] = "LL" + l;
      for (const std::string& l : t.trees[1].leaves()) p["RL" + l] = "LR" + l;
      for (const std::string& l : t.trees[2].leaves()) p["RR" + l] = "R" + l;
      return p;
    }
    case K::assoc_inv:
      return invert(leaf_permutation(
          CanonicalTerm::make_assoc(t.trees[0], t.trees[1], t.trees[2])));
    case K::sym: {
      LeafPerm p;
      for (const std::string& l : t.trees[0].leaves()) p["L" + l] = "R" + l;
      for (const std::string& l : t.trees[1].leaves()) p["R" + l] = "L" + l;
      return p;
    }
    case K::tensor: {
      LeafPerm p;
      for (const auto& [k, v] : leaf_permutation(t.args[0])) p["L" + k] = "L" + v;
      for (const auto& [k, v] : leaf_permutation(t.args[1])) p["R" + k] = "R" + v;
      return p;
    }
    case K::compose: {
      LeafPerm inner = leaf_permutation(t.args[1]);
      LeafPerm outer = leaf_permutation(t.args[0]);
      term_type(t);  // typing check, so the chaining below is total
      LeafPerm p;
      for (const auto& [k, v] : inner) p[k] = outer.at(v);
      return p;
    }
    case K::dagger:
      return invert(leaf_permutation(t.args[0]));
    default:
      throw NotCanonical("not a canonical arrow: " + t.str());
  }
}

void validate(const Diagram& d) {
  std::set<std::string> ids;
  for (const DiagramNode& n : d.nodes)
    if (!ids.insert(n.id).second)
      throw ValueError("duplicate node id: " + n.id);
  auto node_index = [&](const std::string& id) {
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
      if (d.nodes[i].id == id) return i;
    throw ValueError("edge endpoint references unknown node: " + id);
  };
  for (const DiagramEdge& e : d.edges) {
    node_index(e.src);
    node_index(e.dst);
  }
  auto path_ends =
      [&](const Path& p) -> std::pair<std::string, std::string> {
    if (p.empty()) throw ValueError("empty path in assertion");
    for (std::size_t i : p)
      if (i >= d.edges.size())
        throw ValueError("path references edge " + std::to_string(i) +
                         " out of range");
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (d.edges[p[i]].dst != d.edges[p[i + 1]].src)
        throw ValueError("path is not a chain at edge " +
                         std::to_string(p[i]));
    return {d.edges[p.front()].src, d.edges[p.back()].dst};
  };
  for (const DiagramAssert& a : d.asserts) {
    auto [s1, e1] = path_ends(a.lhs);
    auto [s2, e2] = path_ends(a.rhs);
    if (s1 != s2 || e1 != e2)
      throw ValueError("asserted paths do not share endpoints: " + s1 + "->" +
                       e1 + " vs " + s2 + "->" + e2);
  }
}

CheckOutcome check_free(const Diagram& d) {
  validate(d);
  for (const DiagramNode& n : d.nodes)
    if (!n.tree)
      return {Verdict::not_applicable,
              "node " + n.id + " is untyped; use the model or lift mode"};
  std::vector<LeafPerm> perms;
  std::vector<std::pair<Tree, Tree>> types;
  for (const DiagramEdge& e : d.edges) {
    try {
      perms.push_back(leaf_permutation(e.term));
    } catch (const NotCanonical& ex) {
      return {Verdict::not_applicable,
              std::string(ex.what()) + "; use the model or lift mode"};
    }
    types.push_back(term_type(e.term));
  }
  auto node_tree = [&](const std::string& id) -> const Tree& {
    for (const DiagramNode& n : d.nodes)
      if (n.id == id) return *n.tree;
    throw ValueError("unknown node " + id);
  };
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    if (!(types[i].first == node_tree(d.edges[i].src)) ||
        !(types[i].second == node_tree(d.edges[i].dst)))
      throw TypeError("edge " + std::to_string(i) +
                      " typing does not match its endpoints");
  }
  auto path_perm = [&](const Path& p) {
    LeafPerm acc = perms[p.front()];
    for (std::size_t i = 1; i < p.size(); ++i) {
      LeafPerm next;
      for (const auto& [k, v] : acc) next[k] = perms[p[i]].at(v);
      acc = std::move(next);
    }
    return acc;
  };
  for (std::size_t i = 0; i < d.asserts.size(); ++i) {
    if (path_perm(d.asserts[i].lhs) != path_perm(d.asserts[i].rhs))
      return {Verdict::fails, "assertion " + std::to_string(i) +
                                  ": paths are not canonically equal "
                                  "(leaf permutations differ)"};
  }
  return {Verdict::commutes,
          "all " + std::to_string(d.asserts.size()) + " assertion(s) commute"};
}

CheckOutcome check_model(const Diagram& d, const SelfSimilarStructure& s) {
  validate(d);
  std::vector<PrefixArrow> arrs;
  for (const DiagramEdge& e : d.edges) arrs.push_back(eval_term(e.term, s));
  auto node_tree = [&](const std::string& id) -> Tree {
    for (const DiagramNode& n : d.nodes)
      if (n.id == id) return n.tree ? *n.tree : leaf_tree();
    throw ValueError("unknown node " + id);
  };
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    if (!(arrs[i].dom() == node_tree(d.edges[i].src)) ||
        !(arrs[i].cod() == node_tree(d.edges[i].dst)))
      throw TypeError("edge " + std::to_string(i) +
                      " typing does not match its endpoints");
  }
  auto path_arrow = [&](const Path& p) {
    PrefixArrow acc = arrs[p.front()];
    for (std::size_t i = 1; i < p.size(); ++i) acc = compose(arrs[p[i]], acc);
    return acc;
  };
  for (std::size_t i = 0; i < d.asserts.size(); ++i) {
    PrefixArrow lhs = path_arrow(d.asserts[i].lhs);
    PrefixArrow rhs = path_arrow(d.asserts[i].rhs);
    if (!(lhs == rhs))
      return {Verdict::fails, "assertion " + std::to_string(i) +
                                  " does not commute: " + lhs.str() +
                                  " != " + rhs.str()};
  }
  return {Verdict::commutes,
          "all " + std::to_string(d.asserts.size()) + " assertion(s) commute"};
}

// --- lifting --------------------------------------------------------------

namespace {

// First-order tree expressions with unification variables; every
// non-variable node is a pair (the lift rules never pin a leaf).
struct TExpr {
  int var = -1;  // >= 0: variable id
  std::shared_ptr<TExpr> l, r;
};
using TExprPtr = std::shared_ptr<TExpr>;

TExprPtr tvar(int id) {
  auto e = std::make_shared<TExpr>();
  e->var = id;
  return e;
}

TExprPtr tpair(TExprPtr l, TExprPtr r) {
  auto e = std::make_shared<TExpr>();
  e->l = std::move(l);
  e->r = std::move(r);
  return e;
}

struct Unifier {
  std::vector<TExprPtr> binding;  // by variable id; null = free

  int fresh() {
    binding.push_back(nullptr);
    return static_cast<int>(binding.size()) - 1;
  }

  TExprPtr resolve(TExprPtr e) {
    while (e->var >= 0 && binding[e->var]) e = binding[e->var];
    return e;
  }

  bool occurs(int v, const TExprPtr& e0) {
    TExprPtr e = resolve(e0);
    if (e->var >= 0) return e->var == v;
    return occurs(v, e->l) || occurs(v, e->r);
  }

  bool unify(TExprPtr a, TExprPtr b) {
    a = resolve(std::move(a));
    b = resolve(std::move(b));
    if (a->var >= 0 && b->var >= 0 && a->var == b->var) return true;
    if (a->var >= 0) {
      if (occurs(a->var, b)) return false;
      binding[a->var] = b;
      return true;
    }
    if (b->var >= 0) return unify(b, a);
    return unify(a->l, b->l) && unify(a->r, b->r);
  }

  void free_vars(const TExprPtr& e0, std::set<int>& out) {
    TExprPtr e = resolve(e0);
    if (e->var >= 0) {
      out.insert(e->var);
      return;
    }
    free_vars(e->l, out);
    free_vars(e->r, out);
  }

  Tree instantiate(const TExprPtr& e0, const std::map<int, Tree>& assign) {
    TExprPtr e = resolve(e0);
    if (e->var >= 0) return assign.at(e->var);
    return Tree::pair(instantiate(e->l, assign), instantiate(e->r, assign));
  }
};

// A canonical-term shape whose tree parameters are expressions.
struct Skel {
  enum class Kind { id, assoc, assoc_inv, sym, tensor, compose, dagger };
  Kind kind = Kind::id;
  std::vector<TExprPtr> texprs;
  std::vector<Skel> args;
  TExprPtr dom, cod;
};

// Builds the canonical replacement shape of a mixed-toolkit term: typed
// canonical constructors and their internal counterparts both become
// fresh canonical cells; code/decode collapse to identities.
Skel skeleton(const CanonicalTerm& t, Unifier& u) {
  using K = CanonicalTerm::Kind;
  Skel s;
  switch (t.kind) {
    case K::id:
    case K::code:
    case K::decode: {
      s.kind = Skel::Kind::id;
      TExprPtr v = tvar(u.fresh());
      s.texprs = {v};
      s.dom = v;
      s.cod = v;
      return s;
    }
    case K::assoc:
    case K::assoc_internal: {
      s.kind = Skel::Kind::assoc;
      TExprPtr x = tvar(u.fresh()), y = tvar(u.fresh()), z = tvar(u.fresh());
      s.texprs = {x, y, z};
      s.dom = tpair(x, tpair(y, z));
      s.cod = tpair(tpair(x, y), z);
      return s;
    }
    case K::assoc_inv: {
      s.kind = Skel::Kind::assoc_inv;
      TExprPtr x = tvar(u.fresh()), y = tvar(u.fresh()), z = tvar(u.fresh());
      s.texprs = {x, y, z};
      s.dom = tpair(tpair(x, y), z);
      s.cod = tpair(x, tpair(y, z));
      return s;
    }
    case K::sym:
    case K::sym_internal: {
      s.kind = Skel::Kind::sym;
      TExprPtr x = tvar(u.fresh()), y = tvar(u.fresh());
      s.texprs = {x, y};
      s.dom = tpair(x, y);
      s.cod = tpair(y, x);
      return s;
    }
    case K::tensor:
    case K::tensor_internal: {
      s.kind = Skel::Kind::tensor;
      s.args = {skeleton(t.args[0], u), skeleton(t.args[1], u)};
      s.dom = tpair(s.args[0].dom, s.args[1].dom);
      s.cod = tpair(s.args[0].cod, s.args[1].cod);
      return s;
    }
    case K::compose: {
      s.kind = Skel::Kind::compose;
      s.args = {skeleton(t.args[0], u), skeleton(t.args[1], u)};
      if (!u.unify(s.args[1].cod, s.args[0].dom))
        throw ValueError("composite cannot be lifted: middle types clash");
      s.dom = s.args[1].dom;
      s.cod = s.args[0].cod;
      return s;
    }
    case K::dagger: {
      s.kind = Skel::Kind::dagger;
      s.args = {skeleton(t.args[0], u)};
      s.dom = s.args[0].cod;
      s.cod = s.args[0].dom;
      return s;
    }
    default:
      throw ValueError("term cannot be lifted: " + t.str());
  }
}

CanonicalTerm instantiate_skel(const Skel& s, Unifier& u,
                               const std::map<int, Tree>& assign) {
  switch (s.kind) {
    case Skel::Kind::id:
      return CanonicalTerm::make_id(u.instantiate(s.texprs[0], assign));
    case Skel::Kind::assoc:
      return CanonicalTerm::make_assoc(u.instantiate(s.texprs[0], assign),
                                       u.instantiate(s.texprs[1], assign),
                                       u.instantiate(s.texprs[2], assign));
    case Skel::Kind::assoc_inv:
      return CanonicalTerm::make_assoc_inv(u.instantiate(s.texprs[0], assign),
                                           u.instantiate(s.texprs[1], assign),
                                           u.instantiate(s.texprs[2], assign));
    case Skel::Kind::sym:
      return CanonicalTerm::make_sym(u.instantiate(s.texprs[0], assign),
                                     u.instantiate(s.texprs[1], assign));
    case Skel::Kind::tensor:
      return CanonicalTerm::make_tensor(instantiate_skel(s.args[0], u, assign),
                                        instantiate_skel(s.args[1], u, assign));
    case Skel::Kind::compose:
      return CanonicalTerm::make_compose(
          instantiate_skel(s.args[0], u, assign),
          instantiate_skel(s.args[1], u, assign));
    case Skel::Kind::dagger:
      return CanonicalTerm::make_dagger(instantiate_skel(s.args[0], u, assign));
  }
  throw ValueError("unreachable skeleton kind");
}

// Enumerates assignments of trees to `vars`, iterative-deepening on the
// total number of leaves; calls `visit` until it returns true.
bool enumerate_assignments(const std::vector<int>& vars, std::size_t bound,
                           const std::function<bool(std::map<int, Tree>&)>& visit) {
  if (vars.empty()) {
    std::map<int, Tree> empty;
    return visit(empty);
  }
  for (std::size_t total = vars.size(); total <= vars.size() * bound; ++total) {
    std::map<int, Tree> assign;
    std::function<bool(std::size_t, std::size_t)> rec =
        [&](std::size_t idx, std::size_t remaining) -> bool {
      if (idx == vars.size()) return remaining == 0;
      std::size_t slots_left = vars.size() - idx - 1;
      for (std::size_t k = 1; k + slots_left <= remaining && k <= bound; ++k) {
        if (remaining - k > slots_left * bound) continue;
        for (const Tree& t : trees_with_leaves(k)) {
          assign.insert_or_assign(vars[idx], t);
          if (idx + 1 == vars.size()) {
            if (remaining == k && visit(assign)) return true;
          } else if (rec(idx + 1, remaining - k)) {
            return true;
          }
        }
      }
      return false;
    };
    if (rec(0, total)) return true;
  }
  return false;
}

}  // namespace

LiftResult lift_diagram(const Diagram& d, std::size_t bound) {
  validate(d);
  // Only well-typed diagrams are candidates for certification.
  auto node_tree = [&](const std::string& id) -> Tree {
    for (const DiagramNode& n : d.nodes)
      if (n.id == id) return n.tree ? *n.tree : leaf_tree();
    throw ValueError("unknown node " + id);
  };
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    auto [dt, ct] = term_type(d.edges[i].term);
    if (!(dt == node_tree(d.edges[i].src)) ||
        !(ct == node_tree(d.edges[i].dst)))
      throw TypeError("edge " + std::to_string(i) +
                      " typing does not match its endpoints");
  }
  Unifier u;
  std::map<std::string, TExprPtr> node_var;
  for (const DiagramNode& n : d.nodes) node_var[n.id] = tvar(u.fresh());

  std::vector<Skel> skels;
  try {
    for (const DiagramEdge& e : d.edges) {
      Skel s = skeleton(e.term, u);
      if (!u.unify(s.dom, node_var[e.src]) || !u.unify(s.cod, node_var[e.dst]))
        return {false, std::nullopt,
                "no lift: type constraints are unsatisfiable"};
      skels.push_back(std::move(s));
    }
  } catch (const ValueError& ex) {
    return {false, std::nullopt, std::string("no lift: ") + ex.what()};
  }

  std::set<int> free;
  for (const auto& [id, v] : node_var) u.free_vars(v, free);
  for (const Skel& s : skels) {
    u.free_vars(s.dom, free);
    u.free_vars(s.cod, free);
  }
  std::vector<int> vars(free.begin(), free.end());

  LiftResult result;
  enumerate_assignments(vars, bound, [&](std::map<int, Tree>& assign) {
    // Reject assignments that push any node tree past the bound.
    std::map<std::string, Tree> node_trees;
    for (const auto& [id, v] : node_var) {
      Tree t = u.instantiate(v, assign);
      if (t.leaf_count() > bound) return false;
      node_trees.emplace(id, std::move(t));
    }
    Diagram typed;
    for (const DiagramNode& n : d.nodes)
      typed.nodes.push_back({n.id, node_trees.at(n.id)});
    for (std::size_t i = 0; i < d.edges.size(); ++i)
      typed.edges.push_back({d.edges[i].src, d.edges[i].dst,
                             instantiate_skel(skels[i], u, assign)});
    typed.asserts = d.asserts;
    if (check_free(typed).verdict != Verdict::commutes) return false;
    std::string detail = "certified; witness typing:";
    for (const auto& [id, t] : node_trees) detail += " " + id + "=" + t.str();
    result = {true, std::move(typed), std::move(detail)};
    return true;
  });
  if (!result.certified)
    result.detail = "no lift within bound " + std::to_string(bound);
  return result;
}

}  // namespace piso
