#include "piso/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "piso/errors.hpp"

namespace piso {

namespace {

const Tree& leaf_tree() {
  static const Tree t = Tree::leaf();
  return t;
}

void require_endo(const PrefixArrow& f) {
  if (!(f.dom() == leaf_tree()) || !(f.cod() == leaf_tree()))
    throw TypeError("matrix operations need endo-arrows at S, got " +
                    f.dom().str() + " -> " + f.cod().str());
}

}  // namespace

P2Embedding embed_p2(const SelfSimilarStructure& s) {
  const Tree& S = leaf_tree();
  PrefixArrow p = compose(PrefixArrow::proj_left(S, S), s.decode());
  PrefixArrow q = compose(PrefixArrow::proj_right(S, S), s.decode());
  const PrefixArrow one = PrefixArrow::identity(S);
  const PrefixArrow null = PrefixArrow::zero(S, S);
  // These hold for every unitary code arrow; a failure is a bug here, not
  // a property of the input.
  if (!(compose(p, p.dagger()) == one) || !(compose(q, q.dagger()) == one) ||
      !(compose(p, q.dagger()) == null) || !(compose(q, p.dagger()) == null) ||
      !(join(compose(p.dagger(), p), compose(q.dagger(), q)) == one))
    throw std::logic_error("polycyclic embedding invariants violated");
  return {std::move(p), std::move(q)};
}

std::string Matrix2::str() const {
  return "[[" + e00.str() + ", " + e01.str() + "], [" + e10.str() + ", " +
         e11.str() + "]]";
}

Matrix2 identity_matrix() {
  const Tree& S = leaf_tree();
  return {PrefixArrow::identity(S), PrefixArrow::zero(S, S),
          PrefixArrow::zero(S, S), PrefixArrow::identity(S)};
}

Matrix2 matrix_rep(const PrefixArrow& f, const SelfSimilarStructure& s) {
  require_endo(f);
  P2Embedding e = embed_p2(s);
  auto entry = [&](const PrefixArrow& xi, const PrefixArrow& xj) {
    return compose(xi, compose(f, xj.dagger()));
  };
  return {entry(e.p, e.p), entry(e.p, e.q), entry(e.q, e.p), entry(e.q, e.q)};
}

Matrix2 mat_mul(const Matrix2& m, const Matrix2& n) {
  auto cell = [&](const PrefixArrow& a, const PrefixArrow& b,
                  const PrefixArrow& c, const PrefixArrow& d) {
    return join(compose(a, b), compose(c, d));
  };
  return {cell(m.e00, n.e00, m.e01, n.e10), cell(m.e00, n.e01, m.e01, n.e11),
          cell(m.e10, n.e00, m.e11, n.e10), cell(m.e10, n.e01, m.e11, n.e11)};
}

PrefixArrow reconstruct(const Matrix2& m, const SelfSimilarStructure& s) {
  P2Embedding e = embed_p2(s);
  const PrefixArrow* xs[2] = {&e.p, &e.q};
  std::vector<PrefixArrow> pieces;
  const PrefixArrow* cells[2][2] = {{&m.e00, &m.e01}, {&m.e10, &m.e11}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      pieces.push_back(
          compose(xs[i]->dagger(), compose(*cells[i][j], *xs[j])));
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      if (!orthogonal(pieces[i], pieces[j]))
        throw JoinError(
            "matrix is not a representation w.r.t. this structure: "
            "reconstruction summands overlap");
  PrefixArrow out = pieces[0];
  for (std::size_t i = 1; i < pieces.size(); ++i) out = join(out, pieces[i]);
  return out;
}

RebaseResult rebase(const PrefixArrow& f, const SelfSimilarStructure& from,
                    const SelfSimilarStructure& to) {
  require_endo(f);
  P2Embedding ef = embed_p2(from);
  P2Embedding et = embed_p2(to);
  const PrefixArrow* xf[2] = {&ef.p, &ef.q};
  const PrefixArrow* xt[2] = {&et.p, &et.q};
  auto u_entry = [&](int i, int j) { return compose(*xf[i], xt[j]->dagger()); };
  Matrix2 u{u_entry(0, 0), u_entry(0, 1), u_entry(1, 0), u_entry(1, 1)};
  Matrix2 ud{u.e00.dagger(), u.e10.dagger(), u.e01.dagger(), u.e11.dagger()};
  Matrix2 direct = matrix_rep(f, to);
  Matrix2 conj = mat_mul(ud, mat_mul(matrix_rep(f, from), u));
  return {std::move(direct), std::move(conj), std::move(u), std::move(ud)};
}

bool is_diagonalized_by(const PrefixArrow& f, const SelfSimilarStructure& from,
                        const SelfSimilarStructure& to) {
  RebaseResult r = rebase(f, from, to);
  if (!r.consistent())
    throw std::logic_error("change of representation disagrees with direct form");
  return r.direct.e01.is_zero() && r.direct.e10.is_zero();
}

Matrix2 diagonal_form(const PrefixArrow& x, const PrefixArrow& y,
                      const SelfSimilarStructure& from,
                      const SelfSimilarStructure& to) {
  return matrix_rep(internalize(x, y, to), from);
}

DiagonalExtraction extract_diagonal(const PrefixArrow& f,
                                    const SelfSimilarStructure& to) {
  require_endo(f);
  Matrix2 m = matrix_rep(f, to);
  DiagonalExtraction out{m.e01.is_zero() && m.e10.is_zero(), m.e00, m.e11,
                         false};
  out.reproduces = (f == internalize(out.x, out.y, to));
  return out;
}

namespace {

// Complete prefix codes of a given size: leaf words of each tree shape.
std::vector<std::vector<std::string>> codes_of_size(std::size_t n,
                                                    std::size_t max_depth) {
  std::vector<std::vector<std::string>> out;
  for (const Tree& t : trees_with_leaves(n)) {
    if (t.depth() > max_depth) continue;
    std::vector<std::string> code;
    for (std::string& l : t.leaves()) {
      std::string w;
      for (char c : l) w.push_back(c == 'L' ? '0' : '1');
      code.push_back(std::move(w));
    }
    out.push_back(std::move(code));
  }
  return out;
}

}  // namespace

std::optional<SelfSimilarStructure> search_diagonalizer(
    const PrefixArrow& f, const SelfSimilarStructure& from,
    std::size_t max_depth, std::size_t max_terms) {
  require_endo(f);
  const Tree& S = leaf_tree();
  const Tree SS = Tree::pair(S, S);
  for (std::size_t k = 2; k <= max_terms; ++k) {
    auto targets = codes_of_size(k, max_depth);
    for (std::size_t kl = 1; kl < k; ++kl) {
      auto lefts = codes_of_size(kl, max_depth);
      auto rights = codes_of_size(k - kl, max_depth);
      for (const auto& lc : lefts)
        for (const auto& rc : rights) {
          // Source side of the candidate code arrow, in a fixed order.
          std::vector<std::pair<std::string, std::string>> sources;
          for (const auto& w : lc) sources.emplace_back("L", w);
          for (const auto& w : rc) sources.emplace_back("R", w);
          for (const auto& tc : targets) {
            std::vector<std::size_t> perm(k);
            for (std::size_t i = 0; i < k; ++i) perm[i] = i;
            do {
              std::vector<RewriteTerm> terms;
              for (std::size_t i = 0; i < k; ++i)
                terms.push_back({"", tc[perm[i]], sources[i].first,
                                 sources[i].second});
              SelfSimilarStructure cand(PrefixArrow(SS, S, std::move(terms)));
              if (is_diagonalized_by(f, from, cand)) return cand;
            } while (std::next_permutation(perm.begin(), perm.end()));
          }
        }
    }
  }
  return std::nullopt;
}

}  // namespace piso
