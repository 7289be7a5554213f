#include "piso/arrow.hpp"

#include <algorithm>
#include <utility>

#include "piso/errors.hpp"

namespace piso {

namespace {

bool is_prefix(const std::string& a, const std::string& b) {
  return b.size() >= a.size() && b.compare(0, a.size(), a) == 0;
}

bool comparable(const std::string& a, const std::string& b) {
  return is_prefix(a, b) || is_prefix(b, a);
}

bool term_less(const RewriteTerm& a, const RewriteTerm& b) {
  if (a.source_leaf != b.source_leaf) return a.source_leaf < b.source_leaf;
  if (a.source_word != b.source_word) return a.source_word < b.source_word;
  if (a.target_leaf != b.target_leaf) return a.target_leaf < b.target_leaf;
  return a.target_word < b.target_word;
}

void check_word(const std::string& w) {
  for (char c : w)
    if (c != '0' && c != '1')
      throw TypeError("rewrite word must be binary, got \"" + w + "\"");
}

// Two sibling terms merge when they agree on both leaves, one carries the
// 0-extension and the other the 1-extension of a common stem on *both*
// sides.  Misaligned siblings (0 on one side, 1 on the other) denote a
// genuine bit flip and stay as they are.
bool try_merge(std::vector<RewriteTerm>& ts) {
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      const RewriteTerm& a = ts[i];
      const RewriteTerm& b = ts[j];
      if (a.target_leaf != b.target_leaf || a.source_leaf != b.source_leaf)
        continue;
      if (a.target_word.empty() || b.target_word.empty() ||
          a.source_word.empty() || b.source_word.empty())
        continue;
      const RewriteTerm* zero_side = nullptr;
      const RewriteTerm* one_side = nullptr;
      if (a.target_word.back() == '0' && a.source_word.back() == '0' &&
          b.target_word.back() == '1' && b.source_word.back() == '1') {
        zero_side = &a;
        one_side = &b;
      } else if (b.target_word.back() == '0' && b.source_word.back() == '0' &&
                 a.target_word.back() == '1' && a.source_word.back() == '1') {
        zero_side = &b;
        one_side = &a;
      } else {
        continue;
      }
      std::string tstem = zero_side->target_word.substr(
          0, zero_side->target_word.size() - 1);
      std::string sstem = zero_side->source_word.substr(
          0, zero_side->source_word.size() - 1);
      if (one_side->target_word.compare(0, tstem.size(), tstem) != 0 ||
          one_side->target_word.size() != tstem.size() + 1)
        continue;
      if (one_side->source_word.compare(0, sstem.size(), sstem) != 0 ||
          one_side->source_word.size() != sstem.size() + 1)
        continue;
      RewriteTerm merged{a.target_leaf, std::move(tstem), a.source_leaf,
                         std::move(sstem)};
      ts.erase(ts.begin() + j);
      ts.erase(ts.begin() + i);
      ts.push_back(std::move(merged));
      return true;
    }
  }
  return false;
}

}  // namespace

PrefixArrow::PrefixArrow(Tree dom, Tree cod, std::vector<RewriteTerm> terms)
    : dom_(std::move(dom)), cod_(std::move(cod)), terms_(std::move(terms)) {
  for (const RewriteTerm& t : terms_) {
    if (!dom_.has_leaf(t.source_leaf))
      throw TypeError("no leaf \"" + t.source_leaf + "\" in domain tree " +
                      dom_.str());
    if (!cod_.has_leaf(t.target_leaf))
      throw TypeError("no leaf \"" + t.target_leaf + "\" in codomain tree " +
                      cod_.str());
    check_word(t.source_word);
    check_word(t.target_word);
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    for (std::size_t j = i + 1; j < terms_.size(); ++j) {
      const RewriteTerm& a = terms_[i];
      const RewriteTerm& b = terms_[j];
      if (a.source_leaf == b.source_leaf &&
          comparable(a.source_word, b.source_word))
        throw JoinError("terms not orthogonal on the source side: (" +
                        a.source_leaf + ",\"" + a.source_word + "\") vs (" +
                        b.source_leaf + ",\"" + b.source_word + "\")");
      if (a.target_leaf == b.target_leaf &&
          comparable(a.target_word, b.target_word))
        throw JoinError("terms not orthogonal on the target side: (" +
                        a.target_leaf + ",\"" + a.target_word + "\") vs (" +
                        b.target_leaf + ",\"" + b.target_word + "\")");
    }
  }
  while (try_merge(terms_)) {
  }
  std::sort(terms_.begin(), terms_.end(), term_less);
}

PrefixArrow PrefixArrow::zero(const Tree& dom, const Tree& cod) {
  return PrefixArrow(dom, cod, {});
}

PrefixArrow PrefixArrow::identity(const Tree& at) {
  std::vector<RewriteTerm> ts;
  for (const std::string& l : at.leaves()) ts.push_back({l, "", l, ""});
  return PrefixArrow(at, at, std::move(ts));
}

PrefixArrow PrefixArrow::assoc(const Tree& a, const Tree& b, const Tree& c) {
  // A□(B□C) -> (A□B)□C, identity on every leaf's word.
  Tree dom = Tree::pair(a, Tree::pair(b, c));
  Tree cod = Tree::pair(Tree::pair(a, b), c);
  std::vector<RewriteTerm> ts;
  for (const std::string& l : a.leaves()) ts.push_back({"LL" + l, "", "L" + l, ""});
  for (const std::string& l : b.leaves()) ts.push_back({"LR" + l, "", "RL" + l, ""});
  for (const std::string& l : c.leaves()) ts.push_back({"R" + l, "", "RR" + l, ""});
  return PrefixArrow(std::move(dom), std::move(cod), std::move(ts));
}

PrefixArrow PrefixArrow::assoc_inv(const Tree& a, const Tree& b, const Tree& c) {
  return assoc(a, b, c).dagger();
}

PrefixArrow PrefixArrow::sym(const Tree& a, const Tree& b) {
  Tree dom = Tree::pair(a, b);
  Tree cod = Tree::pair(b, a);
  std::vector<RewriteTerm> ts;
  for (const std::string& l : a.leaves()) ts.push_back({"R" + l, "", "L" + l, ""});
  for (const std::string& l : b.leaves()) ts.push_back({"L" + l, "", "R" + l, ""});
  return PrefixArrow(std::move(dom), std::move(cod), std::move(ts));
}

PrefixArrow PrefixArrow::incl_left(const Tree& x, const Tree& y) {
  std::vector<RewriteTerm> ts;
  for (const std::string& l : x.leaves()) ts.push_back({"L" + l, "", l, ""});
  return PrefixArrow(x, Tree::pair(x, y), std::move(ts));
}

PrefixArrow PrefixArrow::incl_right(const Tree& x, const Tree& y) {
  std::vector<RewriteTerm> ts;
  for (const std::string& l : y.leaves()) ts.push_back({"R" + l, "", l, ""});
  return PrefixArrow(y, Tree::pair(x, y), std::move(ts));
}

PrefixArrow PrefixArrow::proj_left(const Tree& x, const Tree& y) {
  return incl_left(x, y).dagger();
}

PrefixArrow PrefixArrow::proj_right(const Tree& x, const Tree& y) {
  return incl_right(x, y).dagger();
}

PrefixArrow PrefixArrow::dagger() const {
  std::vector<RewriteTerm> ts;
  ts.reserve(terms_.size());
  for (const RewriteTerm& t : terms_)
    ts.push_back({t.source_leaf, t.source_word, t.target_leaf, t.target_word});
  return PrefixArrow(cod_, dom_, std::move(ts));
}

bool PrefixArrow::is_unitary() const {
  return compose(dagger(), *this) == identity(dom_) &&
         compose(*this, dagger()) == identity(cod_);
}

ApplyOutcome PrefixArrow::apply(const CantorPoint& p) const {
  if (!dom_.has_leaf(p.leaf))
    throw TypeError("point leaf \"" + p.leaf + "\" not in domain tree " +
                    dom_.str());
  check_word(p.word);
  for (const RewriteTerm& t : terms_) {
    if (t.source_leaf != p.leaf) continue;
    if (is_prefix(t.source_word, p.word)) {
      return {ApplyOutcome::Status::mapped,
              {t.target_leaf, t.target_word + p.word.substr(t.source_word.size())}};
    }
    if (is_prefix(p.word, t.source_word))
      return {ApplyOutcome::Status::truncated, {}};
  }
  return {ApplyOutcome::Status::outside, {}};
}

std::string PrefixArrow::str() const {
  if (terms_.empty()) return "0";
  std::string out = "{";
  bool first = true;
  for (const RewriteTerm& t : terms_) {
    if (!first) out += ", ";
    first = false;
    if (!t.target_leaf.empty()) out += t.target_leaf + ":";
    out += "\"" + t.target_word + "\"<-";
    if (!t.source_leaf.empty()) out += t.source_leaf + ":";
    out += "\"" + t.source_word + "\"";
  }
  out += "}";
  return out;
}

PrefixArrow compose(const PrefixArrow& g, const PrefixArrow& f) {
  if (!(f.cod() == g.dom()))
    throw TypeError("cannot compose: middle objects differ, " + f.cod().str() +
                    " vs " + g.dom().str());
  std::vector<RewriteTerm> out;
  for (const RewriteTerm& ft : f.terms()) {
    for (const RewriteTerm& gt : g.terms()) {
      if (ft.target_leaf != gt.source_leaf) continue;
      if (is_prefix(gt.source_word, ft.target_word)) {
        std::string rest = ft.target_word.substr(gt.source_word.size());
        out.push_back({gt.target_leaf, gt.target_word + rest, ft.source_leaf,
                       ft.source_word});
      } else if (is_prefix(ft.target_word, gt.source_word)) {
        std::string rest = gt.source_word.substr(ft.target_word.size());
        out.push_back({gt.target_leaf, gt.target_word, ft.source_leaf,
                       ft.source_word + rest});
      }
    }
  }
  return PrefixArrow(f.dom(), g.cod(), std::move(out));
}

PrefixArrow tensor(const PrefixArrow& f, const PrefixArrow& g) {
  std::vector<RewriteTerm> out;
  for (const RewriteTerm& t : f.terms())
    out.push_back({"L" + t.target_leaf, t.target_word, "L" + t.source_leaf,
                   t.source_word});
  for (const RewriteTerm& t : g.terms())
    out.push_back({"R" + t.target_leaf, t.target_word, "R" + t.source_leaf,
                   t.source_word});
  return PrefixArrow(Tree::pair(f.dom(), g.dom()),
                     Tree::pair(f.cod(), g.cod()), std::move(out));
}

bool orthogonal(const PrefixArrow& f, const PrefixArrow& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw TypeError("orthogonality needs parallel arrows");
  return compose(g.dagger(), f).is_zero() && compose(g, f.dagger()).is_zero();
}

PrefixArrow join(const PrefixArrow& f, const PrefixArrow& g) {
  if (!orthogonal(f, g)) throw JoinError("join undefined: arrows not orthogonal");
  std::vector<RewriteTerm> ts = f.terms();
  ts.insert(ts.end(), g.terms().begin(), g.terms().end());
  return PrefixArrow(f.dom(), f.cod(), std::move(ts));
}

bool natural_leq(const PrefixArrow& f, const PrefixArrow& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw TypeError("natural order needs parallel arrows");
  return f == compose(g, compose(f.dagger(), f));
}

}  // namespace piso
