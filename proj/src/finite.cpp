#include "piso/finite.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "piso/errors.hpp"

namespace piso {

FiniteSet FiniteSet::range(std::size_t n) {
  FiniteSet s;
  s.elems.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    s.elems.push_back(static_cast<std::uint8_t>(i));
  return s;
}

bool FiniteSet::contains(std::uint8_t x) const {
  return std::binary_search(elems.begin(), elems.end(), x);
}

FinPIso::FinPIso(FiniteSet dom, FiniteSet cod,
                 std::vector<std::pair<std::uint8_t, std::uint8_t>> graph)
    : dom_(std::move(dom)), cod_(std::move(cod)), graph_(std::move(graph)) {
  for (const FiniteSet* s : {&dom_, &cod_})
    for (std::size_t i = 1; i < s->elems.size(); ++i)
      if (s->elems[i - 1] >= s->elems[i])
        throw ValueError("carrier elements must be strictly increasing");
  for (const auto& [b, a] : graph_) {
    if (!dom_.contains(a))
      throw ValueError("graph source " + std::to_string(a) + " not in domain");
    if (!cod_.contains(b))
      throw ValueError("graph target " + std::to_string(b) + " not in codomain");
  }
  // single-valued and injective both ways: b=y iff a=x
  for (std::size_t i = 0; i < graph_.size(); ++i)
    for (std::size_t j = i + 1; j < graph_.size(); ++j) {
      if (graph_[i].first == graph_[j].first ||
          graph_[i].second == graph_[j].second)
        throw ValueError("graph is not a partial isomorphism");
    }
  std::sort(graph_.begin(), graph_.end(),
            [](const auto& x, const auto& y) { return x.second < y.second; });
}

FinPIso FinPIso::identity(const FiniteSet& at) {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> g;
  for (std::uint8_t e : at.elems) g.emplace_back(e, e);
  return FinPIso(at, at, std::move(g));
}

FinPIso FinPIso::zero(const FiniteSet& dom, const FiniteSet& cod) {
  return FinPIso(dom, cod, {});
}

FinPIso FinPIso::dagger() const {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> g;
  g.reserve(graph_.size());
  for (const auto& [b, a] : graph_) g.emplace_back(a, b);
  return FinPIso(cod_, dom_, std::move(g));
}

bool FinPIso::is_idempotent() const {
  return dom_ == cod_ && compose(*this, *this) == *this;
}

bool FinPIso::is_iso() const {
  return graph_.size() == dom_.size() && graph_.size() == cod_.size();
}

std::string FinPIso::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [b, a] : graph_) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(b) + "<-" + std::to_string(a) + ")";
  }
  return out + "}";
}

FinPIso compose(const FinPIso& g, const FinPIso& f) {
  if (!(f.cod() == g.dom()))
    throw TypeError("cannot compose: middle carriers differ");
  std::vector<std::pair<std::uint8_t, std::uint8_t>> out;
  for (const auto& [m, a] : f.graph())
    for (const auto& [b, m2] : g.graph())
      if (m == m2) out.emplace_back(b, a);
  return FinPIso(f.dom(), g.cod(), std::move(out));
}

FinPIso join(const FinPIso& f, const FinPIso& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw TypeError("join needs parallel arrows");
  std::vector<std::pair<std::uint8_t, std::uint8_t>> out = f.graph();
  for (const auto& p : g.graph())
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  try {
    return FinPIso(f.dom(), f.cod(), std::move(out));
  } catch (const ValueError&) {
    throw JoinError("join undefined: union is not a partial isomorphism");
  }
}

FinPIso meet(const FinPIso& f, const FinPIso& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw TypeError("meet needs parallel arrows");
  std::vector<std::pair<std::uint8_t, std::uint8_t>> out;
  for (const auto& p : f.graph())
    if (std::find(g.graph().begin(), g.graph().end(), p) != g.graph().end())
      out.push_back(p);
  return FinPIso(f.dom(), f.cod(), std::move(out));
}

bool natural_leq(const FinPIso& f, const FinPIso& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw TypeError("natural order needs parallel arrows");
  return f == compose(g, compose(f.dagger(), f));
}

bool subset_of(const FinPIso& f, const FinPIso& g) {
  for (const auto& p : f.graph())
    if (std::find(g.graph().begin(), g.graph().end(), p) == g.graph().end())
      return false;
  return true;
}

bool orthogonal(const FinPIso& f, const FinPIso& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw TypeError("orthogonality needs parallel arrows");
  return compose(g.dagger(), f).graph().empty() &&
         compose(g, f.dagger()).graph().empty();
}

namespace {

void extend_arrows(const FiniteSet& dom, const FiniteSet& cod,
                   std::size_t next, std::vector<std::uint8_t>& used,
                   std::vector<std::pair<std::uint8_t, std::uint8_t>>& acc,
                   std::vector<FinPIso>& out) {
  if (next == dom.size()) {
    out.emplace_back(dom, cod, acc);
    return;
  }
  std::uint8_t a = dom.elems[next];
  extend_arrows(dom, cod, next + 1, used, acc, out);  // a unmapped
  for (std::uint8_t b : cod.elems) {
    if (std::find(used.begin(), used.end(), b) != used.end()) continue;
    used.push_back(b);
    acc.emplace_back(b, a);
    extend_arrows(dom, cod, next + 1, used, acc, out);
    acc.pop_back();
    used.pop_back();
  }
}

}  // namespace

std::vector<FinPIso> all_arrows(const FiniteSet& dom, const FiniteSet& cod) {
  std::vector<FinPIso> out;
  std::vector<std::uint8_t> used;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> acc;
  extend_arrows(dom, cod, 0, used, acc, out);
  return out;
}

bool AxiomReport::all_ok() const {
  for (const Law& l : laws)
    if (!l.ok) return false;
  return true;
}

namespace {

// Raw-graph helpers for the law loops that run hundreds of millions of
// times at carrier size 4.  Arrows come from the validated hom-set
// enumeration, so no re-validation happens here.
using Graph = std::vector<std::pair<std::uint8_t, std::uint8_t>>;
constexpr int kNoTarget = -1;
using Fwd = std::array<int, 8>;  // source element -> target or kNoTarget

Fwd forward(const FinPIso& f) {
  Fwd m;
  m.fill(kNoTarget);
  for (const auto& [b, a] : f.graph()) m[a] = b;
  return m;
}

// x∘a for a source-sorted graph `a`, as a source-sorted graph
void compose_raw(const Fwd& x, const Graph& a, Graph& out) {
  out.clear();
  for (const auto& [t, s] : a)
    if (x[t] != kNoTarget) out.emplace_back(static_cast<std::uint8_t>(x[t]), s);
}

// union of graphs with disjoint sources, sorted; false on any clash
bool merge_raw(const Graph& x, const Graph& y, Graph& out) {
  out.clear();
  std::size_t i = 0, j = 0;
  unsigned targets = 0;
  auto take = [&](const std::pair<std::uint8_t, std::uint8_t>& p) {
    if (targets & (1u << p.first)) return false;
    targets |= 1u << p.first;
    out.push_back(p);
    return true;
  };
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].second < y[j].second)) {
      if (!take(x[i++])) return false;
    } else if (i == x.size() || y[j].second < x[i].second) {
      if (!take(y[j++])) return false;
    } else {
      return false;  // duplicate source
    }
  }
  return true;
}

struct LawRecorder {
  AxiomReport::Law law;

  explicit LawRecorder(std::string name) { law.name = std::move(name); }

  void check(bool ok, auto&& witness) {
    ++law.instances;
    if (!ok && law.ok) {
      law.ok = false;
      law.counterexample = witness();
    }
  }
};

FinPIso random_arrow(std::mt19937_64& rng, const FiniteSet& dom,
                     const FiniteSet& cod) {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> g;
  std::vector<std::uint8_t> pool = cod.elems;
  for (std::uint8_t a : dom.elems) {
    if (pool.empty() || (rng() & 1)) continue;
    std::size_t k = rng() % pool.size();
    g.emplace_back(pool[k], a);
    pool.erase(pool.begin() + k);
  }
  return FinPIso(dom, cod, std::move(g));
}

}  // namespace

AxiomReport check_axioms(std::size_t max_size, std::uint64_t seed,
                         std::size_t samples) {
  constexpr std::size_t kExhaustiveCap = 4;
  AxiomReport report;

  LawRecorder inverses("generalised inverse laws (f f† f = f, f† f f† = f†)");
  LawRecorder uniqueness("uniqueness of generalised inverses");
  LawRecorder idempotents("idempotents are partial identities and commute");
  LawRecorder daggers("dagger laws ((gf)† = f† g†, f†† = f, isos unitary)");
  LawRecorder pushing("pushing idempotents (e' = f e f† gives e' f = f e)");
  LawRecorder order("natural order = graph inclusion, and is a congruence");
  LawRecorder distrib("composition distributes over orthogonal joins");

  auto run_laws = [&](const std::vector<FiniteSet>& objects,
                      auto arrows_between) {
    // Unary and binary laws over a pair of carriers.
    for (const FiniteSet& X : objects) {
      const auto idX = FinPIso::identity(X);
      for (const FiniteSet& Y : objects) {
        const auto& fs = arrows_between(X, Y);
        const auto& gs = arrows_between(Y, X);
        for (const FinPIso& f : fs) {
          const FinPIso fd = f.dagger();
          inverses.check(compose(f, compose(fd, f)) == f &&
                             compose(fd, compose(f, fd)) == fd,
                         [&] { return f.str(); });
          daggers.check(fd.dagger() == f, [&] { return f.str(); });
          if (f.is_iso())
            daggers.check(compose(f, fd) == FinPIso::identity(Y) &&
                              compose(fd, f) == idX,
                          [&] { return f.str(); });
          for (const FinPIso& g : gs) {
            if (compose(f, compose(g, f)) == f &&
                compose(g, compose(f, g)) == g)
              uniqueness.check(g == fd,
                               [&] { return f.str() + " vs " + g.str(); });
          }
        }
      }
      // Idempotent laws at one object.
      std::vector<FinPIso> idems;
      for (const FinPIso& e : arrows_between(X, X))
        if (e.is_idempotent()) idems.push_back(e);
      for (const FinPIso& e : idems) {
        idempotents.check(subset_of(e, idX), [&] { return e.str(); });
        for (const FinPIso& e2 : idems)
          idempotents.check(compose(e, e2) == compose(e2, e),
                            [&] { return e.str() + " vs " + e2.str(); });
      }
    }
    for (const FiniteSet& X : objects) {
      for (const FiniteSet& Y : objects) {
        const auto& fs = arrows_between(X, Y);
        std::vector<FinPIso> idemsX;
        for (const FinPIso& e : arrows_between(X, X))
          if (e.is_idempotent()) idemsX.push_back(e);
        for (const FinPIso& f : fs)
          for (const FinPIso& e : idemsX) {
            FinPIso pushed = compose(f, compose(e, f.dagger()));
            pushing.check(pushed.is_idempotent() &&
                              compose(pushed, f) == compose(f, e),
                          [&] { return f.str() + ", e=" + e.str(); });
          }
        // order characterisation, with the equational test on one side
        for (const FinPIso& f : fs)
          for (const FinPIso& h : fs)
            order.check(natural_leq(f, h) == subset_of(f, h),
                        [&] { return f.str() + " vs " + h.str(); });
        for (const FiniteSet& Z : objects) {
          const auto& gs = arrows_between(Y, Z);
          // dagger contravariance over every composable pair
          for (const FinPIso& f : fs)
            for (const FinPIso& g : gs)
              daggers.check(compose(g, f).dagger() ==
                                compose(f.dagger(), g.dagger()),
                            [&] { return f.str() + ", " + g.str(); });
          // the order is a congruence; conclusions checked by inclusion,
          // which the order law above identifies with the natural order
          Graph gf, kh;
          for (const FinPIso& h : fs) {
            for (const FinPIso& f : fs) {
              if (!subset_of(f, h)) continue;
              for (const FinPIso& k : gs) {
                compose_raw(forward(k), h.graph(), kh);
                for (const FinPIso& g : gs) {
                  if (!subset_of(g, k)) continue;
                  compose_raw(forward(g), f.graph(), gf);
                  bool included = true;
                  std::size_t j = 0;
                  for (const auto& pr : gf) {
                    while (j < kh.size() && kh[j].second < pr.second) ++j;
                    if (j == kh.size() || !(kh[j] == pr)) {
                      included = false;
                      break;
                    }
                  }
                  order.check(included, [&] {
                    return f.str() + "<=" + h.str() + ", " + g.str() +
                           "<=" + k.str();
                  });
                }
              }
            }
          }
        }
      }
    }
    // Distributivity over orthogonal joins: b (f ∨ g) a = b f a ∨ b g a.
    // Orthogonal pairs are found with the equational test.
    for (const FiniteSet& X : objects)
      for (const FiniteSet& Y : objects) {
        const auto& fs = arrows_between(X, Y);
        std::vector<std::pair<const FinPIso*, const FinPIso*>> orth;
        for (const FinPIso& f : fs)
          for (const FinPIso& g : fs)
            if (orthogonal(f, g)) orth.emplace_back(&f, &g);
        for (const FiniteSet& W : objects)
          for (const FiniteSet& Z : objects) {
            const auto& as = arrows_between(W, X);
            const auto& bs = arrows_between(Y, Z);
            std::vector<Fwd> bmaps;
            bmaps.reserve(bs.size());
            for (const FinPIso& b : bs) bmaps.push_back(forward(b));
            Graph jg, fa, ga, ja, lhs, bfa, bga, rhs;
            for (const auto& [f, g] : orth) {
              if (!merge_raw(f->graph(), g->graph(), jg)) {
                distrib.check(false, [&] {
                  return "join undefined for orthogonal pair f=" + f->str() +
                         " g=" + g->str();
                });
                continue;
              }
              const Fwd fm = forward(*f), gm = forward(*g);
              Fwd jm;
              jm.fill(kNoTarget);
              for (const auto& [t, s] : jg) jm[s] = t;
              for (const FinPIso& a : as) {
                compose_raw(fm, a.graph(), fa);
                compose_raw(gm, a.graph(), ga);
                compose_raw(jm, a.graph(), ja);
                for (std::size_t bi = 0; bi < bs.size(); ++bi) {
                  compose_raw(bmaps[bi], ja, lhs);
                  compose_raw(bmaps[bi], fa, bfa);
                  compose_raw(bmaps[bi], ga, bga);
                  bool ok = merge_raw(bfa, bga, rhs) && rhs == lhs;
                  distrib.check(ok, [&] {
                    return "f=" + f->str() + " g=" + g->str() +
                           " a=" + a.str() + " b=" + bs[bi].str();
                  });
                }
              }
            }
          }
      }
  };

  {
    std::vector<FiniteSet> objects;
    for (std::size_t n = 0; n <= std::min(max_size, kExhaustiveCap); ++n)
      objects.push_back(FiniteSet::range(n));
    // Cache the full hom-sets once; they are reused heavily above.
    std::vector<std::vector<std::vector<FinPIso>>> homs(
        objects.size(), std::vector<std::vector<FinPIso>>(objects.size()));
    for (std::size_t i = 0; i < objects.size(); ++i)
      for (std::size_t j = 0; j < objects.size(); ++j)
        homs[i][j] = all_arrows(objects[i], objects[j]);
    run_laws(objects,
             [&](const FiniteSet& a,
                 const FiniteSet& b) -> const std::vector<FinPIso>& {
               return homs[a.size()][b.size()];
             });
  }

  if (max_size > kExhaustiveCap) {
    report.sampled = true;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      auto size = [&] {
        return kExhaustiveCap + 1 + rng() % (max_size - kExhaustiveCap);
      };
      FiniteSet W = FiniteSet::range(size()), X = FiniteSet::range(size());
      FiniteSet Y = FiniteSet::range(size()), Z = FiniteSet::range(size());
      FinPIso f = random_arrow(rng, X, Y);
      FinPIso g = random_arrow(rng, Y, Z);
      FinPIso a = random_arrow(rng, W, X);
      FinPIso b = random_arrow(rng, Y, Z);
      inverses.check(compose(f, compose(f.dagger(), f)) == f,
                     [&] { return f.str(); });
      daggers.check(compose(g, f).dagger() ==
                        compose(f.dagger(), g.dagger()),
                    [&] { return f.str() + ", " + g.str(); });
      FinPIso e = compose(f.dagger(), f);  // an idempotent on X
      FinPIso pushed = compose(f, compose(e, f.dagger()));
      pushing.check(pushed.is_idempotent() &&
                        compose(pushed, f) == compose(f, e),
                    [&] { return f.str(); });
      FinPIso f2 = random_arrow(rng, X, Y);
      order.check(natural_leq(meet(f, f2), f), [&] { return f.str(); });
      if (orthogonal(f, f2)) {
        FinPIso lhs = compose(b, compose(join(f, f2), a));
        distrib.check(lhs == join(compose(b, compose(f, a)),
                                  compose(b, compose(f2, a))),
                      [&] { return f.str() + ", " + f2.str(); });
      }
    }
  }

  report.laws = {inverses.law, uniqueness.law, idempotents.law, daggers.law,
                 pushing.law,  order.law,      distrib.law};
  return report;
}

}  // namespace piso
