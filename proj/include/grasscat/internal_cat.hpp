#pragma once

#include "grasscat/core.hpp"
#include "grasscat/report.hpp"
#include "grasscat/rng.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace grasscat {

// ---------------------------------------------------------------------------
// A finitely sampled internal category: opaque object and morphism
// values plus the four structure maps as callable contracts. Object
// and morphism spaces are manifolds here, so checkers are randomized
// property tests driven by a splittable seeded sampler, never
// exhaustive proofs. Composable chains are drawn by construction:
// sample_mor_from(rng, x) returns a morphism with source x.

template <typename Obj, typename Mor>
struct SampledCategory {
  std::string name;
  std::function<Obj(Rng&)> sample_object;
  std::function<Mor(Rng&, const Obj&)> sample_mor_from;
  std::function<Obj(const Mor&)> source;
  std::function<Obj(const Mor&)> target;
  std::function<Mor(const Obj&)> identity;
  std::function<Mor(const Mor&, const Mor&)> compose;  // compose(f, g) = g after f
  std::function<double(const Obj&, const Obj&)> obj_dist;
  std::function<double(const Mor&, const Mor&)> mor_dist;
  std::function<std::string(const Obj&)> show_obj;  // optional
  std::function<std::string(const Mor&)> show_mor;  // optional
};

template <typename ObjC, typename MorC, typename ObjD, typename MorD>
struct SampledFunctor {
  std::string name;
  SampledCategory<ObjC, MorC> dom;
  SampledCategory<ObjD, MorD> cod;
  std::function<ObjD(const ObjC&)> on_objects;
  std::function<MorD(const MorC&)> on_morphisms;
};

template <typename ObjC, typename MorD>
struct NatTransWitness {
  std::function<MorD(const ObjC&)> component;
};

namespace detail {

// Runs one axiom over `samples` independent forks of the seed. The
// callable returns the residual and may fill a witness description
// when asked; failing samples that throw count as infinite residual.
template <typename Fn>
CheckItem run_axiom(const std::string& axiom, std::size_t samples, std::uint64_t seed,
                    std::uint64_t axiom_salt, double tol, Fn&& fn) {
  CheckItem item;
  item.axiom = axiom;
  item.samples = samples;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(hash_combine(hash_combine(seed, axiom_salt), i));
    double res;
    try {
      res = fn(rng, static_cast<std::string*>(nullptr));
    } catch (const SamplerExhausted&) {
      throw;  // cannot even draw samples; not a failing axiom
    } catch (const std::exception&) {
      res = kInf;
    }
    if (res > item.max_residual) {
      item.max_residual = res;
      worst = i;
    }
  }
  item.pass = item.max_residual <= tol;
  if (!item.pass) {
    Rng rng(hash_combine(hash_combine(seed, axiom_salt), worst));
    std::string w;
    try {
      fn(rng, &w);
    } catch (const std::exception& e) {
      w += std::string(w.empty() ? "" : "; ") + "exception: " + e.what();
    }
    item.witness = w.empty() ? ("sample #" + std::to_string(worst)) : w;
  }
  return item;
}

template <typename Obj, typename Mor>
std::string describe(const SampledCategory<Obj, Mor>& cat, const Mor& f) {
  return cat.show_mor ? cat.show_mor(f) : std::string("<morphism>");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Category axioms: the source/target/identity/composition diagrams of
// an internal category, evaluated on random composable chains.

template <typename Obj, typename Mor>
Report check_category_axioms(const SampledCategory<Obj, Mor>& cat, std::size_t samples,
                             std::uint64_t seed, const Tolerance& tol = {}) {
  Report rep{"category axioms: " + cat.name, seed, tol.eps_eq, {}};

  auto draw_mor = [&](Rng& rng) {
    try {
      Obj x = cat.sample_object(rng);
      return cat.sample_mor_from(rng, x);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw SamplerExhausted(std::string("morphism sampler failed: ") + e.what());
    }
  };

  rep.items.push_back(detail::run_axiom(
      "s(e(x)) = x", samples, seed, 1, tol.eps_eq, [&](Rng& rng, std::string* w) {
        Obj x = cat.sample_object(rng);
        double r = cat.obj_dist(cat.source(cat.identity(x)), x);
        if (w && cat.show_obj) *w = "x = " + cat.show_obj(x);
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "t(e(x)) = x", samples, seed, 2, tol.eps_eq, [&](Rng& rng, std::string* w) {
        Obj x = cat.sample_object(rng);
        double r = cat.obj_dist(cat.target(cat.identity(x)), x);
        if (w && cat.show_obj) *w = "x = " + cat.show_obj(x);
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "s(g.f) = s(f)", samples, seed, 3, tol.eps_eq, [&](Rng& rng, std::string* w) {
        Mor f = draw_mor(rng);
        Mor g = cat.sample_mor_from(rng, cat.target(f));
        double r = cat.obj_dist(cat.source(cat.compose(f, g)), cat.source(f));
        if (w) *w = "f = " + detail::describe(cat, f) + ", g = " + detail::describe(cat, g);
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "t(g.f) = t(g)", samples, seed, 4, tol.eps_eq, [&](Rng& rng, std::string* w) {
        Mor f = draw_mor(rng);
        Mor g = cat.sample_mor_from(rng, cat.target(f));
        double r = cat.obj_dist(cat.target(cat.compose(f, g)), cat.target(g));
        if (w) *w = "f = " + detail::describe(cat, f) + ", g = " + detail::describe(cat, g);
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "left unit: e(t(f)).f = f", samples, seed, 5, tol.eps_eq,
      [&](Rng& rng, std::string* w) {
        Mor f = draw_mor(rng);
        double r = cat.mor_dist(cat.compose(f, cat.identity(cat.target(f))), f);
        if (w) *w = "f = " + detail::describe(cat, f);
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "right unit: f.e(s(f)) = f", samples, seed, 6, tol.eps_eq,
      [&](Rng& rng, std::string* w) {
        Mor f = draw_mor(rng);
        double r = cat.mor_dist(cat.compose(cat.identity(cat.source(f)), f), f);
        if (w) *w = "f = " + detail::describe(cat, f);
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "associativity", samples, seed, 7, tol.eps_eq, [&](Rng& rng, std::string* w) {
        Mor f = draw_mor(rng);
        Mor g = cat.sample_mor_from(rng, cat.target(f));
        Mor h = cat.sample_mor_from(rng, cat.target(g));
        double r = cat.mor_dist(cat.compose(cat.compose(f, g), h),
                                cat.compose(f, cat.compose(g, h)));
        if (w)
          *w = "f = " + detail::describe(cat, f) + ", g = " + detail::describe(cat, g) +
               ", h = " + detail::describe(cat, h);
        return r;
      }));
  return rep;
}

// ---------------------------------------------------------------------------
// Internal functor: the source, target, identity and composition
// squares.

template <typename ObjC, typename MorC, typename ObjD, typename MorD>
Report check_functor(const SampledFunctor<ObjC, MorC, ObjD, MorD>& fun, std::size_t samples,
                     std::uint64_t seed, const Tolerance& tol = {}) {
  Report rep{"functor: " + fun.name, seed, tol.eps_eq, {}};
  const auto& dom = fun.dom;
  const auto& cod = fun.cod;

  rep.items.push_back(detail::run_axiom(
      "source square", samples, seed, 11, tol.eps_eq, [&](Rng& rng, std::string* w) {
        ObjC x = dom.sample_object(rng);
        MorC f = dom.sample_mor_from(rng, x);
        double r = cod.obj_dist(fun.on_objects(dom.source(f)), cod.source(fun.on_morphisms(f)));
        if (w) *w = "f = " + detail::describe(dom, f);
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "target square", samples, seed, 12, tol.eps_eq, [&](Rng& rng, std::string* w) {
        ObjC x = dom.sample_object(rng);
        MorC f = dom.sample_mor_from(rng, x);
        double r = cod.obj_dist(fun.on_objects(dom.target(f)), cod.target(fun.on_morphisms(f)));
        if (w) *w = "f = " + detail::describe(dom, f);
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "identity square", samples, seed, 13, tol.eps_eq, [&](Rng& rng, std::string* w) {
        ObjC x = dom.sample_object(rng);
        double r = cod.mor_dist(fun.on_morphisms(dom.identity(x)),
                                cod.identity(fun.on_objects(x)));
        if (w && dom.show_obj) *w = "x = " + dom.show_obj(x);
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "composition square", samples, seed, 14, tol.eps_eq, [&](Rng& rng, std::string* w) {
        ObjC x = dom.sample_object(rng);
        MorC f = dom.sample_mor_from(rng, x);
        MorC g = dom.sample_mor_from(rng, dom.target(f));
        double r = cod.mor_dist(fun.on_morphisms(dom.compose(f, g)),
                                cod.compose(fun.on_morphisms(f), fun.on_morphisms(g)));
        if (w) *w = "f = " + detail::describe(dom, f) + ", g = " + detail::describe(dom, g);
        return r;
      }));
  return rep;
}

// ---------------------------------------------------------------------------
// Internal natural transformation, first formulation: component typing
// plus the naturality identity phi(t(h)) . F(h) = G(h) . phi(s(h)).

template <typename ObjC, typename MorC, typename ObjD, typename MorD>
Report check_nat_trans(const SampledFunctor<ObjC, MorC, ObjD, MorD>& f,
                       const SampledFunctor<ObjC, MorC, ObjD, MorD>& g,
                       const NatTransWitness<ObjC, MorD>& phi, std::size_t samples,
                       std::uint64_t seed, const Tolerance& tol = {}) {
  if (!phi.component) throw TypingMismatch("natural transformation has no component map");
  Report rep{"natural transformation: " + f.name + " => " + g.name, seed, tol.eps_eq, {}};
  const auto& dom = f.dom;
  const auto& cod = f.cod;

  rep.items.push_back(detail::run_axiom(
      "s(phi(x)) = F(x)", samples, seed, 21, tol.eps_eq, [&](Rng& rng, std::string* w) {
        ObjC x = dom.sample_object(rng);
        double r = cod.obj_dist(cod.source(phi.component(x)), f.on_objects(x));
        if (w && dom.show_obj) *w = "x = " + dom.show_obj(x);
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "t(phi(x)) = G(x)", samples, seed, 22, tol.eps_eq, [&](Rng& rng, std::string* w) {
        ObjC x = dom.sample_object(rng);
        double r = cod.obj_dist(cod.target(phi.component(x)), g.on_objects(x));
        if (w && dom.show_obj) *w = "x = " + dom.show_obj(x);
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "naturality square", samples, seed, 23, tol.eps_eq, [&](Rng& rng, std::string* w) {
        ObjC x = dom.sample_object(rng);
        MorC h = dom.sample_mor_from(rng, x);
        MorD lhs = cod.compose(f.on_morphisms(h), phi.component(dom.target(h)));
        MorD rhs = cod.compose(phi.component(dom.source(h)), g.on_morphisms(h));
        double r = cod.mor_dist(lhs, rhs);
        if (w) *w = "h = " + detail::describe(dom, h);
        return r;
      }));
  return rep;
}

// ---------------------------------------------------------------------------
// Second formulation: a natural transformation is the same as an
// internal functor out of C x [1] restricting to F and G on the ends,
// with Phi(h, 0->1) = phi(t(h)) . F(h). Checking that Phi is a functor
// must agree verdict-for-verdict with the first formulation.

template <typename Obj>
struct IntervalObj {
  Obj x;
  int level = 0;  // 0 or 1
};

template <typename Mor>
struct IntervalMor {
  Mor h;
  int from = 0;
  int to = 0;
};

template <typename Obj, typename Mor>
SampledCategory<IntervalObj<Obj>, IntervalMor<Mor>> interval_category(
    const SampledCategory<Obj, Mor>& c) {
  using IObj = IntervalObj<Obj>;
  using IMor = IntervalMor<Mor>;
  SampledCategory<IObj, IMor> out;
  out.name = c.name + " x [1]";
  out.sample_object = [c](Rng& rng) {
    return IObj{c.sample_object(rng), static_cast<int>(rng.uniform_int(0, 1))};
  };
  out.sample_mor_from = [c](Rng& rng, const IObj& x) {
    Mor h = c.sample_mor_from(rng, x.x);
    const int to = x.level == 1 ? 1 : static_cast<int>(rng.uniform_int(0, 1));
    return IMor{h, x.level, to};
  };
  out.source = [c](const IMor& f) { return IObj{c.source(f.h), f.from}; };
  out.target = [c](const IMor& f) { return IObj{c.target(f.h), f.to}; };
  out.identity = [c](const IObj& x) { return IMor{c.identity(x.x), x.level, x.level}; };
  out.compose = [c](const IMor& f, const IMor& g) {
    if (f.to != g.from) throw NotComposable("interval labels do not match");
    return IMor{c.compose(f.h, g.h), f.from, g.to};
  };
  out.obj_dist = [c](const IObj& a, const IObj& b) {
    return a.level == b.level ? c.obj_dist(a.x, b.x) : kInf;
  };
  out.mor_dist = [c](const IMor& a, const IMor& b) {
    return (a.from == b.from && a.to == b.to) ? c.mor_dist(a.h, b.h) : kInf;
  };
  if (c.show_obj)
    out.show_obj = [c](const IObj& x) {
      return c.show_obj(x.x) + " @" + std::to_string(x.level);
    };
  if (c.show_mor)
    out.show_mor = [c](const IMor& f) {
      return c.show_mor(f.h) + " @" + std::to_string(f.from) + "->" + std::to_string(f.to);
    };
  return out;
}

template <typename ObjC, typename MorC, typename ObjD, typename MorD>
SampledFunctor<IntervalObj<ObjC>, IntervalMor<MorC>, ObjD, MorD> interval_functor(
    const SampledFunctor<ObjC, MorC, ObjD, MorD>& f,
    const SampledFunctor<ObjC, MorC, ObjD, MorD>& g,
    const NatTransWitness<ObjC, MorD>& phi) {
  SampledFunctor<IntervalObj<ObjC>, IntervalMor<MorC>, ObjD, MorD> out;
  out.name = "[1]-interval functor of " + f.name + " => " + g.name;
  out.dom = interval_category(f.dom);
  out.cod = f.cod;
  auto fo = f.on_objects;
  auto go = g.on_objects;
  out.on_objects = [fo, go](const IntervalObj<ObjC>& x) {
    return x.level == 0 ? fo(x.x) : go(x.x);
  };
  auto fm = f.on_morphisms;
  auto gm = g.on_morphisms;
  auto dom = f.dom;
  auto cod = f.cod;
  auto comp = phi.component;
  out.on_morphisms = [fm, gm, dom, cod, comp](const IntervalMor<MorC>& m) {
    if (m.from == 0 && m.to == 0) return fm(m.h);
    if (m.from == 1 && m.to == 1) return gm(m.h);
    return cod.compose(fm(m.h), comp(dom.target(m.h)));
  };
  return out;
}

template <typename ObjC, typename MorC, typename ObjD, typename MorD>
Report check_nat_trans_interval(const SampledFunctor<ObjC, MorC, ObjD, MorD>& f,
                                const SampledFunctor<ObjC, MorC, ObjD, MorD>& g,
                                const NatTransWitness<ObjC, MorD>& phi, std::size_t samples,
                                std::uint64_t seed, const Tolerance& tol = {}) {
  if (!phi.component) throw TypingMismatch("natural transformation has no component map");
  return check_functor(interval_functor(f, g, phi), samples, seed, tol);
}

// ---------------------------------------------------------------------------
// Product of two sampled categories.

template <typename OA, typename MA, typename OB, typename MB>
SampledCategory<std::pair<OA, OB>, std::pair<MA, MB>> product_category(
    const SampledCategory<OA, MA>& a, const SampledCategory<OB, MB>& b) {
  using Obj = std::pair<OA, OB>;
  using Mor = std::pair<MA, MB>;
  SampledCategory<Obj, Mor> out;
  out.name = a.name + " x " + b.name;
  out.sample_object = [a, b](Rng& rng) {
    return Obj{a.sample_object(rng), b.sample_object(rng)};
  };
  out.sample_mor_from = [a, b](Rng& rng, const Obj& x) {
    return Mor{a.sample_mor_from(rng, x.first), b.sample_mor_from(rng, x.second)};
  };
  out.source = [a, b](const Mor& f) { return Obj{a.source(f.first), b.source(f.second)}; };
  out.target = [a, b](const Mor& f) { return Obj{a.target(f.first), b.target(f.second)}; };
  out.identity = [a, b](const Obj& x) {
    return Mor{a.identity(x.first), b.identity(x.second)};
  };
  out.compose = [a, b](const Mor& f, const Mor& g) {
    return Mor{a.compose(f.first, g.first), b.compose(f.second, g.second)};
  };
  out.obj_dist = [a, b](const Obj& x, const Obj& y) {
    return std::max(a.obj_dist(x.first, y.first), b.obj_dist(x.second, y.second));
  };
  out.mor_dist = [a, b](const Mor& f, const Mor& g) {
    return std::max(a.mor_dist(f.first, g.first), b.mor_dist(f.second, g.second));
  };
  if (a.show_obj && b.show_obj)
    out.show_obj = [a, b](const Obj& x) {
      return "(" + a.show_obj(x.first) + ", " + b.show_obj(x.second) + ")";
    };
  if (a.show_mor && b.show_mor)
    out.show_mor = [a, b](const Mor& f) {
      return "(" + a.show_mor(f.first) + ", " + b.show_mor(f.second) + ")";
    };
  return out;
}

// ---------------------------------------------------------------------------
// The nerve. A level-k simplex is a chain of k consecutively
// composable morphisms; a level-0 simplex is an object. Face d_i
// composes at slot i (d_0 and d_k drop the first and last entry);
// degeneracy s_i inserts the identity at vertex i.

template <typename Obj, typename Mor>
struct NerveSimplex {
  std::vector<Mor> chain;
  std::optional<Obj> vertex;  // set iff level == 0

  std::size_t level() const { return vertex ? 0 : chain.size(); }
};

template <typename Obj, typename Mor>
NerveSimplex<Obj, Mor> sample_simplex(const SampledCategory<Obj, Mor>& cat, std::size_t level,
                                      Rng& rng) {
  NerveSimplex<Obj, Mor> s;
  Obj x = cat.sample_object(rng);
  if (level == 0) {
    s.vertex = x;
    return s;
  }
  for (std::size_t i = 0; i < level; ++i) {
    Mor f = cat.sample_mor_from(rng, x);
    x = cat.target(f);
    s.chain.push_back(std::move(f));
  }
  return s;
}

template <typename Obj, typename Mor>
std::vector<NerveSimplex<Obj, Mor>> sample_nerve(const SampledCategory<Obj, Mor>& cat,
                                                 std::size_t level, std::size_t count,
                                                 std::uint64_t seed) {
  std::vector<NerveSimplex<Obj, Mor>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(hash_combine(hash_combine(seed, 30), i));
    out.push_back(sample_simplex(cat, level, rng));
  }
  return out;
}

template <typename Obj, typename Mor>
NerveSimplex<Obj, Mor> nerve_face(const SampledCategory<Obj, Mor>& cat,
                                  const NerveSimplex<Obj, Mor>& s, std::size_t i) {
  const std::size_t k = s.level();
  if (k == 0 || i > k) throw ShapeMismatch("face index out of range");
  NerveSimplex<Obj, Mor> out;
  if (k == 1) {
    out.vertex = (i == 0) ? cat.target(s.chain[0]) : cat.source(s.chain[0]);
    return out;
  }
  if (i == 0) {
    out.chain.assign(s.chain.begin() + 1, s.chain.end());
  } else if (i == k) {
    out.chain.assign(s.chain.begin(), s.chain.end() - 1);
  } else {
    out.chain.assign(s.chain.begin(), s.chain.end());
    Mor composed = cat.compose(out.chain[i - 1], out.chain[i]);
    out.chain[i - 1] = std::move(composed);
    out.chain.erase(out.chain.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return out;
}

template <typename Obj, typename Mor>
NerveSimplex<Obj, Mor> nerve_degeneracy(const SampledCategory<Obj, Mor>& cat,
                                        const NerveSimplex<Obj, Mor>& s, std::size_t i) {
  const std::size_t k = s.level();
  if (i > k) throw ShapeMismatch("degeneracy index out of range");
  NerveSimplex<Obj, Mor> out;
  if (k == 0) {
    out.chain.push_back(cat.identity(*s.vertex));
    return out;
  }
  Obj at = (i == 0) ? cat.source(s.chain[0]) : cat.target(s.chain[i - 1]);
  out.chain.assign(s.chain.begin(), s.chain.end());
  out.chain.insert(out.chain.begin() + static_cast<std::ptrdiff_t>(i), cat.identity(at));
  return out;
}

template <typename Obj, typename Mor>
double simplex_dist(const SampledCategory<Obj, Mor>& cat, const NerveSimplex<Obj, Mor>& a,
                    const NerveSimplex<Obj, Mor>& b) {
  if (a.level() != b.level()) return kInf;
  if (a.level() == 0) return cat.obj_dist(*a.vertex, *b.vertex);
  double r = 0.0;
  for (std::size_t i = 0; i < a.chain.size(); ++i)
    r = std::max(r, cat.mor_dist(a.chain[i], b.chain[i]));
  return r;
}

/// All five simplicial identity families on sampled simplices up to
/// max_level.
template <typename Obj, typename Mor>
Report check_nerve(const SampledCategory<Obj, Mor>& cat, std::size_t max_level,
                   std::size_t samples, std::uint64_t seed, const Tolerance& tol = {}) {
  Report rep{"nerve simplicial identities: " + cat.name, seed, tol.eps_eq, {}};

  rep.items.push_back(detail::run_axiom(
      "d_i d_j = d_{j-1} d_i (i<j)", samples, seed, 31, tol.eps_eq,
      [&](Rng& rng, std::string*) {
        if (max_level < 2) return 0.0;  // no composable face pairs below level 2
        const std::size_t k =
            static_cast<std::size_t>(rng.uniform_int(2, static_cast<std::int64_t>(max_level)));
        auto s = sample_simplex(cat, k, rng);
        double r = 0.0;
        for (std::size_t j = 1; j <= k; ++j)
          for (std::size_t i = 0; i < j; ++i) {
            auto lhs = nerve_face(cat, nerve_face(cat, s, j), i);
            auto rhs = nerve_face(cat, nerve_face(cat, s, i), j - 1);
            r = std::max(r, simplex_dist(cat, lhs, rhs));
          }
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "d_i s_i = id = d_{i+1} s_i", samples, seed, 32, tol.eps_eq,
      [&](Rng& rng, std::string*) {
        const std::size_t k =
            static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(max_level)));
        auto s = sample_simplex(cat, k, rng);
        double r = 0.0;
        for (std::size_t i = 0; i <= k; ++i) {
          auto deg = nerve_degeneracy(cat, s, i);
          r = std::max(r, simplex_dist(cat, nerve_face(cat, deg, i), s));
          r = std::max(r, simplex_dist(cat, nerve_face(cat, deg, i + 1), s));
        }
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "d_i s_j = s_{j-1} d_i (i<j)", samples, seed, 33, tol.eps_eq,
      [&](Rng& rng, std::string*) {
        if (max_level < 1) return 0.0;
        const std::size_t k =
            static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_level)));
        auto s = sample_simplex(cat, k, rng);
        double r = 0.0;
        for (std::size_t j = 1; j <= k; ++j)
          for (std::size_t i = 0; i < j; ++i) {
            auto lhs = nerve_face(cat, nerve_degeneracy(cat, s, j), i);
            auto rhs = nerve_degeneracy(cat, nerve_face(cat, s, i), j - 1);
            r = std::max(r, simplex_dist(cat, lhs, rhs));
          }
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "d_i s_j = s_j d_{i-1} (i>j+1)", samples, seed, 34, tol.eps_eq,
      [&](Rng& rng, std::string*) {
        if (max_level < 1) return 0.0;
        const std::size_t k =
            static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_level)));
        auto s = sample_simplex(cat, k, rng);
        double r = 0.0;
        for (std::size_t j = 0; j + 1 <= k; ++j)
          for (std::size_t i = j + 2; i <= k + 1; ++i) {
            auto lhs = nerve_face(cat, nerve_degeneracy(cat, s, j), i);
            auto rhs = nerve_degeneracy(cat, nerve_face(cat, s, i - 1), j);
            r = std::max(r, simplex_dist(cat, lhs, rhs));
          }
        return r;
      }));
  rep.items.push_back(detail::run_axiom(
      "s_i s_j = s_{j+1} s_i (i<=j)", samples, seed, 35, tol.eps_eq,
      [&](Rng& rng, std::string*) {
        const std::size_t k =
            static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(max_level)));
        auto s = sample_simplex(cat, k, rng);
        double r = 0.0;
        for (std::size_t j = 0; j <= k; ++j)
          for (std::size_t i = 0; i <= j; ++i) {
            auto lhs = nerve_degeneracy(cat, nerve_degeneracy(cat, s, j), i);
            auto rhs = nerve_degeneracy(cat, nerve_degeneracy(cat, s, i), j + 1);
            r = std::max(r, simplex_dist(cat, lhs, rhs));
          }
        return r;
      }));
  return rep;
}

}  // namespace grasscat
