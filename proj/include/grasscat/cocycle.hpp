#pragma once

#include "grasscat/core.hpp"
#include "grasscat/morphism.hpp"
#include "grasscat/report.hpp"
#include "grasscat/rng.hpp"
#include "grasscat/semiring.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace grasscat {

// ---------------------------------------------------------------------------
// Sampled covers. A base space is a finite list of patches and a list
// of ordered overlap declarations, each carrying the parameter points
// at which the transition maps are tabulated. Two declarations with
// the same unordered patch pair are distinct overlap components when
// their component labels differ (the circle's two-arc cover has two).

using SamplePt = std::vector<double>;

inline bool same_pt(const SamplePt& a, const SamplePt& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-12) return false;
  return true;
}

struct OverlapDecl {
  std::string from;
  std::string to;
  std::string component;  // distinguishes components of one patch pair
  std::vector<SamplePt> samples;
};

struct BaseComplex {
  std::string topology;  // interval_cover_circle | two_disk_sphere | abstract
  std::vector<std::string> patches;
  std::vector<OverlapDecl> overlaps;

  std::size_t patch_index(const std::string& name) const {
    for (std::size_t i = 0; i < patches.size(); ++i)
      if (patches[i] == name) return i;
    throw InconsistentSamples("unknown patch: " + name);
  }

  std::optional<std::size_t> find_overlap(const std::string& from, const std::string& to,
                                          const std::string& component) const {
    for (std::size_t i = 0; i < overlaps.size(); ++i)
      if (overlaps[i].from == from && overlaps[i].to == to &&
          overlaps[i].component == component)
        return i;
    return std::nullopt;
  }
};

template <typename Scalar>
struct LocalTable {
  std::vector<SamplePt> samples;
  std::vector<GrPoint<Scalar>> values;

  std::optional<std::size_t> find(const SamplePt& x) const {
    for (std::size_t i = 0; i < samples.size(); ++i)
      if (same_pt(samples[i], x)) return i;
    return std::nullopt;
  }
};

/// Local bundle data plus overlap transitions into the iso bundle.
template <typename Scalar>
struct CechCocycle {
  BaseComplex base;
  Index rank = 0;
  std::vector<LocalTable<Scalar>> locals;           // indexed like base.patches
  std::vector<std::vector<MorPoint<Scalar>>> transitions;  // indexed like base.overlaps

  const GrPoint<Scalar>& local_at(std::size_t patch, const SamplePt& x) const {
    auto idx = locals[patch].find(x);
    if (!idx)
      throw InconsistentSamples("patch " + base.patches[patch] +
                                " has no local datum at an overlap sample");
    return locals[patch].values[*idx];
  }
};

namespace detail {

template <typename Scalar>
void require_aligned(const CechCocycle<Scalar>& c) {
  if (c.locals.size() != c.base.patches.size())
    throw InconsistentSamples("locals do not match the patch list");
  if (c.transitions.size() != c.base.overlaps.size())
    throw InconsistentSamples("transition tables do not match the overlap list");
  for (std::size_t p = 0; p < c.locals.size(); ++p)
    if (c.locals[p].samples.size() != c.locals[p].values.size())
      throw InconsistentSamples("local table sizes disagree on patch " + c.base.patches[p]);
  for (std::size_t o = 0; o < c.base.overlaps.size(); ++o) {
    const auto& decl = c.base.overlaps[o];
    if (c.transitions[o].size() != decl.samples.size())
      throw InconsistentSamples("transition table does not match the overlap grid");
    if (decl.samples.empty()) throw InconsistentSamples("overlap grid is empty");
    c.base.patch_index(decl.from);
    c.base.patch_index(decl.to);
    if (!c.base.find_overlap(decl.to, decl.from, decl.component))
      throw InconsistentSamples("overlap " + decl.from + "->" + decl.to +
                                " has no reverse declaration");
    // locals must cover every overlap sample of their patch
    for (const auto& x : decl.samples) {
      c.local_at(c.base.patch_index(decl.from), x);
      c.local_at(c.base.patch_index(decl.to), x);
    }
  }
}

}  // namespace detail

/// Verifies the cocycle data: transitions are fiberwise isomorphisms
/// typed by the local data, the two directions of every overlap are
/// mutually inverse, and F_gamma-beta . F_beta-alpha = F_gamma-alpha
/// holds at every sampled triple-overlap point.
template <typename Scalar>
Report check_cocycle(const CechCocycle<Scalar>& c, const Tolerance& tol = {}) {
  detail::require_aligned(c);
  Report rep{"cocycle over " + c.base.topology, 0, tol.eps_eq, {}};

  {
    CheckItem item{"local rank", 0, 0.0, true, ""};
    CheckItem orth{"local frames orthonormal", 0, 0.0, true, ""};
    for (std::size_t p = 0; p < c.locals.size(); ++p)
      for (const auto& v : c.locals[p].values) {
        ++item.samples;
        ++orth.samples;
        if (v.sub_dim() != c.rank) {
          item.max_residual = kInf;
          item.witness = "patch " + c.base.patches[p] + " carries a fiber of dimension " +
                         std::to_string(v.sub_dim());
        }
        Mat<Scalar> gram = v.frame.adjoint() * v.frame;
        gram -= Mat<Scalar>::Identity(v.sub_dim(), v.sub_dim());
        const double r = max_abs(gram);
        if (r > orth.max_residual) {
          orth.max_residual = r;
          orth.witness = "patch " + c.base.patches[p];
        }
      }
    item.pass = item.max_residual <= tol.eps_eq;
    orth.pass = orth.max_residual <= tol.eps_orth;
    rep.items.push_back(item);
    rep.items.push_back(orth);
  }

  {
    CheckItem typing{"transition typing", 0, 0.0, true, ""};
    CheckItem iso{"transitions invertible", 0, 0.0, true, ""};
    for (std::size_t o = 0; o < c.base.overlaps.size(); ++o) {
      const auto& decl = c.base.overlaps[o];
      const std::size_t pa = c.base.patch_index(decl.from);
      const std::size_t pb = c.base.patch_index(decl.to);
      for (std::size_t s = 0; s < decl.samples.size(); ++s) {
        const auto& t = c.transitions[o][s];
        ++typing.samples;
        ++iso.samples;
        const double r = std::max(projection_dist(t.src, c.local_at(pa, decl.samples[s])),
                                  projection_dist(t.dst, c.local_at(pb, decl.samples[s])));
        if (r > typing.max_residual) {
          typing.max_residual = r;
          typing.witness = "overlap " + decl.from + "->" + decl.to + " sample #" +
                           std::to_string(s);
        }
        if (!is_iso(t, tol)) {
          iso.max_residual = kInf;
          iso.witness = "overlap " + decl.from + "->" + decl.to + " sample #" +
                        std::to_string(s) + " is singular";
        }
      }
    }
    typing.pass = typing.max_residual <= tol.eps_eq;
    iso.pass = iso.max_residual <= tol.eps_eq;
    rep.items.push_back(typing);
    rep.items.push_back(iso);
  }

  {
    CheckItem item{"inverse symmetry f_ab . f_ba = id", 0, 0.0, true, ""};
    for (std::size_t o = 0; o < c.base.overlaps.size(); ++o) {
      const auto& decl = c.base.overlaps[o];
      const auto rev = c.base.find_overlap(decl.to, decl.from, decl.component);
      const auto& rdecl = c.base.overlaps[*rev];
      const std::size_t pa = c.base.patch_index(decl.from);
      for (std::size_t s = 0; s < decl.samples.size(); ++s) {
        std::size_t rs = decl.samples.size();
        for (std::size_t j = 0; j < rdecl.samples.size(); ++j)
          if (same_pt(rdecl.samples[j], decl.samples[s])) rs = j;
        if (rs == decl.samples.size())
          throw InconsistentSamples("overlap grids of " + decl.from + "<->" + decl.to +
                                    " do not align");
        ++item.samples;
        double r;
        try {
          MorPoint<Scalar> round = mor_compose(c.transitions[o][s], c.transitions[*rev][rs], tol);
          r = mor_dist(round, mor_identity(c.local_at(pa, decl.samples[s])));
        } catch (const NotComposable&) {
          r = kInf;
        }
        if (r > item.max_residual) {
          item.max_residual = r;
          item.witness =
              "overlap " + decl.from + "<->" + decl.to + " sample #" + std::to_string(s);
        }
      }
    }
    item.pass = item.max_residual <= tol.eps_eq;
    rep.items.push_back(item);
  }

  {
    CheckItem item{"cocycle identity f_cb . f_ba = f_ca", 0, 0.0, true, ""};
    for (std::size_t ab = 0; ab < c.base.overlaps.size(); ++ab) {
      const auto& dab = c.base.overlaps[ab];
      for (std::size_t bc = 0; bc < c.base.overlaps.size(); ++bc) {
        const auto& dbc = c.base.overlaps[bc];
        if (dbc.from != dab.to) continue;
        if (dbc.to == dab.from) continue;  // handled by inverse symmetry
        for (std::size_t ac = 0; ac < c.base.overlaps.size(); ++ac) {
          const auto& dac = c.base.overlaps[ac];
          if (dac.from != dab.from || dac.to != dbc.to) continue;
          for (std::size_t s = 0; s < dab.samples.size(); ++s) {
            const auto& x = dab.samples[s];
            std::size_t sbc = dbc.samples.size(), sac = dac.samples.size();
            for (std::size_t j = 0; j < dbc.samples.size(); ++j)
              if (same_pt(dbc.samples[j], x)) sbc = j;
            for (std::size_t j = 0; j < dac.samples.size(); ++j)
              if (same_pt(dac.samples[j], x)) sac = j;
            if (sbc == dbc.samples.size() || sac == dac.samples.size()) continue;
            ++item.samples;
            double r;
            try {
              r = mor_dist(mor_compose(c.transitions[ab][s], c.transitions[bc][sbc], tol),
                           c.transitions[ac][sac]);
            } catch (const NotComposable&) {
              r = kInf;
            }
            if (r > item.max_residual) {
              item.max_residual = r;
              item.witness = "triple (" + dab.from + "," + dab.to + "," + dbc.to +
                             ") sample #" + std::to_string(s);
            }
          }
        }
      }
    }
    item.pass = item.max_residual <= tol.eps_eq;
    rep.items.push_back(item);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Gluing. The glued bundle keeps the per-patch trivialized data and
// the identification tables: at each overlap sample, the fiber over
// the `from` patch is identified with the fiber over the `to` patch
// through the k-by-k matrix of the transition in the local frames.

template <typename Scalar>
struct GluedBundle {
  BaseComplex base;
  Index rank = 0;
  std::vector<LocalTable<Scalar>> locals;
  std::vector<std::vector<Mat<Scalar>>> identifications;  // indexed like base.overlaps
};

template <typename Scalar>
Mat<Scalar> clutching_matrix(const CechCocycle<Scalar>& c, std::size_t overlap,
                             std::size_t sample) {
  const auto& decl = c.base.overlaps[overlap];
  const auto& from = c.local_at(c.base.patch_index(decl.from), decl.samples[sample]);
  const auto& to = c.local_at(c.base.patch_index(decl.to), decl.samples[sample]);
  return to.frame.adjoint() * c.transitions[overlap][sample].map_mat * from.frame;
}

template <typename Scalar>
GluedBundle<Scalar> glue(const CechCocycle<Scalar>& c, const Tolerance& tol = {}) {
  Report rep = check_cocycle(c, tol);
  if (!rep.passed()) {
    for (const auto& it : rep.items)
      if (!it.pass)
        throw CocycleViolation("cannot glue: " + it.axiom +
                               (it.witness.empty() ? "" : " (" + it.witness + ")"));
  }
  GluedBundle<Scalar> g;
  g.base = c.base;
  g.rank = c.rank;
  g.locals = c.locals;
  g.identifications.resize(c.base.overlaps.size());
  for (std::size_t o = 0; o < c.base.overlaps.size(); ++o)
    for (std::size_t s = 0; s < c.base.overlaps[o].samples.size(); ++s)
      g.identifications[o].push_back(clutching_matrix(c, o, s));
  return g;
}

/// Rebuilds a cocycle from glued data; invariants are preserved.
template <typename Scalar>
CechCocycle<Scalar> extract_cocycle(const GluedBundle<Scalar>& g) {
  CechCocycle<Scalar> c;
  c.base = g.base;
  c.rank = g.rank;
  c.locals = g.locals;
  c.transitions.resize(g.base.overlaps.size());
  for (std::size_t o = 0; o < g.base.overlaps.size(); ++o) {
    const auto& decl = g.base.overlaps[o];
    const std::size_t pa = g.base.patch_index(decl.from);
    const std::size_t pb = g.base.patch_index(decl.to);
    for (std::size_t s = 0; s < decl.samples.size(); ++s) {
      auto ia = g.locals[pa].find(decl.samples[s]);
      auto ib = g.locals[pb].find(decl.samples[s]);
      if (!ia || !ib) throw InconsistentSamples("glued locals miss an overlap sample");
      const auto& from = g.locals[pa].values[*ia];
      const auto& to = g.locals[pb].values[*ib];
      c.transitions[o].push_back(mor_from_coeff(from, to, g.identifications[o][s]));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Invariants.

/// Sign of the product of transition determinants around the circle.
/// Works for any fiber rank; the rank-1 classifier below gates on
/// rank 1 as its contract demands. Requires the overlap-component
/// graph to be a single cycle through all patches.
template <typename Scalar>
int orientation_sign(const CechCocycle<Scalar>& c, const Tolerance& tol = {}) {
  static_assert(std::is_same_v<Scalar, Real>,
                "the orientation class is a real-bundle invariant");
  if (c.base.topology != "interval_cover_circle")
    throw NotCircle("orientation class needs an interval cover of the circle");
  detail::require_aligned(c);

  struct Edge {
    std::size_t a, b;       // patch indices
    std::size_t decl_ab;    // overlap index oriented a->b
    std::size_t decl_ba;
    bool used = false;
  };
  std::vector<Edge> edges;
  for (std::size_t o = 0; o < c.base.overlaps.size(); ++o) {
    const auto& d = c.base.overlaps[o];
    const std::size_t pa = c.base.patch_index(d.from);
    const std::size_t pb = c.base.patch_index(d.to);
    if (pa < pb) {
      auto rev = c.base.find_overlap(d.to, d.from, d.component);
      edges.push_back(Edge{pa, pb, o, *rev});
    }
  }
  std::vector<int> degree(c.base.patches.size(), 0);
  for (const auto& e : edges) {
    ++degree[e.a];
    ++degree[e.b];
  }
  for (std::size_t p = 0; p < degree.size(); ++p)
    if (degree[p] != 2)
      throw NotCircle("patch " + c.base.patches[p] + " does not have exactly two overlaps");

  auto edge_sign = [&](const Edge& e, bool forward) {
    const std::size_t decl = forward ? e.decl_ab : e.decl_ba;
    int sign = 0;
    for (std::size_t s = 0; s < c.base.overlaps[decl].samples.size(); ++s) {
      const double det = clutching_matrix(c, decl, s).determinant();
      if (std::abs(det) <= tol.eps_rank)
        throw CocycleViolation("singular transition on the loop");
      const int ds = det > 0 ? 1 : -1;
      if (sign == 0) sign = ds;
      if (sign != ds)
        throw CocycleViolation("transition determinant changes sign inside one component");
    }
    return sign;
  };

  int product = 1;
  std::size_t at = 0;
  std::size_t steps = 0;
  const std::size_t start = at;
  do {
    bool moved = false;
    for (auto& e : edges) {
      if (e.used) continue;
      if (e.a == at || e.b == at) {
        const bool forward = (e.a == at);
        product *= edge_sign(e, forward);
        at = forward ? e.b : e.a;
        e.used = true;
        moved = true;
        break;
      }
    }
    if (!moved) throw NotCircle("overlap components do not close into a loop");
    ++steps;
  } while (at != start && steps <= edges.size());
  for (const auto& e : edges)
    if (!e.used) throw NotCircle("overlap components form more than one loop");
  return product;
}

enum class OrientationClass { trivial, moebius };

inline const char* to_string(OrientationClass c) {
  return c == OrientationClass::trivial ? "trivial" : "moebius";
}

template <typename Scalar>
OrientationClass s1_orientation_class(const CechCocycle<Scalar>& c, const Tolerance& tol = {}) {
  if (c.rank != 1) throw NotRankOne("the orientation classifier expects a line bundle");
  return orientation_sign(c, tol) > 0 ? OrientationClass::trivial : OrientationClass::moebius;
}

/// Winding number of det of the equatorial transition loop, computed
/// by summed phase increments. Undersampling is an error, never
/// silently corrected.
template <typename Scalar>
long s2_clutching_degree(const CechCocycle<Scalar>& c, const Tolerance& tol = {}) {
  static_assert(std::is_same_v<Scalar, Complex>,
                "the clutching degree is a complex-bundle invariant");
  if (c.base.topology != "two_disk_sphere")
    throw Error("clutching degree needs a two-disk cover of the sphere");
  if (c.rank != 1) throw NotRankOne("the clutching classifier expects a line bundle");
  detail::require_aligned(c);
  if (c.base.patches.size() != 2)
    throw Error("two-disk cover must have exactly two patches");

  // the equator is the component oriented patches[0] -> patches[1],
  // parameterized by one angle
  auto idx = c.base.find_overlap(c.base.patches[0], c.base.patches[1], "equator");
  if (!idx) throw Error("missing equator overlap");
  const auto& decl = c.base.overlaps[*idx];
  if (decl.samples.size() < 64)
    throw UndersampledLoop("equator needs at least 64 samples");

  std::vector<std::pair<double, Complex>> loop;
  for (std::size_t s = 0; s < decl.samples.size(); ++s) {
    if (decl.samples[s].size() != 1)
      throw InconsistentSamples("equator samples must be single angles");
    const Complex det = clutching_matrix(c, *idx, s).determinant();
    if (std::abs(det) <= tol.eps_rank) throw CocycleViolation("singular equator transition");
    loop.emplace_back(decl.samples[s][0], det);
  }
  std::sort(loop.begin(), loop.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  double total = 0.0;
  for (std::size_t s = 0; s < loop.size(); ++s) {
    const Complex z0 = loop[s].second;
    const Complex z1 = loop[(s + 1) % loop.size()].second;
    const double step = std::arg(z1 / z0);
    if (std::abs(step) >= M_PI / 2.0)
      throw UndersampledLoop("phase step of " + std::to_string(step) +
                             " rad between adjacent equator samples");
    total += step;
  }
  const double winding = total / (2.0 * M_PI);
  const long degree = std::lround(winding);
  if (std::abs(winding - static_cast<double>(degree)) > 0.1)
    throw UndersampledLoop("summed phase increments are far from an integer");
  return degree;
}

// ---------------------------------------------------------------------------
// Coboundaries and the tensor/sum of cocycles.

/// Modifies a cocycle by per-patch invertible sections lambda:
/// T'_{ba}(x) = Lambda_b(x) . T_{ba}(x) . Lambda_a(x)^{-1}. The local
/// data is unchanged.
template <typename Scalar>
CechCocycle<Scalar> apply_coboundary(
    const CechCocycle<Scalar>& c,
    const std::vector<std::function<Mat<Scalar>(const SamplePt&)>>& lambda,
    const Tolerance& tol = {}) {
  if (lambda.size() != c.base.patches.size())
    throw InconsistentSamples("one section per patch required");
  CechCocycle<Scalar> out = c;
  for (std::size_t o = 0; o < c.base.overlaps.size(); ++o) {
    const auto& decl = c.base.overlaps[o];
    const std::size_t pa = c.base.patch_index(decl.from);
    const std::size_t pb = c.base.patch_index(decl.to);
    for (std::size_t s = 0; s < decl.samples.size(); ++s) {
      const auto& x = decl.samples[s];
      const auto& fa = c.local_at(pa, x);
      const auto& fb = c.local_at(pb, x);
      Mat<Scalar> la = lambda[pa](x);
      Mat<Scalar> lb = lambda[pb](x);
      if (la.rows() != c.rank || la.cols() != c.rank || lb.rows() != c.rank ||
          lb.cols() != c.rank)
        throw ShapeMismatch("coboundary sections must be rank x rank");
      if (smallest_singular_value(la) <= tol.eps_rank ||
          smallest_singular_value(lb) <= tol.eps_rank)
        throw RankDeficient("coboundary sections must be invertible");
      Mat<Scalar> g = clutching_matrix(c, o, s);
      Mat<Scalar> twisted = lb * g * la.partialPivLu().inverse();
      out.transitions[o][s] = mor_from_coeff(fa, fb, twisted);
    }
  }
  return out;
}

namespace detail {

template <typename Scalar, typename PointOp, typename MorOp>
CechCocycle<Scalar> combine_cocycles(const CechCocycle<Scalar>& a, const CechCocycle<Scalar>& b,
                                     PointOp point_op, MorOp mor_op, Index rank) {
  if (a.base.patches != b.base.patches || a.base.overlaps.size() != b.base.overlaps.size())
    throw InconsistentSamples("cocycles live over different covers");
  for (std::size_t o = 0; o < a.base.overlaps.size(); ++o) {
    const auto& da = a.base.overlaps[o];
    const auto& db = b.base.overlaps[o];
    if (da.from != db.from || da.to != db.to || da.component != db.component ||
        da.samples.size() != db.samples.size())
      throw InconsistentSamples("overlap grids disagree");
  }
  CechCocycle<Scalar> out;
  out.base = a.base;
  out.rank = rank;
  out.locals.resize(a.locals.size());
  for (std::size_t p = 0; p < a.locals.size(); ++p) {
    out.locals[p].samples = a.locals[p].samples;
    for (std::size_t s = 0; s < a.locals[p].samples.size(); ++s) {
      auto j = b.locals[p].find(a.locals[p].samples[s]);
      if (!j) throw InconsistentSamples("local grids disagree");
      out.locals[p].values.push_back(point_op(a.locals[p].values[s], b.locals[p].values[*j]));
    }
  }
  out.transitions.resize(a.transitions.size());
  for (std::size_t o = 0; o < a.transitions.size(); ++o)
    for (std::size_t s = 0; s < a.transitions[o].size(); ++s)
      out.transitions[o].push_back(mor_op(a.transitions[o][s], b.transitions[o][s]));
  return out;
}

}  // namespace detail

template <typename Scalar>
CechCocycle<Scalar> cocycle_tensor(const CechCocycle<Scalar>& a, const CechCocycle<Scalar>& b) {
  return detail::combine_cocycles(
      a, b, [](const auto& x, const auto& y) { return otimes_points_padded(x, y); },
      [](const auto& f, const auto& g) { return otimes_mor_padded(f, g); }, a.rank * b.rank);
}

template <typename Scalar>
CechCocycle<Scalar> cocycle_sum(const CechCocycle<Scalar>& a, const CechCocycle<Scalar>& b) {
  return detail::combine_cocycles(
      a, b, [](const auto& x, const auto& y) { return oplus_points_padded(x, y); },
      [](const auto& f, const auto& g) { return oplus_mor_padded(f, g); }, a.rank + b.rank);
}

// ---------------------------------------------------------------------------
// Sections of the pulled-back iso bundle along a sampled path.

/// Checks that T is a section of Isom(f*E, g*E): pointwise typing and
/// invertibility, plus a finite-difference continuity heuristic on the
/// fiber matrices across adjacent samples.
template <typename Scalar>
Report pullback_iso_bundle(const std::vector<GrPoint<Scalar>>& f,
                           const std::vector<GrPoint<Scalar>>& g,
                           const std::vector<MorPoint<Scalar>>& t, const Tolerance& tol = {},
                           double max_step = 0.5) {
  if (f.size() != g.size() || f.size() != t.size() || f.empty())
    throw SectionMismatch("f, g and T must be sampled at the same points");
  Report rep{"section of Isom(f*E, g*E)", 0, tol.eps_eq, {}};

  CheckItem typing{"source/target match f, g", t.size(), 0.0, true, ""};
  CheckItem iso{"fiberwise isomorphism", t.size(), 0.0, true, ""};
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double r =
        std::max(projection_dist(t[i].src, f[i]), projection_dist(t[i].dst, g[i]));
    if (r > typing.max_residual) {
      typing.max_residual = r;
      typing.witness = "sample #" + std::to_string(i);
    }
    if (!is_iso(t[i], tol)) {
      iso.max_residual = kInf;
      iso.witness = "sample #" + std::to_string(i);
    }
  }
  typing.pass = typing.max_residual <= tol.eps_eq;
  iso.pass = iso.max_residual <= tol.eps_eq;
  rep.items.push_back(typing);
  rep.items.push_back(iso);

  CheckItem cont{"finite-difference continuity", t.size() > 0 ? t.size() - 1 : 0, 0.0, true, ""};
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    // fiber matrices of consecutive samples in the frames of sample i
    Mat<Scalar> gi = g[i].frame.adjoint() * t[i].map_mat * f[i].frame;
    Mat<Scalar> gn = g[i].frame.adjoint() * t[i + 1].map_mat * f[i].frame;
    const double denom = std::max(1.0, max_abs(gi));
    const double jump = mat_dist(gi, gn) / denom;
    if (jump > cont.max_residual) {
      cont.max_residual = jump;
      cont.witness = "between samples #" + std::to_string(i) + " and #" + std::to_string(i + 1);
    }
  }
  cont.pass = cont.max_residual <= max_step;
  rep.items.push_back(cont);
  return rep;
}

// ---------------------------------------------------------------------------
// Canonical covers and example cocycles.

inline std::vector<SamplePt> linspace_pts(double lo, double hi, std::size_t n) {
  std::vector<SamplePt> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back({lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1)});
  return out;
}

/// Circle covered by two arcs; the overlap has two components, one
/// around parameter 0.5 and one around 1.0 (parameters mod 1).
inline BaseComplex circle_base(std::size_t samples_per_component = 8) {
  BaseComplex base;
  base.topology = "interval_cover_circle";
  base.patches = {"U0", "U1"};
  auto a = linspace_pts(0.45, 0.55, samples_per_component);
  auto b = linspace_pts(0.95, 1.05, samples_per_component);
  base.overlaps.push_back({"U0", "U1", "a", a});
  base.overlaps.push_back({"U1", "U0", "a", a});
  base.overlaps.push_back({"U0", "U1", "b", b});
  base.overlaps.push_back({"U1", "U0", "b", b});
  return base;
}

/// Sphere covered by two disks, overlapping in an equatorial band
/// parameterized by the angle in [0, 2*pi).
inline BaseComplex sphere_base(std::size_t equator_samples = 96) {
  BaseComplex base;
  base.topology = "two_disk_sphere";
  base.patches = {"N", "S"};
  std::vector<SamplePt> eq;
  for (std::size_t i = 0; i < equator_samples; ++i)
    eq.push_back({2.0 * M_PI * static_cast<double>(i) / static_cast<double>(equator_samples)});
  base.overlaps.push_back({"N", "S", "equator", eq});
  base.overlaps.push_back({"S", "N", "equator", eq});
  return base;
}

/// Abstract three-patch cover whose pairwise overlaps share sample
/// points, so the triple cocycle identity is genuinely exercised.
inline BaseComplex triple_base(std::size_t samples = 4) {
  BaseComplex base;
  base.topology = "abstract";
  base.patches = {"A", "B", "C"};
  auto grid = linspace_pts(0.0, 0.3, samples);
  const char* pairs[3][2] = {{"A", "B"}, {"B", "C"}, {"A", "C"}};
  for (auto& pr : pairs) {
    base.overlaps.push_back({pr[0], pr[1], "", grid});
    base.overlaps.push_back({pr[1], pr[0], "", grid});
  }
  return base;
}

/// Rank-1 real cocycle over the circle with constant transitions
/// sign_a and sign_b on the two overlap components. (+1, +1) builds
/// the trivial bundle, a single -1 the Moebius bundle.
inline CechCocycle<Real> make_circle_cocycle(double sign_a, double sign_b, Index ambient = 2,
                                             std::size_t samples_per_component = 8) {
  if (sign_a == 0.0 || sign_b == 0.0) throw RankDeficient("transitions must be invertible");
  CechCocycle<Real> c;
  c.base = circle_base(samples_per_component);
  c.rank = 1;
  GrPoint<Real> fiber = GrPoint<Real>::standard(ambient, 1);
  c.locals.resize(2);
  for (std::size_t p = 0; p < 2; ++p) {
    for (const auto& decl : c.base.overlaps) {
      if (c.base.patch_index(decl.from) != p) continue;
      for (const auto& x : decl.samples)
        if (!c.locals[p].find(x)) {
          c.locals[p].samples.push_back(x);
          c.locals[p].values.push_back(fiber);
        }
    }
  }
  c.transitions.resize(c.base.overlaps.size());
  for (std::size_t o = 0; o < c.base.overlaps.size(); ++o) {
    const auto& decl = c.base.overlaps[o];
    const double g = decl.component == "a" ? sign_a : sign_b;
    // the reverse direction carries the inverse
    const double value = c.base.patch_index(decl.from) == 0 ? g : 1.0 / g;
    Mat<Real> coeff(1, 1);
    coeff(0, 0) = value;
    for (std::size_t s = 0; s < decl.samples.size(); ++s)
      c.transitions[o].push_back(mor_from_coeff(fiber, fiber, coeff));
  }
  return c;
}

/// Rank-1 complex cocycle over the sphere whose equatorial transition
/// is exp(i * degree * angle).
inline CechCocycle<Complex> make_clutching_cocycle(long degree, Index ambient = 2,
                                                   std::size_t equator_samples = 96) {
  CechCocycle<Complex> c;
  c.base = sphere_base(equator_samples);
  c.rank = 1;
  GrPoint<Complex> fiber = GrPoint<Complex>::standard(ambient, 1);
  c.locals.resize(2);
  for (std::size_t p = 0; p < 2; ++p) {
    c.locals[p].samples = c.base.overlaps[0].samples;
    c.locals[p].values.assign(c.locals[p].samples.size(), fiber);
  }
  c.transitions.resize(2);
  for (std::size_t o = 0; o < 2; ++o) {
    const bool forward = c.base.overlaps[o].from == "N";
    for (const auto& x : c.base.overlaps[o].samples) {
      const double phase = static_cast<double>(degree) * x[0];
      Mat<Complex> coeff(1, 1);
      coeff(0, 0) = std::polar(1.0, forward ? phase : -phase);
      c.transitions[o].push_back(mor_from_coeff(fiber, fiber, coeff));
    }
  }
  return c;
}

/// Cocycle on the three-patch abstract cover with constant transitions
/// g_BA, g_CB and g_CA = g_CB * g_BA; rank is the matrix size.
template <typename Scalar>
CechCocycle<Scalar> make_triple_cocycle(const Mat<Scalar>& g_ba, const Mat<Scalar>& g_cb,
                                        Index ambient, std::size_t samples = 4) {
  const Index k = g_ba.rows();
  if (g_ba.cols() != k || g_cb.rows() != k || g_cb.cols() != k)
    throw ShapeMismatch("transitions must be square of equal size");
  CechCocycle<Scalar> c;
  c.base = triple_base(samples);
  c.rank = k;
  GrPoint<Scalar> fiber = GrPoint<Scalar>::standard(ambient, k);
  c.locals.resize(3);
  for (std::size_t p = 0; p < 3; ++p) {
    c.locals[p].samples = c.base.overlaps[0].samples;
    c.locals[p].values.assign(c.locals[p].samples.size(), fiber);
  }
  Mat<Scalar> g_ca = g_cb * g_ba;
  auto inv = [](const Mat<Scalar>& m) { return m.partialPivLu().inverse().eval(); };
  std::map<std::pair<std::string, std::string>, Mat<Scalar>> table = {
      {{"A", "B"}, g_ba},      {{"B", "A"}, inv(g_ba)}, {{"B", "C"}, g_cb},
      {{"C", "B"}, inv(g_cb)}, {{"A", "C"}, g_ca},      {{"C", "A"}, inv(g_ca)}};
  c.transitions.resize(c.base.overlaps.size());
  for (std::size_t o = 0; o < c.base.overlaps.size(); ++o) {
    const auto& decl = c.base.overlaps[o];
    const Mat<Scalar>& coeff = table.at({decl.from, decl.to});
    for (std::size_t s = 0; s < decl.samples.size(); ++s)
      c.transitions[o].push_back(mor_from_coeff(fiber, fiber, coeff));
  }
  return c;
}

/// Smooth nonvanishing per-patch sections for coboundary tests:
/// scalar multiples of exp-free perturbations that stay invertible.
template <typename Scalar>
std::vector<std::function<Mat<Scalar>(const SamplePt&)>> random_coboundary(Rng& rng,
                                                                           const BaseComplex& base,
                                                                           Index rank) {
  std::vector<std::function<Mat<Scalar>(const SamplePt&)>> out;
  for (std::size_t p = 0; p < base.patches.size(); ++p) {
    Scalar scale = random_scalar<Scalar>(rng);
    // keep the constant part away from zero
    while (std::abs(scale) < 0.5) scale = random_scalar<Scalar>(rng);
    Mat<Scalar> wiggle = random_matrix<Scalar>(rng, rank, rank);
    if (rank > 0 && max_abs(wiggle) > 0)
      wiggle /= 4.0 * static_cast<double>(rank) * max_abs(wiggle);
    const double freq = static_cast<double>(rng.uniform_int(1, 3));
    out.push_back([scale, wiggle, freq, rank](const SamplePt& x) {
      const double s = std::sin(2.0 * M_PI * freq * (x.empty() ? 0.0 : x[0]));
      Mat<Scalar> m = Mat<Scalar>::Identity(rank, rank) + s * wiggle;
      return (scale * m).eval();
    });
  }
  return out;
}

}  // namespace grasscat
