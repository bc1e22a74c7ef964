#pragma once

#include "grasscat/internal_cat.hpp"
#include "grasscat/morphism.hpp"
#include "grasscat/semiring.hpp"

#include <utility>

namespace grasscat {

struct SampleCaps {
  Index m_max = 6;  // ambient dimension cap
  Index k_max = 3;  // fiber dimension cap
  Index k_min = 0;  // fiber dimension floor (sampling only)

  void validate() const {
    if (m_max < 1 || k_max < 0 || k_min < 0 || k_min > k_max || k_min > m_max)
      throw ConfigError("invalid sampling caps");
  }
};

// ---------------------------------------------------------------------------
// The groupoid G: objects and morphisms are both subspaces, all
// structure maps are the identity.

template <typename Scalar>
SampledCategory<GrPoint<Scalar>, GrPoint<Scalar>> make_g_category(SampleCaps caps = {},
                                                                  Tolerance tol = {}) {
  caps.validate();
  using P = GrPoint<Scalar>;
  SampledCategory<P, P> cat;
  cat.name = "G";
  cat.sample_object = [caps, tol](Rng& rng) {
    const Index m = rng.uniform_int(std::max<Index>(1, caps.k_min), caps.m_max);
    const Index k = rng.uniform_int(std::min(caps.k_min, m), std::min(caps.k_max, m));
    return random_grpoint<Scalar>(rng, m, k, tol);
  };
  cat.sample_mor_from = [](Rng&, const P& x) { return x; };
  cat.source = [](const P& f) { return f; };
  cat.target = [](const P& f) { return f; };
  cat.identity = [](const P& x) { return x; };
  cat.compose = [](const P& f, const P&) { return f; };
  cat.obj_dist = [](const P& a, const P& b) { return projection_dist(a, b); };
  cat.mor_dist = [](const P& a, const P& b) { return projection_dist(a, b); };
  cat.show_obj = [](const P& x) { return show_matrix(x.frame); };
  cat.show_mor = [](const P& x) { return show_matrix(x.frame); };
  return cat;
}

// ---------------------------------------------------------------------------
// The matrix category V_F: objects are dimensions, morphisms matrices.

template <typename Scalar>
SampledCategory<Index, VfMor<Scalar>> make_vf_category(Index n_max = 5, bool iso_only = false,
                                                       Tolerance /*tol*/ = {}) {
  using M = VfMor<Scalar>;
  SampledCategory<Index, M> cat;
  cat.name = iso_only ? "iso V_F" : "V_F";
  cat.sample_object = [n_max](Rng& rng) { return static_cast<Index>(rng.uniform_int(0, n_max)); };
  cat.sample_mor_from = [n_max, iso_only](Rng& rng, const Index& n) {
    const Index m = iso_only ? n : static_cast<Index>(rng.uniform_int(0, n_max));
    return M{iso_only ? random_invertible<Scalar>(rng, n) : random_matrix<Scalar>(rng, m, n)};
  };
  cat.source = [](const M& f) { return f.source_dim(); };
  cat.target = [](const M& f) { return f.target_dim(); };
  cat.identity = [](const Index& n) { return vf_identity<Scalar>(n); };
  cat.compose = [](const M& f, const M& g) { return vf_compose(f, g); };
  cat.obj_dist = [](const Index& a, const Index& b) { return a == b ? 0.0 : kInf; };
  cat.mor_dist = [](const M& a, const M& b) { return vf_dist(a, b); };
  cat.show_obj = [](const Index& n) { return "F^" + std::to_string(n); };
  cat.show_mor = [](const M& f) { return show_matrix(f.mat); };
  return cat;
}

// ---------------------------------------------------------------------------
// The truncated fat category V_F^f: objects are subspaces of F^m for
// m <= m_max, morphisms are MorPoints. Every colimit-level map is
// exposed at explicit finite ambient dimension.

template <typename Scalar>
SampledCategory<GrPoint<Scalar>, MorPoint<Scalar>> make_vff_category(SampleCaps caps = {},
                                                                     bool iso_only = false,
                                                                     Tolerance tol = {}) {
  caps.validate();
  using P = GrPoint<Scalar>;
  using M = MorPoint<Scalar>;
  SampledCategory<P, M> cat;
  cat.name = iso_only ? "iso V_F^f" : "V_F^f";
  cat.sample_object = [caps, tol](Rng& rng) {
    const Index m = rng.uniform_int(std::max<Index>(1, caps.k_min), caps.m_max);
    const Index k = rng.uniform_int(std::min(caps.k_min, m), std::min(caps.k_max, m));
    return random_grpoint<Scalar>(rng, m, k, tol);
  };
  cat.sample_mor_from = [caps, iso_only, tol](Rng& rng, const P& x) {
    if (iso_only) {
      const Index n = rng.uniform_int(std::max<Index>(1, x.sub_dim()), caps.m_max);
      return random_iso_morpoint<Scalar>(rng, x, n, tol);
    }
    const Index n = rng.uniform_int(std::max<Index>(1, caps.k_min), caps.m_max);
    const Index l = rng.uniform_int(std::min(caps.k_min, n), std::min(caps.k_max, n));
    return random_morpoint<Scalar>(rng, x, n, l, tol);
  };
  cat.source = [](const M& f) { return f.src; };
  cat.target = [](const M& f) { return f.dst; };
  cat.identity = [](const P& x) { return mor_identity(x); };
  cat.compose = [tol](const M& f, const M& g) { return mor_compose(f, g, tol); };
  cat.obj_dist = [](const P& a, const P& b) { return projection_dist(a, b); };
  cat.mor_dist = [](const M& a, const M& b) { return mor_dist(a, b); };
  cat.show_obj = [](const P& x) { return show_matrix(x.frame); };
  cat.show_mor = [](const M& f) {
    return "src " + show_matrix(f.src.frame) + ", dst " +
           show_matrix(f.dst.frame) + ", map " + show_matrix(f.map_mat);
  };
  return cat;
}

// ---------------------------------------------------------------------------
// Inclusion functors.

/// V_F -> V_F^f at a fixed truncation: F^n lands on the standard
/// coordinate subspace of F^{trunc}.
template <typename Scalar>
SampledFunctor<Index, VfMor<Scalar>, GrPoint<Scalar>, MorPoint<Scalar>> embed_vf_functor(
    Index n_max = 5, bool iso_only = false, Tolerance tol = {}) {
  SampledFunctor<Index, VfMor<Scalar>, GrPoint<Scalar>, MorPoint<Scalar>> fun;
  fun.name = iso_only ? "iso V_F -> iso V_F^f" : "V_F -> V_F^f";
  fun.dom = make_vf_category<Scalar>(n_max, iso_only, tol);
  fun.cod = make_vff_category<Scalar>(SampleCaps{n_max, n_max}, iso_only, tol);
  const Index trunc = n_max;
  fun.on_objects = [trunc](const Index& n) { return GrPoint<Scalar>::standard(trunc, n); };
  fun.on_morphisms = [trunc](const VfMor<Scalar>& f) { return embed_vf(f, trunc, trunc); };
  return fun;
}

/// G -> iso V_F^f: trivial structure maps on the nose.
template <typename Scalar>
SampledFunctor<GrPoint<Scalar>, GrPoint<Scalar>, GrPoint<Scalar>, MorPoint<Scalar>>
embed_g_functor(SampleCaps caps = {}, Tolerance tol = {}) {
  SampledFunctor<GrPoint<Scalar>, GrPoint<Scalar>, GrPoint<Scalar>, MorPoint<Scalar>> fun;
  fun.name = "G -> iso V_F^f";
  fun.dom = make_g_category<Scalar>(caps, tol);
  fun.cod = make_vff_category<Scalar>(caps, true, tol);
  fun.on_objects = [](const GrPoint<Scalar>& v) { return v; };
  fun.on_morphisms = [](const GrPoint<Scalar>& v) { return embed_g(v); };
  return fun;
}

// ---------------------------------------------------------------------------
// The monoidal functors as internal functors on product categories.

template <typename Scalar>
using VffProductFunctor =
    SampledFunctor<std::pair<GrPoint<Scalar>, GrPoint<Scalar>>,
                   std::pair<MorPoint<Scalar>, MorPoint<Scalar>>, GrPoint<Scalar>,
                   MorPoint<Scalar>>;

template <typename Scalar>
VffProductFunctor<Scalar> oplus_vff_functor(SampleCaps caps = {}, bool iso_only = false,
                                            Tolerance tol = {}) {
  VffProductFunctor<Scalar> fun;
  fun.name = "oplus on V_F^f";
  auto factor = make_vff_category<Scalar>(caps, iso_only, tol);
  fun.dom = product_category(factor, factor);
  fun.cod = make_vff_category<Scalar>(SampleCaps{2 * caps.m_max, 2 * caps.k_max}, iso_only, tol);
  fun.on_objects = [](const auto& x) { return oplus_points_padded(x.first, x.second); };
  fun.on_morphisms = [](const auto& f) { return oplus_mor_padded(f.first, f.second); };
  return fun;
}

template <typename Scalar>
VffProductFunctor<Scalar> otimes_vff_functor(SampleCaps caps = {}, bool iso_only = false,
                                             Tolerance tol = {}) {
  VffProductFunctor<Scalar> fun;
  fun.name = "otimes on V_F^f";
  auto factor = make_vff_category<Scalar>(caps, iso_only, tol);
  fun.dom = product_category(factor, factor);
  fun.cod = make_vff_category<Scalar>(
      SampleCaps{caps.m_max * caps.m_max, caps.k_max * caps.k_max}, iso_only, tol);
  fun.on_objects = [](const auto& x) { return otimes_points_padded(x.first, x.second); };
  fun.on_morphisms = [](const auto& f) { return otimes_mor_padded(f.first, f.second); };
  return fun;
}

template <typename Scalar>
using VfProductFunctor = SampledFunctor<std::pair<Index, Index>,
                                        std::pair<VfMor<Scalar>, VfMor<Scalar>>, Index,
                                        VfMor<Scalar>>;

template <typename Scalar>
VfProductFunctor<Scalar> oplus_vf_functor(Index n_max = 5, bool iso_only = false,
                                          Tolerance tol = {}) {
  VfProductFunctor<Scalar> fun;
  fun.name = "oplus on V_F";
  auto factor = make_vf_category<Scalar>(n_max, iso_only, tol);
  fun.dom = product_category(factor, factor);
  fun.cod = make_vf_category<Scalar>(2 * n_max, iso_only, tol);
  fun.on_objects = [](const auto& x) { return x.first + x.second; };
  fun.on_morphisms = [](const auto& f) { return vf_oplus(f.first, f.second); };
  return fun;
}

template <typename Scalar>
VfProductFunctor<Scalar> otimes_vf_functor(Index n_max = 5, bool iso_only = false,
                                           Tolerance tol = {}) {
  VfProductFunctor<Scalar> fun;
  fun.name = "otimes on V_F";
  auto factor = make_vf_category<Scalar>(n_max, iso_only, tol);
  fun.dom = product_category(factor, factor);
  fun.cod = make_vf_category<Scalar>(n_max * n_max, iso_only, tol);
  fun.on_objects = [](const auto& x) { return x.first * x.second; };
  fun.on_morphisms = [](const auto& f) { return vf_otimes(f.first, f.second); };
  return fun;
}

// ---------------------------------------------------------------------------
// Natural-transformation cases: a functor pair together with its
// explicit witness component.

template <typename ObjC, typename MorC, typename ObjD, typename MorD>
struct NatTransCase {
  std::string name;
  SampledFunctor<ObjC, MorC, ObjD, MorD> f;
  SampledFunctor<ObjC, MorC, ObjD, MorD> g;
  NatTransWitness<ObjC, MorD> phi;
};

/// Commutativity of oplus in V_F: (n, m) |-> [0, id_n / id_m, 0].
template <typename Scalar>
NatTransCase<std::pair<Index, Index>, std::pair<VfMor<Scalar>, VfMor<Scalar>>, Index,
             VfMor<Scalar>>
swap_vf_case(Index n_max = 5, Tolerance tol = {}) {
  auto f = oplus_vf_functor<Scalar>(n_max, false, tol);
  auto g = f;
  g.name = "oplus . flip on V_F";
  g.on_objects = [](const auto& x) { return x.second + x.first; };
  g.on_morphisms = [](const auto& m) { return vf_oplus(m.second, m.first); };
  NatTransWitness<std::pair<Index, Index>, VfMor<Scalar>> phi;
  phi.component = [](const std::pair<Index, Index>& x) {
    return witness_swap_vf<Scalar>(x.first, x.second);
  };
  return {"oplus commutativity (V_F)", f, g, phi};
}

template <typename Scalar>
using VfTripleObj = std::pair<Index, std::pair<Index, Index>>;
template <typename Scalar>
using VfTripleMor = std::pair<VfMor<Scalar>, std::pair<VfMor<Scalar>, VfMor<Scalar>>>;

/// Left distributivity in V_F: x (x) (y + z) => (x (x) y) + (x (x) z),
/// realized by the displayed interleaving permutation.
template <typename Scalar>
NatTransCase<VfTripleObj<Scalar>, VfTripleMor<Scalar>, Index, VfMor<Scalar>>
distrib_left_vf_case(Index n_max = 3, Tolerance tol = {}) {
  auto factor = make_vf_category<Scalar>(n_max, false, tol);
  auto dom = product_category(factor, product_category(factor, factor));
  auto cod = make_vf_category<Scalar>(2 * n_max * n_max, false, tol);

  SampledFunctor<VfTripleObj<Scalar>, VfTripleMor<Scalar>, Index, VfMor<Scalar>> f;
  f.name = "x (x) (y + z)";
  f.dom = dom;
  f.cod = cod;
  f.on_objects = [](const VfTripleObj<Scalar>& x) {
    return x.first * (x.second.first + x.second.second);
  };
  f.on_morphisms = [](const VfTripleMor<Scalar>& m) {
    return vf_otimes(m.first, vf_oplus(m.second.first, m.second.second));
  };

  auto g = f;
  g.name = "(x (x) y) + (x (x) z)";
  g.on_objects = [](const VfTripleObj<Scalar>& x) {
    return x.first * x.second.first + x.first * x.second.second;
  };
  g.on_morphisms = [](const VfTripleMor<Scalar>& m) {
    return vf_oplus(vf_otimes(m.first, m.second.first), vf_otimes(m.first, m.second.second));
  };

  NatTransWitness<VfTripleObj<Scalar>, VfMor<Scalar>> phi;
  phi.component = [](const VfTripleObj<Scalar>& x) {
    return witness_distrib_left<Scalar>(x.first, x.second.first, x.second.second);
  };
  return {"left distributivity (V_F)", f, g, phi};
}

/// Right distributivity in V_F is strict; its witness is the identity.
template <typename Scalar>
NatTransCase<VfTripleObj<Scalar>, VfTripleMor<Scalar>, Index, VfMor<Scalar>>
distrib_right_vf_case(Index n_max = 3, Tolerance tol = {}) {
  auto factor = make_vf_category<Scalar>(n_max, false, tol);
  auto dom = product_category(factor, product_category(factor, factor));
  auto cod = make_vf_category<Scalar>(2 * n_max * n_max, false, tol);

  SampledFunctor<VfTripleObj<Scalar>, VfTripleMor<Scalar>, Index, VfMor<Scalar>> f;
  f.name = "(x + y) (x) z";
  f.dom = dom;
  f.cod = cod;
  f.on_objects = [](const VfTripleObj<Scalar>& x) {
    return (x.first + x.second.first) * x.second.second;
  };
  f.on_morphisms = [](const VfTripleMor<Scalar>& m) {
    return vf_otimes(vf_oplus(m.first, m.second.first), m.second.second);
  };

  auto g = f;
  g.name = "(x (x) z) + (y (x) z)";
  g.on_objects = [](const VfTripleObj<Scalar>& x) {
    return x.first * x.second.second + x.second.first * x.second.second;
  };
  g.on_morphisms = [](const VfTripleMor<Scalar>& m) {
    return vf_oplus(vf_otimes(m.first, m.second.second),
                    vf_otimes(m.second.first, m.second.second));
  };

  NatTransWitness<VfTripleObj<Scalar>, VfMor<Scalar>> phi;
  phi.component = [](const VfTripleObj<Scalar>& x) {
    return witness_distrib_right<Scalar>(x.first, x.second.first, x.second.second);
  };
  return {"right distributivity (V_F)", f, g, phi};
}

/// Additive unit on V_F^f: stabilization into F^{2m} versus
/// theta(0 + X), linked by the identity of X.
template <typename Scalar>
NatTransCase<GrPoint<Scalar>, MorPoint<Scalar>, GrPoint<Scalar>, MorPoint<Scalar>>
add_unit_vff_case(SampleCaps caps = {}, bool zero_first = true, Tolerance tol = {}) {
  SampledFunctor<GrPoint<Scalar>, MorPoint<Scalar>, GrPoint<Scalar>, MorPoint<Scalar>> f;
  f.name = "stabilize to F^{2m}";
  f.dom = make_vff_category<Scalar>(caps, false, tol);
  f.cod = make_vff_category<Scalar>(SampleCaps{2 * caps.m_max, caps.k_max}, false, tol);
  f.on_objects = [](const GrPoint<Scalar>& x) { return pad_to(x, 2 * x.ambient_dim()); };
  f.on_morphisms = [](const MorPoint<Scalar>& h) {
    return mor_pad_to(h, 2 * h.src.ambient_dim(), 2 * h.dst.ambient_dim());
  };

  auto g = f;
  g.name = zero_first ? "theta(0 + X)" : "theta(X + 0)";
  g.on_objects = [zero_first](const GrPoint<Scalar>& x) {
    GrPoint<Scalar> zero = GrPoint<Scalar>::zero(x.ambient_dim());
    return zero_first ? oplus_points(zero, x) : oplus_points(x, zero);
  };
  g.on_morphisms = [zero_first](const MorPoint<Scalar>& h) {
    MorPoint<Scalar> z = zero_mor(h.src, h.dst);
    return zero_first ? oplus_mor(z, h) : oplus_mor(h, z);
  };

  NatTransWitness<GrPoint<Scalar>, MorPoint<Scalar>> phi;
  phi.component = [zero_first](const GrPoint<Scalar>& x) {
    return witness_add_unit(x, zero_first);
  };
  return {std::string("additive unit (V_F^f, ") + (zero_first ? "0+X" : "X+0") + ")", f, g,
          phi};
}

/// Commutativity of oplus on V_F^f via the block swap.
template <typename Scalar>
NatTransCase<std::pair<GrPoint<Scalar>, GrPoint<Scalar>>,
             std::pair<MorPoint<Scalar>, MorPoint<Scalar>>, GrPoint<Scalar>, MorPoint<Scalar>>
comm_vff_case(SampleCaps caps = {}, Tolerance tol = {}) {
  auto f = oplus_vff_functor<Scalar>(caps, false, tol);
  auto g = f;
  g.name = "oplus . flip on V_F^f";
  g.on_objects = [](const auto& x) { return oplus_points_padded(x.second, x.first); };
  g.on_morphisms = [](const auto& m) { return oplus_mor_padded(m.second, m.first); };
  NatTransWitness<std::pair<GrPoint<Scalar>, GrPoint<Scalar>>, MorPoint<Scalar>> phi;
  phi.component = [](const std::pair<GrPoint<Scalar>, GrPoint<Scalar>>& x) {
    const Index n = std::max(x.first.ambient_dim(), x.second.ambient_dim());
    return witness_comm(pad_to(x.first, n), pad_to(x.second, n));
  };
  return {"oplus commutativity (V_F^f)", f, g, phi};
}

/// Comparison of the sums along V_F -> V_F^f. The two functors land in
/// ambient dimension 2*trunc; the witness matches concatenated with
/// interleaved coordinates.
template <typename Scalar>
NatTransCase<std::pair<Index, Index>, std::pair<VfMor<Scalar>, VfMor<Scalar>>,
             GrPoint<Scalar>, MorPoint<Scalar>>
compare_oplus_case(Index trunc = 5, Tolerance tol = {}) {
  auto factor = make_vf_category<Scalar>(trunc, false, tol);
  auto cod = make_vff_category<Scalar>(SampleCaps{2 * trunc, 2 * trunc}, false, tol);

  SampledFunctor<std::pair<Index, Index>, std::pair<VfMor<Scalar>, VfMor<Scalar>>,
                 GrPoint<Scalar>, MorPoint<Scalar>>
      f;
  f.name = "embed . oplus_vf";
  f.dom = product_category(factor, factor);
  f.cod = cod;
  f.on_objects = [trunc](const std::pair<Index, Index>& x) {
    return GrPoint<Scalar>::standard(2 * trunc, x.first + x.second);
  };
  f.on_morphisms = [trunc](const std::pair<VfMor<Scalar>, VfMor<Scalar>>& m) {
    return embed_vf(vf_oplus(m.first, m.second), 2 * trunc, 2 * trunc);
  };

  auto g = f;
  g.name = "oplus_vff . (embed x embed)";
  g.on_objects = [trunc](const std::pair<Index, Index>& x) {
    return oplus_points(GrPoint<Scalar>::standard(trunc, x.first),
                        GrPoint<Scalar>::standard(trunc, x.second));
  };
  g.on_morphisms = [trunc](const std::pair<VfMor<Scalar>, VfMor<Scalar>>& m) {
    return oplus_mor(embed_vf(m.first, trunc, trunc), embed_vf(m.second, trunc, trunc));
  };

  NatTransWitness<std::pair<Index, Index>, MorPoint<Scalar>> phi;
  phi.component = [trunc](const std::pair<Index, Index>& x) {
    return comparison_oplus_component<Scalar>(x.first, x.second, trunc);
  };
  return {"comparison of sums (V_F vs V_F^f)", f, g, phi};
}

/// Comparison of the tensor products along V_F -> V_F^f, in ambient
/// dimension trunc^2.
template <typename Scalar>
NatTransCase<std::pair<Index, Index>, std::pair<VfMor<Scalar>, VfMor<Scalar>>,
             GrPoint<Scalar>, MorPoint<Scalar>>
compare_otimes_case(Index trunc = 4, Tolerance tol = {}) {
  auto factor = make_vf_category<Scalar>(trunc, false, tol);
  auto cod = make_vff_category<Scalar>(SampleCaps{trunc * trunc, trunc * trunc}, false, tol);

  SampledFunctor<std::pair<Index, Index>, std::pair<VfMor<Scalar>, VfMor<Scalar>>,
                 GrPoint<Scalar>, MorPoint<Scalar>>
      f;
  f.name = "embed . otimes_vf";
  f.dom = product_category(factor, factor);
  f.cod = cod;
  f.on_objects = [trunc](const std::pair<Index, Index>& x) {
    return GrPoint<Scalar>::standard(trunc * trunc, x.first * x.second);
  };
  f.on_morphisms = [trunc](const std::pair<VfMor<Scalar>, VfMor<Scalar>>& m) {
    return embed_vf(vf_otimes(m.first, m.second), trunc * trunc, trunc * trunc);
  };

  auto g = f;
  g.name = "otimes_vff . (embed x embed)";
  g.on_objects = [trunc](const std::pair<Index, Index>& x) {
    return otimes_points(GrPoint<Scalar>::standard(trunc, x.first),
                         GrPoint<Scalar>::standard(trunc, x.second));
  };
  g.on_morphisms = [trunc](const std::pair<VfMor<Scalar>, VfMor<Scalar>>& m) {
    return otimes_mor(embed_vf(m.first, trunc, trunc), embed_vf(m.second, trunc, trunc));
  };

  NatTransWitness<std::pair<Index, Index>, MorPoint<Scalar>> phi;
  phi.component = [trunc](const std::pair<Index, Index>& x) {
    return comparison_otimes_component<Scalar>(x.first, x.second, trunc);
  };
  return {"comparison of tensor products (V_F vs V_F^f)", f, g, phi};
}

/// The pair of comparison witnesses at a fixed truncation.
template <typename Scalar>
std::pair<NatTransWitness<std::pair<Index, Index>, MorPoint<Scalar>>,
          NatTransWitness<std::pair<Index, Index>, MorPoint<Scalar>>>
comparison_witnesses(Index trunc = 4, Tolerance tol = {}) {
  return {compare_oplus_case<Scalar>(trunc, tol).phi, compare_otimes_case<Scalar>(trunc, tol).phi};
}

// ---------------------------------------------------------------------------
// Seeded single-site corruptions, used to calibrate that the checkers
// actually detect broken structure.

/// Replaces the composite with something square-transposed (or doubled
/// when not square): breaks associativity or typing.
template <typename Scalar>
SampledCategory<Index, VfMor<Scalar>> mutate_vf_identity(SampledCategory<Index, VfMor<Scalar>> cat) {
  auto original = cat.identity;
  cat.name += " [mutated identity]";
  cat.identity = [original](const Index& n) {
    VfMor<Scalar> e = original(n);
    e.mat *= Scalar(2);
    return e;
  };
  return cat;
}

template <typename Scalar>
SampledCategory<Index, VfMor<Scalar>> mutate_vf_compose(SampledCategory<Index, VfMor<Scalar>> cat) {
  auto original = cat.compose;
  cat.name += " [mutated compose]";
  cat.compose = [original](const VfMor<Scalar>& f, const VfMor<Scalar>& g) {
    VfMor<Scalar> h = original(f, g);
    if (h.mat.rows() == h.mat.cols())
      return VfMor<Scalar>{h.mat.transpose().eval()};
    return VfMor<Scalar>{(Scalar(2) * h.mat).eval()};
  };
  return cat;
}

template <typename Scalar>
SampledCategory<GrPoint<Scalar>, MorPoint<Scalar>> mutate_vff_compose(
    SampledCategory<GrPoint<Scalar>, MorPoint<Scalar>> cat) {
  auto original = cat.compose;
  cat.name += " [mutated compose]";
  cat.compose = [original](const MorPoint<Scalar>& f, const MorPoint<Scalar>& g) {
    MorPoint<Scalar> h = original(f, g);
    h.map_mat *= Scalar(2);
    return h;
  };
  return cat;
}

template <typename Obj, typename Scalar>
SampledCategory<Obj, MorPoint<Scalar>> mutate_identity(SampledCategory<Obj, MorPoint<Scalar>> cat) {
  auto original = cat.identity;
  cat.name += " [mutated identity]";
  cat.identity = [original](const Obj& x) {
    MorPoint<Scalar> e = original(x);
    e.map_mat *= Scalar(2);
    return e;
  };
  return cat;
}

/// Conjugates the image morphism entrywise; over C this breaks the
/// composition square.
template <typename ObjC, typename MorC, typename ObjD>
SampledFunctor<ObjC, MorC, ObjD, MorPoint<Complex>> mutate_functor_conjugate(
    SampledFunctor<ObjC, MorC, ObjD, MorPoint<Complex>> fun) {
  auto original = fun.on_morphisms;
  fun.name += " [conjugated morphisms]";
  fun.on_morphisms = [original](const MorC& f) {
    MorPoint<Complex> h = original(f);
    h.map_mat = h.map_mat.conjugate();
    return h;
  };
  return fun;
}

}  // namespace grasscat
