// Acceptance suite. Every criterion is pinned here with its tolerance
// and sample budget and prints exactly one pass/fail line; the binary
// exits nonzero if any criterion fails.

#include "grasscat/grasscat.hpp"
#include "grasscat/suites.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace grasscat;

namespace {

const Tolerance tol;  // eps_orth 1e-10, eps_rank 1e-8, eps_eq 1e-8

struct Criterion {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void report(int number, const std::string& title, const Criterion& c, double seconds) {
  std::printf("[%s] %2d. %s (%.1f s)%s%s\n", c.pass ? "PASS" : "FAIL", number, title.c_str(),
              seconds, c.detail.empty() ? "" : " -- ", c.detail.c_str());
  std::fflush(stdout);
  if (!c.pass) ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& title, double time_limit_s, Fn&& fn) {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  try {
    fn(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && seconds > time_limit_s) {
    std::ostringstream os;
    os << "runtime " << seconds << " s exceeds " << time_limit_s << " s";
    c.require(false, os.str());
  }
  report(number, title, c, seconds);
}

std::string fmt_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", r);
  return buf;
}

void require_report(Criterion& c, const Report& rep, double limit) {
  c.require(rep.passed() && rep.max_residual() <= limit,
            rep.suite + " max residual " + fmt_residual(rep.max_residual()));
}

// well-conditioned chart near a point, as in the unit suites
template <typename Scalar>
GrChart<Scalar> nearby_chart(Rng& rng, const GrPoint<Scalar>& p) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto base = perturb_subspace(rng, p, 0.2, tol);
    auto chart = GrChart<Scalar>::at(base, tol);
    if (smallest_singular_value((chart.basis_v.adjoint() * p.frame).eval()) > 0.3) return chart;
  }
  throw SamplerExhausted("no well-conditioned chart found");
}

// --------------------------------------------------------------------------

void criterion_1(Criterion& c) {
  const std::size_t samples = 1000;
  require_report(c, check_category_axioms(make_vf_category<Real>(5, false, tol), samples, 101,
                                          tol),
                 1e-8);
  require_report(c, check_category_axioms(make_vf_category<Complex>(5, false, tol), samples,
                                          102, tol),
                 1e-8);
  require_report(c, check_category_axioms(make_vff_category<Real>(SampleCaps{6, 3}, false, tol),
                                          samples, 103, tol),
                 1e-8);
  require_report(c,
                 check_category_axioms(make_vff_category<Complex>(SampleCaps{6, 3}, false, tol),
                                       samples, 104, tol),
                 1e-8);
  require_report(c, check_category_axioms(make_g_category<Complex>(SampleCaps{6, 3}, tol),
                                          samples, 105, tol),
                 1e-8);
}

void criterion_2(Criterion& c) {
  Rng master(202);
  double worst = 0.0;
  int done = 0;
  while (done < 500) {
    Rng rng = master.fork(static_cast<std::uint64_t>(done));
    const Index m = rng.uniform_int(2, 6);
    const Index n = rng.uniform_int(2, 6);
    const Index p = rng.uniform_int(2, 6);
    const Index k = rng.uniform_int(0, std::min<Index>(3, m));
    const Index l = rng.uniform_int(0, std::min<Index>(3, n));
    const Index j = rng.uniform_int(0, std::min<Index>(3, p));
    auto f = random_morpoint<Complex>(rng, random_grpoint<Complex>(rng, m, k, tol), n, l, tol);
    auto g = random_morpoint<Complex>(rng, f.dst, p, j, tol);
    GrChart<Complex> cx, cy, cz;
    try {
      cx = nearby_chart(rng, f.src);
      cy = nearby_chart(rng, f.dst);
      cz = nearby_chart(rng, g.dst);
    } catch (const SamplerExhausted&) {
      continue;
    }
    auto tf = mor_chart(f, cx, cy, tol);
    auto tg = mor_chart(g, cy, cz, tol);
    auto tgf = mor_chart(mor_compose(f, g, tol), cx, cz, tol);
    const Mat<Complex> product = tg.t_box * tf.t_box;
    const double scale = 1.0 + max_abs(product);
    worst = std::max(worst, mat_dist(tgf.t_box, product) / scale);
    worst = std::max(worst, mat_dist(tgf.a_src, tf.a_src));
    worst = std::max(worst, mat_dist(tgf.b_dst, tg.b_dst));
    ++done;
  }
  c.require(worst <= 1e-8, "chart composition residual " + fmt_residual(worst));
}

void criterion_3(Criterion& c) {
  Rng master(303);
  double worst = 0.0;
  int verdict_flips = 0;
  int done = 0;
  while (done < 200) {
    Rng rng = master.fork(static_cast<std::uint64_t>(done));
    const Index m = rng.uniform_int(3, 6);
    const Index n = rng.uniform_int(3, 6);
    const Index k = rng.uniform_int(1, 3);
    auto src = random_grpoint<Complex>(rng, m, k, tol);
    // half the instances invertible, half deliberately singular
    MorPoint<Complex> f;
    const bool make_iso = done % 2 == 0;
    if (make_iso) {
      f = random_iso_morpoint<Complex>(rng, src, n, tol);
    } else {
      Mat<Complex> coeff = random_matrix<Complex>(rng, k, k);
      coeff.row(0).setZero();  // drop rank
      f = mor_from_coeff(src, random_grpoint<Complex>(rng, n, k, tol), coeff);
    }
    GrChart<Complex> cx0, cy0, cx1, cy1;
    try {
      cx0 = nearby_chart(rng, f.src);
      cy0 = nearby_chart(rng, f.dst);
      cx1 = nearby_chart(rng, f.src);
      cy1 = nearby_chart(rng, f.dst);
    } catch (const SamplerExhausted&) {
      continue;
    }
    auto t0 = mor_chart(f, cx0, cy0, tol);
    auto t1 = mor_chart(f, cx1, cy1, tol);
    Mat<Complex> xb0 = cx0.basis_v + cx0.basis_vperp * t0.a_src;
    Mat<Complex> xb1 = cx1.basis_v + cx1.basis_vperp * t1.a_src;
    Mat<Complex> yb0 = cy0.basis_v + cy0.basis_vperp * t0.b_dst;
    Mat<Complex> yb1 = cy1.basis_v + cy1.basis_vperp * t1.b_dst;
    Mat<Complex> d = xb1.completeOrthogonalDecomposition().solve(xb0);
    Mat<Complex> cc = yb1.completeOrthogonalDecomposition().solve(yb0);
    Mat<Complex> predicted = cc * t0.t_box * d.partialPivLu().inverse();
    worst = std::max(worst, mat_dist(t1.t_box, predicted) / (1.0 + max_abs(predicted)));
    const bool iso0 = smallest_singular_value(t0.t_box) > tol.eps_rank;
    const bool iso1 = smallest_singular_value(t1.t_box) > tol.eps_rank;
    if (iso0 != iso1 || iso0 != make_iso || is_iso(f, tol) != make_iso) ++verdict_flips;
    ++done;
  }
  c.require(worst <= 1e-7, "re-charting residual " + fmt_residual(worst));
  c.require(verdict_flips == 0,
            "is_iso verdict changed under re-charting in " + std::to_string(verdict_flips) +
                " cases");
}

void criterion_4(Criterion& c) {
  for (Index n = 0; n <= 32; ++n) {
    c.require(is_permutation(theta_perm(n)), "theta not a permutation at n=" + std::to_string(n));
    c.require(is_permutation(kappa_perm(n)), "kappa not a permutation at n=" + std::to_string(n));
  }
  int mismatches = 0;
  for (Index n = 1; n <= 16; ++n) {
    const auto perm = kappa_perm(n);
    const auto walk = oracles::snake_walk(n);
    for (std::size_t pos = 0; pos < walk.size(); ++pos) {
      const auto [i, j] = walk[pos];
      if (perm[static_cast<std::size_t>((i - 1) * n + (j - 1))] != static_cast<Index>(pos))
        ++mismatches;
    }
  }
  c.require(mismatches == 0,
            std::to_string(mismatches) + " disagreements with the snake-walk enumeration");
}

void criterion_5(Criterion& c) {
  const std::size_t samples = 500;
  require_report(c, check_functor(oplus_vf_functor<Complex>(5, false, tol), samples, 501, tol),
                 1e-8);
  require_report(c, check_functor(otimes_vf_functor<Complex>(5, false, tol), samples, 502, tol),
                 1e-8);
  require_report(
      c, check_functor(oplus_vff_functor<Complex>(SampleCaps{6, 3}, false, tol), samples, 503, tol),
      1e-8);
  require_report(c,
                 check_functor(otimes_vff_functor<Complex>(SampleCaps{6, 3}, false, tol),
                               samples, 504, tol),
                 1e-8);
  auto strict = check_vf_strictness<Real>(6, samples, 505, tol);
  c.require(strict.passed() && strict.max_residual() == 0.0, "strictness not exact");
}

void criterion_6(Criterion& c) {
  auto rep = check_stabilization_squares<Complex>(SampleCaps{5, 3}, 500, 601, tol);
  c.require(rep.passed() && rep.max_residual() == 0.0,
            "stabilization squares not exact: residual " + fmt_residual(rep.max_residual()));
  auto rep_r = check_stabilization_squares<Real>(SampleCaps{5, 3}, 500, 602, tol);
  c.require(rep_r.passed() && rep_r.max_residual() == 0.0, "real stabilization squares not exact");
}

void criterion_7(Criterion& c) {
  const std::size_t samples = 500;
  auto run_case = [&](const auto& cs, std::uint64_t seed) {
    require_report(c, check_nat_trans(cs.f, cs.g, cs.phi, samples, seed, tol), 1e-8);
    auto iso = check_witness_iso(cs, samples, seed, tol);
    c.require(iso.passed(), cs.name + ": a component is not an isomorphism");
  };
  run_case(add_unit_vff_case<Complex>(SampleCaps{4, 2}, true, tol), 701);
  run_case(add_unit_vff_case<Complex>(SampleCaps{4, 2}, false, tol), 702);
  run_case(comm_vff_case<Complex>(SampleCaps{4, 2}, tol), 703);
  run_case(swap_vf_case<Complex>(4, tol), 704);
  run_case(distrib_left_vf_case<Complex>(3, tol), 705);
  run_case(distrib_right_vf_case<Complex>(3, tol), 706);
  run_case(compare_oplus_case<Complex>(4, tol), 707);
  run_case(compare_otimes_case<Complex>(3, tol), 708);
}

void criterion_8(Criterion& c) {
  auto g_rep = check_nerve(make_g_category<Real>(SampleCaps{5, 3}, tol), 4, 400, 801, tol);
  c.require(g_rep.passed() && g_rep.max_residual() == 0.0,
            "nerve of G residual " + fmt_residual(g_rep.max_residual()));
  require_report(c, check_nerve(make_vf_category<Complex>(5, false, tol), 4, 400, 802, tol),
                 1e-8);
  require_report(
      c, check_nerve(make_vff_category<Complex>(SampleCaps{6, 3}, false, tol), 4, 250, 803, tol),
      1e-8);
}

void criterion_9(Criterion& c) {
  // (a) the clean cases validate; seeded single-site corruption is
  // detected in at least 99% of 1000 mutated instances
  c.require(check_cocycle(make_circle_cocycle(1.0, 1.0), tol).passed(), "trivial circle fails");
  c.require(check_cocycle(make_circle_cocycle(1.0, -1.0), tol).passed(), "moebius circle fails");
  {
    Rng mrng(901);
    auto base_triple = make_triple_cocycle<Real>(random_invertible<Real>(mrng, 2),
                                                 random_invertible<Real>(mrng, 2), 4);
    c.require(check_cocycle(base_triple, tol).passed(), "triple cover fails");
    c.require(check_cocycle(make_clutching_cocycle(1), tol).passed(), "degree-1 sphere fails");
  }
  int detected = 0;
  const int mutated_trials = 1000;
  for (int t = 0; t < mutated_trials; ++t) {
    Rng rng(hash_combine(902, static_cast<std::uint64_t>(t)));
    CechCocycle<Real> cocycle = [&]() {
      switch (t % 3) {
        case 0:
          return make_circle_cocycle(1.0, rng.coin() ? -1.0 : 1.0);
        case 1: {
          auto base = make_circle_cocycle(1.0, 1.0);
          return apply_coboundary(base, random_coboundary<Real>(rng, base.base, 1), tol);
        }
        default:
          return make_triple_cocycle<Real>(random_invertible<Real>(rng, 2),
                                           random_invertible<Real>(rng, 2), 4);
      }
    }();
    const std::size_t o = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(cocycle.transitions.size()) - 1));
    const std::size_t s = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(cocycle.transitions[o].size()) - 1));
    cocycle.transitions[o][s].map_mat *= 2.0;
    if (!check_cocycle(cocycle, tol).passed()) ++detected;
  }
  c.require(detected >= 990, "mutation detection rate " + std::to_string(detected) + "/1000");

  // (b) Moebius and trivial are distinguished
  c.require(s1_orientation_class(make_circle_cocycle(1.0, 1.0), tol) == OrientationClass::trivial,
            "trivial misclassified");
  c.require(s1_orientation_class(make_circle_cocycle(1.0, -1.0), tol) == OrientationClass::moebius,
            "moebius misclassified");

  // (c) clutching degrees and tensor additivity, exact integers
  c.require(s2_clutching_degree(make_clutching_cocycle(0), tol) == 0, "degree 0 wrong");
  c.require(s2_clutching_degree(make_clutching_cocycle(1), tol) == 1, "degree 1 wrong");
  c.require(s2_clutching_degree(make_clutching_cocycle(2), tol) == 2, "degree 2 wrong");
  for (long da = -3; da <= 3; ++da)
    for (long db = -3; db <= 3; ++db) {
      auto ab = cocycle_tensor(make_clutching_cocycle(da, 2, 96),
                               make_clutching_cocycle(db, 2, 96));
      if (s2_clutching_degree(ab, tol) != da + db)
        c.require(false, "tensor additivity fails at (" + std::to_string(da) + "," +
                             std::to_string(db) + ")");
    }

  // (d) both invariants are coboundary-invariant, 100 random
  // coboundaries per case
  for (int t = 0; t < 100; ++t) {
    Rng rng(hash_combine(903, static_cast<std::uint64_t>(t)));
    const bool twist = rng.coin();
    auto circle = make_circle_cocycle(1.0, twist ? -1.0 : 1.0);
    auto twisted = apply_coboundary(circle, random_coboundary<Real>(rng, circle.base, 1), tol);
    if (s1_orientation_class(twisted, tol) !=
        (twist ? OrientationClass::moebius : OrientationClass::trivial)) {
      c.require(false, "orientation class not coboundary-invariant at trial " + std::to_string(t));
      break;
    }
  }
  for (int t = 0; t < 100; ++t) {
    Rng rng(hash_combine(904, static_cast<std::uint64_t>(t)));
    const long d = rng.uniform_int(-3, 3);
    auto sphere = make_clutching_cocycle(d);
    auto twisted = apply_coboundary(sphere, random_coboundary<Complex>(rng, sphere.base, 1), tol);
    if (s2_clutching_degree(twisted, tol) != d) {
      c.require(false, "clutching degree not coboundary-invariant at trial " + std::to_string(t));
      break;
    }
  }
}

void criterion_10(Criterion& c) {
  // 200 mixed pass/fail instances; the two formulations of naturality
  // must return the same verdict on every one. The corpus is
  // calibrated so a corruption is visible to sampling: fibers have
  // dimension >= 1 and the corrupting rescale keys off a fingerprint
  // that separates almost every pair of objects.
  int agreements = 0;
  int corrupted_failing = 0;
  int valid_passing = 0;
  int corrupted_total = 0;
  int valid_total = 0;
  const std::size_t samples = 150;

  auto run_instance = [&](auto cs, bool corrupt, std::uint64_t seed, auto fingerprint) {
    if (corrupt) {
      auto inner = cs.phi.component;
      cs.phi.component = [inner, fingerprint](const auto& x) {
        auto w = inner(x);
        if constexpr (requires { w.map_mat; })
          w.map_mat *= 1.0 + 0.25 * (fingerprint(x) + 1.0);
        else
          w.mat *= 1.0 + 0.25 * (fingerprint(x) + 1.0);
        return w;
      };
    }
    const bool direct = check_nat_trans(cs.f, cs.g, cs.phi, samples, seed, tol).passed();
    const bool interval =
        check_nat_trans_interval(cs.f, cs.g, cs.phi, samples, seed, tol).passed();
    if (direct == interval) ++agreements;
    if (corrupt) {
      ++corrupted_total;
      if (!direct) ++corrupted_failing;
    } else {
      ++valid_total;
      if (direct) ++valid_passing;
    }
  };

  // fingerprints that distinguish almost every object pair
  auto fp_gr_r = [](const GrPoint<Real>& x) {
    return double(x.sub_dim()) + std::abs(x.frame(0, 0));
  };
  auto fp_gr_c = [](const GrPoint<Complex>& x) {
    return double(x.sub_dim()) + std::abs(x.frame(0, 0));
  };
  const SampleCaps caps{4, 2, 1};

  for (int t = 0; t < 200; ++t) {
    const bool corrupt = t % 2 == 1;
    const std::uint64_t seed = hash_combine(1000, static_cast<std::uint64_t>(t));
    switch (t % 5) {
      case 0:
        run_instance(swap_vf_case<Real>(4, tol), corrupt, seed,
                     [](const std::pair<Index, Index>& x) { return double(x.first); });
        break;
      case 1:
        run_instance(comm_vff_case<Real>(caps, tol), corrupt, seed,
                     [fp_gr_r](const std::pair<GrPoint<Real>, GrPoint<Real>>& x) {
                       return fp_gr_r(x.first);
                     });
        break;
      case 2:
        run_instance(add_unit_vff_case<Complex>(caps, true, tol), corrupt, seed,
                     [fp_gr_c](const GrPoint<Complex>& x) { return fp_gr_c(x); });
        break;
      case 3:
        run_instance(compare_oplus_case<Complex>(4, tol), corrupt, seed,
                     [](const std::pair<Index, Index>& x) { return double(x.first); });
        break;
      default:
        run_instance(distrib_left_vf_case<Real>(3, tol), corrupt, seed,
                     [](const VfTripleObj<Real>& x) { return double(x.first); });
        break;
    }
  }
  c.require(agreements == 200,
            "formulations disagreed on " + std::to_string(200 - agreements) + " instances");
  c.require(corrupted_failing == corrupted_total,
            "only " + std::to_string(corrupted_failing) + "/" + std::to_string(corrupted_total) +
                " corrupted instances failed");
  c.require(valid_passing == valid_total,
            "only " + std::to_string(valid_passing) + "/" + std::to_string(valid_total) +
                " valid instances passed");
}

}  // namespace

int main() {
  std::printf("acceptance suite (eps_eq %.0e, eps_rank %.0e, eps_orth %.0e)\n", tol.eps_eq,
              tol.eps_rank, tol.eps_orth);

  criterion(1, "internal-category axioms for V_F, V_F^f and G (1000 samples/axiom, <= 1e-8)",
            60.0, criterion_1);
  criterion(2, "chart composition law (A_X, C_Z, [S][T]) on 500 composable pairs (<= 1e-8)",
            0.0, criterion_2);
  criterion(3, "chart transition covariance C[S]D on 200 re-chartings (<= 1e-7, is_iso stable)",
            0.0, criterion_3);
  criterion(4, "theta/kappa permutations (n <= 32) and snake-walk agreement (n <= 16), exact",
            0.0, criterion_4);
  criterion(5, "functor laws for oplus/otimes on V_F and V_F^f (500 samples, <= 1e-8; strict "
               "object arithmetic exact)",
            0.0, criterion_5);
  criterion(6, "stabilization-compatibility squares, exact on 500 samples", 0.0, criterion_6);
  criterion(7, "unit/swap/distributivity/comparison witnesses natural (<= 1e-8) and invertible",
            0.0, criterion_7);
  criterion(8, "nerve simplicial identities up to level 4 (<= 1e-8; exactly 0 for G)", 0.0,
            criterion_8);
  criterion(9, "cocycle suite: identity + mutation detection, Moebius/trivial, clutching "
               "degrees, coboundary invariance",
            120.0, criterion_9);
  criterion(10, "both naturality formulations agree verdict-for-verdict on 200 mixed instances",
            0.0, criterion_10);

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
