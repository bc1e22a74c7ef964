// Command-line front end: property suites over the shipped categories,
// cocycle validation/gluing/classification, and seeded instance
// generation. Exit codes: 0 all checks passed, 1 a check or cocycle
// failed, 2 configuration or input error.

#include "grasscat/grasscat.hpp"
#include "grasscat/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace grasscat;

namespace {

struct CliConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 500;
  std::size_t level = 4;
  Index m_max = 6;
  Index k_max = 3;
  double eps_eq = 1e-8;
  double eps_rank = 1e-8;
  double eps_orth = 1e-10;
  std::string field = "real";
  std::string target;
  std::string mutate;
  std::string format = "text";
  std::string output;

  Tolerance tol() const {
    Tolerance t{eps_orth, eps_rank, eps_eq};
    t.validate();
    return t;
  }
  SampleCaps caps() const { return SampleCaps{m_max, k_max}; }
};

void add_common_flags(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--seed", cfg.seed, "sampler seed")->envname("GRASSCAT_SEED");
  cmd->add_option("--samples", cfg.samples, "samples per axiom")->check(CLI::PositiveNumber);
  cmd->add_option("--eps-eq", cfg.eps_eq, "matrix equality bound");
  cmd->add_option("--eps-rank", cfg.eps_rank, "singular value threshold");
  cmd->add_option("--eps-orth", cfg.eps_orth, "orthonormality bound");
  cmd->add_option("--m-max", cfg.m_max, "ambient dimension cap")->check(CLI::PositiveNumber);
  cmd->add_option("--k-max", cfg.k_max, "fiber dimension cap")->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--output", cfg.output, "write the report/file here instead of stdout");
}

void write_out(const CliConfig& cfg, const std::string& payload) {
  if (cfg.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + cfg.output);
  out << payload;
}

int emit_reports(const CliConfig& cfg, const std::vector<Report>& reports) {
  bool ok = true;
  std::string payload;
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) {
      arr.push_back(report_to_json(r));
      ok = ok && r.passed();
    }
    payload = arr.dump(2) + "\n";
  } else {
    for (const auto& r : reports) {
      payload += render_text(r);
      ok = ok && r.passed();
    }
  }
  write_out(cfg, payload);
  return ok ? 0 : 1;
}

void require_no_mutation(const CliConfig& cfg) {
  if (!cfg.mutate.empty())
    throw ConfigError("--mutate " + cfg.mutate + " is not supported for this target");
}

// ---------------------------------------------------------------------------
// check suites

template <typename Scalar>
std::vector<Report> run_category(const CliConfig& cfg) {
  const Tolerance tol = cfg.tol();
  if (cfg.target == "g") {
    require_no_mutation(cfg);
    return {check_category_axioms(make_g_category<Scalar>(cfg.caps(), tol), cfg.samples,
                                  cfg.seed, tol)};
  }
  if (cfg.target == "vf" || cfg.target == "iso-vf") {
    auto cat = make_vf_category<Scalar>(std::min<Index>(cfg.m_max, 5), cfg.target == "iso-vf", tol);
    if (cfg.mutate == "compose")
      cat = mutate_vf_compose(cat);
    else if (cfg.mutate == "identity")
      cat = mutate_vf_identity(cat);
    else
      require_no_mutation(cfg);
    return {check_category_axioms(cat, cfg.samples, cfg.seed, tol)};
  }
  if (cfg.target == "vff" || cfg.target == "iso-vff") {
    auto cat = make_vff_category<Scalar>(cfg.caps(), cfg.target == "iso-vff", tol);
    if (cfg.mutate == "compose")
      cat = mutate_vff_compose(cat);
    else if (cfg.mutate == "identity")
      cat = mutate_identity<GrPoint<Scalar>, Scalar>(cat);
    else
      require_no_mutation(cfg);
    return {check_category_axioms(cat, cfg.samples, cfg.seed, tol)};
  }
  throw ConfigError("unknown category target: " + cfg.target +
                    " (expected g, vf, iso-vf, vff, iso-vff)");
}

template <typename Scalar>
std::vector<Report> run_functor(const CliConfig& cfg) {
  const Tolerance tol = cfg.tol();
  const Index n_max = std::min<Index>(cfg.m_max, 5);
  auto maybe_conjugate = [&](auto fun) {
    if (cfg.mutate == "conjugate") {
      if constexpr (std::is_same_v<Scalar, Complex>)
        return mutate_functor_conjugate(fun);
      else
        throw ConfigError("--mutate conjugate needs --field complex");
    } else {
      require_no_mutation(cfg);
    }
    return fun;
  };
  if (cfg.target == "embed-vf") {
    auto fun = embed_vf_functor<Scalar>(n_max, false, tol);
    if (cfg.mutate == "compose") {
      auto original = fun.dom.compose;
      fun.dom.name += " [mutated compose]";
      fun.dom.compose = [original](const VfMor<Scalar>& f, const VfMor<Scalar>& g) {
        auto h = original(f, g);
        h.mat *= Scalar(2);
        return h;
      };
      return {check_functor(fun, cfg.samples, cfg.seed, tol)};
    }
    // conjugation is invisible here: the image frames are real and
    // entrywise conjugation is multiplicative
    require_no_mutation(cfg);
    return {check_functor(fun, cfg.samples, cfg.seed, tol)};
  }
  if (cfg.target == "embed-g")
    return {check_functor(maybe_conjugate(embed_g_functor<Scalar>(cfg.caps(), tol)),
                          cfg.samples, cfg.seed, tol)};
  if (cfg.target == "oplus-vff")
    return {check_functor(maybe_conjugate(oplus_vff_functor<Scalar>(cfg.caps(), false, tol)),
                          cfg.samples, cfg.seed, tol)};
  if (cfg.target == "otimes-vff")
    return {check_functor(maybe_conjugate(otimes_vff_functor<Scalar>(cfg.caps(), false, tol)),
                          cfg.samples, cfg.seed, tol)};
  if (cfg.target == "oplus-vf") {
    require_no_mutation(cfg);
    return {check_functor(oplus_vf_functor<Scalar>(n_max, false, tol), cfg.samples, cfg.seed,
                          tol)};
  }
  if (cfg.target == "otimes-vf") {
    require_no_mutation(cfg);
    return {check_functor(otimes_vf_functor<Scalar>(n_max, false, tol), cfg.samples, cfg.seed,
                          tol)};
  }
  throw ConfigError("unknown functor target: " + cfg.target);
}

// object-dependent rescale; a global factor would cancel in the
// naturality square, so the corruption keys off the object
template <typename M>
M scale_by_fingerprint(M w, double fp) {
  if constexpr (requires { w.map_mat; })
    w.map_mat *= 1.0 + 0.25 * (fp + 1.0);
  else
    w.mat *= 1.0 + 0.25 * (fp + 1.0);
  return w;
}

template <typename Scalar, typename Case, typename ScaleMor>
std::vector<Report> nat_trans_reports(const CliConfig& cfg, Case c, ScaleMor scale) {
  const Tolerance tol = cfg.tol();
  if (cfg.mutate == "component") {
    auto inner = c.phi.component;
    c.name += " [mutated component]";
    c.phi.component = [inner, scale](const auto& x) { return scale(inner(x), x); };
  } else {
    require_no_mutation(cfg);
  }
  auto direct = check_nat_trans(c.f, c.g, c.phi, cfg.samples, cfg.seed, tol);
  auto interval = check_nat_trans_interval(c.f, c.g, c.phi, cfg.samples, cfg.seed, tol);
  auto iso = check_witness_iso(c, cfg.samples, cfg.seed, tol);
  return {direct, interval, iso};
}

template <typename Scalar>
std::vector<Report> run_nat_trans(const CliConfig& cfg) {
  const Tolerance tol = cfg.tol();
  const Index n_small = std::min<Index>(cfg.m_max, 4);
  if (cfg.target == "swap-vf")
    return nat_trans_reports<Scalar>(cfg, swap_vf_case<Scalar>(n_small, tol),
                                     [](VfMor<Scalar> w, const std::pair<Index, Index>& x) {
                                       return scale_by_fingerprint(w, double(x.first));
                                     });
  if (cfg.target == "distrib-left-vf")
    return nat_trans_reports<Scalar>(
        cfg, distrib_left_vf_case<Scalar>(std::min<Index>(n_small, 3), tol),
        [](VfMor<Scalar> w, const VfTripleObj<Scalar>& x) {
          return scale_by_fingerprint(w, double(x.first));
        });
  if (cfg.target == "distrib-right-vf")
    return nat_trans_reports<Scalar>(
        cfg, distrib_right_vf_case<Scalar>(std::min<Index>(n_small, 3), tol),
        [](VfMor<Scalar> w, const VfTripleObj<Scalar>& x) {
          return scale_by_fingerprint(w, double(x.first));
        });
  if (cfg.target == "add-unit-vff" || cfg.target == "add-unit-vff-right")
    return nat_trans_reports<Scalar>(
        cfg, add_unit_vff_case<Scalar>(cfg.caps(), cfg.target == "add-unit-vff", tol),
        [](MorPoint<Scalar> w, const GrPoint<Scalar>& x) {
          return scale_by_fingerprint(w, double(x.sub_dim()));
        });
  if (cfg.target == "comm-vff")
    return nat_trans_reports<Scalar>(
        cfg, comm_vff_case<Scalar>(cfg.caps(), tol),
        [](MorPoint<Scalar> w, const std::pair<GrPoint<Scalar>, GrPoint<Scalar>>& x) {
          return scale_by_fingerprint(w, double(x.first.sub_dim()));
        });
  if (cfg.target == "compare-oplus")
    return nat_trans_reports<Scalar>(cfg, compare_oplus_case<Scalar>(n_small, tol),
                                     [](MorPoint<Scalar> w, const std::pair<Index, Index>& x) {
                                       return scale_by_fingerprint(w, double(x.first));
                                     });
  if (cfg.target == "compare-otimes")
    return nat_trans_reports<Scalar>(cfg,
                                     compare_otimes_case<Scalar>(std::min<Index>(n_small, 3), tol),
                                     [](MorPoint<Scalar> w, const std::pair<Index, Index>& x) {
                                       return scale_by_fingerprint(w, double(x.first));
                                     });
  throw ConfigError("unknown nat-trans target: " + cfg.target);
}

template <typename Scalar>
std::vector<Report> run_nerve(const CliConfig& cfg) {
  const Tolerance tol = cfg.tol();
  if (cfg.target == "g") {
    require_no_mutation(cfg);
    return {check_nerve(make_g_category<Scalar>(cfg.caps(), tol), cfg.level, cfg.samples,
                        cfg.seed, tol)};
  }
  if (cfg.target == "vf") {
    auto cat = make_vf_category<Scalar>(std::min<Index>(cfg.m_max, 5), false, tol);
    if (cfg.mutate == "compose")
      cat = mutate_vf_compose(cat);
    else
      require_no_mutation(cfg);
    return {check_nerve(cat, cfg.level, cfg.samples, cfg.seed, tol)};
  }
  if (cfg.target == "vff") {
    auto cat = make_vff_category<Scalar>(cfg.caps(), false, tol);
    if (cfg.mutate == "compose")
      cat = mutate_vff_compose(cat);
    else
      require_no_mutation(cfg);
    return {check_nerve(cat, cfg.level, cfg.samples, cfg.seed, tol)};
  }
  throw ConfigError("unknown nerve target: " + cfg.target + " (expected g, vf, vff)");
}

template <typename Scalar>
std::vector<Report> run_semiring(const CliConfig& cfg) {
  const Tolerance tol = cfg.tol();
  std::vector<Report> reports;
  if (cfg.target == "vf") {
    const Index n_max = std::min<Index>(cfg.m_max, 5);
    auto oplus = oplus_vf_functor<Scalar>(n_max, false, tol);
    auto otimes = otimes_vf_functor<Scalar>(n_max, false, tol);
    if (cfg.mutate == "compose") {
      auto wrap = [](auto fun) {
        auto original = fun.dom.compose;
        fun.dom.name += " [mutated compose]";
        fun.dom.compose = [original](const auto& f, const auto& g) {
          auto h = original(f, g);
          h.first.mat *= Scalar(2);
          return h;
        };
        return fun;
      };
      oplus = wrap(oplus);
      otimes = wrap(otimes);
    } else {
      require_no_mutation(cfg);
    }
    reports.push_back(check_functor(oplus, cfg.samples, cfg.seed, tol));
    reports.push_back(check_functor(otimes, cfg.samples, cfg.seed, tol));
    reports.push_back(check_vf_strictness<Scalar>(n_max, cfg.samples, cfg.seed, tol));
    auto swap = swap_vf_case<Scalar>(std::min<Index>(cfg.m_max, 4), tol);
    reports.push_back(check_nat_trans(swap.f, swap.g, swap.phi, cfg.samples, cfg.seed, tol));
    auto dl = distrib_left_vf_case<Scalar>(std::min<Index>(cfg.m_max, 3), tol);
    reports.push_back(check_nat_trans(dl.f, dl.g, dl.phi, cfg.samples, cfg.seed, tol));
    auto dr = distrib_right_vf_case<Scalar>(std::min<Index>(cfg.m_max, 3), tol);
    reports.push_back(check_nat_trans(dr.f, dr.g, dr.phi, cfg.samples, cfg.seed, tol));
    return reports;
  }
  if (cfg.target == "vff") {
    auto oplus = oplus_vff_functor<Scalar>(cfg.caps(), false, tol);
    auto otimes = otimes_vff_functor<Scalar>(cfg.caps(), false, tol);
    if (cfg.mutate == "compose") {
      auto wrap = [](auto fun) {
        auto original = fun.dom.compose;
        fun.dom.name += " [mutated compose]";
        fun.dom.compose = [original](const auto& f, const auto& g) {
          auto h = original(f, g);
          h.first.map_mat *= Scalar(2);
          return h;
        };
        return fun;
      };
      oplus = wrap(oplus);
      otimes = wrap(otimes);
    } else {
      require_no_mutation(cfg);
    }
    reports.push_back(check_functor(oplus, cfg.samples, cfg.seed, tol));
    reports.push_back(check_functor(otimes, cfg.samples, cfg.seed, tol));
    auto unit = add_unit_vff_case<Scalar>(cfg.caps(), true, tol);
    reports.push_back(check_nat_trans(unit.f, unit.g, unit.phi, cfg.samples, cfg.seed, tol));
    auto comm = comm_vff_case<Scalar>(cfg.caps(), tol);
    reports.push_back(check_nat_trans(comm.f, comm.g, comm.phi, cfg.samples, cfg.seed, tol));
    auto co = compare_oplus_case<Scalar>(std::min<Index>(cfg.m_max, 4), tol);
    reports.push_back(check_nat_trans(co.f, co.g, co.phi, cfg.samples, cfg.seed, tol));
    auto ct = compare_otimes_case<Scalar>(std::min<Index>(cfg.m_max, 3), tol);
    reports.push_back(check_nat_trans(ct.f, ct.g, ct.phi, cfg.samples, cfg.seed, tol));
    return reports;
  }
  throw ConfigError("unknown semiring target: " + cfg.target + " (expected vf, vff)");
}

template <typename Scalar>
std::vector<Report> run_stabilization(const CliConfig& cfg) {
  const Tolerance tol = cfg.tol();
  bool mutate_pad = false;
  if (cfg.mutate == "pad")
    mutate_pad = true;
  else
    require_no_mutation(cfg);
  return {check_stabilization_squares<Scalar>(cfg.caps(), cfg.samples, cfg.seed, tol,
                                              mutate_pad)};
}

template <typename Scalar>
std::vector<Report> run_check(const std::string& suite, const CliConfig& cfg) {
  if (suite == "category") return run_category<Scalar>(cfg);
  if (suite == "functor") return run_functor<Scalar>(cfg);
  if (suite == "nat-trans") return run_nat_trans<Scalar>(cfg);
  if (suite == "nerve") return run_nerve<Scalar>(cfg);
  if (suite == "semiring") return run_semiring<Scalar>(cfg);
  if (suite == "stabilization") return run_stabilization<Scalar>(cfg);
  throw ConfigError("unknown suite: " + suite);
}

// ---------------------------------------------------------------------------
// bundle actions

template <typename Scalar>
int bundle_action(const std::string& action, const Json& j, const CliConfig& cfg) {
  const Tolerance tol = cfg.tol();
  auto cocycle = cocycle_from_json<Scalar>(j);
  if (action == "validate") {
    auto rep = check_cocycle(cocycle, tol);
    return emit_reports(cfg, {rep});
  }
  if (action == "glue") {
    auto bundle = glue(cocycle, tol);
    std::size_t idents = 0;
    for (const auto& table : bundle.identifications) idents += table.size();
    if (cfg.format == "json") {
      Json out{{"topology", bundle.base.topology},
               {"rank", bundle.rank},
               {"patches", bundle.base.patches},
               {"identifications", idents},
               {"pass", true}};
      write_out(cfg, out.dump(2) + "\n");
    } else {
      std::string text = "glued bundle over " + bundle.base.topology + ": rank " +
                         std::to_string(bundle.rank) + ", " +
                         std::to_string(bundle.base.patches.size()) + " patches, " +
                         std::to_string(idents) + " sampled identifications\nPASS\n";
      write_out(cfg, text);
    }
    return 0;
  }
  if (action == "classify") {
    Json out = Json::object();
    std::string text;
    if (cocycle.base.topology == "interval_cover_circle") {
      if constexpr (std::is_same_v<Scalar, Real>) {
        auto cls = s1_orientation_class(cocycle, tol);
        out["orientation"] = to_string(cls);
        text = std::string("orientation: ") + to_string(cls) + "\n";
      } else {
        throw ConfigError("the orientation class is defined for real cocycles");
      }
    } else if (cocycle.base.topology == "two_disk_sphere") {
      if constexpr (std::is_same_v<Scalar, Complex>) {
        const long degree = s2_clutching_degree(cocycle, tol);
        out["degree"] = degree;
        text = "degree: " + std::to_string(degree) + "\n";
      } else {
        throw ConfigError("the clutching degree is defined for complex cocycles");
      }
    } else {
      throw ConfigError("no classifier for topology " + cocycle.base.topology);
    }
    write_out(cfg, cfg.format == "json" ? out.dump(2) + "\n" : text);
    return 0;
  }
  throw ConfigError("unknown bundle action: " + action);
}

// ---------------------------------------------------------------------------
// generators

template <typename Scalar>
Json generate_grpoint(Rng& rng, Index m, Index k, const Tolerance& tol) {
  auto p = random_grpoint<Scalar>(rng, m, k, tol);
  return Json{{"version", 1},
              {"kind", "grpoint"},
              {"field", field_name<Scalar>()},
              {"ambient", m},
              {"dim", k},
              {"frame", matrix_to_json<Scalar>(p.frame)}};
}

template <typename Scalar>
Json generate_morpoint(Rng& rng, Index m, Index k, Index n, Index l, const Tolerance& tol) {
  auto src = random_grpoint<Scalar>(rng, m, k, tol);
  auto f = random_morpoint<Scalar>(rng, src, n, l, tol);
  return Json{
      {"version", 1},
      {"kind", "morpoint"},
      {"field", field_name<Scalar>()},
      {"src", Json{{"ambient", m}, {"dim", k}, {"frame", matrix_to_json<Scalar>(f.src.frame)}}},
      {"dst", Json{{"ambient", n}, {"dim", l}, {"frame", matrix_to_json<Scalar>(f.dst.frame)}}},
      {"map", matrix_to_json<Scalar>(f.map_mat)}};
}

struct GenerateConfig {
  std::string base = "s1";
  Index rank = 1;
  long degree = 1;
  bool moebius = false;
  bool twist = false;
  std::size_t grid = 8;
  Index m = 5;
  Index k = 2;
  Index dst_ambient = 5;
  Index dst_dim = 2;
};

Json generate_cocycle(Rng& rng, const GenerateConfig& gen, const std::string& field,
                      const Tolerance& tol) {
  if (gen.base == "s1") {
    if (field != "real") throw ConfigError("circle cocycles are generated over the real field");
    auto c = make_circle_cocycle(1.0, gen.moebius ? -1.0 : 1.0, 2, gen.grid);
    if (gen.twist) c = apply_coboundary(c, random_coboundary<Real>(rng, c.base, c.rank), tol);
    return cocycle_to_json(c);
  }
  if (gen.base == "s2") {
    if (field != "complex")
      throw ConfigError("sphere cocycles are generated over the complex field");
    auto c = make_clutching_cocycle(gen.degree, 2, std::max<std::size_t>(gen.grid, 64));
    if (gen.twist) c = apply_coboundary(c, random_coboundary<Complex>(rng, c.base, c.rank), tol);
    return cocycle_to_json(c);
  }
  if (gen.base == "triple") {
    const Index ambient = std::max<Index>(gen.rank + 1, 3);
    if (field == "real") {
      auto c = make_triple_cocycle<Real>(random_invertible<Real>(rng, gen.rank),
                                         random_invertible<Real>(rng, gen.rank), ambient,
                                         gen.grid);
      if (gen.twist) c = apply_coboundary(c, random_coboundary<Real>(rng, c.base, c.rank), tol);
      return cocycle_to_json(c);
    }
    auto c = make_triple_cocycle<Complex>(random_invertible<Complex>(rng, gen.rank),
                                          random_invertible<Complex>(rng, gen.rank), ambient,
                                          gen.grid);
    if (gen.twist) c = apply_coboundary(c, random_coboundary<Complex>(rng, c.base, c.rank), tol);
    return cocycle_to_json(c);
  }
  throw ConfigError("unknown base: " + gen.base + " (expected s1, s2, triple)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite truncations of the Grassmannian categories of vector spaces"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string suite, action, input, kind;
  GenerateConfig gen;

  auto* check = app.add_subcommand("check", "run a property suite");
  check
      ->add_option("suite", suite,
                   "category | functor | nat-trans | nerve | semiring | stabilization")
      ->required();
  add_common_flags(check, cfg);
  check->add_option("--target", cfg.target, "which instance to check")->required();
  check->add_option("--level", cfg.level, "maximum nerve level")->check(CLI::PositiveNumber);
  check->add_option("--field", cfg.field, "real or complex")
      ->check(CLI::IsMember({"real", "complex"}));
  check->add_option("--mutate", cfg.mutate,
                    "seeded corruption site: compose | identity | conjugate | component | pad");

  auto* bundle = app.add_subcommand("bundle", "validate, glue or classify a cocycle file");
  bundle->add_option("action", action, "validate | glue | classify")->required();
  bundle->add_option("input", input, "cocycle JSON file")->required();
  add_common_flags(bundle, cfg);

  auto* generate = app.add_subcommand("generate", "write a seeded random instance");
  generate->add_option("kind", kind, "grpoint | morpoint | cocycle")->required();
  add_common_flags(generate, cfg);
  generate->add_option("--field", cfg.field, "real or complex")
      ->check(CLI::IsMember({"real", "complex"}));
  generate->add_option("--base", gen.base, "cocycle base: s1 | s2 | triple");
  generate->add_option("--rank", gen.rank, "fiber rank")->check(CLI::PositiveNumber);
  generate->add_option("--degree", gen.degree, "clutching degree for s2");
  generate->add_flag("--moebius", gen.moebius, "use the orientation-reversing circle cocycle");
  generate->add_flag("--twist", gen.twist, "apply a random coboundary");
  generate->add_option("--grid", gen.grid, "samples per overlap component")
      ->check(CLI::PositiveNumber);
  generate->add_option("--m", gen.m, "source ambient dimension");
  generate->add_option("--k", gen.k, "source fiber dimension");
  generate->add_option("--n", gen.dst_ambient, "target ambient dimension");
  generate->add_option("--l", gen.dst_dim, "target fiber dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      auto reports = cfg.field == "complex" ? run_check<Complex>(suite, cfg)
                                            : run_check<Real>(suite, cfg);
      return emit_reports(cfg, reports);
    }
    if (bundle->parsed()) {
      Json j = load_json_file(input);
      return cocycle_field(j) == "complex" ? bundle_action<Complex>(action, j, cfg)
                                           : bundle_action<Real>(action, j, cfg);
    }
    if (generate->parsed()) {
      Rng rng(cfg.seed);
      const Tolerance tol = cfg.tol();
      Json out;
      if (kind == "grpoint") {
        out = cfg.field == "complex" ? generate_grpoint<Complex>(rng, gen.m, gen.k, tol)
                                     : generate_grpoint<Real>(rng, gen.m, gen.k, tol);
      } else if (kind == "morpoint") {
        out = cfg.field == "complex"
                  ? generate_morpoint<Complex>(rng, gen.m, gen.k, gen.dst_ambient, gen.dst_dim,
                                               tol)
                  : generate_morpoint<Real>(rng, gen.m, gen.k, gen.dst_ambient, gen.dst_dim, tol);
      } else if (kind == "cocycle") {
        if (gen.base == "s2" && !generate->get_option("--field")->count()) cfg.field = "complex";
        out = generate_cocycle(rng, gen, cfg.field, tol);
      } else {
        throw ConfigError("unknown generate kind: " + kind);
      }
      write_out(cfg, out.dump(2) + "\n");
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
