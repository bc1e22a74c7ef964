#pragma once

#include "grasscat/cocycle.hpp"
#include "grasscat/report.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace grasscat {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Cocycle file format, version 1. Matrices are row-major; complex
// entries are [re, im] pairs. See docs in the README for the schema.

inline constexpr int kCocycleFormatVersion = 1;

namespace io_detail {

template <typename Scalar>
Json scalar_to_json(const Scalar& s);

template <>
inline Json scalar_to_json<Real>(const Real& s) {
  return Json(s);
}

template <>
inline Json scalar_to_json<Complex>(const Complex& s) {
  return Json::array({s.real(), s.imag()});
}

template <typename Scalar>
Scalar scalar_from_json(const Json& j);

template <>
inline Real scalar_from_json<Real>(const Json& j) {
  if (!j.is_number()) throw ConfigError("real entries must be plain numbers");
  return j.get<double>();
}

template <>
inline Complex scalar_from_json<Complex>(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError("complex entries must be [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

inline const Json& require(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key))
    throw ConfigError("missing required field '" + key + "'");
  return j.at(key);
}

}  // namespace io_detail

template <typename Scalar>
Json matrix_to_json(const Mat<Scalar>& m) {
  Json data = Json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) data.push_back(io_detail::scalar_to_json<Scalar>(m(r, c)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

template <typename Scalar>
Mat<Scalar> matrix_from_json(const Json& j) {
  const Index rows = io_detail::require(j, "rows").get<Index>();
  const Index cols = io_detail::require(j, "cols").get<Index>();
  const Json& data = io_detail::require(j, "data");
  if (rows < 0 || cols < 0 || !data.is_array() ||
      static_cast<Index>(data.size()) != rows * cols)
    throw ConfigError("matrix data length does not match rows*cols");
  Mat<Scalar> m(rows, cols);
  Index i = 0;
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = io_detail::scalar_from_json<Scalar>(data[i++]);
  return m;
}

inline Json samples_to_json(const std::vector<SamplePt>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(Json(p));
  return out;
}

inline std::vector<SamplePt> samples_from_json(const Json& j) {
  if (!j.is_array()) throw ConfigError("samples must be an array of arrays of reals");
  std::vector<SamplePt> out;
  for (const auto& e : j) {
    if (!e.is_array()) throw ConfigError("each sample must be an array of reals");
    SamplePt p;
    for (const auto& v : e) {
      if (!v.is_number()) throw ConfigError("sample coordinates must be numbers");
      p.push_back(v.get<double>());
    }
    out.push_back(std::move(p));
  }
  return out;
}

template <typename Scalar>
constexpr const char* field_name() {
  if constexpr (std::is_same_v<Scalar, Real>)
    return "real";
  else
    return "complex";
}

template <typename Scalar>
Json cocycle_to_json(const CechCocycle<Scalar>& c) {
  Json base{{"topology", c.base.topology}, {"patches", c.base.patches}};
  Json overlaps = Json::array();
  for (const auto& d : c.base.overlaps)
    overlaps.push_back(Json{{"from", d.from},
                            {"to", d.to},
                            {"component", d.component},
                            {"samples", samples_to_json(d.samples)}});
  base["overlaps"] = std::move(overlaps);

  Json locals = Json::object();
  for (std::size_t p = 0; p < c.base.patches.size(); ++p) {
    Json frames = Json::array();
    for (const auto& v : c.locals[p].values) frames.push_back(matrix_to_json<Scalar>(v.frame));
    locals[c.base.patches[p]] =
        Json{{"samples", samples_to_json(c.locals[p].samples)}, {"frames", std::move(frames)}};
  }

  Json transitions = Json::array();
  for (std::size_t o = 0; o < c.base.overlaps.size(); ++o) {
    const auto& d = c.base.overlaps[o];
    Json mats = Json::array();
    for (const auto& t : c.transitions[o]) mats.push_back(matrix_to_json<Scalar>(t.map_mat));
    transitions.push_back(Json{{"from", d.from},
                               {"to", d.to},
                               {"component", d.component},
                               {"matrices", std::move(mats)}});
  }

  return Json{{"version", kCocycleFormatVersion},
              {"field", field_name<Scalar>()},
              {"rank", c.rank},
              {"base", std::move(base)},
              {"locals", std::move(locals)},
              {"transitions", std::move(transitions)}};
}

inline std::string cocycle_field(const Json& j) {
  const Json& v = io_detail::require(j, "version");
  if (!v.is_number_integer() || v.get<int>() != kCocycleFormatVersion)
    throw ConfigError("unsupported cocycle format version");
  const Json& f = io_detail::require(j, "field");
  const std::string name = f.get<std::string>();
  if (name != "real" && name != "complex")
    throw ConfigError("field must be \"real\" or \"complex\"");
  return name;
}

/// Shape-level parsing only; semantic validation is check_cocycle's
/// job so a well-formed file with broken transitions still loads.
template <typename Scalar>
CechCocycle<Scalar> cocycle_from_json(const Json& j) {
  if (cocycle_field(j) != field_name<Scalar>())
    throw ConfigError("cocycle field does not match the requested scalar type");
  CechCocycle<Scalar> c;
  c.rank = io_detail::require(j, "rank").get<Index>();
  if (c.rank < 0) throw ConfigError("rank must be nonnegative");

  const Json& base = io_detail::require(j, "base");
  c.base.topology = io_detail::require(base, "topology").get<std::string>();
  c.base.patches = io_detail::require(base, "patches").get<std::vector<std::string>>();
  for (const auto& d : io_detail::require(base, "overlaps")) {
    OverlapDecl decl;
    decl.from = io_detail::require(d, "from").get<std::string>();
    decl.to = io_detail::require(d, "to").get<std::string>();
    decl.component = d.contains("component") ? d.at("component").get<std::string>() : "";
    decl.samples = samples_from_json(io_detail::require(d, "samples"));
    c.base.overlaps.push_back(std::move(decl));
  }

  const Json& locals = io_detail::require(j, "locals");
  for (const auto& patch : c.base.patches) {
    if (!locals.contains(patch)) throw ConfigError("locals missing patch '" + patch + "'");
    const Json& entry = locals.at(patch);
    LocalTable<Scalar> table;
    table.samples = samples_from_json(io_detail::require(entry, "samples"));
    const Json& frames = io_detail::require(entry, "frames");
    if (!frames.is_array() || frames.size() != table.samples.size())
      throw ConfigError("locals of '" + patch + "' need one frame per sample");
    for (const auto& f : frames)
      table.values.push_back(GrPoint<Scalar>{matrix_from_json<Scalar>(f)});
    c.locals.push_back(std::move(table));
  }

  const Json& transitions = io_detail::require(j, "transitions");
  if (!transitions.is_array() || transitions.size() != c.base.overlaps.size())
    throw ConfigError("transitions must list every declared overlap once");
  c.transitions.resize(c.base.overlaps.size());
  for (const auto& entry : transitions) {
    const std::string from = io_detail::require(entry, "from").get<std::string>();
    const std::string to = io_detail::require(entry, "to").get<std::string>();
    const std::string component =
        entry.contains("component") ? entry.at("component").get<std::string>() : "";
    auto o = c.base.find_overlap(from, to, component);
    if (!o) throw ConfigError("transitions mention an undeclared overlap " + from + "->" + to);
    const auto& decl = c.base.overlaps[*o];
    const Json& mats = io_detail::require(entry, "matrices");
    if (!mats.is_array() || mats.size() != decl.samples.size())
      throw ConfigError("overlap " + from + "->" + to + " needs one matrix per sample");
    const std::size_t pa = c.base.patch_index(from);
    const std::size_t pb = c.base.patch_index(to);
    for (std::size_t s = 0; s < decl.samples.size(); ++s) {
      auto ia = c.locals[pa].find(decl.samples[s]);
      auto ib = c.locals[pb].find(decl.samples[s]);
      if (!ia || !ib)
        throw ConfigError("locals do not cover the overlap grid of " + from + "->" + to);
      Mat<Scalar> map = matrix_from_json<Scalar>(mats[s]);
      const auto& src = c.locals[pa].values[*ia];
      const auto& dst = c.locals[pb].values[*ib];
      if (map.rows() != dst.ambient_dim() || map.cols() != src.ambient_dim())
        throw ConfigError("transition matrix shape does not match the local frames");
      c.transitions[*o].push_back(MorPoint<Scalar>{src, dst, std::move(map)});
    }
  }
  return c;
}

inline Json report_to_json(const Report& rep) {
  Json items = Json::array();
  for (const auto& it : rep.items) {
    Json entry{{"axiom", it.axiom},
               {"samples", it.samples},
               {"max_residual", it.max_residual},
               {"pass", it.pass}};
    if (!it.pass) entry["witness"] = it.witness;
    items.push_back(std::move(entry));
  }
  return Json{{"suite", rep.suite},
              {"seed", rep.seed},
              {"tolerance", rep.tolerance},
              {"pass", rep.passed()},
              {"items", std::move(items)}};
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("JSON parse error: ") + e.what());
  }
}

}  // namespace grasscat
