#pragma once

// JSON reading and writing for models, families, check reports and
// enumeration results. Vertex names are used on every external surface;
// indices stay internal.

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tfam/families.hpp"
#include "tfam/model.hpp"

namespace tfam {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& require_field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw invalid_input(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

inline std::vector<std::string> string_list(const Json& arr, const char* what) {
  if (!arr.is_array()) throw invalid_input(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : arr) {
    if (!e.is_string()) throw invalid_input(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline std::size_t declared_rank(const Json& doc) {
  const auto& r = require_field(doc, "rank");
  if (!r.is_number_integer() || r.get<std::int64_t>() < 1) throw invalid_input("\"rank\" must be a positive integer");
  return r.get<std::size_t>();
}

inline std::map<std::string, std::size_t> index_names(const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx.emplace(names[i], i);
  return idx;
}

}  // namespace detail

inline KGraph kgraph_from_json(const Json& doc) {
  const auto k = detail::declared_rank(doc);
  auto names = detail::string_list(detail::require_field(doc, "vertices"), "\"vertices\"");
  const auto& adj = detail::require_field(doc, "adjacency");
  if (!adj.is_array() || adj.size() != k)
    throw invalid_input("\"adjacency\" must hold exactly rank = " + std::to_string(k) + " matrices");
  std::vector<KGraph::Matrix> mats;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& m = adj[i];
    if (!m.is_array()) throw invalid_input("adjacency matrix " + std::to_string(i + 1) + " must be an array of rows");
    KGraph::Matrix mat;
    for (const auto& row : m) {
      if (!row.is_array()) throw invalid_input("adjacency matrix " + std::to_string(i + 1) + " must be an array of rows");
      std::vector<std::uint64_t> r;
      for (const auto& e : row) {
        if (!e.is_number_integer()) throw invalid_input("adjacency entries must be integers");
        if (e.get<std::int64_t>() < 0)
          throw invalid_input("negative adjacency entry " + std::to_string(e.get<std::int64_t>()) + " in matrix " +
                              std::to_string(i + 1));
        r.push_back(e.get<std::uint64_t>());
      }
      mat.push_back(std::move(r));
    }
    mats.push_back(std::move(mat));
  }
  return KGraph::from_matrices(std::move(names), std::move(mats));
}

inline PartialMapSystem dynsys_from_json(const Json& doc) {
  const auto d = detail::declared_rank(doc);
  auto names = detail::string_list(detail::require_field(doc, "points"), "\"points\"");
  auto index = detail::index_names(names);
  const auto& maps = detail::require_field(doc, "maps");
  if (!maps.is_array() || maps.size() != d)
    throw invalid_input("\"maps\" must hold exactly rank = " + std::to_string(d) + " maps");
  std::vector<PartialMapSystem::PartialMap> out;
  for (std::size_t i = 0; i < d; ++i) {
    const auto& m = maps[i];
    if (!m.is_object()) throw invalid_input("map " + std::to_string(i + 1) + " must be an object");
    PartialMapSystem::PartialMap t(names.size());
    for (const auto& [from, to] : m.items()) {
      auto f = index.find(from);
      if (f == index.end()) throw invalid_input("map " + std::to_string(i + 1) + " mentions unknown point \"" + from + "\"");
      if (to.is_null()) continue;
      if (!to.is_string()) throw invalid_input("map " + std::to_string(i + 1) + " values must be point names or null");
      auto g = index.find(to.get<std::string>());
      if (g == index.end())
        throw invalid_input("map " + std::to_string(i + 1) + " sends to unknown point \"" + to.get<std::string>() + "\"");
      t[f->second] = g->second;
    }
    out.push_back(std::move(t));
  }
  return PartialMapSystem::from_maps(std::move(names), std::move(out));
}

inline AnyModel model_from_json(const Json& doc) {
  const auto& kind = detail::require_field(doc, "kind");
  if (kind == "kgraph") return kgraph_from_json(doc);
  if (kind == "dynsys") return dynsys_from_json(doc);
  throw invalid_input("\"kind\" must be \"kgraph\" or \"dynsys\"");
}

inline Json model_to_json(const KGraph& g) {
  Json adj = Json::array();
  for (std::size_t i = 0; i < g.rank(); ++i) adj.push_back(g.adjacency(i));
  return Json{{"kind", "kgraph"}, {"rank", g.rank()}, {"vertices", g.names()}, {"adjacency", adj}};
}

inline Json model_to_json(const PartialMapSystem& s) {
  Json maps = Json::array();
  for (std::size_t i = 0; i < s.rank(); ++i) {
    Json m = Json::object();
    for (std::size_t v = 0; v < s.vertex_count(); ++v) {
      auto t = s.map(i)[v];
      m[s.names()[v]] = t ? Json(s.names()[*t]) : Json(nullptr);
    }
    maps.push_back(std::move(m));
  }
  return Json{{"kind", "dynsys"}, {"rank", s.rank()}, {"points", s.names()}, {"maps", maps}};
}

inline Json model_to_json(const AnyModel& m) {
  return std::visit([](const auto& x) { return model_to_json(x); }, m);
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw invalid_input("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

inline AnyModel load_model_file(const std::string& path) { return model_from_json(read_json_file(path)); }

/// 64-bit FNV-1a, used for model fingerprints and lattice node ids.
inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << v;
  return os.str();
}

inline std::string fingerprint(const AnyModel& m) { return hex64(fnv1a(model_to_json(m).dump())); }

inline Json vertex_set_to_json(VertexSet s, const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (auto v : s.members()) arr.push_back(names.at(v));
  return arr;
}

inline VertexSet vertex_set_from_json(const Json& arr, const std::vector<std::string>& names) {
  if (!arr.is_array()) throw invalid_input("a vertex set must be an array of names");
  auto index = detail::index_names(names);
  VertexSet s;
  for (const auto& e : arr) {
    if (!e.is_string()) throw invalid_input("vertex names must be strings");
    auto it = index.find(e.get<std::string>());
    if (it == index.end()) throw invalid_input("unknown vertex \"" + e.get<std::string>() + "\"");
    if (s.contains(it->second)) throw invalid_input("vertex \"" + it->first + "\" listed twice");
    s.insert(it->second);
  }
  return s;
}

/// {"rank": k, "sets": {"": [...], "1": [...], "1,2": [...], ...}} with keys in canonical order.
inline Json family_to_json(const IdealFamily& f, const std::vector<std::string>& names) {
  Json sets = Json::object();
  for (auto F : canonical_subsets(f.rank())) sets[F.key()] = vertex_set_to_json(f[F], names);
  return Json{{"rank", f.rank()}, {"sets", sets}};
}

inline IdealFamily family_from_json(const Json& doc, const std::vector<std::string>& names, std::size_t model_rank) {
  const auto k = detail::declared_rank(doc);
  if (k != model_rank)
    throw invalid_input("family has rank " + std::to_string(k) + " but the model has rank " + std::to_string(model_rank));
  const auto& sets = detail::require_field(doc, "sets");
  if (!sets.is_object()) throw invalid_input("\"sets\" must be an object");
  IdealFamily f(k);
  std::vector<bool> seen(f.size(), false);
  for (const auto& [key, value] : sets.items()) {
    auto F = SubsetMask::parse_key(key, k);
    if (F.key() != key || seen[F.bits()]) throw invalid_input("family key \"" + key + "\" is not canonical");
    seen[F.bits()] = true;
    f[F] = vertex_set_from_json(value, names);
  }
  for (auto F : canonical_subsets(k))
    if (!seen[F.bits()]) throw invalid_input("family is missing the key \"" + F.key() + "\"");
  return f;
}

inline Json report_to_json(const CheckReport& r, const std::vector<std::string>& names) {
  Json out{{"verdict", r.verdict}};
  out["violated_condition"] = r.verdict ? Json(nullptr) : Json(to_string(r.violated));
  if (r.verdict) {
    out["witness"] = nullptr;
  } else {
    Json w = Json::object();
    if (r.witness.F) w["F"] = r.witness.F->key();
    if (r.witness.upper) w["upper"] = r.witness.upper->key();
    if (r.witness.dir) w["i"] = *r.witness.dir + 1;
    w["vertices"] = vertex_set_to_json(r.witness.vertices, names);
    out["witness"] = std::move(w);
  }
  Json skipped = Json::array();
  for (auto c : r.not_evaluated) skipped.push_back(to_string(c));
  out["not_evaluated"] = std::move(skipped);
  return out;
}

inline Json enumeration_to_json(const EnumerationResult& r, const std::vector<std::string>& names) {
  Json fams = Json::array();
  for (const auto& f : r.families) fams.push_back(family_to_json(f, names));
  return Json{{"mode", to_string(r.mode)}, {"count", r.count()}, {"families", std::move(fams)}};
}

}  // namespace tfam
