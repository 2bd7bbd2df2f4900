#pragma once

// Type-erased model handle for the file-driven front ends, plus the shipped
// fixtures.

#include <string>
#include <variant>
#include <vector>

#include "tfam/dynsys.hpp"
#include "tfam/kgraph.hpp"

namespace tfam {

using AnyModel = std::variant<KGraph, PartialMapSystem>;

inline const std::vector<std::string>& vertex_names(const AnyModel& m) {
  return std::visit([](const auto& x) -> const std::vector<std::string>& { return x.names(); }, m);
}
inline std::size_t rank_of(const AnyModel& m) {
  return std::visit([](const auto& x) { return x.rank(); }, m);
}
inline std::size_t vertex_count_of(const AnyModel& m) {
  return std::visit([](const auto& x) { return x.vertex_count(); }, m);
}
inline const char* kind_of(const AnyModel& m) { return std::holds_alternative<KGraph>(m) ? "kgraph" : "dynsys"; }

namespace fixtures {

/// A = B ⊕ B with α(b, b') = (0, b) in both directions; points v1, v2 are the
/// two summands (B = C). T: v2 -> v1, undefined on v1, so ker α = {v2}.
inline PartialMapSystem ds_a() {
  PartialMapSystem::PartialMap t = {std::nullopt, 0};
  return PartialMapSystem::from_maps({"v1", "v2"}, {t, t});
}

/// The unitisation A = B ⊕ C (B = C) with α_(m,n)(b, λ) = (0, λ) when n ≥ 1,
/// written in the diagonal coordinates (x, y) = (b + λ, λ). In these
/// coordinates α_2(x, y) = (y, y): T_2 sends p -> q, q -> q and T_1 = id.
/// The summand B ⊕ {0} is the point p.
inline PartialMapSystem ds_b() {
  PartialMapSystem::PartialMap id = {0, 1};
  PartialMapSystem::PartialMap collapse = {1, 1};
  return PartialMapSystem::from_maps({"p", "q"}, {id, collapse});
}

/// One vertex with one loop of each of two colours.
inline KGraph k1() { return KGraph::from_matrices({"v"}, {{{1}}, {{1}}}); }

/// Vertices u, w with M_1 = M_2 = [[0,1],[0,1]].
inline KGraph k2() {
  KGraph::Matrix m = {{0, 1}, {0, 1}};
  return KGraph::from_matrices({"u", "w"}, {m, m});
}

/// K2 read as a 1-graph.
inline KGraph u_to_w() { return KGraph::from_matrices({"u", "w"}, {{{0, 1}, {0, 1}}}); }

/// One vertex, one loop.
inline KGraph single_loop() { return KGraph::from_matrices({"v"}, {{{1}}}); }

}  // namespace fixtures

}  // namespace tfam
