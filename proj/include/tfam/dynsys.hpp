#pragma once

// C*-dynamical systems over c0(V) for a finite point set V.
//
// A *-endomorphism of c0(V) has the form f -> f∘T for a partial self-map T
// (f∘T vanishes where T is undefined). Direction i carries the map T_i, and
// α_i(δ_v) is the indicator of T_i^{-1}(v).

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tfam/direction.hpp"
#include "tfam/types.hpp"

namespace tfam {

class PartialMapSystem {
 public:
  using PartialMap = std::vector<std::optional<std::size_t>>;

  /// Validates sizes, targets and pointwise commutation T_i T_j = T_j T_i.
  static PartialMapSystem from_maps(std::vector<std::string> names, std::vector<PartialMap> maps) {
    const std::size_t n = names.size();
    if (n == 0) throw invalid_input("dynamical system needs at least one point");
    if (n > kMaxVertices) throw invalid_input("dynamical system has " + std::to_string(n) + " points; at most 64 are supported");
    if (maps.empty()) throw invalid_input("dynamical system rank must be at least 1");
    if (maps.size() > kMaxRank) throw invalid_input("dynamical system rank exceeds the supported maximum");
    std::set<std::string> seen;
    for (const auto& name : names)
      if (!seen.insert(name).second) throw invalid_input("duplicate point name \"" + name + "\"");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      if (maps[i].size() != n)
        throw invalid_input("map " + std::to_string(i + 1) + " has " + std::to_string(maps[i].size()) + " entries, expected " +
                            std::to_string(n));
      for (const auto& t : maps[i])
        if (t && *t >= n) throw invalid_input("map " + std::to_string(i + 1) + " sends a point outside the system");
    }
    auto show = [&](const std::optional<std::size_t>& p) { return p ? names[*p] : std::string("undefined"); };
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (std::size_t j = i + 1; j < maps.size(); ++j)
        for (std::size_t v = 0; v < n; ++v) {
          auto ij = compose(maps[i], maps[j], v);
          auto ji = compose(maps[j], maps[i], v);
          if (ij != ji)
            throw invalid_input("maps " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " do not commute at " + names[v] + ": T" + std::to_string(i + 1) + "T" +
                                std::to_string(j + 1) + " gives " + show(ij) + ", T" + std::to_string(j + 1) + "T" +
                                std::to_string(i + 1) + " gives " + show(ji));
        }
    PartialMapSystem s;
    s.names_ = std::move(names);
    s.maps_ = std::move(maps);
    s.preimages_.assign(s.maps_.size(), std::vector<VertexSet>(n));
    for (std::size_t i = 0; i < s.maps_.size(); ++i)
      for (std::size_t w = 0; w < n; ++w)
        if (s.maps_[i][w]) s.preimages_[i][*s.maps_[i][w]].insert(w);
    return s;
  }

  std::size_t rank() const { return maps_.size(); }
  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const PartialMap& map(std::size_t dir) const { return maps_[dir]; }

  std::optional<std::size_t> apply(std::size_t dir, std::size_t v) const {
    require_direction(*this, dir);
    if (v >= vertex_count()) throw invalid_input("point index " + std::to_string(v) + " out of range");
    return maps_[dir][v];
  }

  VertexSet preimage(std::size_t dir, std::size_t v) const {
    require_direction(*this, dir);
    if (v >= vertex_count()) throw invalid_input("point index " + std::to_string(v) + " out of range");
    return preimages_[dir][v];
  }

  /// α_i^{-1}(H) = {v | T_i^{-1}(v) ⊆ H}.
  VertexSet phi(std::size_t dir, VertexSet H) const {
    VertexSet out;
    const auto& pre = preimages_[dir];
    for (std::size_t v = 0; v < pre.size(); ++v)
      if (pre[v].subset_of(H)) out.insert(v);
    return out;
  }

  /// (outer ∘ inner)(v).
  static std::optional<std::size_t> compose(const PartialMap& outer, const PartialMap& inner, std::size_t v) {
    auto mid = inner[v];
    if (!mid) return std::nullopt;
    return outer[*mid];
  }

 private:
  PartialMapSystem() = default;

  std::vector<std::string> names_;
  std::vector<PartialMap> maps_;
  std::vector<std::vector<VertexSet>> preimages_;
};

static_assert(DirectionModel<PartialMapSystem>);

}  // namespace tfam
