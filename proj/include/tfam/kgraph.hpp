#pragma once

// Finite higher-rank graphs, stored as their coloured skeleton: k square
// matrices with entry M_i[v][w] = number of colour-i edges with range v and
// source w. Only supports matter for the ideal calculus.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tfam/direction.hpp"
#include "tfam/types.hpp"

namespace tfam {

class KGraph {
 public:
  using Matrix = std::vector<std::vector<std::uint64_t>>;

  /// Validates shapes, names and pairwise commutation of the matrices.
  static KGraph from_matrices(std::vector<std::string> names, std::vector<Matrix> adjacency) {
    const std::size_t n = names.size();
    if (n == 0) throw invalid_input("kgraph needs at least one vertex");
    if (n > kMaxVertices) throw invalid_input("kgraph has " + std::to_string(n) + " vertices; at most 64 are supported");
    if (adjacency.empty()) throw invalid_input("kgraph rank must be at least 1");
    if (adjacency.size() > kMaxRank) throw invalid_input("kgraph rank exceeds the supported maximum");
    std::set<std::string> seen;
    for (const auto& name : names)
      if (!seen.insert(name).second) throw invalid_input("duplicate vertex name \"" + name + "\"");
    for (std::size_t i = 0; i < adjacency.size(); ++i) {
      if (adjacency[i].size() != n)
        throw invalid_input("adjacency matrix " + std::to_string(i + 1) + " has " + std::to_string(adjacency[i].size()) +
                            " rows, expected " + std::to_string(n));
      for (const auto& row : adjacency[i])
        if (row.size() != n)
          throw invalid_input("adjacency matrix " + std::to_string(i + 1) + " is not " + std::to_string(n) + "x" +
                              std::to_string(n));
    }
    for (std::size_t i = 0; i < adjacency.size(); ++i)
      for (std::size_t j = i + 1; j < adjacency.size(); ++j) {
        auto ij = multiply(adjacency[i], adjacency[j]);
        auto ji = multiply(adjacency[j], adjacency[i]);
        for (std::size_t v = 0; v < n; ++v)
          for (std::size_t w = 0; w < n; ++w)
            if (ij[v][w] != ji[v][w])
              throw invalid_input("adjacency matrices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " do not commute at (" + names[v] + ", " + names[w] + "): M" + std::to_string(i + 1) +
                                  "M" + std::to_string(j + 1) + " counts " + std::to_string(ij[v][w]) + " paths, M" +
                                  std::to_string(j + 1) + "M" + std::to_string(i + 1) + " counts " +
                                  std::to_string(ji[v][w]));
      }
    KGraph g;
    g.names_ = std::move(names);
    g.adjacency_ = std::move(adjacency);
    g.successors_.assign(g.adjacency_.size(), std::vector<VertexSet>(n));
    for (std::size_t i = 0; i < g.adjacency_.size(); ++i)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w)
          if (g.adjacency_[i][v][w] > 0) g.successors_[i][v].insert(w);
    return g;
  }

  std::size_t rank() const { return adjacency_.size(); }
  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const Matrix& adjacency(std::size_t dir) const { return adjacency_[dir]; }

  /// Commuting skeletons of rank ≥ 3 are not checked for an underlying k-graph.
  bool skeleton_level() const { return rank() >= 3; }

  /// s(vΛ^{e_i}): sources of the colour-i edges with range v.
  VertexSet successors(std::size_t v, std::size_t dir) const {
    require_direction(*this, dir);
    if (v >= vertex_count()) throw invalid_input("vertex index " + std::to_string(v) + " out of range");
    return successors_[dir][v];
  }

  /// Phi_i(H) = {v | s(vΛ^{e_i}) ⊆ H}.
  VertexSet phi(std::size_t dir, VertexSet H) const {
    VertexSet out;
    const auto& succ = successors_[dir];
    for (std::size_t v = 0; v < succ.size(); ++v)
      if (succ[v].subset_of(H)) out.insert(v);
    return out;
  }

  /// s(vΛ^n) read off the support of row v of Π M_i^{n_i}. Independent of phi.
  VertexSet degree_sources(std::size_t v, const MultiDegree& n) const {
    if (n.rank() != rank()) throw invalid_input("degree rank does not match the graph");
    const std::size_t N = vertex_count();
    std::vector<bool> row(N, false);
    row[v] = true;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t step = 0; step < n[i]; ++step) {
        std::vector<bool> next(N, false);
        for (std::size_t a = 0; a < N; ++a)
          if (row[a])
            for (std::size_t b = 0; b < N; ++b)
              if (adjacency_[i][a][b] > 0) next[b] = true;
        row = std::move(next);
      }
    VertexSet out;
    for (std::size_t b = 0; b < N; ++b)
      if (row[b]) out.insert(b);
    return out;
  }

  static Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix out(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (a[i][l] != 0)
          for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][l] * b[l][j];
    return out;
  }

 private:
  KGraph() = default;

  std::vector<std::string> names_;
  std::vector<Matrix> adjacency_;
  std::vector<std::vector<VertexSet>> successors_;
};

static_assert(DirectionModel<KGraph>);

}  // namespace tfam
