#pragma once

// The lattice of enumerated families under pointwise inclusion: Hasse
// diagram, meet/join lookups and DOT / JSON export.

#include <algorithm>
#include <map>
#include <set>
#include <optional>
#include <unordered_map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tfam/families.hpp"
#include "tfam/io.hpp"

namespace tfam {

struct LatticeNode {
  std::string id;
  IdealFamily family;
  std::size_t height = 0;
};

struct LatticeGraph {
  std::size_t rank = 0;
  std::vector<std::string> vertex_names;
  std::vector<LatticeNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges;  // (lower, upper), node indices
  std::size_t bottom = 0;
  std::size_t top = 0;
};

inline std::string family_id(const IdealFamily& f, const std::vector<std::string>& names) {
  return hex64(fnv1a(family_to_json(f, names).dump()));
}

namespace detail {

/// Families flattened into fixed-width bit rows so inclusion and meet are
/// word operations.
class PackedFamilies {
 public:
  explicit PackedFamilies(const std::vector<IdealFamily>& fams) {
    if (fams.empty()) return;
    slots_ = fams.front().size();
    std::size_t width = 0;
    for (const auto& f : fams)
      for (auto s : f.raw()) width = std::max<std::size_t>(width, 64 - std::countl_zero(s.bits()));
    width_ = std::max<std::size_t>(width, 1);
    words_ = (slots_ * width_ + 63) / 64;
    bits_.assign(fams.size() * words_, 0);
    for (std::size_t i = 0; i < fams.size(); ++i) {
      std::uint64_t* row = &bits_[i * words_];
      for (std::size_t b = 0; b < slots_; ++b) {
        std::uint64_t v = fams[i].raw()[b].bits();
        std::size_t at = b * width_;
        row[at / 64] |= v << (at % 64);
        if (at % 64 + width_ > 64) row[at / 64 + 1] |= v >> (64 - at % 64);
      }
      index_[hash(row)].push_back(i);
    }
  }

  std::size_t words() const { return words_; }
  const std::uint64_t* row(std::size_t i) const { return &bits_[i * words_]; }

  bool subset(std::size_t a, std::size_t b) const {
    const auto *x = row(a), *y = row(b);
    for (std::size_t w = 0; w < words_; ++w)
      if (x[w] & ~y[w]) return false;
    return true;
  }
  bool equal(std::size_t a, std::size_t b) const { return std::equal(row(a), row(a) + words_, row(b)); }

  /// Index of the stored row equal to `bits`, if any.
  std::optional<std::size_t> find(const std::uint64_t* bits) const {
    auto it = index_.find(hash(bits));
    if (it == index_.end()) return std::nullopt;
    for (auto i : it->second)
      if (std::equal(bits, bits + words_, row(i))) return i;
    return std::nullopt;
  }

 private:
  std::uint64_t hash(const std::uint64_t* r) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t w = 0; w < words_; ++w) h = (h ^ r[w]) * 0x100000001b3ull, h ^= h >> 29;
    return h;
  }

  std::size_t slots_ = 0, width_ = 1, words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index_;
};

inline std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const std::vector<IdealFamily>& fams,
                                                                     const PackedFamilies& packed) {
  std::vector<std::size_t> by_height(fams.size());
  for (std::size_t i = 0; i < fams.size(); ++i) by_height[i] = i;
  std::vector<std::size_t> height(fams.size());
  for (std::size_t i = 0; i < fams.size(); ++i) height[i] = fams[i].height();
  std::stable_sort(by_height.begin(), by_height.end(), [&](std::size_t a, std::size_t b) { return height[a] < height[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> minimal;
  for (std::size_t a = 0; a < fams.size(); ++a) {
    minimal.clear();
    for (auto b : by_height) {
      if (height[b] <= height[a] || !packed.subset(a, b)) continue;
      // Anything strictly between a and b has smaller height, so it was seen first.
      bool covered = std::any_of(minimal.begin(), minimal.end(), [&](std::size_t c) { return packed.subset(c, b); });
      if (!covered) minimal.push_back(b);
    }
    for (auto b : minimal) edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace detail

/// Covers of ⊆: for each node, the minimal elements of its strict upper set.
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const std::vector<IdealFamily>& fams) {
  return detail::hasse_covers(fams, detail::PackedFamilies(fams));
}

template <DirectionModel M>
LatticeGraph build_lattice(const M& model, const EnumerationResult& result, const std::vector<std::string>& names) {
  if (result.families.empty()) throw invalid_input("cannot build a lattice from an empty enumeration");
  LatticeGraph g;
  g.rank = model.rank();
  g.vertex_names = names;
  std::set<std::string> ids;
  std::vector<IdealFamily> fams;
  for (const auto& f : result.families) {
    require_valid(model, f);
    if (f.rank() != model.rank()) throw invalid_input("family rank does not match the model");
    LatticeNode node{family_id(f, names), f, f.height()};
    if (!ids.insert(node.id).second) throw consistency_error("lattice node id collision or duplicate family " + node.id);
    fams.push_back(f);
    g.nodes.push_back(std::move(node));
  }

  const detail::PackedFamilies packed(fams);
  std::vector<std::uint64_t> scratch(packed.words());
  for (std::size_t a = 0; a < fams.size(); ++a)
    for (std::size_t b = a + 1; b < fams.size(); ++b) {
      for (std::size_t w = 0; w < packed.words(); ++w) scratch[w] = packed.row(a)[w] & packed.row(b)[w];
      if (!packed.find(scratch.data()))
        throw consistency_error("pointwise meet of nodes " + g.nodes[a].id + " and " + g.nodes[b].id +
                                " is not an enumerated family");
    }

  g.cover_edges = detail::hasse_covers(fams, packed);

  // A least (greatest) element exists iff the pointwise meet (join) of all nodes is a node.
  IdealFamily lo = fams.front(), hi = fams.front();
  for (const auto& f : fams) lo = pointwise_meet(lo, f), hi = pointwise_join(hi, f);
  bool found_bottom = false, found_top = false;
  for (std::size_t c = 0; c < fams.size(); ++c) {
    if (!found_bottom && fams[c] == lo) g.bottom = c, found_bottom = true;
    if (!found_top && fams[c] == hi) g.top = c, found_top = true;
  }
  if (!found_bottom || !found_top) throw consistency_error("enumerated families have no least or no greatest element");
  return g;
}

/// Index of the least node containing both a and b.
inline std::size_t lattice_join(const LatticeGraph& g, std::size_t a, std::size_t b) {
  std::vector<std::size_t> upper;
  for (std::size_t c = 0; c < g.nodes.size(); ++c)
    if (g.nodes[a].family.subset_of(g.nodes[c].family) && g.nodes[b].family.subset_of(g.nodes[c].family)) upper.push_back(c);
  for (auto c : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](std::size_t o) { return g.nodes[c].family.subset_of(g.nodes[o].family); }))
      return c;
  throw consistency_error("nodes " + g.nodes[a].id + " and " + g.nodes[b].id + " have no least upper bound");
}

/// Compact label: nonempty entries as "F:{v,...}", "∅" for the empty key.
inline std::string family_label(const IdealFamily& f, const std::vector<std::string>& names) {
  std::string out;
  for (auto F : canonical_subsets(f.rank())) {
    if (f[F].empty()) continue;
    if (!out.empty()) out += ' ';
    out += F.empty() ? std::string("∅") : F.key();
    out += ":{";
    bool first = true;
    for (auto v : f[F].members()) {
      if (!first) out += ',';
      out += names[v];
      first = false;
    }
    out += '}';
  }
  return out.empty() ? "all-empty" : out;
}

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}
}  // namespace detail

/// Graphviz digraph, edges lower -> upper, nodes grouped in ranks by height.
inline std::string export_dot(const LatticeGraph& g) {
  std::ostringstream os;
  os << "digraph lattice {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& n : g.nodes)
    os << "  " << detail::dot_quote(n.id) << " [label=" << detail::dot_quote(family_label(n.family, g.vertex_names))
       << "];\n";
  std::map<std::size_t, std::vector<std::size_t>> levels;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) levels[g.nodes[i].height].push_back(i);
  for (const auto& [h, members] : levels) {
    if (members.size() < 2) continue;
    os << "  { rank=same;";
    for (auto i : members) os << ' ' << detail::dot_quote(g.nodes[i].id) << ';';
    os << " }\n";
  }
  for (const auto& [lo, hi] : g.cover_edges)
    os << "  " << detail::dot_quote(g.nodes[lo].id) << " -> " << detail::dot_quote(g.nodes[hi].id) << ";\n";
  os << "}\n";
  return os.str();
}

inline Json lattice_to_json(const LatticeGraph& g) {
  Json nodes = Json::array();
  for (const auto& n : g.nodes)
    nodes.push_back(Json{{"id", n.id}, {"height", n.height}, {"sets", family_to_json(n.family, g.vertex_names)["sets"]}});
  Json edges = Json::array();
  for (const auto& [lo, hi] : g.cover_edges) edges.push_back(Json::array({g.nodes[lo].id, g.nodes[hi].id}));
  return Json{{"rank", g.rank},
              {"vertices", g.vertex_names},
              {"nodes", std::move(nodes)},
              {"cover_edges", std::move(edges)},
              {"bottom", g.nodes[g.bottom].id},
              {"top", g.nodes[g.top].id}};
}

inline std::string export_json(const LatticeGraph& g) { return lattice_to_json(g).dump(2) + "\n"; }

}  // namespace tfam
