#pragma once

// Verification harness: seeded model generators, corpora, the T-family /
// NT-tuple equivalence sweep, the rank-one Katsura-pair comparison and the
// proposition suite. Every sweep returns a list of discrepancies; an empty
// list means every claim held on every model.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tfam/families.hpp"
#include "tfam/io.hpp"
#include "tfam/model.hpp"

namespace tfam {

struct CorpusSpec {
  std::vector<std::string> kinds = {"kgraph", "dynsys"};
  std::size_t min_rank = 1;
  std::size_t max_rank = 3;
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 5;
  std::uint64_t max_mult = 2;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  bool exhaustive = false;
  /// Exhaustive corpora larger than this many raw model tuples are refused.
  std::uint64_t model_ceiling = 1'000'000;
  /// Families are swept exhaustively when n * 2^k is at most this.
  std::uint64_t candidate_bits_ceiling = 24;
  /// Random monotone candidates drawn per model above the ceiling.
  std::size_t sampled_candidates = 4000;
};

inline CorpusSpec corpus_from_json(const Json& doc) {
  if (!doc.is_object()) throw invalid_input("corpus config must be a JSON object");
  CorpusSpec c;
  auto uint_field = [&](const char* key, auto& slot) {
    if (!doc.contains(key)) return;
    const auto& v = doc.at(key);
    if (!v.is_number_integer() || v.template get<std::int64_t>() < 0)
      throw invalid_input(std::string("corpus field \"") + key + "\" must be a nonnegative integer");
    slot = v.template get<std::remove_reference_t<decltype(slot)>>();
  };
  if (doc.contains("kinds")) c.kinds = detail::string_list(doc.at("kinds"), "\"kinds\"");
  uint_field("min_rank", c.min_rank);
  uint_field("max_rank", c.max_rank);
  uint_field("min_vertices", c.min_vertices);
  uint_field("max_vertices", c.max_vertices);
  uint_field("max_mult", c.max_mult);
  uint_field("seed", c.seed);
  uint_field("samples", c.samples);
  uint_field("model_ceiling", c.model_ceiling);
  uint_field("candidate_bits_ceiling", c.candidate_bits_ceiling);
  uint_field("sampled_candidates", c.sampled_candidates);
  if (doc.contains("exhaustive")) {
    if (!doc.at("exhaustive").is_boolean()) throw invalid_input("corpus field \"exhaustive\" must be a boolean");
    c.exhaustive = doc.at("exhaustive").get<bool>();
  }
  if (c.kinds.empty()) throw invalid_input("corpus needs at least one kind");
  for (const auto& k : c.kinds)
    if (k != "kgraph" && k != "dynsys") throw invalid_input("unknown corpus kind \"" + k + "\"");
  if (c.min_rank < 1 || c.min_rank > c.max_rank || c.max_rank > 4) throw invalid_input("corpus rank bounds must satisfy 1 ≤ min ≤ max ≤ 4");
  if (c.min_vertices < 1 || c.min_vertices > c.max_vertices || c.max_vertices > 12)
    throw invalid_input("corpus vertex bounds must satisfy 1 ≤ min ≤ max ≤ 12");
  if (c.max_mult < 1) throw invalid_input("corpus max_mult must be positive");
  return c;
}

struct CorpusModel {
  AnyModel model;
  std::string origin;
  std::uint64_t seed = 0;
};

struct DiscrepancyReport {
  std::string fingerprint;
  std::string claim;
  std::string origin;
  std::uint64_t seed = 0;
  Json model;
  std::optional<IdealFamily> family;
  std::optional<VertexSet> set;
  std::optional<SubsetMask> F;
  std::string detail;
};

inline Json report_to_json(const DiscrepancyReport& r, const std::vector<std::string>& names) {
  Json out{{"fingerprint", r.fingerprint}, {"claim", r.claim}, {"origin", r.origin}, {"seed", r.seed}};
  out["family"] = r.family ? family_to_json(*r.family, names)["sets"] : Json(nullptr);
  out["set"] = r.set ? vertex_set_to_json(*r.set, names) : Json(nullptr);
  out["F"] = r.F ? Json(r.F->key()) : Json(nullptr);
  out["detail"] = r.detail;
  out["model"] = r.model;
  return out;
}

// ---------------------------------------------------------------------------
// Random and exhaustive model generation

enum class Strategy { powers, rejection };

namespace detail {

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  return names;
}

inline KGraph::Matrix random_matrix(std::mt19937_64& rng, std::size_t n, std::uint64_t max_mult) {
  KGraph::Matrix m(n, std::vector<std::uint64_t>(n, 0));
  for (auto& row : m)
    for (auto& e : row) e = below(rng, 2) == 0 ? 0 : 1 + below(rng, max_mult);
  return m;
}

inline PartialMapSystem::PartialMap random_partial_map(std::mt19937_64& rng, std::size_t n) {
  PartialMapSystem::PartialMap t(n);
  for (auto& e : t) {
    auto r = below(rng, n + 1);
    if (r < n) e = r;
  }
  return t;
}

inline bool commute(const KGraph::Matrix& a, const KGraph::Matrix& b) {
  return KGraph::multiply(a, b) == KGraph::multiply(b, a);
}

inline bool commute(const PartialMapSystem::PartialMap& a, const PartialMapSystem::PartialMap& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (PartialMapSystem::compose(a, b, v) != PartialMapSystem::compose(b, a, v)) return false;
  return true;
}

}  // namespace detail

/// Deterministic generator.
///
/// kgraph, powers: draw M and set M_i = p_i(M) for random nonzero polynomials
/// of degree ≤ 2 with 0/1 coefficients. dynsys, powers: draw a partial map f
/// and set T_i = f^{a_i}, a_i ∈ {0..3}. Both commute by construction.
/// Rejection mode draws independent generators until they commute, at most
/// `retries` attempts.
inline AnyModel random_model(const std::string& kind, std::size_t rank, std::size_t vertices, std::uint64_t seed,
                             std::uint64_t max_mult = 2, Strategy strategy = Strategy::powers,
                             std::uint64_t retries = 10'000) {
  if (rank < 1 || rank > kMaxRank) throw invalid_input("random model rank must be in 1..16");
  if (vertices < 1 || vertices > kMaxVertices) throw invalid_input("random model needs 1..64 vertices");
  if (max_mult < 1) throw invalid_input("max_mult must be positive");
  std::mt19937_64 rng(seed);
  auto names = detail::default_names(vertices);

  if (kind == "kgraph") {
    if (strategy == Strategy::rejection) {
      for (std::uint64_t attempt = 0; attempt < retries; ++attempt) {
        std::vector<KGraph::Matrix> mats;
        for (std::size_t i = 0; i < rank; ++i) mats.push_back(detail::random_matrix(rng, vertices, max_mult));
        bool ok = true;
        for (std::size_t i = 0; i < rank && ok; ++i)
          for (std::size_t j = i + 1; j < rank && ok; ++j) ok = detail::commute(mats[i], mats[j]);
        if (ok) return KGraph::from_matrices(names, std::move(mats));
      }
      throw budget_exceeded("no commuting kgraph found within " + std::to_string(retries) + " attempts", retries, 0);
    }
    auto base = detail::random_matrix(rng, vertices, max_mult);
    auto square = KGraph::multiply(base, base);
    std::vector<KGraph::Matrix> mats;
    for (std::size_t i = 0; i < rank; ++i) {
      std::uint64_t coeffs = 0;
      while (coeffs == 0) coeffs = detail::below(rng, 8);
      KGraph::Matrix m(vertices, std::vector<std::uint64_t>(vertices, 0));
      for (std::size_t a = 0; a < vertices; ++a)
        for (std::size_t b = 0; b < vertices; ++b)
          m[a][b] = ((coeffs & 1) && a == b ? 1 : 0) + ((coeffs & 2) ? base[a][b] : 0) + ((coeffs & 4) ? square[a][b] : 0);
      mats.push_back(std::move(m));
    }
    return KGraph::from_matrices(std::move(names), std::move(mats));
  }

  if (kind == "dynsys") {
    if (strategy == Strategy::rejection) {
      for (std::uint64_t attempt = 0; attempt < retries; ++attempt) {
        std::vector<PartialMapSystem::PartialMap> maps;
        for (std::size_t i = 0; i < rank; ++i) maps.push_back(detail::random_partial_map(rng, vertices));
        bool ok = true;
        for (std::size_t i = 0; i < rank && ok; ++i)
          for (std::size_t j = i + 1; j < rank && ok; ++j) ok = detail::commute(maps[i], maps[j]);
        if (ok) return PartialMapSystem::from_maps(names, std::move(maps));
      }
      throw budget_exceeded("no commuting partial maps found within " + std::to_string(retries) + " attempts", retries, 0);
    }
    auto f = detail::random_partial_map(rng, vertices);
    std::vector<PartialMapSystem::PartialMap> maps;
    for (std::size_t i = 0; i < rank; ++i) {
      auto power = detail::below(rng, 4);
      PartialMapSystem::PartialMap t(vertices);
      for (std::size_t v = 0; v < vertices; ++v) {
        std::optional<std::size_t> x = v;
        for (std::uint64_t s = 0; s < power && x; ++s) x = f[*x];
        t[v] = x;
      }
      maps.push_back(std::move(t));
    }
    return PartialMapSystem::from_maps(std::move(names), std::move(maps));
  }
  throw invalid_input("unknown model kind \"" + kind + "\"");
}

/// Every kgraph skeleton with the given shape and entries ≤ max_mult, i.e.
/// every ordered tuple of pairwise commuting matrices.
inline std::vector<KGraph> all_kgraphs(std::size_t rank, std::size_t vertices, std::uint64_t max_mult,
                                       std::uint64_t ceiling) {
  const std::size_t cells = vertices * vertices;
  double singles = 1;
  for (std::size_t c = 0; c < cells; ++c) singles *= static_cast<double>(max_mult + 1);
  double tuples = 1;
  for (std::size_t i = 0; i < rank; ++i) tuples *= singles;
  if (tuples > static_cast<double>(ceiling))
    throw budget_exceeded("exhaustive kgraph corpus would need " + std::to_string(static_cast<std::uint64_t>(tuples)) +
                              " raw tuples, over the ceiling",
                          0, 0);
  std::vector<KGraph::Matrix> mats;
  std::vector<std::uint64_t> digits(cells, 0);
  for (;;) {
    KGraph::Matrix m(vertices, std::vector<std::uint64_t>(vertices));
    for (std::size_t c = 0; c < cells; ++c) m[c / vertices][c % vertices] = digits[c];
    mats.push_back(std::move(m));
    std::size_t c = 0;
    while (c < cells && digits[c] == max_mult) digits[c++] = 0;
    if (c == cells) break;
    ++digits[c];
  }
  std::vector<KGraph> out;
  std::vector<std::size_t> pick;
  auto names = detail::default_names(vertices);
  std::function<void()> extend = [&] {
    if (pick.size() == rank) {
      std::vector<KGraph::Matrix> chosen;
      for (auto p : pick) chosen.push_back(mats[p]);
      out.push_back(KGraph::from_matrices(names, std::move(chosen)));
      return;
    }
    for (std::size_t m = 0; m < mats.size(); ++m) {
      bool ok = std::all_of(pick.begin(), pick.end(), [&](std::size_t p) { return detail::commute(mats[p], mats[m]); });
      if (!ok) continue;
      pick.push_back(m);
      extend();
      pick.pop_back();
    }
  };
  extend();
  return out;
}

/// Every ordered tuple of pairwise commuting partial self-maps.
inline std::vector<PartialMapSystem> all_dynsys(std::size_t rank, std::size_t points, std::uint64_t ceiling) {
  double singles = 1;
  for (std::size_t c = 0; c < points; ++c) singles *= static_cast<double>(points + 1);
  double tuples = 1;
  for (std::size_t i = 0; i < rank; ++i) tuples *= singles;
  if (tuples > static_cast<double>(ceiling))
    throw budget_exceeded("exhaustive dynsys corpus would need " + std::to_string(static_cast<std::uint64_t>(tuples)) +
                              " raw tuples, over the ceiling",
                          0, 0);
  std::vector<PartialMapSystem::PartialMap> maps;
  std::vector<std::size_t> digits(points, 0);  // value == points means undefined
  for (;;) {
    PartialMapSystem::PartialMap t(points);
    for (std::size_t v = 0; v < points; ++v)
      if (digits[v] < points) t[v] = digits[v];
    maps.push_back(std::move(t));
    std::size_t c = 0;
    while (c < points && digits[c] == points) digits[c++] = 0;
    if (c == points) break;
    ++digits[c];
  }
  std::vector<PartialMapSystem> out;
  std::vector<std::size_t> pick;
  auto names = detail::default_names(points);
  std::function<void()> extend = [&] {
    if (pick.size() == rank) {
      std::vector<PartialMapSystem::PartialMap> chosen;
      for (auto p : pick) chosen.push_back(maps[p]);
      out.push_back(PartialMapSystem::from_maps(names, std::move(chosen)));
      return;
    }
    for (std::size_t m = 0; m < maps.size(); ++m) {
      bool ok = std::all_of(pick.begin(), pick.end(), [&](std::size_t p) { return detail::commute(maps[p], maps[m]); });
      if (!ok) continue;
      pick.push_back(m);
      extend();
      pick.pop_back();
    }
  };
  extend();
  return out;
}

inline std::vector<CorpusModel> build_corpus(const CorpusSpec& spec) {
  std::vector<CorpusModel> out;
  if (spec.exhaustive) {
    for (const auto& kind : spec.kinds)
      for (std::size_t k = spec.min_rank; k <= spec.max_rank; ++k)
        for (std::size_t n = spec.min_vertices; n <= spec.max_vertices; ++n) {
          std::string origin = "exhaustive " + kind + " rank=" + std::to_string(k) + " n=" + std::to_string(n);
          if (kind == "kgraph") {
            for (auto& g : all_kgraphs(k, n, spec.max_mult, spec.model_ceiling)) out.push_back({std::move(g), origin, 0});
          } else {
            for (auto& s : all_dynsys(k, n, spec.model_ceiling)) out.push_back({std::move(s), origin, 0});
          }
        }
    return out;
  }
  std::mt19937_64 rng(spec.seed);
  for (std::size_t s = 0; s < spec.samples; ++s) {
    const auto& kind = spec.kinds[detail::below(rng, spec.kinds.size())];
    std::size_t k = spec.min_rank + detail::below(rng, spec.max_rank - spec.min_rank + 1);
    std::size_t n = spec.min_vertices + detail::below(rng, spec.max_vertices - spec.min_vertices + 1);
    std::uint64_t seed = rng();
    std::string origin = "random " + kind + " rank=" + std::to_string(k) + " n=" + std::to_string(n) +
                         " max_mult=" + std::to_string(spec.max_mult);
    out.push_back({random_model(kind, k, n, seed, spec.max_mult), origin, seed});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

/// The two verdicts compared by the equivalence sweep; replaceable so the
/// harness can be tested against a deliberately broken checker.
template <class M>
struct Verdicts {
  std::function<bool(const M&, const IdealFamily&)> t_family = [](const M& m, const IdealFamily& f) {
    return static_cast<bool>(is_t_family(m, f));
  };
  std::function<bool(const M&, const IdealFamily&)> nt_tuple = [](const M& m, const IdealFamily& f) {
    return static_cast<bool>(is_nt_tuple(m, f));
  };
};

struct SweepOptions {
  std::uint64_t candidate_bits_ceiling = 24;
  std::size_t sampled_candidates = 4000;
  std::uint64_t seed = 1;
  std::size_t max_reports = 16;
  EnumerationOptions enumeration{};
};

inline SweepOptions sweep_options(const CorpusSpec& spec) {
  SweepOptions o;
  o.candidate_bits_ceiling = spec.candidate_bits_ceiling;
  o.sampled_candidates = spec.sampled_candidates;
  o.seed = spec.seed;
  return o;
}

/// Candidate families for models too large to sweep exhaustively: every
/// T-family, each T-family with one vertex toggled in one slot, and random
/// partially ordered families (raw and made F-perp-invariant slotwise).
/// Uniform sampling would almost never hit a T-family.
template <DirectionModel M>
std::vector<IdealFamily> sampled_candidates(const M& model, const SweepOptions& opts) {
  std::vector<IdealFamily> out;
  const std::size_t k = model.rank(), n = model.vertex_count();
  try {
    auto tfams = enumerate_t_families(model, opts.enumeration).families;
    for (const auto& f : tfams) {
      out.push_back(f);
      for (std::uint32_t b = 0; b < f.size(); ++b)
        for (std::size_t v = 0; v < n; ++v) {
          auto g = f;
          g[SubsetMask(b)] = g[SubsetMask(b)] ^ VertexSet::single(v);
          out.push_back(std::move(g));
        }
    }
  } catch (const budget_exceeded&) {
    // fall through to random candidates only
  }
  std::mt19937_64 rng(opts.seed ^ (n * 0x9e3779b97f4a7c15ull) ^ k);
  const auto V = VertexSet::full(n);
  for (std::size_t s = 0; s < opts.sampled_candidates; ++s) {
    IdealFamily seedfam(k);
    for (std::uint32_t b = 0; b < seedfam.size(); ++b)
      if (detail::below(rng, 3) == 0) seedfam[SubsetMask(b)] = VertexSet(rng()) & V;
    IdealFamily mono(k);
    for (std::uint32_t F = 0; F < mono.size(); ++F)
      for (std::uint32_t D = 0; D < mono.size(); ++D)
        if ((D & ~F) == 0) mono[SubsetMask(F)] |= seedfam[SubsetMask(D)];
    out.push_back(mono);
    for (std::uint32_t F = 0; F < mono.size(); ++F)
      mono[SubsetMask(F)] = largest_perp_invariant(model, mono[SubsetMask(F)], SubsetMask(F));
    out.push_back(std::move(mono));
  }
  return out;
}

/// Compares the T-family and NT-tuple verdicts, and the O-family and
/// NO-tuple verdicts (K = I), on every candidate family of one model.
template <DirectionModel M>
std::vector<DiscrepancyReport> equivalence_sweep(const M& model, const CorpusModel& ctx, const SweepOptions& opts,
                                                 const Verdicts<Tabulated<M>>& verdicts = {}) {
  Tabulated<M> fast(model);
  const auto I = i_family(model);
  const auto print = fingerprint(ctx.model);
  std::vector<DiscrepancyReport> reports;
  auto examine = [&](const IdealFamily& f) {
    if (reports.size() >= opts.max_reports) return;
    const bool t = verdicts.t_family(fast, f);
    const bool nt = verdicts.nt_tuple(fast, f);
    if (t != nt)
      reports.push_back({print, "t_equals_nt", ctx.origin, ctx.seed, model_to_json(ctx.model), f, std::nullopt,
                         std::nullopt, std::string("T-family verdict ") + (t ? "true" : "false") + ", NT verdict " + (nt ? "true" : "false")});
    const bool o = static_cast<bool>(is_relative_o_family(fast, f, I));
    const bool no = nt && I.subset_of(f);
    if (o != no)
      reports.push_back({print, "o_equals_no", ctx.origin, ctx.seed, model_to_json(ctx.model), f, std::nullopt,
                         std::nullopt, std::string("O-family verdict ") + (o ? "true" : "false") + ", NO verdict " + (no ? "true" : "false")});
  };
  if (candidate_bits(model.vertex_count(), model.rank()) <= opts.candidate_bits_ceiling) {
    for_each_candidate(model.vertex_count(), model.rank(), examine);
  } else {
    for (const auto& f : sampled_candidates(fast, opts)) examine(f);
  }
  return reports;
}

/// Katsura T-pairs of a rank-one model: L_∅ positively invariant and
/// L_∅ ⊆ L_1 ⊆ J(L_∅). The compactness clause of J(I, X) holds
/// automatically for proper correspondences and is omitted.
template <DirectionModel M>
EnumerationResult katsura_pairs(const M& model) {
  if (model.rank() != 1) throw invalid_input("Katsura pairs need a rank-one model");
  const auto V = universe(model);
  const SubsetMask one = SubsetMask::of({1});
  EnumerationResult r{{}, EnumerationMode::t};
  for (std::uint64_t h0 = 0; h0 <= V.bits(); ++h0) {
    VertexSet H0(h0);
    if (!H0.subset_of(model.phi(0, H0))) continue;
    const auto J = jf_of(model, H0, one);
    for (std::uint64_t h1 = 0; h1 <= V.bits(); ++h1) {
      VertexSet H1(h1);
      if (!H0.subset_of(H1) || !H1.subset_of(J)) continue;
      IdealFamily f(1);
      f[SubsetMask{}] = H0;
      f[one] = H1;
      r.families.push_back(f);
    }
  }
  canonicalize(r.families);
  return r;
}

template <DirectionModel M>
std::vector<DiscrepancyReport> katsura_check(const M& model, const CorpusModel& ctx, const EnumerationOptions& eopts = {}) {
  if (model.rank() != 1) return {};
  auto pairs = katsura_pairs(model).families;
  auto tfams = enumerate_t_families(model, eopts).families;
  if (pairs == tfams) return {};
  return {{fingerprint(ctx.model), "katsura_pairs", ctx.origin, ctx.seed, model_to_json(ctx.model), std::nullopt,
           std::nullopt, std::nullopt,
           std::to_string(pairs.size()) + " Katsura pairs vs " + std::to_string(tfams.size()) + " T-families"}};
}

/// Structural claims checked on one model:
///   j_passdown               Phi_i(J_F) ∩ J_{F∪{i}} ⊆ J_F
///   t_family_invariant       every T-family is invariant
///   t_family_partial_order   every T-family is partially ordered
///   t_family_within_jf       L_F ⊆ J_F(L_∅) for every T-family, F ≠ ∅
///   quotient_ideal_identity  X_F^{-1}(H) ∩ J_F(H) = H for positively invariant H
template <DirectionModel M>
std::vector<DiscrepancyReport> property_suite(const M& model, const CorpusModel& ctx, const EnumerationOptions& eopts = {}) {
  Tabulated<M> fast(model);
  const auto print = fingerprint(ctx.model);
  const std::size_t k = model.rank();
  std::vector<DiscrepancyReport> reports;
  auto report = [&](const char* claim, std::optional<IdealFamily> f, std::optional<VertexSet> s, std::optional<SubsetMask> F,
                    std::string detail) {
    reports.push_back({print, claim, ctx.origin, ctx.seed, model_to_json(ctx.model), std::move(f), s, F, std::move(detail)});
  };

  const auto J = j_family(fast);
  for (auto F : canonical_order(k))
    for (std::size_t i = 0; i < k; ++i) {
      if (F.contains(i)) continue;
      auto lhs = fast.phi(i, J[F]) & J[F.with(i)];
      if (!lhs.subset_of(J[F]))
        report("j_passdown", J, lhs - J[F], F, "direction " + std::to_string(i + 1));
    }

  for (const auto& f : enumerate_t_families(fast, eopts).families) {
    if (auto r = is_invariant(fast, f); !r) report("t_family_invariant", f, r.witness.vertices, r.witness.F, "");
    if (auto r = is_partially_ordered(f); !r) report("t_family_partial_order", f, r.witness.vertices, r.witness.F, "");
    for (auto F : canonical_order(k)) {
      if (F.empty()) continue;
      auto bad = f[F] - jf_of(fast, f[SubsetMask{}], F);
      if (!bad.empty()) report("t_family_within_jf", f, bad, F, "");
    }
  }

  if (model.vertex_count() <= Tabulated<M>::kLimit) {
    const auto V = universe(model);
    for (std::uint64_t h = 0; h <= V.bits(); ++h) {
      VertexSet H(h);
      if (!is_positively_invariant(fast, H)) continue;
      for (auto F : canonical_order(k)) {
        if (F.empty()) continue;
        auto both = xf_inverse(fast, H, F) & jf_of(fast, H, F);
        if (both != H) report("quotient_ideal_identity", std::nullopt, H, F, "");
      }
    }
  }
  return reports;
}

/// Every check above on one model.
inline std::vector<DiscrepancyReport> crosscheck_model(const CorpusModel& ctx, const SweepOptions& opts) {
  return std::visit(
      [&](const auto& m) {
        auto out = equivalence_sweep(m, ctx, opts);
        auto props = property_suite(m, ctx, opts.enumeration);
        out.insert(out.end(), props.begin(), props.end());
        auto kat = katsura_check(m, ctx, opts.enumeration);
        out.insert(out.end(), kat.begin(), kat.end());
        return out;
      },
      ctx.model);
}

}  // namespace tfam
