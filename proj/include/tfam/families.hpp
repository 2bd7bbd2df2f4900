#pragma once

// Membership checks and enumeration for the parametrising 2^k-tuples:
// invariance, partial ordering, the T-family equation, the NT conditions of
// the proper case, (relative) O-families; meet and join of T-families.
//
// Every subset of V spans an ideal of c0(V), so the "consists of ideals"
// clause of each definition holds automatically and is not checked.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tfam/direction.hpp"
#include "tfam/types.hpp"

namespace tfam {

enum class Condition { none, invariance, partial_order, condition_i, t_equation, nt_condition_iv, containment };

inline const char* to_string(Condition c) {
  switch (c) {
    case Condition::none: return "none";
    case Condition::invariance: return "invariance";
    case Condition::partial_order: return "partial_order";
    case Condition::condition_i: return "condition_i";
    case Condition::t_equation: return "t_equation";
    case Condition::nt_condition_iv: return "nt_condition_iv";
    case Condition::containment: return "containment";
  }
  return "none";
}

/// Location of the first violation in canonical order.
struct Witness {
  std::optional<SubsetMask> F;
  std::optional<SubsetMask> upper;  // partial_order only: F ⊊ upper with L_F ⊄ L_upper
  std::optional<std::size_t> dir;   // 0-based
  VertexSet vertices;
};

struct CheckReport {
  bool verdict = true;
  Condition violated = Condition::none;
  Witness witness;
  std::vector<Condition> not_evaluated;

  explicit operator bool() const { return verdict; }

  static CheckReport pass() { return {}; }
  static CheckReport fail(Condition c, Witness w) { return {false, c, w, {}}; }
};

/// Directions not in F, ascending.
inline std::vector<std::size_t> perpendicular_directions(std::size_t k, SubsetMask F) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < k; ++i)
    if (!F.contains(i)) out.push_back(i);
  return out;
}

/// L_F ⊆ Phi_i(L_F) for all F and i ∉ F. Composition gives the all-n⊥F form.
template <DirectionModel M>
CheckReport is_invariant(const M& model, const IdealFamily& family) {
  require_valid(model, family);
  for (auto F : canonical_order(model.rank()))
    for (std::size_t i = 0; i < model.rank(); ++i) {
      if (F.contains(i)) continue;
      auto bad = family[F] - model.phi(i, family[F]);
      if (!bad.empty()) return CheckReport::fail(Condition::invariance, {F, std::nullopt, i, bad});
    }
  return CheckReport::pass();
}

/// Monotone over the subset lattice; checked on covering pairs F ⊊ F ∪ {i}.
inline CheckReport is_partially_ordered(const IdealFamily& family) {
  for (auto F : canonical_order(family.rank()))
    for (std::size_t i = 0; i < family.rank(); ++i) {
      if (F.contains(i)) continue;
      auto bad = family[F] - family[F.with(i)];
      if (!bad.empty()) return CheckReport::fail(Condition::partial_order, {F, F.with(i), std::nullopt, bad});
    }
  return CheckReport::pass();
}

/// L_F = Phi_i(L_F) ∩ L_{F∪{i}} for all F ⊊ [k] and i ∉ F.
/// The witness vertices are the symmetric difference of the two sides.
template <DirectionModel M>
CheckReport is_t_family(const M& model, const IdealFamily& family) {
  require_valid(model, family);
  for (auto F : canonical_order(model.rank()))
    for (std::size_t i = 0; i < model.rank(); ++i) {
      if (F.contains(i)) continue;
      auto rhs = model.phi(i, family[F]) & family[F.with(i)];
      if (rhs != family[F]) return CheckReport::fail(Condition::t_equation, {F, std::nullopt, i, rhs ^ family[F]});
    }
  return CheckReport::pass();
}

/// NT-2^k-tuple test in the proper case: conditions (i)-(iii) and then the
/// absorption condition
///   ⋂_{n⊥F} Phi_n(J_F(L_∅)) ∩ L_inv,F ∩ L_lim,F ⊆ L_F   for ∅ ≠ F ⊊ [k].
/// Evaluation stops at the first failing condition; the remaining ones are
/// listed as not evaluated.
template <DirectionModel M>
CheckReport is_nt_tuple(const M& model, const IdealFamily& family) {
  require_valid(model, family);
  const std::size_t k = model.rank();
  const auto full = SubsetMask::full(k);
  auto stop = [](CheckReport r, std::vector<Condition> rest) {
    r.not_evaluated = std::move(rest);
    return r;
  };

  for (auto F : canonical_order(k)) {
    if (F.empty()) continue;
    auto bad = family[F] - jf_of(model, family[SubsetMask{}], F);
    if (!bad.empty())
      return stop(CheckReport::fail(Condition::condition_i, {F, std::nullopt, std::nullopt, bad}),
                  {Condition::invariance, Condition::partial_order, Condition::nt_condition_iv});
  }
  if (auto r = is_invariant(model, family); !r) return stop(r, {Condition::partial_order, Condition::nt_condition_iv});
  if (auto r = is_partially_ordered(family); !r) return stop(r, {Condition::nt_condition_iv});

  for (auto F : canonical_order(k)) {
    if (F.empty() || F == full) continue;
    auto lhs = largest_perp_invariant(model, jf_of(model, family[SubsetMask{}], F), F) & inv_set(model, family, F) &
               lim_set(model, family[F], F);
    auto bad = lhs - family[F];
    if (!bad.empty()) return CheckReport::fail(Condition::nt_condition_iv, {F, std::nullopt, std::nullopt, bad});
  }
  return CheckReport::pass();
}

/// A T-family containing K pointwise.
template <DirectionModel M>
CheckReport is_relative_o_family(const M& model, const IdealFamily& family, const IdealFamily& K) {
  require_valid(model, K);
  if (auto r = is_t_family(model, family); !r) return r;
  for (auto F : canonical_order(model.rank())) {
    auto bad = K[F] - family[F];
    if (!bad.empty()) return CheckReport::fail(Condition::containment, {F, std::nullopt, std::nullopt, bad});
  }
  return CheckReport::pass();
}

template <DirectionModel M>
CheckReport is_o_family(const M& model, const IdealFamily& family) {
  return is_relative_o_family(model, family, i_family(model));
}

enum class EnumerationMode { t, o, relative_o, nt };

inline const char* to_string(EnumerationMode m) {
  switch (m) {
    case EnumerationMode::t: return "T";
    case EnumerationMode::o: return "O";
    case EnumerationMode::relative_o: return "relative_O";
    case EnumerationMode::nt: return "NT";
  }
  return "T";
}

struct EnumerationResult {
  std::vector<IdealFamily> families;
  EnumerationMode mode = EnumerationMode::t;

  std::size_t count() const { return families.size(); }
};

struct EnumerationOptions {
  /// Maximum number of candidate sets examined before giving up.
  std::uint64_t budget = std::uint64_t{1} << 28;
  unsigned jobs = 1;
};

/// Sorts into canonical order and drops duplicates.
inline void canonicalize(std::vector<IdealFamily>& families) {
  std::vector<std::pair<std::vector<std::uint64_t>, std::size_t>> keys;
  keys.reserve(families.size());
  for (std::size_t i = 0; i < families.size(); ++i) keys.emplace_back(families[i].canonical_key(), i);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
             keys.end());
  std::vector<IdealFamily> sorted;
  sorted.reserve(keys.size());
  for (const auto& [key, idx] : keys) sorted.push_back(std::move(families[idx]));
  families = std::move(sorted);
}

namespace detail {

/// Depth-first descent through the subset lattice from [k] down to ∅.
///
/// Once L_D is fixed for every D ⊋ F, a valid L_F is a fixed point of
/// G(S) = ⋂_{i∉F} (Phi_i(S) ∩ L_{F∪{i}}), hence lies below the greatest fixed
/// point of G; every subset between the lower bound and that point is tried
/// against each equation separately.
template <DirectionModel M>
class TFamilySearch {
 public:
  TFamilySearch(const M& model, const IdealFamily& lower, std::uint64_t budget, std::atomic<std::uint64_t>& visited)
      : model_(model), lower_(lower), budget_(budget), visited_(visited), order_(canonical_order(model.rank())) {
    std::reverse(order_.begin(), order_.end());
    for (auto F : order_) perp_.push_back(perpendicular_directions(model.rank(), F));
  }

  /// Candidates for L_[k]: every superset of the lower bound.
  std::vector<VertexSet> top_choices() const {
    std::vector<VertexSet> out;
    const auto low = lower_[order_.front()];
    for_each_between(low, universe(model_), [&](VertexSet S) { out.push_back(S); });
    return out;
  }

  void run_from(VertexSet top, std::vector<IdealFamily>& out) {
    IdealFamily family(model_.rank());
    family[order_.front()] = top;
    tick();
    descend(1, family, out);
  }

 private:
  template <class Fn>
  static void for_each_between(VertexSet low, VertexSet high, Fn&& fn) {
    const std::uint64_t free = (high - low).bits();
    std::uint64_t s = free;
    for (;;) {
      fn(VertexSet(low.bits() | s));
      if (s == 0) break;
      s = (s - 1) & free;
    }
  }

  void tick() {
    auto v = visited_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (v > budget_) throw budget_exceeded("T-family enumeration exceeded its budget of " + std::to_string(budget_) + " candidates", v, found_);
  }

  void descend(std::size_t idx, IdealFamily& family, std::vector<IdealFamily>& out) {
    if (idx == order_.size()) {
      out.push_back(family);
      ++found_;
      return;
    }
    const auto F = order_[idx];
    const auto& perp = perp_[idx];
    VertexSet ceiling = universe(model_);
    for (auto i : perp) ceiling &= family[F.with(i)];
    ceiling = largest_perp_invariant(model_, ceiling, F);
    const auto low = lower_[F];
    if (!low.subset_of(ceiling)) return;
    for_each_between(low, ceiling, [&](VertexSet S) {
      tick();
      for (auto i : perp)
        if ((model_.phi(i, S) & family[F.with(i)]) != S) return;
      family[F] = S;
      descend(idx + 1, family, out);
    });
    family[F] = VertexSet{};
  }

  const M& model_;
  const IdealFamily& lower_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& visited_;
  std::uint64_t found_ = 0;
  std::vector<SubsetMask> order_;
  std::vector<std::vector<std::size_t>> perp_;
};

template <DirectionModel M>
std::vector<IdealFamily> search_t_families(const M& model, const IdealFamily& lower, const EnumerationOptions& opts) {
  std::atomic<std::uint64_t> visited{0};
  TFamilySearch<M> probe(model, lower, opts.budget, visited);
  auto tops = probe.top_choices();
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(tops.size())));

  std::vector<IdealFamily> all;
  if (jobs == 1) {
    for (auto top : tops) probe.run_from(top, all);
  } else {
    std::vector<std::future<std::vector<IdealFamily>>> parts;
    for (unsigned j = 0; j < jobs; ++j)
      parts.push_back(std::async(std::launch::async, [&, j] {
        TFamilySearch<M> worker(model, lower, opts.budget, visited);
        std::vector<IdealFamily> local;
        for (std::size_t t = j; t < tops.size(); t += jobs) worker.run_from(tops[t], local);
        return local;
      }));
    std::exception_ptr failure;
    for (auto& p : parts) {
      try {
        auto local = p.get();
        all.insert(all.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
      } catch (...) {
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  canonicalize(all);
  return all;
}

}  // namespace detail

template <DirectionModel M>
EnumerationResult enumerate_t_families(const M& model, const EnumerationOptions& opts = {}) {
  return {detail::search_t_families(model, IdealFamily(model.rank()), opts), EnumerationMode::t};
}

/// T-families L with K ⊆ L; the descent is seeded with K as lower bounds.
template <DirectionModel M>
EnumerationResult enumerate_relative_o(const M& model, const IdealFamily& K, const EnumerationOptions& opts = {}) {
  require_valid(model, K);
  return {detail::search_t_families(model, K, opts), EnumerationMode::relative_o};
}

template <DirectionModel M>
EnumerationResult enumerate_o_families(const M& model, const EnumerationOptions& opts = {}) {
  return {detail::search_t_families(model, i_family(model), opts), EnumerationMode::o};
}

/// Calls fn on every family of the given shape, reusing one buffer.
/// Candidate count is (2^n)^(2^k); callers bound it beforehand.
template <class Fn>
void for_each_candidate(std::size_t vertex_count, std::size_t rank, Fn&& fn) {
  IdealFamily family(rank);
  const std::uint64_t limit = VertexSet::full(vertex_count).bits();
  const std::size_t slots = family.size();
  for (;;) {
    fn(static_cast<const IdealFamily&>(family));
    std::size_t s = 0;
    while (s < slots) {
      SubsetMask F(static_cast<std::uint32_t>(s));
      if (family[F].bits() < limit) {
        family[F] = VertexSet(family[F].bits() + 1);
        break;
      }
      family[F] = VertexSet{};
      ++s;
    }
    if (s == slots) return;
  }
}

/// log2 of the number of candidate families, n * 2^k.
inline std::uint64_t candidate_bits(std::size_t vertex_count, std::size_t rank) {
  return static_cast<std::uint64_t>(vertex_count) << rank;
}

/// Brute-force NT-tuple enumeration over every candidate family.
template <DirectionModel M>
EnumerationResult enumerate_nt_tuples(const M& model, const EnumerationOptions& opts = {}) {
  const auto bits = candidate_bits(model.vertex_count(), model.rank());
  if (bits >= 63 || (std::uint64_t{1} << bits) > opts.budget)
    throw budget_exceeded("NT enumeration needs 2^" + std::to_string(bits) + " candidates, over budget", 0, 0);
  Tabulated<M> fast(model);
  EnumerationResult result{{}, EnumerationMode::nt};
  for_each_candidate(model.vertex_count(), model.rank(), [&](const IdealFamily& f) {
    if (is_nt_tuple(fast, f)) result.families.push_back(f);
  });
  canonicalize(result.families);
  return result;
}

/// Pointwise intersection of two T-families, re-checked to be a T-family.
template <DirectionModel M>
IdealFamily meet(const M& model, const IdealFamily& a, const IdealFamily& b) {
  if (!is_t_family(model, a) || !is_t_family(model, b)) throw invalid_input("meet is defined on T-families only");
  auto m = pointwise_meet(a, b);
  if (!is_t_family(model, m)) throw consistency_error("pointwise intersection of T-families failed the T-check");
  return m;
}

/// Least T-family containing both arguments, found as the minimum of the
/// T-families above their pointwise union.
template <DirectionModel M>
IdealFamily join(const M& model, const IdealFamily& a, const IdealFamily& b, const EnumerationOptions& opts = {}) {
  if (!is_t_family(model, a) || !is_t_family(model, b)) throw invalid_input("join is defined on T-families only");
  auto above = enumerate_relative_o(model, pointwise_join(a, b), opts).families;
  for (const auto& candidate : above)
    if (std::all_of(above.begin(), above.end(), [&](const IdealFamily& o) { return candidate.subset_of(o); }))
      return candidate;
  throw consistency_error("no least T-family above the pointwise union");
}

}  // namespace tfam
