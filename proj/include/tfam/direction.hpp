#pragma once

// The direction calculus shared by every backend.
//
// A model exposes k commuting inverse-image operators phi(dir, H) on vertex
// sets. Everything else (J, I, X_F^{-1}, J_F(., X), L_inv, L_lim) is derived
// here from those operators alone.

#include <concepts>
#include <string>
#include <vector>

#include "tfam/types.hpp"

namespace tfam {

template <class M>
concept DirectionModel = requires(const M& m, std::size_t dir, VertexSet h) {
  { m.rank() } -> std::convertible_to<std::size_t>;
  { m.vertex_count() } -> std::convertible_to<std::size_t>;
  { m.phi(dir, h) } -> std::same_as<VertexSet>;
};

template <DirectionModel M>
VertexSet universe(const M& model) {
  return VertexSet::full(model.vertex_count());
}

template <DirectionModel M>
void require_valid(const M& model, VertexSet H) {
  if (!H.fits(model.vertex_count()))
    throw invalid_input("vertex set has members outside a model with " + std::to_string(model.vertex_count()) +
                        " vertices");
}

template <DirectionModel M>
void require_valid(const M& model, const IdealFamily& family) {
  if (family.rank() != model.rank())
    throw invalid_input("family of rank " + std::to_string(family.rank()) + " used with a rank " +
                        std::to_string(model.rank()) + " model");
  if (!family.fits(model.vertex_count())) throw invalid_input("family has vertices outside the model");
}

template <DirectionModel M>
void require_valid(const M& model, SubsetMask F) {
  if (!F.subset_of(SubsetMask::full(model.rank())))
    throw invalid_input("direction subset {" + F.key() + "} outside a rank " + std::to_string(model.rank()) + " model");
}

template <DirectionModel M>
void require_direction(const M& model, std::size_t dir) {
  if (dir >= model.rank())
    throw invalid_input("direction " + std::to_string(dir + 1) + " out of range for rank " +
                        std::to_string(model.rank()));
}

/// H ⊆ Phi_i(H) for every direction: the set spans a positively invariant ideal.
template <DirectionModel M>
bool is_positively_invariant(const M& model, VertexSet H) {
  for (std::size_t i = 0; i < model.rank(); ++i)
    if (!H.subset_of(model.phi(i, H))) return false;
  return true;
}

/// Phi_n = Phi_1^{n_1} ... Phi_k^{n_k}; the generators commute so order is irrelevant.
template <DirectionModel M>
VertexSet phi_n(const M& model, VertexSet H, const MultiDegree& n) {
  require_valid(model, H);
  if (n.rank() != model.rank())
    throw invalid_input("degree of rank " + std::to_string(n.rank()) + " used with a rank " +
                        std::to_string(model.rank()) + " model");
  for (std::size_t i = 0; i < n.rank(); ++i)
    for (std::size_t step = 0; step < n[i]; ++step) {
      auto next = model.phi(i, H);
      if (next == H) break;  // further powers are stationary
      H = next;
    }
  return H;
}

/// Vertex set of ker phi_i, i.e. Phi_i(∅).
template <DirectionModel M>
VertexSet ker_phi(const M& model, std::size_t dir) {
  require_direction(model, dir);
  return model.phi(dir, VertexSet{});
}

/// J_∅ = ∅ and J_F = complement of the intersection of ker phi_i over i in F.
template <DirectionModel M>
IdealFamily j_family(const M& model) {
  const auto V = universe(model);
  IdealFamily J(model.rank());
  for (std::uint32_t b = 1; b < J.size(); ++b) {
    SubsetMask F(b);
    VertexSet kernel = V;
    for (std::size_t i = 0; i < model.rank(); ++i)
      if (F.contains(i)) kernel &= ker_phi(model, i);
    J[F] = V - kernel;
  }
  return J;
}

/// The largest S ⊆ K0 with S ⊆ Phi_i(S) for every direction i outside F.
///
/// Greatest post-fixed point of S -> K0 ∩ ⋂_{i∉F} Phi_i(S), reached by
/// decreasing iteration from K0. It coincides with ⋂_{n⊥F} Phi_n(K0).
template <DirectionModel M>
VertexSet largest_perp_invariant(const M& model, VertexSet K0, SubsetMask F) {
  require_valid(model, K0);
  require_valid(model, F);
  VertexSet S = K0;
  for (;;) {
    VertexSet next = S;
    for (std::size_t i = 0; i < model.rank(); ++i)
      if (!F.contains(i)) next &= model.phi(i, S);
    if (next == S) return S;
    S = next;
  }
}

/// I_F: largest F-perp-invariant subset of J_F.
template <DirectionModel M>
IdealFamily i_family(const M& model) {
  auto J = j_family(model);
  IdealFamily I(model.rank());
  for (std::uint32_t b = 0; b < I.size(); ++b) I[SubsetMask(b)] = largest_perp_invariant(model, J[SubsetMask(b)], SubsetMask(b));
  return I;
}

/// X_F^{-1}(H): intersection of Phi_n(H) over the nonzero 0/1 degrees n ≤ 1_F.
template <DirectionModel M>
VertexSet xf_inverse(const M& model, VertexSet H, SubsetMask F) {
  require_valid(model, H);
  require_valid(model, F);
  if (F.empty()) throw invalid_input("X_F^{-1} needs a nonempty direction subset");
  VertexSet out = universe(model);
  // Walk every nonempty submask of F, i.e. every degree 0 ≠ n ≤ 1_F.
  for (std::uint32_t sub = F.bits(); sub != 0; sub = (sub - 1) & F.bits()) {
    VertexSet image = H;
    for (std::size_t i = 0; i < model.rank(); ++i)
      if (SubsetMask(sub).contains(i)) image = model.phi(i, image);
    out &= image;
  }
  return out;
}

/// J_F(H, X) = {v | δ_v X_F^{-1}(H) ⊆ H}. Point projections are orthogonal,
/// so this is H together with everything outside X_F^{-1}(H).
template <DirectionModel M>
VertexSet jf_of(const M& model, VertexSet H, SubsetMask F) {
  return (universe(model) - xf_inverse(model, H, F)) | H;
}

template <DirectionModel M>
void require_proper_subset(const M& model, SubsetMask F, const char* what) {
  require_valid(model, F);
  if (F.empty() || F == SubsetMask::full(model.rank()))
    throw invalid_input(std::string(what) + " is defined only for ∅ ≠ F ⊊ [k]; got {" + F.key() + "}");
}

/// L_inv,F = ⋂_{n⊥F} Phi_n(⋂_{F⊊D} L_D).
template <DirectionModel M>
VertexSet inv_set(const M& model, const IdealFamily& family, SubsetMask F) {
  require_valid(model, family);
  require_proper_subset(model, F, "L_inv");
  VertexSet K0 = universe(model);
  for (std::uint32_t b = 0; b < family.size(); ++b) {
    SubsetMask D(b);
    if (F.subset_of(D) && D != F) K0 &= family[D];
  }
  return largest_perp_invariant(model, K0, F);
}

/// L_lim,F for the set L_F = H.
///
/// v lies in L_lim,F iff v ∈ Phi_m(H) for all m ≥ n, m ⊥ F, for some n ⊥ F.
/// Since Phi_n preserves finite intersections and every trajectory is
/// eventually periodic, ⋂_{m≥n} Phi_m(H) = Phi_n(K) with K the largest
/// F-perp-invariant subset of H. The family Phi_n(K) increases with n, so
/// its union is the least fixed point of S -> K ∪ ⋃_{i∉F} Phi_i(S) above K.
template <DirectionModel M>
VertexSet lim_set(const M& model, VertexSet H, SubsetMask F) {
  require_proper_subset(model, F, "L_lim");
  VertexSet S = largest_perp_invariant(model, H, F);
  for (;;) {
    VertexSet next = S;
    for (std::size_t i = 0; i < model.rank(); ++i)
      if (!F.contains(i)) next |= model.phi(i, S);
    if (next == S) return S;
    S = next;
  }
}

/// Caches Phi_i on every subset for small vertex counts; used by the sweeps,
/// which evaluate the operators millions of times on the same model.
template <DirectionModel M>
class Tabulated {
 public:
  static constexpr std::size_t kLimit = 16;

  explicit Tabulated(const M& model) : model_(&model) {
    const std::size_t n = model.vertex_count();
    if (n > kLimit) return;
    const std::size_t count = std::size_t{1} << n;
    table_.resize(model.rank() * count);
    for (std::size_t i = 0; i < model.rank(); ++i)
      for (std::size_t h = 0; h < count; ++h) table_[i * count + h] = model.phi(i, VertexSet(h));
    stride_ = count;
  }

  std::size_t rank() const { return model_->rank(); }
  std::size_t vertex_count() const { return model_->vertex_count(); }
  VertexSet phi(std::size_t dir, VertexSet H) const {
    if (stride_ == 0) return model_->phi(dir, H);
    return table_[dir * stride_ + H.bits()];
  }
  const M& model() const { return *model_; }

 private:
  const M* model_;
  std::vector<VertexSet> table_;
  std::size_t stride_ = 0;
};

}  // namespace tfam
