#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "test_support.hpp"
#include "tfam/direction.hpp"
#include "tfam/model.hpp"

using namespace tfam;

namespace {

const SubsetMask kEmpty{};
const SubsetMask k1 = SubsetMask::of({1});
const SubsetMask k2 = SubsetMask::of({2});
const SubsetMask k12 = SubsetMask::of({1, 2});

// Vertex indices in the fixtures.
constexpr std::size_t v1 = 0, v2 = 1;  // DS-A
constexpr std::size_t p = 0, q = 1;    // DS-B
constexpr std::size_t u = 0, w = 1;    // K2, u->w

/// The family L with L_{1,2} = {p} and every other entry empty.
IdealFamily ds_b_family_l() {
  IdealFamily L(2);
  L[k12] = VertexSet::of({p});
  return L;
}

}  // namespace

TEST(PhiN, Examples) {
  auto ds_b = fixtures::ds_b();
  EXPECT_EQ(phi_n(ds_b, VertexSet{}, MultiDegree{0, 1}), VertexSet::of({p}));
  EXPECT_EQ(phi_n(ds_b, VertexSet{}, MultiDegree{0, 2}), VertexSet::of({p}));
  for (const auto& m : support::small_models())
    std::visit(
        [](const auto& model) {
          auto H = VertexSet::full(model.vertex_count()) & VertexSet(0b1011);
          EXPECT_EQ(phi_n(model, H, MultiDegree::zero(model.rank())), H);
        },
        m);
}

TEST(PhiN, RejectsDimensionMismatch) {
  auto ds_b = fixtures::ds_b();
  EXPECT_THROW(phi_n(ds_b, VertexSet::of({5}), MultiDegree{0, 1}), invalid_input);
  EXPECT_THROW(phi_n(ds_b, VertexSet{}, MultiDegree{1}), invalid_input);
}

TEST(KerPhi, Examples) {
  EXPECT_EQ(ker_phi(fixtures::ds_a(), 0), VertexSet::of({v2}));
  EXPECT_EQ(ker_phi(fixtures::k1(), 0), VertexSet{});
  EXPECT_EQ(ker_phi(fixtures::k2(), 1), VertexSet{});
  EXPECT_THROW(ker_phi(fixtures::k2(), 2), invalid_input);
}

TEST(JFamily, Examples) {
  auto J = j_family(fixtures::ds_a());
  EXPECT_EQ(J[k1], VertexSet::of({v1}));
  EXPECT_EQ(J[kEmpty], VertexSet{});
  EXPECT_EQ(j_family(fixtures::ds_b())[k2], VertexSet::of({q}));
  for (const auto& m : support::small_models())
    std::visit([](const auto& model) { EXPECT_EQ(j_family(model)[kEmpty], VertexSet{}); }, m);
}

TEST(LargestPerpInvariant, Examples) {
  auto ds_b = fixtures::ds_b();
  EXPECT_EQ(largest_perp_invariant(ds_b, universe(ds_b), k1), universe(ds_b));
  EXPECT_EQ(largest_perp_invariant(fixtures::k2(), VertexSet::of({u}), k1), VertexSet{});
  for (const auto& m : support::small_models())
    std::visit(
        [](const auto& model) {
          auto K0 = universe(model) & VertexSet(0b10110);
          EXPECT_EQ(largest_perp_invariant(model, K0, SubsetMask::full(model.rank())), K0);
        },
        m);
}

TEST(IFamily, Examples) {
  auto I = i_family(fixtures::ds_b());
  EXPECT_EQ(I[kEmpty], VertexSet{});
  EXPECT_EQ(I[k1], VertexSet::of({p, q}));
  EXPECT_EQ(I[k12], VertexSet::of({p, q}));
  EXPECT_EQ(I[k2], VertexSet::of({q}));
}

TEST(XfInverse, Examples) {
  auto k2m = fixtures::k2();
  auto ds_b = fixtures::ds_b();
  EXPECT_EQ(xf_inverse(k2m, VertexSet{}, k1), VertexSet{});
  EXPECT_EQ(xf_inverse(ds_b, VertexSet{}, k12), VertexSet{});
  EXPECT_EQ(xf_inverse(k2m, universe(k2m), k12), universe(k2m));
  EXPECT_THROW(xf_inverse(k2m, VertexSet{}, kEmpty), invalid_input);
}

TEST(JfOf, Examples) {
  auto g = fixtures::u_to_w();
  EXPECT_EQ(jf_of(g, VertexSet{}, k1), universe(g));
  EXPECT_EQ(jf_of(g, VertexSet::of({w}), k1), VertexSet::of({w}));
  EXPECT_EQ(jf_of(g, universe(g), k1), universe(g));
  EXPECT_THROW(jf_of(g, VertexSet{}, kEmpty), invalid_input);
}

TEST(InvSet, Examples) {
  auto ds_b = fixtures::ds_b();
  EXPECT_EQ(inv_set(ds_b, ds_b_family_l(), k1), VertexSet::of({p}));
  EXPECT_EQ(inv_set(ds_b, IdealFamily(2, universe(ds_b)), k2), universe(ds_b));
  EXPECT_EQ(inv_set(fixtures::k2(), IdealFamily(2), k1), VertexSet{});
  EXPECT_THROW(inv_set(ds_b, IdealFamily(2), kEmpty), invalid_input);
  EXPECT_THROW(inv_set(ds_b, IdealFamily(2), k12), invalid_input);
}

TEST(LimSet, Examples) {
  auto k2m = fixtures::k2();
  EXPECT_EQ(lim_set(k2m, VertexSet::of({w}), k1), universe(k2m));
  EXPECT_EQ(lim_set(k2m, universe(k2m), k2), universe(k2m));
  EXPECT_THROW(lim_set(k2m, VertexSet{}, kEmpty), invalid_input);
  EXPECT_THROW(lim_set(k2m, VertexSet{}, k12), invalid_input);
}

// DS-A, H = ∅, F = {1}: Phi_2(∅) = {v2} and Phi_2({v2}) = {v1, v2}, so the
// trajectory is eventually the whole space. Pinned by the grid oracle first.
TEST(LimSet, DsAValuePinnedByOracle) {
  auto ds_a = fixtures::ds_a();
  const VertexSet expected = VertexSet::of({v1, v2});
  ASSERT_EQ(oracle::eventual_containment(ds_a, VertexSet{}, k1), expected);
  EXPECT_EQ(lim_set(ds_a, VertexSet{}, k1), expected);
}

TEST(DirectionInvariants, MonotoneIntersectionPreservingCommuting) {
  for (const auto& m : support::small_models(6)) {
    std::visit(
        [](const auto& model) {
          const auto V = universe(model);
          const std::size_t k = model.rank();
          for (std::uint64_t a = 0; a <= V.bits(); ++a) {
            VertexSet H(a);
            for (std::size_t i = 0; i < k; ++i) {
              EXPECT_EQ(model.phi(i, V), V);
              for (std::size_t j = 0; j < k; ++j)
                EXPECT_EQ(model.phi(i, model.phi(j, H)), model.phi(j, model.phi(i, H)));
            }
            for (std::uint64_t b = a; b <= V.bits(); b += 3) {
              VertexSet H2(b);
              for (std::size_t i = 0; i < k; ++i) {
                EXPECT_EQ(model.phi(i, H & H2), model.phi(i, H) & model.phi(i, H2));
                if (H.subset_of(H2)) EXPECT_TRUE(model.phi(i, H).subset_of(model.phi(i, H2)));
              }
            }
          }
        },
        m);
  }
}

TEST(DirectionInvariants, DegreeAdditivity) {
  std::mt19937_64 rng(7);
  for (const auto& m : support::small_models()) {
    std::visit(
        [&](const auto& model) {
          const std::size_t k = model.rank();
          for (int trial = 0; trial < 20; ++trial) {
            MultiDegree n = MultiDegree::zero(k), mm = MultiDegree::zero(k);
            for (std::size_t i = 0; i < k; ++i) n[i] = rng() % 4, mm[i] = rng() % 4;
            VertexSet H = universe(model) & VertexSet(rng());
            EXPECT_EQ(phi_n(model, H, n + mm), phi_n(model, phi_n(model, H, mm), n));
          }
        },
        m);
  }
}

TEST(DirectionInvariants, LargestPerpInvariantAgainstOracles) {
  for (const auto& m : support::small_models(5)) {
    std::visit(
        [](const auto& model) {
          const auto V = universe(model);
          for (std::uint64_t h = 0; h <= V.bits(); ++h)
            for (auto F : canonical_order(model.rank())) {
              VertexSet K0(h);
              auto S = largest_perp_invariant(model, K0, F);
              EXPECT_TRUE(S.subset_of(K0));
              for (std::size_t i = 0; i < model.rank(); ++i)
                if (!F.contains(i)) EXPECT_TRUE(S.subset_of(model.phi(i, S)));
              EXPECT_EQ(S, oracle::brute_largest_invariant(model, K0, F));
              EXPECT_EQ(S, oracle::bounded_intersection(model, K0, F));
            }
        },
        m);
  }
}

TEST(DirectionInvariants, IFamilyIsPartiallyOrderedAndBelowJ) {
  for (const auto& m : support::small_models()) {
    std::visit(
        [](const auto& model) {
          auto I = i_family(model);
          auto J = j_family(model);
          EXPECT_TRUE(I.subset_of(J));
          for (auto F : canonical_order(model.rank()))
            for (std::size_t i = 0; i < model.rank(); ++i)
              if (!F.contains(i)) EXPECT_TRUE(I[F].subset_of(I[F.with(i)]));
        },
        m);
  }
}

TEST(DirectionInvariants, QuotientIdentityOnPositivelyInvariantSets) {
  for (const auto& m : support::small_models()) {
    std::visit(
        [](const auto& model) {
          const auto V = universe(model);
          for (std::uint64_t h = 0; h <= V.bits(); ++h) {
            VertexSet H(h);
            if (!is_positively_invariant(model, H)) continue;
            for (auto F : canonical_order(model.rank()))
              if (!F.empty()) EXPECT_EQ(xf_inverse(model, H, F) & jf_of(model, H, F), H);
          }
        },
        m);
  }
}

TEST(DirectionInvariants, LimSetAgainstEventualContainment) {
  for (const auto& m : support::small_models(4)) {
    std::visit(
        [](const auto& model) {
          if (model.rank() < 2) return;
          const auto V = universe(model);
          for (std::uint64_t h = 0; h <= V.bits(); ++h)
            for (auto F : canonical_order(model.rank())) {
              if (F.empty() || F == SubsetMask::full(model.rank())) continue;
              EXPECT_EQ(lim_set(model, VertexSet(h), F), oracle::eventual_containment(model, VertexSet(h), F));
            }
        },
        m);
  }
}

TEST(Tabulated, MatchesUnderlyingModel) {
  for (const auto& m : support::small_models()) {
    std::visit(
        [](const auto& model) {
          Tabulated fast(model);
          for (std::uint64_t h = 0; h <= universe(model).bits(); ++h)
            for (std::size_t i = 0; i < model.rank(); ++i) EXPECT_EQ(fast.phi(i, VertexSet(h)), model.phi(i, VertexSet(h)));
        },
        m);
  }
}
