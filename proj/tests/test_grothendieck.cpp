#include <gtest/gtest.h>

#include "opcat/grothendieck.hpp"
#include "support.hpp"

using namespace opcat;

TEST(Grothendieck, TotalIsValidAndProjectionIsAFunctor) {
  for (const auto& c : support::operad_corpus()) {
    const auto G = grothendieck(c.operad.base, c.operad);
    EXPECT_TRUE(validate_operadic(*G.total).ok()) << c.name;
    EXPECT_TRUE(validate_operadic_functor(G.projection).ok()) << c.name;
  }
}

TEST(Grothendieck, OverOdotIsPara) {
  for (const auto& M : {cyclic_moncat(2), cyclic_moncat(3), poset_moncat()}) {
    const auto P = operad_from_moncat(M);
    const auto G = grothendieck(P.base, P);
    EXPECT_TRUE(*G.total == para(M));
  }
}

TEST(Grothendieck, CellCountsOverOdot) {
  // objects (A, a): |M|; 1-cells (f, p, alpha): one per pair for a discrete monoid
  const auto P = operad_from_moncat(cyclic_moncat(3));
  const auto G = grothendieck(P.base, P);
  EXPECT_EQ(G.total->objects(), 3);
  EXPECT_EQ(G.total->one_cells(), 9);
}

TEST(Grothendieck, OperadOfADifferentBaseIsRejected) {
  auto B = std::make_shared<const UnaryOperadic2Cat>(bouquets(2));
  EXPECT_THROW(grothendieck(B, operad_from_moncat(cyclic_moncat(2))), Error);
}

TEST(SplitFibration, CanonicalLiftsCertify) {
  for (const auto& c : support::operad_corpus()) {
    const auto F = canonical_fibration(grothendieck(c.operad.base, c.operad));
    EXPECT_TRUE(F.report.ok()) << c.name << "\n" << F.report.str();
    EXPECT_TRUE(pi0_iso_check(F)) << c.name;
    EXPECT_TRUE(unique_trivial_check(F)) << c.name;
    for (const auto& [k, x] : F.lift) EXPECT_TRUE(is_p_cartesian(F.p, x)) << c.name;
  }
}

TEST(SplitFibration, SearchRecoversTheCanonicalLifts) {
  for (const auto& c : support::operad_corpus()) {
    const auto G = grothendieck(c.operad.base, c.operad);
    const auto S = find_splitting(G.projection);
    ASSERT_TRUE(S.fibration.has_value()) << c.name << "\n" << S.report.str();
    EXPECT_EQ(S.fibration->lift, canonical_fibration(G).lift) << c.name;
  }
}

TEST(SplitFibration, NonFibrationIsRejected) {
  auto B = std::make_shared<const UnaryOperadic2Cat>(bouquets(2));
  auto odot = std::make_shared<const UnaryOperadic2Cat>(terminal_odot());
  const auto p = enumerate_operadic_functors(B, odot, 1).at(0);
  const auto S = find_splitting(p);
  EXPECT_FALSE(S.fibration.has_value());
  EXPECT_FALSE(S.report.ok());
}

TEST(SplitFibration, CorruptedLiftsAreCaught) {
  const auto P = operad_from_moncat(cyclic_moncat(2));
  auto F = canonical_fibration(grothendieck(P.base, P));
  ASSERT_GE(F.lift.size(), 2u);
  auto it = F.lift.begin();
  auto jt = std::next(it);
  std::swap(it->second, jt->second);
  EXPECT_FALSE(check_split_fibration(F).ok());
  auto H = canonical_fibration(grothendieck(P.base, P));
  H.lift.erase(H.lift.begin());
  EXPECT_TRUE(check_split_fibration(H).mentions_rule("lift missing"));
}

TEST(RoundTrip, CorpusBothDirections) {
  for (const auto& c : support::operad_corpus()) {
    const auto a = roundtrip_operad(c.operad.base, c.operad);
    EXPECT_TRUE(a.certified) << c.name << "\n" << a.report.str();
    const auto F = canonical_fibration(grothendieck(c.operad.base, c.operad));
    const auto b = roundtrip_fibration(F);
    EXPECT_TRUE(b.certified) << c.name << "\n" << b.report.str();
  }
}

TEST(RoundTrip, RandomDiscreteOperads) {
  std::mt19937 rng(1019);
  for (int i = 0; i < 100; ++i) {
    const auto P = support::random_discrete_operad(rng);
    EXPECT_TRUE(roundtrip_operad(P.base, P).certified) << i;
    EXPECT_TRUE(roundtrip_fibration(canonical_fibration(grothendieck(P.base, P))).certified) << i;
  }
}

TEST(Quasibijections, CharacterizedInEveryTotal) {
  for (const auto& c : support::operad_corpus())
    EXPECT_TRUE(quasibijection_mismatches(grothendieck(c.operad.base, c.operad)).empty()) << c.name;
}

TEST(BouquetComparison, TwoCategoriesAsBouquetOperads) {
  EXPECT_TRUE(bouquet_comparison(two_cell_2category(), 2).certified);
  EXPECT_TRUE(bouquet_comparison(walking_arrow(), 2).certified);
  EXPECT_TRUE(bouquet_comparison(deloop(poset_moncat()), 1).certified);
}

// Pulling the projection of P back along F : O -> base(P) gives the total of F*P.
TEST(BaseChange, PullbackMatchesRestriction) {
  auto odot = std::make_shared<const UnaryOperadic2Cat>(terminal_odot());
  const auto P = operad_from_moncat(poset_moncat());
  const auto G = grothendieck(odot, P);
  for (const auto& base : {bouquets(2), para(cyclic_moncat(2)), from_2category(walking_arrow())}) {
    auto B = std::make_shared<const UnaryOperadic2Cat>(base);
    const auto F = enumerate_operadic_functors(B, odot, 1).at(0);
    const auto R = restrict_operad(F, P);
    const auto GR = grothendieck(B, R);
    auto Xtot = std::make_shared<const TruncatedSimplicialSet>(assemble_simplicial(*G.total));
    auto Xodot = std::make_shared<const TruncatedSimplicialSet>(assemble_simplicial(*odot));
    auto XB = std::make_shared<const TruncatedSimplicialSet>(assemble_simplicial(*B));
    const auto pb = pullback_ssets(SSetMap{Xtot, Xodot, G.projection.level_map}, SSetMap{XB, Xodot, F.level_map});
    const auto XR = assemble_simplicial(*GR.total);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(pb.apex.size(k), XR.size(k)) << "level " << k;
    // the comparison (cell of the restricted total) -> (its image upstairs, its base cell)
    const auto& lm = GR.projection.level_map;
    std::vector<std::vector<int>> cmp(5);
    for (int x = 0; x < GR.total->objects(); ++x)
      cmp[1].push_back(pb.pair_index[1].at({G.object(0, GR.obj_a[x]), lm[1][x]}));
    std::set<int> hit(cmp[1].begin(), cmp[1].end());
    EXPECT_EQ(static_cast<int>(hit.size()), pb.apex.size(1));
  }
}
