#include <gtest/gtest.h>

#include "opcat/nerve.hpp"

using namespace opcat;

namespace {

// Independent count of normal lax functors [n] -> C for a one-object
// 2-category B M with M discrete: every tuple of 1-cells with forced 2-cells.
long long discrete_deloop_count(int m, int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c *= m;
  return c;
}

// Lax triangles of a 2-category by direct scan: (f, g, h, a : g o f => h).
long long lax_triangles(const Finite2Category& C) {
  long long c = 0;
  for (int f = 0; f < C.one_cells(); ++f)
    for (int g = 0; g < C.one_cells(); ++g) {
      if (C.tgt1[f] != C.src1[g]) continue;
      const int gf = C.compose(g, f);
      for (int a = 0; a < C.two_cells(); ++a) c += C.src2[a] == gf;
    }
  return c;
}

}  // namespace

TEST(Nerve, DiscreteDeloopHasPowerCounts) {
  for (int m : {1, 2, 3}) {
    const auto X = duskin_nerve(deloop(cyclic_moncat(m)));
    ASSERT_TRUE(validate_simplicial(X).ok());
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(X.size(n), discrete_deloop_count(m, n));
  }
}

TEST(Nerve, LevelTwoIsLaxTriangles) {
  for (const auto& C : {walking_arrow(), two_cell_2category(), deloop(poset_moncat()), deloop(cyclic_moncat(3))})
    EXPECT_EQ(duskin_nerve(C).size(2), lax_triangles(C));
}

TEST(Nerve, WalkingArrowIsDeltaOne) {
  const auto X = duskin_nerve(walking_arrow());
  const auto D = standard_simplex(1, 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(X.size(n), D.size(n));
}

TEST(Nerve, LevelFourIsTheCoskeleton) {
  for (const auto& C : {walking_arrow(), two_cell_2category(), deloop(poset_moncat())}) {
    const auto N4 = build_nerve(C, 4).X;
    ASSERT_TRUE(validate_simplicial(N4).ok());
    const auto K = coskeleton_extend(duskin_nerve(C), 3);
    EXPECT_EQ(N4.size(4), K.size(4));
  }
}

TEST(Nerve, ThreeSimplicesSatisfyPasting) {
  const auto C = deloop(poset_moncat());
  const auto N = build_nerve(C, 3);
  for (const auto& s : N.simplices[3]) EXPECT_TRUE(pasting_holds(C, s, 0, 1, 2, 3));
}

TEST(Nerve, TwoFunctorInducesASimplicialMap) {
  const auto C = walking_arrow();
  const auto NC = build_nerve(C, 3);
  const auto T = terminal_2category();
  const auto NT = build_nerve(T, 3);
  TwoFunctor F{{0, 0}, {0, 0, 0}, {0, 0, 0}};
  const auto lm = nerve_map(C, NC, T, NT, F);
  EXPECT_TRUE(validate_sset_map(NC.X, NT.X, lm).ok());
}

TEST(LaxSlice, IsAValid2Category) {
  for (const auto& C : {walking_arrow(), two_cell_2category(), deloop(cyclic_moncat(2))}) {
    const auto L = lax_slice_sum(C);
    EXPECT_TRUE(validate_2category(L.D).ok());
    EXPECT_EQ(L.D.objects, C.one_cells());
  }
}

TEST(DecNerve, CertifiedOnTheFixtureCorpus) {
  for (const auto& C : {terminal_2category(), deloop(cyclic_moncat(2)), deloop(cyclic_moncat(3)), walking_arrow(),
                        two_cell_2category(), deloop(poset_moncat())}) {
    const auto iso = dec_nerve_iso(C);
    EXPECT_TRUE(iso.certified) << iso.report.str();
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(iso.map.source->size(k), iso.map.target->size(k));
  }
}

TEST(DecNerve, BarCountIsPowerOfOnePlusLevel) {
  // dec N B M at level n has |M|^{n+1} cells
  const auto D = dec_nerve_comparison(deloop(cyclic_moncat(2)));
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(D.iso.map.source->size(n), discrete_deloop_count(2, n + 1));
}
