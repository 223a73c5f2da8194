#include <gtest/gtest.h>

#include <numeric>

#include "opcat/twocat.hpp"

using namespace opcat;

namespace {

TwoFunctor identity_2functor(const Finite2Category& C) {
  TwoFunctor F;
  F.on_objects.resize(C.objects);
  F.on_one_cells.resize(C.one_cells());
  F.on_two_cells.resize(C.two_cells());
  std::iota(F.on_objects.begin(), F.on_objects.end(), 0);
  std::iota(F.on_one_cells.begin(), F.on_one_cells.end(), 0);
  std::iota(F.on_two_cells.begin(), F.on_two_cells.end(), 0);
  return F;
}

}  // namespace

TEST(Fixtures, AllValidate) {
  EXPECT_TRUE(validate_category(walking_arrow_category()).ok());
  for (const auto& C : {terminal_2category(), walking_arrow(), two_cell_2category(), deloop(cyclic_moncat(2)),
                        deloop(cyclic_moncat(3)), deloop(poset_moncat())})
    EXPECT_TRUE(validate_2category(C).ok()) << validate_2category(C).str();
  for (const auto& M : {trivial_moncat(), cyclic_moncat(2), cyclic_moncat(3), poset_moncat()})
    EXPECT_TRUE(validate_moncat(M).ok()) << validate_moncat(M).str();
}

TEST(Category, MutantsAreCaught) {
  auto K = walking_arrow_category();
  K.comp.set(2, 0, 1);  // wrong endpoints
  EXPECT_TRUE(validate_category(K).mentions_rule("endpoints"));
  auto L = walking_arrow_category();
  L.comp.set(2, 1, 2);  // non-composable pair
  EXPECT_FALSE(validate_category(L).ok());
  auto M = walking_arrow_category();
  M.id[0] = 2;
  EXPECT_FALSE(validate_category(M).ok());
}

TEST(TwoCategory, InterchangeAndUnitsAreChecked) {
  auto C = two_cell_2category();
  C.vcomp.set(3, 4, 3);  // 1_v . theta = 1_v instead of theta
  EXPECT_FALSE(validate_2category(C).ok());
  auto D = deloop(cyclic_moncat(2));
  D.hcomp.set(1, 1, 1);  // breaks horizontal composition on 2-cells
  EXPECT_FALSE(validate_2category(D).ok());
  auto E = walking_arrow();
  E.id1 = {0, 2};
  EXPECT_FALSE(validate_2category(E).ok());
}

TEST(TwoCategory, ComposeMatchesTable) {
  const auto C = walking_arrow();
  EXPECT_EQ(C.compose(2, 0), 2);
  EXPECT_EQ(C.compose(1, 2), 2);
  EXPECT_EQ(C.compose(0, 2), -1);
}

TEST(Monoidal, MutantsAreCaught) {
  auto M = cyclic_moncat(3);
  M.tensor_obj[1 * 3 + 1] = 0;  // 1 + 1 = 0 breaks associativity
  EXPECT_FALSE(validate_moncat(M).ok());
  auto N = poset_moncat();
  N.unit = 1;
  EXPECT_TRUE(validate_moncat(N).mentions_rule("unit"));
}

TEST(Monoidal, DeloopHasOneObjectAndTensorComposition) {
  const auto M = cyclic_moncat(3);
  const auto B = deloop(M);
  EXPECT_EQ(B.objects, 1);
  EXPECT_EQ(B.one_cells(), 3);
  EXPECT_EQ(B.two_cells(), 3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) EXPECT_EQ(B.compose(x, y), (x + y) % 3);
}

TEST(LocallyDiscrete, OnlyIdentityTwoCells) {
  const auto C = locally_discrete(walking_arrow_category());
  EXPECT_EQ(C.two_cells(), C.one_cells());
  for (int a = 0; a < C.two_cells(); ++a) EXPECT_EQ(C.src2[a], C.tgt2[a]);
}

TEST(TwoFunctor, IdentityValidatesAndMutantsFail) {
  for (const auto& C : {walking_arrow(), two_cell_2category()}) {
    auto F = identity_2functor(C);
    EXPECT_TRUE(validate_2functor(C, C, F).ok());
  }
  const auto C = two_cell_2category();
  auto F = identity_2functor(C);
  F.on_one_cells[2] = 3;  // u -> v, but theta : u => v still maps to theta
  EXPECT_FALSE(validate_2functor(C, C, F).ok());
}
