#include <gtest/gtest.h>

#include "opcat/operadic.hpp"
#include "support.hpp"

using namespace opcat;

namespace {

std::vector<std::pair<std::string, UnaryOperadic2Cat>> corpus() {
  return {{"odot", terminal_odot()},
          {"bq1", bouquets(1)},
          {"bq2", bouquets(2)},
          {"bq3", bouquets(3)},
          {"paraZ2", para(cyclic_moncat(2))},
          {"paraZ3", para(cyclic_moncat(3))},
          {"paraPoset", para(poset_moncat())},
          {"WA", from_2category(walking_arrow())},
          {"K2", from_2category(two_cell_2category())}};
}

}  // namespace

TEST(Corpus, AllValidate) {
  for (const auto& [name, O] : corpus()) {
    const auto r = validate_operadic(O);
    EXPECT_TRUE(r.ok()) << name << "\n" << r.str();
  }
}

TEST(Corpus, DecalageOfTheAssembledSetIsTheNerve) {
  for (const auto& [name, O] : corpus()) {
    const auto X = to_simplicial(O);
    ASSERT_TRUE(validate_simplicial(X).ok()) << name;
    EXPECT_EQ(decalage_top(X), O.N.X) << name;
  }
}

TEST(Corpus, LaliTerminalUnits) {
  for (const auto& [name, O] : corpus()) EXPECT_TRUE(check_lali_terminal(O).ok()) << name;
}

TEST(Bouquets, LevelSizesArePowers) {
  for (int n = 1; n <= 3; ++n) {
    const auto X = to_simplicial(bouquets(n));
    long long p = n;
    for (int k = 0; k <= 4; ++k, p *= n) EXPECT_EQ(X.size(k), p) << "n=" << n << " level " << k;
  }
}

TEST(Para, DiscreteMonoidSizesFollowTheBarCount) {
  for (int m : {2, 3}) {
    const auto O = para(cyclic_moncat(m));
    EXPECT_EQ(O.objects(), m);
    EXPECT_EQ(O.one_cells(), m * m);
    EXPECT_EQ(O.triangles(), m * m * m);
    EXPECT_EQ(O.components, 1);
  }
}

TEST(Quasibijections, IdentitiesAreQuasibijections) {
  for (const auto& [name, O] : corpus())
    for (int x = 0; x < O.objects(); ++x) EXPECT_TRUE(is_quasibijection(O, O.C.id1[x])) << name;
}

TEST(Quasibijections, InBouquetsExactlyTheIdentities) {
  const auto O = bouquets(2);
  for (int g = 0; g < O.one_cells(); ++g)
    EXPECT_EQ(is_quasibijection(O, g), O.C.src1[g] == O.C.tgt1[g] && O.C.id1[O.C.src1[g]] == g) << g;
}

TEST(Mutants, EachIsCaughtWithItsItem) {
  const auto mutants = support::operadic_mutants();
  ASSERT_GE(mutants.size(), 20u);
  std::set<std::string> items;
  for (const auto& m : mutants) {
    EXPECT_EQ(support::check_mutant(m), "");
    items.insert(m.item);
  }
  EXPECT_EQ(items.size(), 9u);  // every axiom item (9)..(17)
}

TEST(Mutants, EverySingleEntryMutationOfBouquetsIsRejected) {
  const auto O0 = bouquets(2);
  int tried = 0;
  for (const char* name : {"phi0", "phi1", "phi2", "phi3", "u_neg1", "u0", "u1", "u2"}) {
    auto O = O0;
    auto& t = support::table(O, name);
    const int range = std::max<int>({O0.components, O0.objects(), O0.one_cells(), O0.triangles()});
    for (std::size_t i = 0; i < t.size(); ++i) {
      const int orig = t[i];
      for (int v = 0; v < std::min(range, 8); ++v) {
        if (v == orig) continue;
        t[i] = v;
        ++tried;
        EXPECT_FALSE(validate_operadic(O).ok()) << name << "[" << i << "] = " << v;
      }
      t[i] = orig;
    }
  }
  EXPECT_GT(tried, 100);
}

TEST(Mutants, ShapeErrorsAreTypingItems) {
  auto O = bouquets(2);
  O.phi2.pop_back();
  EXPECT_TRUE(validate_operadic(O).mentions_item("(3)"));
  auto P = bouquets(2);
  P.u0[0] = -1;
  EXPECT_TRUE(validate_operadic(P).mentions_item("(6)"));
  EXPECT_THROW(to_simplicial(P), InvalidInput);
}

TEST(Functors, IdentityAndUniqueMapToOdot) {
  for (const auto& [name, O] : corpus()) {
    auto p = std::make_shared<const UnaryOperadic2Cat>(O);
    EXPECT_TRUE(validate_operadic_functor(identity_functor(p)).ok()) << name;
  }
  auto B = std::make_shared<const UnaryOperadic2Cat>(bouquets(2));
  auto T = std::make_shared<const UnaryOperadic2Cat>(terminal_odot());
  const auto fs = enumerate_operadic_functors(B, T, 10);
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_TRUE(validate_operadic_functor(fs[0]).ok());
}

TEST(Functors, MutatedLevelMapFails) {
  auto B = std::make_shared<const UnaryOperadic2Cat>(bouquets(2));
  auto F = identity_functor(B);
  std::swap(F.level_map[2][0], F.level_map[2][1]);
  EXPECT_FALSE(validate_operadic_functor(F).ok());
}

TEST(Functors, FromTwoFunctor) {
  const auto C = walking_arrow();
  const auto T = terminal_2category();
  const auto F = functor_from_2functor(C, T, TwoFunctor{{0, 0}, {0, 0, 0}, {0, 0, 0}});
  EXPECT_TRUE(validate_operadic_functor(F).ok());
}
