#include <gtest/gtest.h>

#include "opcat/nerve.hpp"
#include "opcat/simplicial.hpp"

using namespace opcat;

namespace {

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// monotone maps [n] -> [k], counted by brute force
long long monotone_maps(int n, int k) {
  long long c = 0;
  std::vector<int> v(n + 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == n + 1) {
      ++c;
      return;
    }
    for (int x = lo; x <= k; ++x) rec(pos + 1, x);
  };
  rec(0, 0);
  return c;
}

}  // namespace

TEST(StandardSimplex, LevelSizesAreMonotoneMapCounts) {
  for (int k = 0; k <= 3; ++k) {
    const auto X = standard_simplex(k, 4);
    ASSERT_TRUE(validate_simplicial(X).ok());
    for (int n = 0; n <= 4; ++n) {
      EXPECT_EQ(X.size(n), monotone_maps(n, k));
      EXPECT_EQ(X.size(n), binom(n + k + 1, k));
    }
  }
}

TEST(StandardSimplex, NondegenerateCellsAreFaces) {
  const auto X = standard_simplex(3, 4);
  for (int n = 0; n <= 4; ++n) {
    int nondeg = 0;
    for (int x = 0; x < X.size(n); ++x) nondeg += !is_degenerate(X, n, x);
    EXPECT_EQ(nondeg, binom(4, n + 1)) << "level " << n;
  }
}

TEST(Validator, CatchesCorruptedFaceAndDegeneracy) {
  auto X = standard_simplex(2, 3);
  std::swap(X.face[2][0][1], X.face[2][0][2]);
  EXPECT_FALSE(validate_simplicial(X).ok());
  auto Y = standard_simplex(2, 3);
  int e = 0;
  while (Y.degen[1][0][e] == Y.degen[1][1][e]) ++e;
  Y.degen[1][0][e] = Y.degen[1][1][e];
  EXPECT_FALSE(validate_simplicial(Y).ok());
  auto Z = standard_simplex(1, 2);
  Z.face[1][0][0] = 7;
  EXPECT_FALSE(validate_simplicial(Z).ok());
}

TEST(Truncation, KeepsLowerLevels) {
  const auto X = standard_simplex(2, 4);
  const auto T = truncate(X, 2);
  EXPECT_EQ(T.max_level, 2);
  EXPECT_TRUE(validate_simplicial(T).ok());
  EXPECT_EQ(T.face[2], X.face[2]);
  EXPECT_THROW(truncate(X, 5), Error);
}

TEST(Decalage, ShiftsDeltaK) {
  // dec Delta^k has the level sizes of Delta^{k+1} shifted: |Delta^k_{n+1}|
  for (int k = 0; k <= 2; ++k) {
    const auto D = decalage_top(standard_simplex(k, 4));
    ASSERT_TRUE(validate_simplicial(D).ok());
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(D.size(n), binom(n + k + 2, k));
  }
}

TEST(Coskeleton, ExtendingTheTruncationOfANerveRecoversIt) {
  for (int k = 1; k <= 3; ++k) {
    const auto X = standard_simplex(k, 3);
    const auto C = coskeleton_extend(truncate(X, 2), 2);
    ASSERT_TRUE(validate_simplicial(C).ok());
    EXPECT_EQ(C.size(3), X.size(3));
  }
  // stable under repeated truncation and extension
  const auto N = duskin_nerve(walking_arrow());
  const auto C4 = coskeleton_extend(N, 3);
  EXPECT_EQ(truncate(C4, 3), N);
  EXPECT_EQ(coskeleton_extend(truncate(C4, 3), 3), C4);
}

TEST(Maps, EnumerationMatchesMonotoneMaps) {
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l) {
      const auto count = enumerate_sset_maps(standard_simplex(k, 3), standard_simplex(l, 3),
                                             [](const auto&) { return true; });
      EXPECT_EQ(count, monotone_maps(k, l)) << k << " -> " << l;
    }
}

TEST(Maps, EveryEnumeratedMapValidates) {
  auto X = std::make_shared<const TruncatedSimplicialSet>(standard_simplex(2, 3));
  auto Y = std::make_shared<const TruncatedSimplicialSet>(duskin_nerve(walking_arrow()));
  long long seen = 0;
  enumerate_sset_maps(*X, *Y, [&](const std::vector<std::vector<int>>& F) {
    ++seen;
    EXPECT_TRUE(validate_sset_map(*X, *Y, F).ok());
    return true;
  });
  // Delta^2 -> N(0 -> 1) is a monotone map [2] -> [1]
  EXPECT_EQ(seen, 4);
}

TEST(Maps, IdentityComposeAndIso) {
  auto X = std::make_shared<const TruncatedSimplicialSet>(standard_simplex(2, 3));
  const auto id = identity_map(X);
  EXPECT_TRUE(validate_sset_map(id).ok());
  EXPECT_EQ(compose(id, id).level_map, id.level_map);
  EXPECT_TRUE(certify_iso(id).certified);
  auto broken = id;
  std::swap(broken.level_map[1][0], broken.level_map[1][1]);
  EXPECT_FALSE(certify_iso(broken).certified);
}

TEST(Pullback, OverAPointIsTheProduct) {
  auto A = std::make_shared<const TruncatedSimplicialSet>(standard_simplex(1, 3));
  auto P = std::make_shared<const TruncatedSimplicialSet>(standard_simplex(0, 3));
  SSetMap f{A, P, {}};
  for (int k = 0; k <= 3; ++k) f.level_map.push_back(std::vector<int>(A->size(k), 0));
  const auto pb = pullback_ssets(f, f);
  EXPECT_TRUE(validate_simplicial(pb.apex).ok());
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(pb.apex.size(k), A->size(k) * A->size(k));
}

TEST(Horns, NerveOfACategoryHasUniqueFillers) {
  const auto X = duskin_nerve(walking_arrow());
  const auto horns = enumerate_horns32(X);
  EXPECT_FALSE(horns.empty());
  const FillerIndex idx(X);
  for (const auto& h : horns) {
    EXPECT_EQ(fillers(X, h).size(), 1u);
    EXPECT_EQ(idx(h).size(), 1u);
  }
}

TEST(Horns, IncompatibleFacesAreRejected) {
  const auto X = standard_simplex(2, 3);
  int rejected = 0;
  for (int a = 0; a < X.size(2); ++a)
    for (int b = 0; b < X.size(2); ++b)
      for (int c = 0; c < X.size(2); ++c) rejected += !try_make_horn(X, a, b, c).has_value();
  EXPECT_GT(rejected, 0);
  EXPECT_EQ(static_cast<int>(enumerate_horns32(X).size()) + rejected, X.size(2) * X.size(2) * X.size(2));
}
