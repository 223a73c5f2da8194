#pragma once

// Finite truncated simplicial sets (levels 0..4), their maps, decalage,
// coskeleta, pullbacks and (3,2)-horns.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "opcat/report.hpp"

namespace opcat {

inline constexpr int kMaxLevel = 4;

/// Cells are dense indices per level; every structure map is a table.
/// face[k][i][x] = d_i x for x in level k (k >= 1, 0 <= i <= k),
/// degen[k][j][x] = s_j x for x in level k (k < max_level, 0 <= j <= k).
struct TruncatedSimplicialSet {
  int max_level = 0;
  std::vector<int> cells;
  std::vector<std::vector<std::vector<int>>> face;
  std::vector<std::vector<std::vector<int>>> degen;

  int size(int k) const { return cells.at(k); }
  int d(int k, int i, int x) const { return face[k][i][x]; }
  int s(int k, int j, int x) const { return degen[k][j][x]; }

  /// Allocates tables for the given level sizes, filled with -1.
  static TruncatedSimplicialSet shaped(std::vector<int> sizes) {
    TruncatedSimplicialSet X;
    X.max_level = static_cast<int>(sizes.size()) - 1;
    if (X.max_level < 0 || X.max_level > kMaxLevel)
      throw Error("max_level must lie in 0..4");
    X.cells = std::move(sizes);
    X.face.resize(X.max_level + 1);
    X.degen.resize(X.max_level + 1);
    for (int k = 1; k <= X.max_level; ++k)
      X.face[k].assign(k + 1, std::vector<int>(X.cells[k], -1));
    for (int k = 0; k < X.max_level; ++k)
      X.degen[k].assign(k + 1, std::vector<int>(X.cells[k], -1));
    return X;
  }

  bool operator==(const TruncatedSimplicialSet&) const = default;
};

/// Checks totality and every simplicial identity on every cell.
inline ValidationReport validate_simplicial(const TruncatedSimplicialSet& X) {
  using detail::cat;
  ValidationReport r;
  const int n = X.max_level;
  if (n < 0 || n > kMaxLevel || static_cast<int>(X.cells.size()) != n + 1) {
    r.add("shape: max_level/cells mismatch", cat("max_level=", n));
    return r;
  }
  bool shape_ok = static_cast<int>(X.face.size()) == n + 1 &&
                  static_cast<int>(X.degen.size()) == n + 1;
  for (int k = 1; shape_ok && k <= n; ++k) {
    if (static_cast<int>(X.face[k].size()) != k + 1) { shape_ok = false; break; }
    for (int i = 0; i <= k; ++i) {
      if (static_cast<int>(X.face[k][i].size()) != X.cells[k]) { shape_ok = false; break; }
      for (int x = 0; x < X.cells[k]; ++x)
        if (X.face[k][i][x] < 0 || X.face[k][i][x] >= X.cells[k - 1])
          r.add(cat("d", i, " out of range"), cat("level ", k, " cell ", x));
    }
  }
  for (int k = 0; shape_ok && k < n; ++k) {
    if (static_cast<int>(X.degen[k].size()) != k + 1) { shape_ok = false; break; }
    for (int j = 0; j <= k; ++j) {
      if (static_cast<int>(X.degen[k][j].size()) != X.cells[k]) { shape_ok = false; break; }
      for (int x = 0; x < X.cells[k]; ++x)
        if (X.degen[k][j][x] < 0 || X.degen[k][j][x] >= X.cells[k + 1])
          r.add(cat("s", j, " out of range"), cat("level ", k, " cell ", x));
    }
  }
  if (!shape_ok) {
    r.add("shape: table dimensions do not match cell counts", "");
    return r;
  }
  if (!r.ok()) return r;

  // d_i d_j = d_{j-1} d_i for i < j
  for (int k = 2; k <= n; ++k)
    for (int x = 0; x < X.cells[k]; ++x)
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i)
          if (X.d(k - 1, i, X.d(k, j, x)) != X.d(k - 1, j - 1, X.d(k, i, x)))
            r.add(cat("d", i, "d", j, " = d", j - 1, "d", i), cat("level ", k, " cell ", x));
  // face/degeneracy identities
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < X.cells[k]; ++x)
      for (int j = 0; j <= k; ++j) {
        const int y = X.s(k, j, x);
        for (int i = 0; i <= k + 1; ++i) {
          const int lhs = X.d(k + 1, i, y);
          int rhs;
          std::string rule;
          if (i < j) {
            rhs = X.s(k - 1, j - 1, X.d(k, i, x));
            rule = cat("d", i, "s", j, " = s", j - 1, "d", i);
          } else if (i == j || i == j + 1) {
            rhs = x;
            rule = cat("d", i, "s", j, " = id");
          } else {
            rhs = X.s(k - 1, j, X.d(k, i - 1, x));
            rule = cat("d", i, "s", j, " = s", j, "d", i - 1);
          }
          if (lhs != rhs) r.add(rule, cat("level ", k, " cell ", x));
        }
      }
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int k = 0; k + 2 <= n; ++k)
    for (int x = 0; x < X.cells[k]; ++x)
      for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= j; ++i)
          if (X.s(k + 1, i, X.s(k, j, x)) != X.s(k + 1, j + 1, X.s(k, i, x)))
            r.add(cat("s", i, "s", j, " = s", j + 1, "s", i), cat("level ", k, " cell ", x));
  return r;
}

/// True iff x lies in the image of some degeneracy.
inline bool is_degenerate(const TruncatedSimplicialSet& X, int k, int x) {
  if (k == 0) return false;
  for (int j = 0; j < k; ++j)
    if (X.s(k - 1, j, X.d(k, j, x)) == x) return true;
  return false;
}

/// Delta^k truncated at max_level; n-cells are monotone maps [n] -> [k],
/// enumerated in lexicographic order.
inline TruncatedSimplicialSet standard_simplex(int k, int max_level) {
  std::vector<std::vector<std::vector<int>>> lvl(max_level + 1);
  std::vector<std::map<std::vector<int>, int>> index(max_level + 1);
  for (int n = 0; n <= max_level; ++n) {
    std::vector<int> cur(n + 1, 0);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
      if (pos == n + 1) {
        index[n][cur] = static_cast<int>(lvl[n].size());
        lvl[n].push_back(cur);
        return;
      }
      for (int v = lo; v <= k; ++v) {
        cur[pos] = v;
        rec(pos + 1, v);
      }
    };
    rec(0, 0);
  }
  std::vector<int> sizes;
  for (auto& l : lvl) sizes.push_back(static_cast<int>(l.size()));
  auto X = TruncatedSimplicialSet::shaped(sizes);
  for (int n = 1; n <= max_level; ++n)
    for (int x = 0; x < X.cells[n]; ++x)
      for (int i = 0; i <= n; ++i) {
        auto v = lvl[n][x];
        v.erase(v.begin() + i);
        X.face[n][i][x] = index[n - 1].at(v);
      }
  for (int n = 0; n < max_level; ++n)
    for (int x = 0; x < X.cells[n]; ++x)
      for (int j = 0; j <= n; ++j) {
        auto v = lvl[n][x];
        v.insert(v.begin() + j, v[j]);
        X.degen[n][j][x] = index[n + 1].at(v);
      }
  return X;
}

inline TruncatedSimplicialSet truncate(const TruncatedSimplicialSet& X, int n) {
  if (n < 0 || n > X.max_level) throw Error("truncation level out of range");
  TruncatedSimplicialSet Y;
  Y.max_level = n;
  Y.cells.assign(X.cells.begin(), X.cells.begin() + n + 1);
  Y.face.assign(X.face.begin(), X.face.begin() + n + 1);
  Y.degen.assign(X.degen.begin(), X.degen.begin() + n + 1);
  Y.degen[n].clear();
  return Y;
}

/// Upper decalage: shifts every level down by one and forgets the top face
/// and top degeneracy at each level.
inline TruncatedSimplicialSet decalage_top(const TruncatedSimplicialSet& X) {
  if (X.max_level < 1) throw Error("cannot decale a 0-truncated set");
  const int m = X.max_level - 1;
  TruncatedSimplicialSet Y;
  Y.max_level = m;
  Y.cells.assign(X.cells.begin() + 1, X.cells.end());
  Y.face.resize(m + 1);
  Y.degen.resize(m + 1);
  for (int n = 1; n <= m; ++n)
    Y.face[n].assign(X.face[n + 1].begin(), X.face[n + 1].begin() + n + 1);
  for (int n = 0; n < m; ++n)
    Y.degen[n].assign(X.degen[n + 1].begin(), X.degen[n + 1].begin() + n + 1);
  return Y;
}

/// Adds level n+1 consisting of all boundary-compatible (n+2)-tuples of
/// n-cells (d_i x_j = d_{j-1} x_i for i < j), ordered lexicographically.
inline TruncatedSimplicialSet coskeleton_extend(const TruncatedSimplicialSet& X, int n) {
  if (X.max_level != n) throw Error("coskeleton_extend: max_level must equal n");
  if (n != 2 && n != 3) throw Error("coskeleton_extend: n must be 2 or 3");
  // candidates with a prescribed d_0
  std::vector<std::vector<int>> by_d0(X.cells[n - 1]);
  for (int x = 0; x < X.cells[n]; ++x) by_d0[X.d(n, 0, x)].push_back(x);

  std::vector<std::vector<int>> shells;
  std::map<std::vector<int>, int> index;
  std::vector<int> cur(n + 2, -1);
  std::function<void(int)> rec = [&](int j) {
    if (j == n + 2) {
      index[cur] = static_cast<int>(shells.size());
      shells.push_back(cur);
      return;
    }
    auto try_cell = [&](int x) {
      for (int i = 0; i < j; ++i)
        if (X.d(n, i, x) != X.d(n, j - 1, cur[i])) return;
      cur[j] = x;
      rec(j + 1);
    };
    if (j == 0) {
      for (int x = 0; x < X.cells[n]; ++x) try_cell(x);
    } else {
      for (int x : by_d0[X.d(n, j - 1, cur[0])]) try_cell(x);
    }
  };
  rec(0);

  auto sizes = X.cells;
  sizes.push_back(static_cast<int>(shells.size()));
  auto Y = TruncatedSimplicialSet::shaped(sizes);
  for (int k = 1; k <= n; ++k) Y.face[k] = X.face[k];
  for (int k = 0; k < n; ++k) Y.degen[k] = X.degen[k];
  for (int c = 0; c < static_cast<int>(shells.size()); ++c)
    for (int i = 0; i <= n + 1; ++i) Y.face[n + 1][i][c] = shells[c][i];
  for (int y = 0; y < X.cells[n]; ++y)
    for (int j = 0; j <= n; ++j) {
      std::vector<int> t(n + 2);
      for (int i = 0; i <= n + 1; ++i) {
        if (i < j) t[i] = X.s(n - 1, j - 1, X.d(n, i, y));
        else if (i == j || i == j + 1) t[i] = y;
        else t[i] = X.s(n - 1, j, X.d(n, i - 1, y));
      }
      auto it = index.find(t);
      if (it == index.end()) throw InternalInconsistency("degenerate shell missing");
      Y.degen[n][j][y] = it->second;
    }
  return Y;
}

/// A map of truncated simplicial sets; level_map[k][x] is the image of x.
struct SSetMap {
  std::shared_ptr<const TruncatedSimplicialSet> source;
  std::shared_ptr<const TruncatedSimplicialSet> target;
  std::vector<std::vector<int>> level_map;

  int operator()(int k, int x) const { return level_map[k][x]; }
};

inline ValidationReport validate_sset_map(const TruncatedSimplicialSet& X,
                                          const TruncatedSimplicialSet& Y,
                                          const std::vector<std::vector<int>>& F) {
  using detail::cat;
  ValidationReport r;
  const int n = std::min(X.max_level, Y.max_level);
  if (static_cast<int>(F.size()) < n + 1) {
    r.add("level map missing levels", cat("have ", F.size()));
    return r;
  }
  for (int k = 0; k <= n; ++k) {
    if (static_cast<int>(F[k].size()) != X.cells[k]) {
      r.add("level map has wrong length", cat("level ", k));
      return r;
    }
    for (int x = 0; x < X.cells[k]; ++x)
      if (F[k][x] < 0 || F[k][x] >= Y.cells[k])
        r.add("image out of range", cat("level ", k, " cell ", x));
  }
  if (!r.ok()) return r;
  for (int k = 1; k <= n; ++k)
    for (int x = 0; x < X.cells[k]; ++x)
      for (int i = 0; i <= k; ++i)
        if (F[k - 1][X.d(k, i, x)] != Y.d(k, i, F[k][x]))
          r.add(cat("face d", i, " square at level ", k), cat("cell ", x));
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < X.cells[k]; ++x)
      for (int j = 0; j <= k; ++j)
        if (F[k + 1][X.s(k, j, x)] != Y.s(k, j, F[k][x]))
          r.add(cat("degeneracy s", j, " square at level ", k), cat("cell ", x));
  return r;
}

inline ValidationReport validate_sset_map(const SSetMap& F) {
  if (!F.source || !F.target) {
    ValidationReport r;
    r.add("map without source or target", "");
    return r;
  }
  return validate_sset_map(*F.source, *F.target, F.level_map);
}

inline SSetMap identity_map(std::shared_ptr<const TruncatedSimplicialSet> X) {
  SSetMap F{X, X, {}};
  for (int k = 0; k <= X->max_level; ++k) {
    std::vector<int> v(X->cells[k]);
    for (int x = 0; x < X->cells[k]; ++x) v[x] = x;
    F.level_map.push_back(std::move(v));
  }
  return F;
}

inline SSetMap compose(const SSetMap& g, const SSetMap& f) {
  SSetMap h{f.source, g.target, {}};
  const std::size_t n = std::min(f.level_map.size(), g.level_map.size());
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<int> v(f.level_map[k].size());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = g.level_map[k][f.level_map[k][x]];
    h.level_map.push_back(std::move(v));
  }
  return h;
}

/// Levelwise bijectivity; together with validate_sset_map this certifies an isomorphism.
inline bool is_levelwise_bijective(const TruncatedSimplicialSet& X, const TruncatedSimplicialSet& Y,
                                   const std::vector<std::vector<int>>& F) {
  if (X.max_level != Y.max_level || X.cells != Y.cells) return false;
  for (int k = 0; k <= X.max_level; ++k) {
    std::vector<char> hit(Y.cells[k], 0);
    for (int x = 0; x < X.cells[k]; ++x) {
      const int y = F[k][x];
      if (y < 0 || y >= Y.cells[k] || hit[y]) return false;
      hit[y] = 1;
    }
  }
  return true;
}

/// Isomorphism certificate: the explicit map plus the outcome of checking it.
struct SSetIso {
  SSetMap map;
  bool certified = false;
  ValidationReport report;
};

inline SSetIso certify_iso(SSetMap F) {
  SSetIso iso{std::move(F), false, {}};
  iso.report = validate_sset_map(iso.map);
  if (!is_levelwise_bijective(*iso.map.source, *iso.map.target, iso.map.level_map))
    iso.report.add("map is not a levelwise bijection", "");
  iso.certified = iso.report.ok();
  return iso;
}

struct Pullback {
  TruncatedSimplicialSet apex;
  std::vector<std::vector<int>> first;   // apex -> source of f
  std::vector<std::vector<int>> second;  // apex -> source of g
  /// apex cell for a pair, or -1
  std::vector<std::map<std::pair<int, int>, int>> pair_index;
};

/// Levelwise fiber product of f: A -> C and g: B -> C.
inline Pullback pullback_ssets(const SSetMap& f, const SSetMap& g) {
  if (!f.target || !g.target || !(*f.target == *g.target))
    throw Error("pullback_ssets: maps have different targets");
  const auto& A = *f.source;
  const auto& B = *g.source;
  const int n = std::min(A.max_level, B.max_level);
  Pullback P;
  P.first.resize(n + 1);
  P.second.resize(n + 1);
  P.pair_index.resize(n + 1);
  std::vector<int> sizes;
  for (int k = 0; k <= n; ++k) {
    std::map<int, std::vector<int>> over;
    for (int b = 0; b < B.cells[k]; ++b) over[g(k, b)].push_back(b);
    for (int a = 0; a < A.cells[k]; ++a) {
      auto it = over.find(f(k, a));
      if (it == over.end()) continue;
      for (int b : it->second) {
        P.pair_index[k][{a, b}] = static_cast<int>(P.first[k].size());
        P.first[k].push_back(a);
        P.second[k].push_back(b);
      }
    }
    sizes.push_back(static_cast<int>(P.first[k].size()));
  }
  P.apex = TruncatedSimplicialSet::shaped(sizes);
  for (int k = 1; k <= n; ++k)
    for (int c = 0; c < sizes[k]; ++c)
      for (int i = 0; i <= k; ++i)
        P.apex.face[k][i][c] =
            P.pair_index[k - 1].at({A.d(k, i, P.first[k][c]), B.d(k, i, P.second[k][c])});
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < sizes[k]; ++c)
      for (int j = 0; j <= k; ++j)
        P.apex.degen[k][j][c] =
            P.pair_index[k + 1].at({A.s(k, j, P.first[k][c]), B.s(k, j, P.second[k][c])});
  return P;
}

/// A (3,2)-horn: the faces 0, 1 and 3 of a would-be 3-simplex, each a 2-cell.
/// Only constructible through make_horn, which checks compatibility.
class Horn32 {
 public:
  int face0() const { return f0_; }
  int face1() const { return f1_; }
  int face3() const { return f3_; }
  bool operator==(const Horn32&) const = default;
  auto operator<=>(const Horn32&) const = default;

  static bool compatible(const TruncatedSimplicialSet& X, int x0, int x1, int x3) {
    return X.d(2, 0, x1) == X.d(2, 0, x0) && X.d(2, 0, x3) == X.d(2, 2, x0) &&
           X.d(2, 1, x3) == X.d(2, 2, x1);
  }

  friend std::optional<Horn32> try_make_horn(const TruncatedSimplicialSet& X, int x0, int x1, int x3);

 private:
  Horn32(int a, int b, int c) : f0_(a), f1_(b), f3_(c) {}
  int f0_, f1_, f3_;
};

inline std::optional<Horn32> try_make_horn(const TruncatedSimplicialSet& X, int x0, int x1, int x3) {
  if (X.max_level < 2) throw Error("horns need level 2");
  for (int x : {x0, x1, x3})
    if (x < 0 || x >= X.cells[2]) throw Error("horn face out of range");
  if (!Horn32::compatible(X, x0, x1, x3)) return std::nullopt;
  return Horn32(x0, x1, x3);
}

inline Horn32 make_horn(const TruncatedSimplicialSet& X, int x0, int x1, int x3) {
  auto h = try_make_horn(X, x0, x1, x3);
  if (!h) throw Error("not a horn");
  return *h;
}

/// Every compatible (3,2)-horn, ordered by (face0, face1, face3).
inline std::vector<Horn32> enumerate_horns32(const TruncatedSimplicialSet& X) {
  if (X.max_level < 3) throw Error("enumerate_horns32 needs max_level >= 3");
  std::vector<Horn32> out;
  const int n2 = X.cells[2];
  std::vector<std::vector<int>> by_d0(X.cells[1]);
  for (int x = 0; x < n2; ++x) by_d0[X.d(2, 0, x)].push_back(x);
  for (int x0 = 0; x0 < n2; ++x0)
    for (int x1 : by_d0[X.d(2, 0, x0)])
      for (int x3 : by_d0[X.d(2, 2, x0)])
        if (auto h = try_make_horn(X, x0, x1, x3)) out.push_back(*h);
  return out;
}

/// Lookup of 3-cells by their (d0, d1, d3) faces.
class FillerIndex {
 public:
  explicit FillerIndex(const TruncatedSimplicialSet& X) {
    if (X.max_level < 3) throw Error("fillers need max_level >= 3");
    for (int s = 0; s < X.cells[3]; ++s)
      index_[{X.d(3, 0, s), X.d(3, 1, s), X.d(3, 3, s)}].push_back(s);
  }
  const std::vector<int>& operator()(int x0, int x1, int x3) const {
    static const std::vector<int> none;
    auto it = index_.find({x0, x1, x3});
    return it == index_.end() ? none : it->second;
  }
  const std::vector<int>& operator()(const Horn32& h) const {
    return (*this)(h.face0(), h.face1(), h.face3());
  }

 private:
  std::map<std::tuple<int, int, int>, std::vector<int>> index_;
};

inline std::vector<int> fillers(const TruncatedSimplicialSet& X, const Horn32& h) {
  if (X.max_level < 3) throw Error("fillers need max_level >= 3");
  if (!Horn32::compatible(X, h.face0(), h.face1(), h.face3())) throw Error("not a horn");
  std::vector<int> out;
  for (int s = 0; s < X.cells[3]; ++s)
    if (X.d(3, 0, s) == h.face0() && X.d(3, 1, s) == h.face1() && X.d(3, 3, s) == h.face3())
      out.push_back(s);
  return out;
}

/// Enumerates every simplicial map X -> Y on levels 0..min(max levels).
/// The callback returns false to stop early. Returns the number visited.
inline long long enumerate_sset_maps(
    const TruncatedSimplicialSet& X, const TruncatedSimplicialSet& Y,
    const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
  const int n = std::min(X.max_level, Y.max_level);
  // candidates of Y_k keyed by the full face tuple
  std::vector<std::map<std::vector<int>, std::vector<int>>> by_faces(n + 1);
  for (int k = 1; k <= n; ++k)
    for (int y = 0; y < Y.cells[k]; ++y) {
      std::vector<int> f(k + 1);
      for (int i = 0; i <= k; ++i) f[i] = Y.d(k, i, y);
      by_faces[k][f].push_back(y);
    }
  // a degenerate cell x = s_j w has a forced image
  std::vector<std::vector<std::pair<int, int>>> forced(n + 1);
  for (int k = 0; k <= n; ++k) {
    forced[k].assign(X.cells[k], {-1, -1});
    if (k == 0) continue;
    for (int x = 0; x < X.cells[k]; ++x)
      for (int j = 0; j < k; ++j) {
        const int w = X.d(k, j, x);
        if (X.s(k - 1, j, w) == x) {
          forced[k][x] = {j, w};
          break;
        }
      }
  }
  std::vector<std::vector<int>> F(n + 1);
  for (int k = 0; k <= n; ++k) F[k].assign(X.cells[k], -1);
  std::vector<int> all0(Y.cells[0]);
  for (int y = 0; y < Y.cells[0]; ++y) all0[y] = y;

  long long count = 0;
  bool stop = false;
  std::function<void(int, int)> rec = [&](int k, int x) {
    if (stop) return;
    if (x == X.cells[k]) {
      if (k == n) {
        ++count;
        if (!visit(F)) stop = true;
        return;
      }
      rec(k + 1, 0);
      return;
    }
    if (k > 0 && forced[k][x].first >= 0) {
      const int y = Y.s(k - 1, forced[k][x].first, F[k - 1][forced[k][x].second]);
      for (int i = 0; i <= k; ++i)
        if (Y.d(k, i, y) != F[k - 1][X.d(k, i, x)]) return;
      F[k][x] = y;
      rec(k, x + 1);
      return;
    }
    const std::vector<int>* cand = &all0;
    if (k > 0) {
      std::vector<int> f(k + 1);
      for (int i = 0; i <= k; ++i) f[i] = F[k - 1][X.d(k, i, x)];
      auto it = by_faces[k].find(f);
      if (it == by_faces[k].end()) return;
      cand = &it->second;
    }
    for (int y : *cand) {
      F[k][x] = y;
      rec(k, x + 1);
      if (stop) return;
    }
  };
  rec(0, 0);
  return count;
}

}  // namespace opcat
