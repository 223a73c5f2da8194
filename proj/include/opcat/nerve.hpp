#pragma once

// Duskin nerve of a finite strict 2-category, the lax slice sum DC and the
// comparison isomorphism dec NC -> N DC.

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <vector>

#include "opcat/simplicial.hpp"
#include "opcat/twocat.hpp"

namespace opcat {

namespace detail {

// lexicographic positions of pairs i<j and triples i<j<k inside [n]
struct SimplexLayout {
  std::array<std::array<std::array<int, 5>, 5>, 5> pair{};
  std::array<std::array<std::array<std::array<int, 5>, 5>, 5>, 5> triple{};
  std::array<int, 5> pairs{}, triples{};
  SimplexLayout() {
    for (int n = 0; n <= kMaxLevel; ++n) {
      int p = 0, t = 0;
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          pair[n][i][j] = p++;
          for (int k = j + 1; k <= n; ++k) triple[n][i][j][k] = t++;
        }
      pairs[n] = p;
      triples[n] = t;
    }
  }
};

inline const SimplexLayout& layout() {
  static const SimplexLayout L;
  return L;
}

}  // namespace detail

/// A normalised lax functor [n] -> C, stored as its canonical encoding:
/// the 1-cells f_ij (i<j, lexicographic), then the 2-cells a_ijk : f_jk o f_ij => f_ik,
/// then the objects x_0..x_n.
struct NerveSimplex {
  int dim = 0;
  std::vector<int> data;

  NerveSimplex() = default;
  explicit NerveSimplex(int n) : dim(n) {
    const auto& L = detail::layout();
    data.assign(L.pairs[n] + L.triples[n] + n + 1, -1);
  }
  int& x(int i) { return data[offset_obj() + i]; }
  int x(int i) const { return data[offset_obj() + i]; }
  int& f(int i, int j) { return data[detail::layout().pair[dim][i][j]]; }
  int f(int i, int j) const { return data[detail::layout().pair[dim][i][j]]; }
  int& a(int i, int j, int k) { return data[offset_tri() + detail::layout().triple[dim][i][j][k]]; }
  int a(int i, int j, int k) const { return data[offset_tri() + detail::layout().triple[dim][i][j][k]]; }
  bool operator==(const NerveSimplex&) const = default;
  bool operator<(const NerveSimplex& o) const { return data < o.data; }

 private:
  int offset_tri() const { return detail::layout().pairs[dim]; }
  int offset_obj() const { return detail::layout().pairs[dim] + detail::layout().triples[dim]; }
};

/// Lax triangle a : g o f => h.
struct LaxTriangle {
  int f, g, h, alpha;
};

/// The four 2-dimensional faces of a 3-simplex.
struct ThreeSimplex {
  LaxTriangle alpha123, alpha023, alpha013, alpha012;
};

inline LaxTriangle triangle_of(const NerveSimplex& s, int i = 0, int j = 1, int k = 2) {
  return {s.f(i, j), s.f(j, k), s.f(i, k), s.a(i, j, k)};
}

inline ThreeSimplex three_simplex_of(const NerveSimplex& s) {
  return {triangle_of(s, 1, 2, 3), triangle_of(s, 0, 2, 3), triangle_of(s, 0, 1, 3), triangle_of(s, 0, 1, 2)};
}

/// Restriction of s along a monotone map theta : [m] -> [dim s]. Collapsed edges
/// become identity 1-cells and collapsed triangles identity 2-cells.
inline NerveSimplex act(const Finite2Category& C, const NerveSimplex& s, const std::vector<int>& theta) {
  const int m = static_cast<int>(theta.size()) - 1;
  NerveSimplex r(m);
  for (int i = 0; i <= m; ++i) r.x(i) = s.x(theta[i]);
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      r.f(i, j) = theta[i] == theta[j] ? C.id1[s.x(theta[i])] : s.f(theta[i], theta[j]);
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k) {
        const int p = theta[i], q = theta[j], t = theta[k];
        r.a(i, j, k) = (p == q || q == t) ? C.id2[r.f(i, k)] : s.a(p, q, t);
      }
  return r;
}

inline std::vector<int> coface_map(int n, int i) {  // delta_i : [n-1] -> [n]
  std::vector<int> th;
  for (int v = 0; v <= n; ++v)
    if (v != i) th.push_back(v);
  return th;
}

inline std::vector<int> codegeneracy_map(int n, int j) {  // sigma_j : [n+1] -> [n]
  std::vector<int> th;
  for (int v = 0; v <= n + 1; ++v) th.push_back(v <= j ? v : v - 1);
  return th;
}

inline NerveSimplex face_of(const Finite2Category& C, const NerveSimplex& s, int i) {
  return act(C, s, coface_map(s.dim, i));
}
inline NerveSimplex degeneracy_of(const Finite2Category& C, const NerveSimplex& s, int j) {
  return act(C, s, codegeneracy_map(s.dim, j));
}

/// Pasting condition on a quadruple i<j<k<l of s.
inline bool pasting_holds(const Finite2Category& C, const NerveSimplex& s, int i, int j, int k, int l) {
  const int lhs = C.vcomp.get(s.a(i, j, l), C.hcomp.get(s.a(j, k, l), C.id2[s.f(i, j)]));
  const int rhs = C.vcomp.get(s.a(i, k, l), C.hcomp.get(C.id2[s.f(k, l)], s.a(i, j, k)));
  return lhs >= 0 && lhs == rhs;
}

/// The nerve cells with their encodings, plus the simplicial set they form.
struct NerveData {
  std::vector<std::vector<NerveSimplex>> simplices;
  std::vector<std::map<std::vector<int>, int>> index;
  TruncatedSimplicialSet X;

  int lookup(const NerveSimplex& s) const {
    auto it = index[s.dim].find(s.data);
    return it == index[s.dim].end() ? -1 : it->second;
  }
  int find(const NerveSimplex& s) const {
    const int v = lookup(s);
    if (v < 0) throw InternalInconsistency("nerve: simplex not found");
    return v;
  }
  const NerveSimplex& at(int k, int x) const { return simplices[k][x]; }
  int size(int k) const { return static_cast<int>(simplices[k].size()); }
};

/// All n-simplices extending the (n-1)-simplices in prev by a last vertex.
inline std::vector<NerveSimplex> extend_simplices(const Finite2Category& C,
                                                  const std::vector<NerveSimplex>& prev) {
  std::vector<NerveSimplex> out;
  if (prev.empty()) return out;
  const int n = prev.front().dim + 1;
  std::vector<std::vector<int>> into(C.objects);
  for (int f = 0; f < C.one_cells(); ++f) into[C.tgt1[f]].push_back(f);
  std::map<std::pair<int, int>, std::vector<int>> hom2;
  for (int a = 0; a < C.two_cells(); ++a) hom2[{C.src2[a], C.tgt2[a]}].push_back(a);
  static const std::vector<int> none;
  auto cells2 = [&](int s, int t) -> const std::vector<int>& {
    auto it = hom2.find({s, t});
    return it == hom2.end() ? none : it->second;
  };
  std::vector<std::pair<int, int>> pairs;  // (i,j) with i<j<n, lexicographic
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});

  for (const auto& base : prev) {
    NerveSimplex s(n);
    for (int i = 0; i < n; ++i) s.x(i) = base.x(i);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        s.f(i, j) = base.f(i, j);
        for (int k = j + 1; k < n; ++k) s.a(i, j, k) = base.a(i, j, k);
      }
    for (int y = 0; y < C.objects; ++y) {
      s.x(n) = y;
      std::function<void(int)> pick_edge, pick_cell;
      pick_cell = [&](int p) {
        if (p == static_cast<int>(pairs.size())) {
          out.push_back(s);
          return;
        }
        const auto [j, k] = pairs[p];
        for (int a : cells2(C.comp1.get(s.f(k, n), s.f(j, k)), s.f(j, n))) {
          s.a(j, k, n) = a;
          bool ok = true;
          for (int i = 0; ok && i < j; ++i) ok = pasting_holds(C, s, i, j, k, n);
          if (ok) pick_cell(p + 1);
        }
      };
      pick_edge = [&](int i) {
        if (i == n) {
          pick_cell(0);
          return;
        }
        for (int f : into[y]) {
          if (C.src1[f] != s.x(i)) continue;
          s.f(i, n) = f;
          pick_edge(i + 1);
        }
      };
      pick_edge(0);
    }
  }
  return out;
}

/// Enumerates the nerve up to max_level and assembles its face/degeneracy tables.
inline NerveData build_nerve(const Finite2Category& C, int max_level) {
  if (auto rep = validate_2category(C); !rep.ok()) throw InvalidInput("duskin_nerve: invalid 2-category", rep);
  if (max_level < 0 || max_level > kMaxLevel) throw Error("duskin_nerve: level out of range");
  NerveData N;
  N.simplices.resize(max_level + 1);
  N.index.resize(max_level + 1);
  for (int x = 0; x < C.objects; ++x) {
    NerveSimplex s(0);
    s.x(0) = x;
    N.simplices[0].push_back(s);
  }
  for (int k = 1; k <= max_level; ++k) N.simplices[k] = extend_simplices(C, N.simplices[k - 1]);
  std::vector<int> sizes;
  for (int k = 0; k <= max_level; ++k) {
    auto& v = N.simplices[k];
    std::sort(v.begin(), v.end());
    for (int x = 0; x < static_cast<int>(v.size()); ++x) N.index[k][v[x].data] = x;
    sizes.push_back(static_cast<int>(v.size()));
  }
  N.X = TruncatedSimplicialSet::shaped(sizes);
  for (int k = 0; k <= max_level; ++k)
    for (int x = 0; x < N.size(k); ++x) {
      const auto& s = N.simplices[k][x];
      if (k > 0)
        for (int i = 0; i <= k; ++i) N.X.face[k][i][x] = N.find(face_of(C, s, i));
      if (k < max_level)
        for (int j = 0; j <= k; ++j) N.X.degen[k][j][x] = N.find(degeneracy_of(C, s, j));
    }
  return N;
}

/// Levels 0..3: objects, 1-cells, lax triangles, pasting-compatible 3-simplices.
inline TruncatedSimplicialSet duskin_nerve(const Finite2Category& C) { return build_nerve(C, 3).X; }

/// The simplicial map induced by a strict 2-functor on nerves.
inline std::vector<std::vector<int>> nerve_map(const Finite2Category& C, const NerveData& NC,
                                               const Finite2Category& D, const NerveData& ND,
                                               const TwoFunctor& F) {
  (void)C;
  (void)D;
  const int n = std::min(static_cast<int>(NC.simplices.size()), static_cast<int>(ND.simplices.size())) - 1;
  std::vector<std::vector<int>> lm(n + 1);
  for (int k = 0; k <= n; ++k)
    for (const auto& s : NC.simplices[k]) {
      NerveSimplex t = s;
      for (int i = 0; i <= k; ++i) {
        t.x(i) = F.on_objects[s.x(i)];
        for (int j = i + 1; j <= k; ++j) {
          t.f(i, j) = F.on_one_cells[s.f(i, j)];
          for (int l = j + 1; l <= k; ++l) t.a(i, j, l) = F.on_two_cells[s.a(i, j, l)];
        }
      }
      lm[k].push_back(ND.find(t));
    }
  return lm;
}

// ---- lax slice sum ---------------------------------------------------------

/// DC = coproduct of lax slices C//x. Objects are the 1-cells of C. A 1-cell
/// h -> g is (f, a : g o f => h); a 2-cell (f',a') => (f'',a'') is c : f' => f''
/// with a'' . (1_g [] c) = a'.
struct LaxSlice {
  Finite2Category D;
  std::vector<int> base_f, base_alpha;    // per 1-cell of D
  std::vector<int> base_gamma;            // per 2-cell of D
  std::map<std::array<int, 3>, int> one_index;   // (f, alpha, g) -> 1-cell
  std::map<std::array<int, 3>, int> two_index;   // (src, tgt, gamma) -> 2-cell

  int one_cell(int f, int alpha, int g) const {
    auto it = one_index.find({f, alpha, g});
    if (it == one_index.end()) throw InternalInconsistency("lax slice: no such 1-cell");
    return it->second;
  }
  int two_cell(int s, int t, int gamma) const {
    auto it = two_index.find({s, t, gamma});
    if (it == two_index.end()) throw InternalInconsistency("lax slice: no such 2-cell");
    return it->second;
  }
};

inline LaxSlice lax_slice_sum(const Finite2Category& C) {
  if (auto rep = validate_2category(C); !rep.ok()) throw InvalidInput("lax_slice_sum: invalid 2-category", rep);
  LaxSlice L;
  auto& D = L.D;
  D.objects = C.one_cells();
  for (int f = 0; f < C.one_cells(); ++f)
    for (int a = 0; a < C.two_cells(); ++a)
      for (int g = 0; g < C.one_cells(); ++g) {
        if (C.src1[g] != C.tgt1[f] || C.comp1.get(g, f) != C.src2[a]) continue;
        const int e = D.add_one_cell(C.tgt2[a], g);
        L.base_f.push_back(f);
        L.base_alpha.push_back(a);
        L.one_index[{f, a, g}] = e;
      }
  D.id1.resize(D.objects);
  for (int g = 0; g < C.one_cells(); ++g) D.id1[g] = L.one_cell(C.id1[C.src1[g]], C.id2[g], g);
  for (int e2 = 0; e2 < D.one_cells(); ++e2)
    for (int e1 = 0; e1 < D.one_cells(); ++e1) {
      if (D.tgt1[e1] != D.src1[e2]) continue;
      const int f1 = L.base_f[e1], f2 = L.base_f[e2];
      const int a = C.vcomp.get(L.base_alpha[e1], C.hcomp.get(L.base_alpha[e2], C.id2[f1]));
      D.comp1.set(e2, e1, L.one_cell(C.comp1.get(f2, f1), a, D.tgt1[e2]));
    }
  for (int s = 0; s < D.one_cells(); ++s)
    for (int t = 0; t < D.one_cells(); ++t) {
      if (D.src1[s] != D.src1[t] || D.tgt1[s] != D.tgt1[t]) continue;
      const int g = D.tgt1[s];
      for (int c = 0; c < C.two_cells(); ++c) {
        if (C.src2[c] != L.base_f[s] || C.tgt2[c] != L.base_f[t]) continue;
        if (C.vcomp.get(L.base_alpha[t], C.hcomp.get(C.id2[g], c)) != L.base_alpha[s]) continue;
        const int e = D.add_two_cell(s, t);
        L.base_gamma.push_back(c);
        L.two_index[{s, t, c}] = e;
      }
    }
  D.id2.resize(D.one_cells());
  for (int e = 0; e < D.one_cells(); ++e) D.id2[e] = L.two_cell(e, e, C.id2[L.base_f[e]]);
  for (int c1 = 0; c1 < D.two_cells(); ++c1)
    for (int c2 = 0; c2 < D.two_cells(); ++c2) {
      if (D.tgt2[c1] == D.src2[c2])
        D.vcomp.set(c2, c1, L.two_cell(D.src2[c1], D.tgt2[c2],
                                       C.vcomp.get(L.base_gamma[c2], L.base_gamma[c1])));
      if (D.tgt1[D.src2[c1]] == D.src1[D.src2[c2]])
        D.hcomp.set(c2, c1, L.two_cell(D.comp1.get(D.src2[c2], D.src2[c1]), D.comp1.get(D.tgt2[c2], D.tgt2[c1]),
                                       C.hcomp.get(L.base_gamma[c2], L.base_gamma[c1])));
    }
  return L;
}

/// The k-simplex of DC corresponding to a (k+1)-simplex d of C: objects g_i = d_{i,k+1},
/// edges (d_ij, d_{i,j,k+1}), triangles d_ijl.
inline NerveSimplex dec_simplex(const LaxSlice& L, const NerveSimplex& d) {
  const int n = d.dim, k = n - 1;
  NerveSimplex r(k);
  for (int i = 0; i <= k; ++i) r.x(i) = d.f(i, n);
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) r.f(i, j) = L.one_cell(d.f(i, j), d.a(i, j, n), d.f(j, n));
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (int l = j + 1; l <= k; ++l)
        r.a(i, j, l) = L.two_cell(L.D.comp1.get(r.f(j, l), r.f(i, j)), r.f(i, l), d.a(i, j, l));
  return r;
}

/// Everything needed to compare dec NC (levels 0..3) with N DC.
struct DecNerve {
  std::shared_ptr<const TruncatedSimplicialSet> dec;  // dec of the 4-level nerve of C
  NerveData NC;                                       // levels 0..4
  LaxSlice slice;
  NerveData ND;                                       // levels 0..3
  SSetIso iso;
};

inline DecNerve dec_nerve_comparison(const Finite2Category& C) {
  DecNerve R;
  R.NC = build_nerve(C, 4);
  R.dec = std::make_shared<TruncatedSimplicialSet>(decalage_top(R.NC.X));
  R.slice = lax_slice_sum(C);
  R.ND = build_nerve(R.slice.D, 3);
  SSetMap F;
  F.source = R.dec;
  F.target = std::make_shared<TruncatedSimplicialSet>(R.ND.X);
  F.level_map.resize(4);
  for (int k = 0; k <= 3; ++k)
    for (const auto& d : R.NC.simplices[k + 1]) {
      const int y = R.ND.lookup(dec_simplex(R.slice, d));
      if (y < 0) throw InternalInconsistency("dec_nerve_iso: image simplex missing");
      F.level_map[k].push_back(y);
    }
  R.iso = certify_iso(std::move(F));
  if (!R.iso.certified) throw InternalInconsistency("dec_nerve_iso: certification failed:\n" + R.iso.report.str());
  return R;
}

inline SSetIso dec_nerve_iso(const Finite2Category& C) { return dec_nerve_comparison(C).iso; }

}  // namespace opcat
