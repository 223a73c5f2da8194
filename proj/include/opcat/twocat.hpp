#pragma once

// Finite categories, strict 2-categories and strict monoidal categories.

#include <numeric>
#include <vector>

#include "opcat/report.hpp"
#include "opcat/tables.hpp"

namespace opcat {

/// comp(g, f) = g o f, defined exactly when tgt f = src g.
struct FiniteCategory {
  int objects = 0;
  std::vector<int> src, tgt;
  std::vector<int> id;
  PairTable comp;

  int morphisms() const { return static_cast<int>(src.size()); }
  int add_morphism(int s, int t) {
    src.push_back(s);
    tgt.push_back(t);
    return morphisms() - 1;
  }
  bool operator==(const FiniteCategory&) const = default;
};

inline ValidationReport validate_category(const FiniteCategory& C) {
  using detail::cat;
  ValidationReport r;
  const int m = C.morphisms();
  if (static_cast<int>(C.tgt.size()) != m || static_cast<int>(C.id.size()) != C.objects) {
    r.add("shape: table lengths", "");
    return r;
  }
  for (int f = 0; f < m; ++f)
    if (C.src[f] < 0 || C.src[f] >= C.objects || C.tgt[f] < 0 || C.tgt[f] >= C.objects)
      r.add("morphism endpoint out of range", cat("morphism ", f));
  for (int x = 0; x < C.objects; ++x)
    if (C.id[x] < 0 || C.id[x] >= m || C.src[C.id[x]] != x || C.tgt[C.id[x]] != x)
      r.add("identity is not an endomorphism of its object", cat("object ", x));
  if (!r.ok()) return r;
  std::vector<std::vector<int>> out(C.objects);
  for (int f = 0; f < m; ++f) out[C.src[f]].push_back(f);
  std::size_t defined = 0;
  for (int f = 0; f < m; ++f)
    for (int g : out[C.tgt[f]]) {
      ++defined;
      const int gf = C.comp.get(g, f);
      if (gf < 0 || gf >= m) {
        r.add("composite missing", cat("(", g, ",", f, ")"));
        continue;
      }
      if (C.src[gf] != C.src[f] || C.tgt[gf] != C.tgt[g])
        r.add("composite has wrong endpoints", cat("(", g, ",", f, ")"));
    }
  if (C.comp.size() != defined) r.add("composite defined on a non-composable pair", "");
  if (!r.ok()) return r;
  for (int f = 0; f < m; ++f) {
    if (C.comp.get(f, C.id[C.src[f]]) != f) r.add("right unit law", cat("morphism ", f));
    if (C.comp.get(C.id[C.tgt[f]], f) != f) r.add("left unit law", cat("morphism ", f));
    for (int g : out[C.tgt[f]])
      for (int h : out[C.tgt[g]])
        if (C.comp.get(h, C.comp.get(g, f)) != C.comp.get(C.comp.get(h, g), f))
          r.add("associativity", cat("(", h, ",", g, ",", f, ")"));
  }
  return r;
}

/// A strict 2-category with finitely many cells.
/// comp1(g, f) = g o f on 1-cells; vcomp(b, a) = b . a on 2-cells with tgt a = src b;
/// hcomp(b, a) = b [] a whenever the 1-cells src2 a and src2 b are composable.
struct Finite2Category {
  int objects = 0;
  std::vector<int> src1, tgt1, id1;
  PairTable comp1;
  std::vector<int> src2, tgt2, id2;
  PairTable vcomp, hcomp;

  int one_cells() const { return static_cast<int>(src1.size()); }
  int two_cells() const { return static_cast<int>(src2.size()); }
  int add_one_cell(int s, int t) {
    src1.push_back(s);
    tgt1.push_back(t);
    return one_cells() - 1;
  }
  int add_two_cell(int s, int t) {
    src2.push_back(s);
    tgt2.push_back(t);
    return two_cells() - 1;
  }
  int compose(int g, int f) const { return comp1.get(g, f); }
  bool operator==(const Finite2Category&) const = default;
};

namespace detail {

struct TwoCatIndex {
  std::vector<std::vector<int>> out1;    // 1-cells by source object
  std::vector<std::vector<int>> from2;   // 2-cells by source 1-cell
  explicit TwoCatIndex(const Finite2Category& C) : out1(C.objects), from2(C.one_cells()) {
    for (int f = 0; f < C.one_cells(); ++f) out1[C.src1[f]].push_back(f);
    for (int a = 0; a < C.two_cells(); ++a) from2[C.src2[a]].push_back(a);
  }
};

}  // namespace detail

inline ValidationReport validate_2category(const Finite2Category& C) {
  using detail::cat;
  ValidationReport r;
  const int n1 = C.one_cells(), n2 = C.two_cells();
  if (static_cast<int>(C.tgt1.size()) != n1 || static_cast<int>(C.id1.size()) != C.objects ||
      static_cast<int>(C.tgt2.size()) != n2 || static_cast<int>(C.id2.size()) != n1) {
    r.add("shape: table lengths", "");
    return r;
  }
  for (int f = 0; f < n1; ++f)
    if (C.src1[f] < 0 || C.src1[f] >= C.objects || C.tgt1[f] < 0 || C.tgt1[f] >= C.objects)
      r.add("1-cell endpoint out of range", cat("1-cell ", f));
  for (int a = 0; a < n2; ++a)
    if (C.src2[a] < 0 || C.src2[a] >= n1 || C.tgt2[a] < 0 || C.tgt2[a] >= n1)
      r.add("2-cell endpoint out of range", cat("2-cell ", a));
  if (!r.ok()) return r;
  for (int a = 0; a < n2; ++a)
    if (C.src1[C.src2[a]] != C.src1[C.tgt2[a]] || C.tgt1[C.src2[a]] != C.tgt1[C.tgt2[a]])
      r.add("2-cell between non-parallel 1-cells", cat("2-cell ", a));
  for (int x = 0; x < C.objects; ++x)
    if (C.id1[x] < 0 || C.id1[x] >= n1 || C.src1[C.id1[x]] != x || C.tgt1[C.id1[x]] != x)
      r.add("identity 1-cell has wrong endpoints", cat("object ", x));
  for (int f = 0; f < n1; ++f)
    if (C.id2[f] < 0 || C.id2[f] >= n2 || C.src2[C.id2[f]] != f || C.tgt2[C.id2[f]] != f)
      r.add("identity 2-cell has wrong endpoints", cat("1-cell ", f));
  if (!r.ok()) return r;

  detail::TwoCatIndex ix(C);
  // 1-cell composition
  std::size_t defined = 0;
  for (int f = 0; f < n1; ++f)
    for (int g : ix.out1[C.tgt1[f]]) {
      ++defined;
      const int gf = C.comp1.get(g, f);
      if (gf < 0 || gf >= n1 || C.src1[gf] != C.src1[f] || C.tgt1[gf] != C.tgt1[g])
        r.add("1-cell composite missing or mistyped", cat("(", g, ",", f, ")"));
    }
  if (C.comp1.size() != defined) r.add("1-cell composite defined on non-composable pair", "");
  // vertical composition
  defined = 0;
  for (int a = 0; a < n2; ++a)
    for (int b : ix.from2[C.tgt2[a]]) {
      ++defined;
      const int ba = C.vcomp.get(b, a);
      if (ba < 0 || ba >= n2 || C.src2[ba] != C.src2[a] || C.tgt2[ba] != C.tgt2[b])
        r.add("vertical composite missing or mistyped", cat("(", b, ",", a, ")"));
    }
  if (C.vcomp.size() != defined) r.add("vertical composite defined on non-composable pair", "");
  if (!r.ok()) return r;
  // horizontal composition
  defined = 0;
  for (int a = 0; a < n2; ++a)
    for (int g : ix.out1[C.tgt1[C.src2[a]]])
      for (int b : ix.from2[g]) {
        ++defined;
        const int ba = C.hcomp.get(b, a);
        if (ba < 0 || ba >= n2 || C.src2[ba] != C.comp1.get(C.src2[b], C.src2[a]) ||
            C.tgt2[ba] != C.comp1.get(C.tgt2[b], C.tgt2[a]))
          r.add("horizontal composite missing or mistyped", cat("(", b, ",", a, ")"));
      }
  if (C.hcomp.size() != defined) r.add("horizontal composite defined on non-composable pair", "");
  if (!r.ok()) return r;

  for (int f = 0; f < n1; ++f) {
    if (C.comp1.get(f, C.id1[C.src1[f]]) != f) r.add("1-cell right unit", cat("1-cell ", f));
    if (C.comp1.get(C.id1[C.tgt1[f]], f) != f) r.add("1-cell left unit", cat("1-cell ", f));
    for (int g : ix.out1[C.tgt1[f]]) {
      if (C.hcomp.get(C.id2[g], C.id2[f]) != C.id2[C.comp1.get(g, f)])
        r.add("identity 2-cells compose horizontally", cat("(", g, ",", f, ")"));
      for (int h : ix.out1[C.tgt1[g]])
        if (C.comp1.get(h, C.comp1.get(g, f)) != C.comp1.get(C.comp1.get(h, g), f))
          r.add("1-cell associativity", cat("(", h, ",", g, ",", f, ")"));
    }
  }
  for (int a = 0; a < n2; ++a) {
    if (C.vcomp.get(a, C.id2[C.src2[a]]) != a) r.add("vertical right unit", cat("2-cell ", a));
    if (C.vcomp.get(C.id2[C.tgt2[a]], a) != a) r.add("vertical left unit", cat("2-cell ", a));
    const int s = C.src1[C.src2[a]], t = C.tgt1[C.src2[a]];
    if (C.hcomp.get(a, C.id2[C.id1[s]]) != a) r.add("horizontal right unit", cat("2-cell ", a));
    if (C.hcomp.get(C.id2[C.id1[t]], a) != a) r.add("horizontal left unit", cat("2-cell ", a));
    for (int b : ix.from2[C.tgt2[a]])
      for (int c : ix.from2[C.tgt2[b]])
        if (C.vcomp.get(c, C.vcomp.get(b, a)) != C.vcomp.get(C.vcomp.get(c, b), a))
          r.add("vertical associativity", cat("(", c, ",", b, ",", a, ")"));
    for (int g : ix.out1[t])
      for (int b : ix.from2[g])
        for (int h : ix.out1[C.tgt1[g]])
          for (int c : ix.from2[h])
            if (C.hcomp.get(c, C.hcomp.get(b, a)) != C.hcomp.get(C.hcomp.get(c, b), a))
              r.add("horizontal associativity", cat("(", c, ",", b, ",", a, ")"));
  }
  // interchange: (d . c) [] (b . a) = (d [] b) . (c [] a), with a;b vertical on the
  // right-hand 1-cells and c;d vertical on the left-hand 1-cells
  for (int a = 0; a < n2; ++a)
    for (int b : ix.from2[C.tgt2[a]])
      for (int g : ix.out1[C.tgt1[C.src2[a]]])
        for (int c : ix.from2[g])
          for (int d : ix.from2[C.tgt2[c]]) {
            const int lhs = C.hcomp.get(C.vcomp.get(d, c), C.vcomp.get(b, a));
            const int rhs = C.vcomp.get(C.hcomp.get(d, b), C.hcomp.get(c, a));
            if (lhs != rhs)
              r.add("interchange law", cat("a=", a, " b=", b, " c=", c, " d=", d));
          }
  return r;
}

/// Strict monoidal category: an underlying finite category with strictly
/// associative and unital tensor tables on objects and morphisms.
struct StrictMonCat {
  FiniteCategory cat;
  int unit = 0;
  std::vector<int> tensor_obj;  // objects x objects, row-major
  std::vector<int> tensor_mor;  // morphisms x morphisms, row-major

  int tensor(int x, int y) const { return tensor_obj[x * cat.objects + y]; }
  int tensor_m(int f, int g) const { return tensor_mor[f * cat.morphisms() + g]; }
  bool operator==(const StrictMonCat&) const = default;
};

inline ValidationReport validate_moncat(const StrictMonCat& M) {
  using detail::cat;
  ValidationReport r = validate_category(M.cat);
  if (!r.ok()) return r;
  const int n = M.cat.objects, m = M.cat.morphisms();
  if (static_cast<int>(M.tensor_obj.size()) != n * n ||
      static_cast<int>(M.tensor_mor.size()) != m * m || M.unit < 0 || M.unit >= n) {
    r.add("shape: tensor tables", "");
    return r;
  }
  for (int v : M.tensor_obj)
    if (v < 0 || v >= n) r.add("object tensor out of range", "");
  for (int v : M.tensor_mor)
    if (v < 0 || v >= m) r.add("morphism tensor out of range", "");
  if (!r.ok()) return r;
  for (int x = 0; x < n; ++x) {
    if (M.tensor(M.unit, x) != x || M.tensor(x, M.unit) != x)
      r.add("unit law on objects", cat("object ", x));
    for (int y = 0; y < n; ++y) {
      if (M.tensor_m(M.cat.id[x], M.cat.id[y]) != M.cat.id[M.tensor(x, y)])
        r.add("tensor preserves identities", cat("(", x, ",", y, ")"));
      for (int z = 0; z < n; ++z)
        if (M.tensor(M.tensor(x, y), z) != M.tensor(x, M.tensor(y, z)))
          r.add("associativity on objects", cat("(", x, ",", y, ",", z, ")"));
    }
  }
  const int uid = M.cat.id[M.unit];
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      const int fg = M.tensor_m(f, g);
      if (M.cat.src[fg] != M.tensor(M.cat.src[f], M.cat.src[g]) ||
          M.cat.tgt[fg] != M.tensor(M.cat.tgt[f], M.cat.tgt[g]))
        r.add("morphism tensor mistyped", cat("(", f, ",", g, ")"));
      for (int h = 0; h < m; ++h)
        if (M.tensor_m(M.tensor_m(f, g), h) != M.tensor_m(f, M.tensor_m(g, h)))
          r.add("associativity on morphisms", cat("(", f, ",", g, ",", h, ")"));
    }
    if (M.tensor_m(uid, f) != f || M.tensor_m(f, uid) != f)
      r.add("unit law on morphisms", cat("morphism ", f));
  }
  if (!r.ok()) return r;
  // (f . h) (x) (g . k) = (f (x) g) . (h (x) k)
  std::vector<std::vector<int>> out(n);
  for (int f = 0; f < m; ++f) out[M.cat.src[f]].push_back(f);
  for (int h = 0; h < m; ++h)
    for (int f : out[M.cat.tgt[h]])
      for (int k = 0; k < m; ++k)
        for (int g : out[M.cat.tgt[k]]) {
          const int lhs = M.tensor_m(M.cat.comp.get(f, h), M.cat.comp.get(g, k));
          const int rhs = M.cat.comp.get(M.tensor_m(f, g), M.tensor_m(h, k));
          if (lhs != rhs)
            r.add("tensor functoriality", cat("f=", f, " g=", g, " h=", h, " k=", k));
        }
  return r;
}

/// One-object 2-category: 1-cells are objects of M composed by g o f = g (x) f,
/// 2-cells are morphisms, horizontal composition is the morphism tensor.
inline Finite2Category deloop(const StrictMonCat& M) {
  if (auto rep = validate_moncat(M); !rep.ok()) throw InvalidInput("deloop: invalid monoidal category", rep);
  Finite2Category C;
  C.objects = 1;
  const int n = M.cat.objects, m = M.cat.morphisms();
  for (int x = 0; x < n; ++x) C.add_one_cell(0, 0);
  C.id1 = {M.unit};
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) C.comp1.set(g, f, M.tensor(g, f));
  for (int a = 0; a < m; ++a) C.add_two_cell(M.cat.src[a], M.cat.tgt[a]);
  C.id2 = M.cat.id;
  for (const auto& [b, a, v] : M.cat.comp.entries()) C.vcomp.set(b, a, v);
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a) C.hcomp.set(b, a, M.tensor_m(b, a));
  return C;
}

/// Strict 2-functor given by its action on cells.
struct TwoFunctor {
  std::vector<int> on_objects, on_one_cells, on_two_cells;
};

inline ValidationReport validate_2functor(const Finite2Category& C, const Finite2Category& D,
                                          const TwoFunctor& F) {
  using detail::cat;
  ValidationReport r;
  if (static_cast<int>(F.on_objects.size()) != C.objects ||
      static_cast<int>(F.on_one_cells.size()) != C.one_cells() ||
      static_cast<int>(F.on_two_cells.size()) != C.two_cells()) {
    r.add("shape: functor tables", "");
    return r;
  }
  for (int f = 0; f < C.one_cells(); ++f) {
    const int Ff = F.on_one_cells[f];
    if (D.src1[Ff] != F.on_objects[C.src1[f]] || D.tgt1[Ff] != F.on_objects[C.tgt1[f]])
      r.add("1-cell endpoints not preserved", cat("1-cell ", f));
    if (F.on_two_cells[C.id2[f]] != D.id2[Ff]) r.add("identity 2-cell not preserved", cat("1-cell ", f));
  }
  for (int x = 0; x < C.objects; ++x)
    if (F.on_one_cells[C.id1[x]] != D.id1[F.on_objects[x]])
      r.add("identity 1-cell not preserved", cat("object ", x));
  for (const auto& [g, f, v] : C.comp1.entries())
    if (F.on_one_cells[v] != D.comp1.get(F.on_one_cells[g], F.on_one_cells[f]))
      r.add("1-cell composition not preserved", cat("(", g, ",", f, ")"));
  for (int a = 0; a < C.two_cells(); ++a)
    if (D.src2[F.on_two_cells[a]] != F.on_one_cells[C.src2[a]] ||
        D.tgt2[F.on_two_cells[a]] != F.on_one_cells[C.tgt2[a]])
      r.add("2-cell endpoints not preserved", cat("2-cell ", a));
  for (const auto& [b, a, v] : C.vcomp.entries())
    if (F.on_two_cells[v] != D.vcomp.get(F.on_two_cells[b], F.on_two_cells[a]))
      r.add("vertical composition not preserved", cat("(", b, ",", a, ")"));
  for (const auto& [b, a, v] : C.hcomp.entries())
    if (F.on_two_cells[v] != D.hcomp.get(F.on_two_cells[b], F.on_two_cells[a]))
      r.add("horizontal composition not preserved", cat("(", b, ",", a, ")"));
  return r;
}

/// Views a finite 1-category as a 2-category with only identity 2-cells.
inline Finite2Category locally_discrete(const FiniteCategory& K) {
  Finite2Category C;
  C.objects = K.objects;
  C.src1 = K.src;
  C.tgt1 = K.tgt;
  C.id1 = K.id;
  C.comp1 = K.comp;
  for (int f = 0; f < K.morphisms(); ++f) C.add_two_cell(f, f);
  C.id2.resize(K.morphisms());
  std::iota(C.id2.begin(), C.id2.end(), 0);
  for (int f = 0; f < K.morphisms(); ++f) C.vcomp.set(f, f, f);
  for (const auto& [g, f, v] : K.comp.entries()) C.hcomp.set(g, f, v);
  return C;
}

// ---- fixtures -------------------------------------------------------------

inline Finite2Category terminal_2category() {
  Finite2Category C;
  C.objects = 1;
  C.add_one_cell(0, 0);
  C.id1 = {0};
  C.comp1.set(0, 0, 0);
  C.add_two_cell(0, 0);
  C.id2 = {0};
  C.vcomp.set(0, 0, 0);
  C.hcomp.set(0, 0, 0);
  return C;
}

/// 0 -> 1 with identities id0 = 0, id1 = 1 and the arrow u = 2.
inline FiniteCategory walking_arrow_category() {
  FiniteCategory K;
  K.objects = 2;
  K.add_morphism(0, 0);
  K.add_morphism(1, 1);
  K.add_morphism(0, 1);
  K.id = {0, 1};
  K.comp.set(0, 0, 0);
  K.comp.set(1, 1, 1);
  K.comp.set(2, 0, 2);
  K.comp.set(1, 2, 2);
  return K;
}

inline Finite2Category walking_arrow() { return locally_discrete(walking_arrow_category()); }

/// Two parallel 1-cells u, v : 0 -> 1 and one non-identity 2-cell u => v.
inline Finite2Category two_cell_2category() {
  Finite2Category C;
  C.objects = 2;
  C.add_one_cell(0, 0);  // id0
  C.add_one_cell(1, 1);  // id1
  C.add_one_cell(0, 1);  // u
  C.add_one_cell(0, 1);  // v
  C.id1 = {0, 1};
  C.comp1.set(0, 0, 0);
  C.comp1.set(1, 1, 1);
  for (int f : {2, 3}) {
    C.comp1.set(f, 0, f);
    C.comp1.set(1, f, f);
  }
  for (int f = 0; f < 4; ++f) C.add_two_cell(f, f);
  const int theta = C.add_two_cell(2, 3);
  C.id2 = {0, 1, 2, 3};
  for (int a = 0; a < 4; ++a) C.vcomp.set(a, a, a);
  C.vcomp.set(theta, 2, theta);
  C.vcomp.set(3, theta, theta);
  // whiskering by identities only
  for (int a = 0; a <= theta; ++a) {
    const int s = C.src1[C.src2[a]], t = C.tgt1[C.src2[a]];
    C.hcomp.set(a, C.id2[C.id1[s]], a);
    C.hcomp.set(C.id2[C.id1[t]], a, a);
  }
  return C;
}

/// A monoid viewed as a discrete strict monoidal category.
inline StrictMonCat discrete_moncat(int n, const std::vector<int>& table, int unit) {
  StrictMonCat M;
  M.cat.objects = n;
  for (int x = 0; x < n; ++x) M.cat.add_morphism(x, x);
  M.cat.id.resize(n);
  std::iota(M.cat.id.begin(), M.cat.id.end(), 0);
  for (int x = 0; x < n; ++x) M.cat.comp.set(x, x, x);
  M.unit = unit;
  M.tensor_obj = table;
  M.tensor_mor = table;
  return M;
}

/// Z/n as a discrete strict monoidal category.
inline StrictMonCat cyclic_moncat(int n) {
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = (x + y) % n;
  return discrete_moncat(n, t, 0);
}

inline StrictMonCat trivial_moncat() { return cyclic_moncat(1); }

/// The poset 0 <= 1 with tensor = max and unit 0. Morphisms: id0, id1, 0 -> 1.
inline StrictMonCat poset_moncat() {
  StrictMonCat M;
  M.cat.objects = 2;
  M.cat.add_morphism(0, 0);
  M.cat.add_morphism(1, 1);
  M.cat.add_morphism(0, 1);
  M.cat.id = {0, 1};
  M.cat.comp.set(0, 0, 0);
  M.cat.comp.set(1, 1, 1);
  M.cat.comp.set(2, 0, 2);
  M.cat.comp.set(1, 2, 2);
  M.unit = 0;
  M.tensor_obj = {0, 1, 1, 1};
  // morphisms of a poset are determined by endpoints
  auto mor = [](int s, int t) { return s == t ? s : 2; };
  M.tensor_mor.resize(9);
  for (int f = 0; f < 3; ++f)
    for (int g = 0; g < 3; ++g)
      M.tensor_mor[f * 3 + g] = mor(std::max(M.cat.src[f], M.cat.src[g]), std::max(M.cat.tgt[f], M.cat.tgt[g]));
  return M;
}

}  // namespace opcat
