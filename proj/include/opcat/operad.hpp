#pragma once

// Categorical operads over a unary operadic 2-category.

#include <memory>
#include <vector>

#include "opcat/operadic.hpp"

namespace opcat {

/// Per 1-cell f : x -> y a bifunctor P_y x P_phi(f) -> P_x, stored as flat
/// object and morphism tables (row = left argument).
struct Multiplication {
  std::vector<int> objects;
  std::vector<int> morphisms;
  bool operator==(const Multiplication&) const = default;
};

struct CategoricalOperad {
  std::shared_ptr<const UnaryOperadic2Cat> base;
  std::vector<FiniteCategory> fiber;  // per object of the base
  std::vector<Multiplication> mult;   // per 1-cell of the base
  std::vector<int> unit;              // per component, an object of fiber[u_c]

  /// a ._f b on objects
  int mul(int f, int a, int b) const { return mult[f].objects[a * right(f).objects + b]; }
  /// m ._f n on morphisms
  int mul_m(int f, int m, int n) const { return mult[f].morphisms[m * right(f).morphisms() + n]; }
  const FiniteCategory& left(int f) const { return fiber[base->C.tgt1[f]]; }
  const FiniteCategory& right(int f) const { return fiber[base->phi1[f]]; }
  const FiniteCategory& result(int f) const { return fiber[base->C.src1[f]]; }

  bool operator==(const CategoricalOperad& o) const {
    return (base == o.base || (base && o.base && *base == *o.base)) && fiber == o.fiber && mult == o.mult &&
           unit == o.unit;
  }
};

inline ValidationReport validate_operad(const CategoricalOperad& P) {
  using detail::cat;
  ValidationReport r;
  if (!P.base) {
    r.add("operad without base", "");
    return r;
  }
  const auto& O = *P.base;
  const auto& C = O.C;
  if (static_cast<int>(P.fiber.size()) != O.objects() || static_cast<int>(P.mult.size()) != O.one_cells() ||
      static_cast<int>(P.unit.size()) != O.components) {
    r.add("shape: operad tables do not match the base", "");
    return r;
  }
  for (int x = 0; x < O.objects(); ++x) r.append(validate_category(P.fiber[x]), cat("fiber ", x, ": "));
  for (int c = 0; c < O.components; ++c)
    if (P.unit[c] < 0 || P.unit[c] >= P.fiber[O.u_neg1[c]].objects) r.add("unit out of range", cat("component ", c));
  if (!r.ok()) return r;
  for (int f = 0; f < O.one_cells(); ++f) {
    const auto &A = P.left(f), &B = P.right(f), &R = P.result(f);
    const auto& M = P.mult[f];
    if (static_cast<int>(M.objects.size()) != A.objects * B.objects ||
        static_cast<int>(M.morphisms.size()) != A.morphisms() * B.morphisms()) {
      r.add("shape: multiplication table", cat("1-cell ", f));
      continue;
    }
    bool range = true;
    for (int v : M.objects) range = range && v >= 0 && v < R.objects;
    for (int v : M.morphisms) range = range && v >= 0 && v < R.morphisms();
    if (!range) r.add("multiplication value out of range", cat("1-cell ", f));
  }
  if (!r.ok()) return r;

  // bifunctoriality
  for (int f = 0; f < O.one_cells(); ++f) {
    const auto &A = P.left(f), &B = P.right(f), &R = P.result(f);
    for (int a = 0; a < A.objects; ++a)
      for (int b = 0; b < B.objects; ++b)
        if (P.mul_m(f, A.id[a], B.id[b]) != R.id[P.mul(f, a, b)])
          r.add("multiplication preserves identities", cat("1-cell ", f, " objects (", a, ",", b, ")"));
    for (int m = 0; m < A.morphisms(); ++m)
      for (int n = 0; n < B.morphisms(); ++n) {
        const int mn = P.mul_m(f, m, n);
        if (R.src[mn] != P.mul(f, A.src[m], B.src[n]) || R.tgt[mn] != P.mul(f, A.tgt[m], B.tgt[n]))
          r.add("multiplication of morphisms mistyped", cat("1-cell ", f, " morphisms (", m, ",", n, ")"));
      }
    if (!r.ok()) continue;
    for (const auto& [m2, m1, m21] : A.comp.entries())
      for (const auto& [n2, n1, n21] : B.comp.entries())
        if (P.mul_m(f, m21, n21) != R.comp.get(P.mul_m(f, m2, n2), P.mul_m(f, m1, n1)))
          r.add("multiplication preserves composition",
                cat("1-cell ", f, " (", m2, ".", m1, ", ", n2, ".", n1, ")"));
  }
  if (!r.ok()) return r;

  // associativity over lax triangles a : g o f => h
  for (int t = 0; t < O.triangles(); ++t) {
    const auto& s = O.N.at(2, t);
    const int f = s.f(0, 1), g = s.f(1, 2), h = s.f(0, 2), pa = O.phi2[t];
    const auto &Pz = P.fiber[C.tgt1[g]], &Pg = P.fiber[O.phi1[g]], &Pf = P.fiber[O.phi1[f]];
    for (int a = 0; a < Pz.objects; ++a)
      for (int b = 0; b < Pg.objects; ++b)
        for (int c = 0; c < Pf.objects; ++c)
          if (P.mul(f, P.mul(g, a, b), c) != P.mul(h, a, P.mul(pa, b, c)))
            r.add("associativity on objects", cat("triangle ", t, " objects (", a, ",", b, ",", c, ")"));
    for (int a = 0; a < Pz.morphisms(); ++a)
      for (int b = 0; b < Pg.morphisms(); ++b)
        for (int c = 0; c < Pf.morphisms(); ++c)
          if (P.mul_m(f, P.mul_m(g, a, b), c) != P.mul_m(h, a, P.mul_m(pa, b, c)))
            r.add("associativity on morphisms", cat("triangle ", t, " morphisms (", a, ",", b, ",", c, ")"));
  }
  // units
  for (int x = 0; x < O.objects(); ++x) {
    const auto& Px = P.fiber[x];
    const int e_right = P.unit[O.phi0[x]], e_left = P.unit[O.pi[x]];
    const int id_right = P.fiber[O.u_neg1[O.phi0[x]]].id[e_right];
    const int id_left = P.fiber[O.u_neg1[O.pi[x]]].id[e_left];
    const int one = C.id1[x], ux = O.u0[x];
    for (int a = 0; a < Px.objects; ++a) {
      if (P.mul(one, a, e_right) != a) r.add("right unit law on objects", cat("object ", x, " element ", a));
      if (P.mul(ux, e_left, a) != a) r.add("left unit law on objects", cat("object ", x, " element ", a));
    }
    for (int m = 0; m < Px.morphisms(); ++m) {
      if (P.mul_m(one, m, id_right) != m) r.add("right unit law on morphisms", cat("object ", x, " morphism ", m));
      if (P.mul_m(ux, id_left, m) != m) r.add("left unit law on morphisms", cat("object ", x, " morphism ", m));
    }
  }
  return r;
}

inline FiniteCategory terminal_category() {
  FiniteCategory K;
  K.objects = 1;
  K.add_morphism(0, 0);
  K.id = {0};
  K.comp.set(0, 0, 0);
  return K;
}

inline bool is_terminal_category(const FiniteCategory& K) { return K.objects == 1 && K.morphisms() == 1; }

/// Fibers over the chosen unit objects contain only the unit.
inline bool is_one_connected(const CategoricalOperad& P) {
  for (int c = 0; c < P.base->components; ++c)
    if (!is_terminal_category(P.fiber[P.base->u_neg1[c]])) return false;
  return true;
}

inline CategoricalOperad terminal_operad(std::shared_ptr<const UnaryOperadic2Cat> O) {
  CategoricalOperad P;
  P.fiber.assign(O->objects(), terminal_category());
  P.mult.assign(O->one_cells(), Multiplication{{0}, {0}});
  P.unit.assign(O->components, 0);
  P.base = std::move(O);
  return P;
}

/// A strict monoidal category as an operad over the terminal operadic category.
inline CategoricalOperad operad_from_moncat(const StrictMonCat& V) {
  if (auto rep = validate_moncat(V); !rep.ok()) throw InvalidInput("operad_from_moncat: invalid monoidal category", rep);
  CategoricalOperad P;
  P.base = std::make_shared<const UnaryOperadic2Cat>(terminal_odot());
  P.fiber = {V.cat};
  P.mult = {Multiplication{V.tensor_obj, V.tensor_mor}};
  P.unit = {V.unit};
  return P;
}

inline bool is_terminal_base(const UnaryOperadic2Cat& O) {
  return O.components == 1 && O.objects() == 1 && O.one_cells() == 1 && O.triangles() == 1 && O.tetrahedra() == 1;
}

inline StrictMonCat moncat_from_operad(const CategoricalOperad& P) {
  if (!P.base || !is_terminal_base(*P.base)) throw Error("moncat_from_operad: base is not the terminal operadic category");
  if (auto rep = validate_operad(P); !rep.ok()) throw InvalidInput("moncat_from_operad: invalid operad", rep);
  StrictMonCat V;
  V.cat = P.fiber[0];
  V.unit = P.unit[0];
  V.tensor_obj = P.mult[0].objects;
  V.tensor_mor = P.mult[0].morphisms;
  return V;
}

/// The hom-category K(a, b) together with the global indices of its cells.
struct HomCategory {
  FiniteCategory cat;
  std::vector<int> one_cells, two_cells;  // local -> global
  std::vector<int> local1, local2;        // global -> local or -1
};

inline HomCategory hom_category(const Finite2Category& K, int a, int b) {
  HomCategory H;
  H.local1.assign(K.one_cells(), -1);
  H.local2.assign(K.two_cells(), -1);
  for (int f = 0; f < K.one_cells(); ++f)
    if (K.src1[f] == a && K.tgt1[f] == b) {
      H.local1[f] = static_cast<int>(H.one_cells.size());
      H.one_cells.push_back(f);
    }
  H.cat.objects = static_cast<int>(H.one_cells.size());
  for (int c = 0; c < K.two_cells(); ++c)
    if (H.local1[K.src2[c]] >= 0) {
      H.local2[c] = H.cat.add_morphism(H.local1[K.src2[c]], H.local1[K.tgt2[c]]);
      H.two_cells.push_back(c);
    }
  for (int f : H.one_cells) H.cat.id.push_back(H.local2[K.id2[f]]);
  for (const auto& [d, c, v] : K.vcomp.entries())
    if (H.local2[c] >= 0) H.cat.comp.set(H.local2[d], H.local2[c], H.local2[v]);
  return H;
}

/// A 2-category with objects {0..n-1} as an operad over Bq(n): the fiber over
/// (a,b) is K(a,b), multiplication over (a',b) -> (a'',b) is K(a'',b) x K(a',a'') -> K(a',b).
inline CategoricalOperad operad_from_2cat(const Finite2Category& K, int n) {
  if (auto rep = validate_2category(K); !rep.ok()) throw InvalidInput("operad_from_2cat: invalid 2-category", rep);
  if (K.objects != n) throw Error("operad_from_2cat: object set does not match");
  CategoricalOperad P;
  auto O = std::make_shared<const UnaryOperadic2Cat>(bouquets(n));
  std::vector<HomCategory> homs;
  for (int x = 0; x < O->objects(); ++x) {
    homs.push_back(hom_category(K, x / n, x % n));
    P.fiber.push_back(homs.back().cat);
  }
  for (int q = 0; q < O->one_cells(); ++q) {
    const auto &L = homs[O->C.tgt1[q]], &R = homs[O->phi1[q]], &T = homs[O->C.src1[q]];
    Multiplication M;
    for (int g : L.one_cells)
      for (int f : R.one_cells) M.objects.push_back(T.local1[K.comp1.get(g, f)]);
    for (int d : L.two_cells)
      for (int c : R.two_cells) M.morphisms.push_back(T.local2[K.hcomp.get(d, c)]);
    P.mult.push_back(std::move(M));
  }
  for (int c = 0; c < O->components; ++c) {
    const int v = O->u_neg1[c];
    P.unit.push_back(homs[v].local1[K.id1[v / n]]);
  }
  P.base = std::move(O);
  return P;
}

/// Restriction of Q along F : O -> P.
inline CategoricalOperad restrict_operad(const OperadicFunctor& F, const CategoricalOperad& Q) {
  if (auto rep = validate_operadic_functor(F); !rep.ok()) throw InvalidInput("restrict_operad: invalid functor", rep);
  if (auto rep = validate_operad(Q); !rep.ok()) throw InvalidInput("restrict_operad: invalid operad", rep);
  if (!(*F.target == *Q.base)) throw Error("restrict_operad: operad lives over a different base");
  CategoricalOperad R;
  R.base = F.source;
  for (int x = 0; x < R.base->objects(); ++x) R.fiber.push_back(Q.fiber[F.level_map[1][x]]);
  for (int f = 0; f < R.base->one_cells(); ++f) R.mult.push_back(Q.mult[F.level_map[2][f]]);
  for (int c = 0; c < R.base->components; ++c) R.unit.push_back(Q.unit[F.level_map[0][c]]);
  if (auto rep = validate_operad(R); !rep.ok())
    throw InternalInconsistency("restrict_operad: result fails validation:\n" + rep.str());
  return R;
}

}  // namespace opcat
