#pragma once

// The operadic Grothendieck construction of a categorical operad, split
// operadic fibrations, and the extraction of an operad from a fibration.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "opcat/operad.hpp"

namespace opcat {

/// The lax triangle g o f => h given by its two composable edges and 2-cell.
inline int find_triangle(const UnaryOperadic2Cat& O, int f, int g, int alpha) {
  const auto& C = O.C;
  NerveSimplex t(2);
  t.x(0) = C.src1[f];
  t.x(1) = C.tgt1[f];
  t.x(2) = C.tgt1[g];
  t.f(0, 1) = f;
  t.f(1, 2) = g;
  t.f(0, 2) = C.tgt2[alpha];
  t.a(0, 1, 2) = alpha;
  return O.N.lookup(t);
}

inline int identity_triangle(const UnaryOperadic2Cat& O, int f, int g) {
  return find_triangle(O, f, g, O.C.id2[O.C.comp1.get(g, f)]);
}

/// rho : f => g read as the lax triangle f o 1 => g.
inline int bar_triangle(const UnaryOperadic2Cat& O, int rho) {
  return find_triangle(O, O.C.id1[O.C.src1[O.C.src2[rho]]], O.C.src2[rho], rho);
}

struct Grothendieck {
  std::shared_ptr<const UnaryOperadic2Cat> base;
  CategoricalOperad operad;
  std::shared_ptr<const UnaryOperadic2Cat> total;
  OperadicFunctor projection;

  // objects (A, a)
  std::vector<int> obj_A, obj_a;
  std::vector<std::vector<int>> obj_index;
  // 1-cells (f, p, alpha) : (A, a) -> (B, b) with alpha : b ._f p -> a
  std::vector<int> one_f, one_p, one_alpha;
  std::map<std::array<int, 4>, int> one_index;  // (f, p, alpha, b)
  // 2-cells (rho, gamma)
  std::vector<int> two_rho, two_gamma;
  std::map<std::array<int, 4>, int> two_index;  // (source, target, rho, gamma)

  int object(int A, int a) const { return obj_index[A][a]; }
  int one_cell(int f, int p, int alpha, int b) const {
    auto it = one_index.find({f, p, alpha, b});
    return it == one_index.end() ? -1 : it->second;
  }
  int two_cell(int s, int t, int rho, int gamma) const {
    auto it = two_index.find({s, t, rho, gamma});
    return it == two_index.end() ? -1 : it->second;
  }
  /// The canonical cartesian lift (g, b, 1) of g with target a and fiber b.
  int canonical_lift(int a, int b, int g) const {
    const int el = operad.mul(g, obj_a[a], obj_a[b]);
    return one_cell(g, obj_a[b], operad.fiber[base->C.src1[g]].id[el], obj_a[a]);
  }
};

namespace detail {

inline NerveSimplex project_simplex(const Grothendieck& G, const NerveSimplex& s) {
  NerveSimplex t = s;
  for (int i = 0; i <= s.dim; ++i) {
    t.x(i) = G.obj_A[s.x(i)];
    for (int j = i + 1; j <= s.dim; ++j) {
      t.f(i, j) = G.one_f[s.f(i, j)];
      for (int k = j + 1; k <= s.dim; ++k) t.a(i, j, k) = G.two_rho[s.a(i, j, k)];
    }
  }
  return t;
}

}  // namespace detail

inline Grothendieck grothendieck(std::shared_ptr<const UnaryOperadic2Cat> base, const CategoricalOperad& P) {
  using detail::cat;
  if (auto rep = validate_operadic(*base); !rep.ok()) throw InvalidInput("grothendieck: invalid base", rep);
  if (!(*P.base == *base)) throw Error("grothendieck: operad lives over a different base");
  if (auto rep = validate_operad(P); !rep.ok()) throw InvalidInput("grothendieck: invalid operad", rep);
  const auto& O = *base;
  const auto& B = O.C;
  Grothendieck G;
  G.base = base;
  G.operad = P;
  G.operad.base = base;
  auto unit_of = [&](int A) { return P.unit[O.phi0[A]]; };  // e_psi(A)
  auto transport = [&](int rho, int p) {                       // P_rho(p)
    const int A = B.src1[B.src2[rho]];
    return P.mul(O.phi2[bar_triangle(O, rho)], p, unit_of(A));
  };

  Finite2Category T;
  G.obj_index.resize(O.objects());
  for (int A = 0; A < O.objects(); ++A)
    for (int a = 0; a < P.fiber[A].objects; ++a) {
      G.obj_index[A].push_back(T.objects++);
      G.obj_A.push_back(A);
      G.obj_a.push_back(a);
    }
  for (int f = 0; f < B.one_cells(); ++f) {
    const int A = B.src1[f], Bo = B.tgt1[f];
    const auto& PA = P.fiber[A];
    for (int p = 0; p < P.right(f).objects; ++p)
      for (int al = 0; al < PA.morphisms(); ++al)
        for (int b = 0; b < P.fiber[Bo].objects; ++b) {
          if (P.mul(f, b, p) != PA.src[al]) continue;
          const int e = T.add_one_cell(G.object(A, PA.tgt[al]), G.object(Bo, b));
          G.one_f.push_back(f);
          G.one_p.push_back(p);
          G.one_alpha.push_back(al);
          G.one_index[{f, p, al, b}] = e;
        }
  }
  auto need = [](int v, const char* what) {
    if (v < 0) throw InternalInconsistency(std::string("grothendieck: missing ") + what);
    return v;
  };
  for (int x = 0; x < T.objects; ++x) {
    const int A = G.obj_A[x], a = G.obj_a[x];
    T.id1.push_back(need(G.one_cell(B.id1[A], unit_of(A), P.fiber[A].id[a], a), "identity 1-cell"));
  }
  std::vector<std::vector<int>> out(T.objects);
  for (int e = 0; e < T.one_cells(); ++e) out[T.src1[e]].push_back(e);
  for (int e1 = 0; e1 < T.one_cells(); ++e1)
    for (int e2 : out[T.tgt1[e1]]) {
      const int f1 = G.one_f[e1], f2 = G.one_f[e2];
      const int A = B.src1[f1];
      const int p = P.mul(O.phi2[identity_triangle(O, f1, f2)], G.one_p[e2], G.one_p[e1]);
      const int al = P.fiber[A].comp.get(
          G.one_alpha[e1], P.mul_m(f1, G.one_alpha[e2], P.right(f1).id[G.one_p[e1]]));
      T.comp1.set(e2, e1, need(G.one_cell(B.comp1.get(f2, f1), p, al, G.obj_a[T.tgt1[e2]]), "composite 1-cell"));
    }
  // 2-cells between parallel 1-cells
  std::map<std::pair<int, int>, std::vector<int>> parallel;
  for (int e = 0; e < T.one_cells(); ++e) parallel[{T.src1[e], T.tgt1[e]}].push_back(e);
  for (int s = 0; s < T.one_cells(); ++s)
      for (int t : parallel[{T.src1[s], T.tgt1[s]}]) {
        const int f = G.one_f[s], g = G.one_f[t];
        const int A = B.src1[f], b = G.obj_a[T.tgt1[s]];
        const auto& Pg = P.right(g);
        for (int rho = 0; rho < B.two_cells(); ++rho) {
          if (B.src2[rho] != f || B.tgt2[rho] != g) continue;
          const int pr = transport(rho, G.one_p[s]);
          if (P.mul(g, b, pr) != P.mul(f, b, G.one_p[s]))
            throw InternalInconsistency(cat("grothendieck: b._g P_rho(p) != b._f p at rho ", rho));
          for (int gm = 0; gm < Pg.morphisms(); ++gm) {
            if (Pg.src[gm] != pr || Pg.tgt[gm] != G.one_p[t]) continue;
            const int lhs = P.fiber[A].comp.get(G.one_alpha[t], P.mul_m(g, P.left(g).id[b], gm));
            if (lhs != G.one_alpha[s]) continue;
            const int c = T.add_two_cell(s, t);
            G.two_rho.push_back(rho);
            G.two_gamma.push_back(gm);
            G.two_index[{s, t, rho, gm}] = c;
          }
        }
      }
  for (int e = 0; e < T.one_cells(); ++e)
    T.id2.push_back(need(G.two_cell(e, e, B.id2[G.one_f[e]], P.right(G.one_f[e]).id[G.one_p[e]]), "identity 2-cell"));
  std::vector<std::vector<int>> from(T.one_cells());
  for (int c = 0; c < T.two_cells(); ++c) from[T.src2[c]].push_back(c);
  for (int c1 = 0; c1 < T.two_cells(); ++c1) {
    for (int c2 : from[T.tgt2[c1]]) {
      const int r2 = G.two_rho[c2];
      const int w = T.tgt2[c2];
      const int A = B.src1[B.src2[r2]];
      const int moved = P.mul_m(O.phi2[bar_triangle(O, r2)], G.two_gamma[c1],
                                P.fiber[O.u_neg1[O.phi0[A]]].id[unit_of(A)]);
      const int gm = P.right(G.one_f[w]).comp.get(G.two_gamma[c2], moved);
      T.vcomp.set(c2, c1, need(G.two_cell(T.src2[c1], w, B.vcomp.get(r2, G.two_rho[c1]), gm), "vertical composite"));
    }
    const int t1 = T.tgt2[c1];
    for (int s2 : out[T.tgt1[t1]])
      for (int c2 : from[s2]) {
        const int t2 = T.tgt2[c2];
        const int pa = O.phi2[identity_triangle(O, G.one_f[t1], G.one_f[t2])];
        const int gm = P.mul_m(pa, G.two_gamma[c2], G.two_gamma[c1]);
        const int S = T.comp1.get(s2, T.src2[c1]), Tt = T.comp1.get(t2, t1);
        const int v = G.two_cell(S, Tt, B.hcomp.get(G.two_rho[c2], G.two_rho[c1]), gm);
        if (v < 0) throw InternalInconsistency(cat("grothendieck: horizontal composite of 2-cells ", c2, ", ", c1, " is not a 2-cell"));
        T.hcomp.set(c2, c1, v);
      }
  }
  if (auto rep = validate_2category(T); !rep.ok())
    throw InternalInconsistency("grothendieck: total 2-category invalid:\n" + rep.str());

  auto Tot = prepare_operadic(std::move(T));
  const auto& TC = Tot.C;
  // components correspond to those of the base through the trivial objects (v_c, e_c)
  std::vector<int> tc(O.components), base_of(Tot.components, -1);
  for (int c = 0; c < O.components; ++c) {
    tc[c] = Tot.pi[G.object(O.u_neg1[c], P.unit[c])];
    if (base_of[tc[c]] >= 0) throw InternalInconsistency("grothendieck: components collapse");
    base_of[tc[c]] = c;
    Tot.u_neg1[tc[c]] = G.object(O.u_neg1[c], P.unit[c]);
  }
  for (int x = 0; x < TC.objects; ++x) {
    const int A = G.obj_A[x], a = G.obj_a[x];
    Tot.phi0[x] = tc[O.phi0[A]];
    Tot.u0[x] = need(G.one_cell(O.u0[A], a, P.fiber[A].id[a], P.unit[O.pi[A]]), "u of an object");
  }
  for (int e = 0; e < TC.one_cells(); ++e) Tot.phi1[e] = G.object(O.phi1[G.one_f[e]], G.one_p[e]);
  auto base_cell = [&](const NerveSimplex& s) {
    const int v = O.N.lookup(detail::project_simplex(G, s));
    if (v < 0) throw InternalInconsistency("grothendieck: projection of a simplex is missing");
    return v;
  };
  for (int t = 0; t < Tot.triangles(); ++t) {
    const auto& s = Tot.N.at(2, t);
    Tot.phi2[t] = need(G.one_cell(O.phi2[base_cell(s)], G.one_p[s.f(0, 1)], G.two_gamma[s.a(0, 1, 2)],
                                  G.one_p[s.f(1, 2)]),
                       "phi of a lax triangle");
  }
  for (int e = 0; e < TC.one_cells(); ++e) {
    const int f = G.one_f[e];
    const int rho = O.N.at(2, O.u1[f]).a(0, 1, 2);
    const int f12 = Tot.u0[TC.tgt1[e]], f02 = Tot.u0[TC.src1[e]];
    const int c = need(G.two_cell(TC.comp1.get(f12, e), f02, rho, G.one_alpha[e]), "u of a 1-cell");
    Tot.u1[e] = need(find_triangle(Tot, e, f12, c), "u of a 1-cell as a triangle");
  }
  for (int x = 0; x < Tot.tetrahedra(); ++x) {
    const auto& s = Tot.N.at(3, x);
    const int sb = base_cell(s);
    const int rho = O.N.at(2, O.phi3[sb]).a(0, 1, 2);
    const int f01 = Tot.phi2[Tot.d(3, 2, x)], f12 = Tot.phi2[Tot.d(3, 0, x)], f02 = Tot.phi2[Tot.d(3, 1, x)];
    const int c = G.two_cell(TC.comp1.get(f12, f01), f02, rho, G.two_gamma[s.a(0, 1, 2)]);
    if (c < 0) throw InternalInconsistency(cat("grothendieck: phi of 3-simplex ", x, " is not a 2-cell"));
    Tot.phi3[x] = need(find_triangle(Tot, f01, f12, c), "phi of a 3-simplex");
  }
  for (int t = 0; t < Tot.triangles(); ++t) {
    const auto& s = Tot.N.at(2, t);
    NerveSimplex w(3);
    for (int i = 0; i < 3; ++i) w.x(i) = s.x(i);
    w.x(3) = Tot.u_neg1[Tot.pi[s.x(0)]];
    for (int i = 0; i < 3; ++i) {
      w.f(i, 3) = Tot.u0[s.x(i)];
      for (int j = i + 1; j < 3; ++j) {
        w.f(i, j) = s.f(i, j);
        w.a(i, j, 3) = Tot.N.at(2, Tot.u1[s.f(i, j)]).a(0, 1, 2);
      }
    }
    w.a(0, 1, 2) = s.a(0, 1, 2);
    Tot.u2[t] = need(Tot.N.lookup(w), "u of a lax triangle");
  }
  if (auto rep = validate_operadic(Tot); !rep.ok())
    throw InternalInconsistency("grothendieck: total fails validation:\n" + rep.str());
  G.total = std::make_shared<const UnaryOperadic2Cat>(std::move(Tot));

  auto& F = G.projection;
  F.source = G.total;
  F.target = base;
  F.level_map.resize(5);
  F.level_map[0] = base_of;
  F.level_map[1] = G.obj_A;
  F.level_map[2] = G.one_f;
  for (int k = 2; k <= 3; ++k)
    for (const auto& s : G.total->N.simplices[k]) F.level_map[k + 1].push_back(base_cell(s));
  if (auto rep = validate_operadic_functor(F); !rep.ok())
    throw InternalInconsistency("grothendieck: projection fails validation:\n" + rep.str());
  return G;
}

// ---- split fibrations -------------------------------------------------------------

using LiftKey = std::array<int, 3>;  // (a, b, g)

struct SplitFibration {
  OperadicFunctor p;
  std::map<LiftKey, int> lift;  // a, b in X1 of the total, g in Y2 of the base -> X2 of the total
  ValidationReport report;      // outcome of check_split_fibration, filled by the constructors

  int operator()(int a, int b, int g) const {
    auto it = lift.find({a, b, g});
    if (it == lift.end()) throw Error(detail::cat("split fibration: no lift for (", a, ",", b, ",", g, ")"));
    return it->second;
  }
};

namespace detail {

/// Assembled simplicial sets of both ends plus lookup helpers shared by the checks.
struct FibrationContext {
  TruncatedSimplicialSet X, Y;
  const OperadicFunctor* p;
  FillerIndex fillX, fillY;
  std::map<std::pair<int, int>, std::vector<int>> by_d0_d2;  // X2 cells by (d0, d2)
  std::vector<std::vector<int>> x2_by_d0, x2_by_d2;

  explicit FibrationContext(const OperadicFunctor& F)
      : X(assemble_simplicial(*F.source)), Y(assemble_simplicial(*F.target)), p(&F), fillX(X), fillY(Y) {
    x2_by_d0.resize(X.cells[1]);
    x2_by_d2.resize(X.cells[1]);
    for (int q = 0; q < X.cells[2]; ++q) {
      by_d0_d2[{X.d(2, 0, q), X.d(2, 2, q)}].push_back(q);
      x2_by_d0[X.d(2, 0, q)].push_back(q);
      x2_by_d2[X.d(2, 2, q)].push_back(q);
    }
  }
  int map(int k, int x) const { return p->level_map[k][x]; }

  /// Every triple (a, b, g) that needs a lift.
  std::vector<LiftKey> lift_keys() const {
    std::vector<LiftKey> keys;
    for (int a = 0; a < X.cells[1]; ++a)
      for (int b = 0; b < X.cells[1]; ++b)
        for (int g = 0; g < Y.cells[2]; ++g)
          if (Y.d(2, 0, g) == map(1, a) && Y.d(2, 2, g) == map(1, b)) keys.push_back({a, b, g});
    return keys;
  }
  std::vector<int> lifts_of(const LiftKey& k) const {
    std::vector<int> out;
    auto it = by_d0_d2.find({k[0], k[1]});
    if (it == by_d0_d2.end()) return out;
    for (int q : it->second)
      if (map(2, q) == k[2]) out.push_back(q);
    return out;
  }

  /// First failing (horn, base filler) for f, or nothing if f is cartesian.
  std::optional<std::string> cartesian_failure(int f) const {
    const int t = X.d(2, 0, f);  // d0 x1 = d0 f
    for (int x1 : x2_by_d0[t]) {
      // x3 with d0 x3 = d2 f and d1 x3 = d2 x1
      for (int x3 : x2_by_d0[X.d(2, 2, f)]) {
        if (X.d(2, 1, x3) != X.d(2, 2, x1)) continue;
        const auto& above = fillX(f, x1, x3);
        for (int s : fillY(map(2, f), map(2, x1), map(2, x3))) {
          int count = 0;
          for (int st : above)
            if (map(3, st) == s) ++count;
          if (count != 1)
            return cat("horn (", f, ",", x1, ",", x3, ") over base filler ", s, " has ", count, " lifted fillers");
        }
      }
    }
    return std::nullopt;
  }
};

}  // namespace detail

inline bool is_p_cartesian(const OperadicFunctor& p, int f, std::string* witness = nullptr) {
  if (f < 0 || f >= p.source->one_cells()) throw Error("is_p_cartesian: not a 2-simplex of the total");
  detail::FibrationContext ctx(p);
  auto w = ctx.cartesian_failure(f);
  if (w && witness) *witness = *w;
  return !w;
}

inline ValidationReport check_split_fibration(const SplitFibration& F) {
  using detail::cat;
  ValidationReport r;
  if (auto rep = validate_operadic_functor(F.p); !rep.ok()) {
    r.append(rep, "functor: ");
    return r;
  }
  const detail::FibrationContext ctx(F.p);
  const auto &X = ctx.X, &Y = ctx.Y;
  auto lift = [&](int a, int b, int g) {
    auto it = F.lift.find({a, b, g});
    return it == F.lift.end() ? -1 : it->second;
  };
  std::map<int, bool> cartesian;
  for (const auto& k : ctx.lift_keys()) {
    const int l = lift(k[0], k[1], k[2]);
    const std::string w = cat("(", k[0], ",", k[1], ",", k[2], ")");
    if (l < 0) {
      r.add("lift missing", w);
      continue;
    }
    if (l >= X.cells[2] || X.d(2, 0, l) != k[0] || X.d(2, 2, l) != k[1] || ctx.map(2, l) != k[2]) {
      r.add("lift does not lie over g with faces a and b", w);
      continue;
    }
    if (!cartesian.count(l)) cartesian[l] = !ctx.cartesian_failure(l);
    if (!cartesian[l]) r.add("lift is not p-cartesian", w);
  }
  if (F.lift.size() != ctx.lift_keys().size()) r.add("lift table has entries for non-liftable triples", "");
  if (!r.ok()) return r;
  for (int x = 0; x < X.cells[1]; ++x) {
    const int px = ctx.map(1, x);
    if (lift(X.s(0, 0, X.d(1, 0, x)), x, Y.s(1, 1, px)) != X.s(1, 1, x)) r.add("unit condition l(u, x, u) = u_x", cat("object ", x));
    if (lift(x, X.s(0, 0, X.d(1, 1, x)), Y.s(1, 0, px)) != X.s(1, 0, x)) r.add("unit condition l(x, u, 1) = 1_x", cat("object ", x));
  }
  // cocycle, compared on domains: the two sides lie over different faces of sigma
  for (int s = 0; s < Y.cells[3]; ++s) {
    const int e01 = Y.d(2, 2, Y.d(3, 3, s)), e12 = Y.d(2, 0, Y.d(3, 3, s)), e23 = Y.d(2, 0, Y.d(3, 0, s));
    for (int x = 0; x < X.cells[1]; ++x) {
      if (ctx.map(1, x) != e01) continue;
      for (int y = 0; y < X.cells[1]; ++y) {
        if (ctx.map(1, y) != e12) continue;
        for (int z = 0; z < X.cells[1]; ++z) {
          if (ctx.map(1, z) != e23) continue;
          const int zy = X.d(2, 1, lift(z, y, Y.d(3, 0, s)));
          const int yx = X.d(2, 1, lift(y, x, Y.d(3, 3, s)));
          const int lhs = lift(zy, x, Y.d(3, 2, s)), rhs = lift(z, yx, Y.d(3, 1, s));
          if (lhs < 0 || rhs < 0 || X.d(2, 1, lhs) != X.d(2, 1, rhs))
            r.add("cocycle condition", cat("base 3-simplex ", s, " with (x,y,z) = (", x, ",", y, ",", z, ")"));
        }
      }
    }
  }
  std::vector<bool> hit(Y.cells[0], false);
  for (int c : F.p.level_map[0]) hit[c] = true;
  for (int c = 0; c < Y.cells[0]; ++c)
    if (!hit[c]) r.add("pi0 is not surjective", cat("component ", c));
  return r;
}

/// The projection of a Grothendieck construction with its canonical lifts (g, b, 1).
inline SplitFibration canonical_fibration(const Grothendieck& G) {
  SplitFibration F;
  F.p = G.projection;
  const detail::FibrationContext ctx(F.p);
  for (const auto& k : ctx.lift_keys()) F.lift[k] = G.canonical_lift(k[0], k[1], k[2]);
  F.report = check_split_fibration(F);
  return F;
}

struct SplittingSearch {
  std::optional<SplitFibration> fibration;
  ValidationReport report;
  int ambiguous = 0;     // triples with more than one cartesian lift
  int max_choices = 0;   // largest number of cartesian lifts seen for one triple
};

/// Deterministic search: forced unit lifts first, otherwise the smallest
/// cartesian lift by index; the result is then checked in full.
inline SplittingSearch find_splitting(const OperadicFunctor& p) {
  using detail::cat;
  SplittingSearch S;
  if (auto rep = validate_operadic_functor(p); !rep.ok()) {
    S.report.append(rep, "functor: ");
    return S;
  }
  const detail::FibrationContext ctx(p);
  const auto &X = ctx.X, &Y = ctx.Y;
  SplitFibration F;
  F.p = p;
  for (int x = 0; x < X.cells[1]; ++x) {
    const int px = ctx.map(1, x);
    F.lift[{X.s(0, 0, X.d(1, 0, x)), x, Y.s(1, 1, px)}] = X.s(1, 1, x);
    F.lift[{x, X.s(0, 0, X.d(1, 1, x)), Y.s(1, 0, px)}] = X.s(1, 0, x);
  }
  std::map<int, bool> cartesian;
  auto is_cart = [&](int l) {
    auto it = cartesian.find(l);
    if (it != cartesian.end()) return it->second;
    return cartesian[l] = !ctx.cartesian_failure(l);
  };
  for (const auto& k : ctx.lift_keys()) {
    std::vector<int> good;
    for (int l : ctx.lifts_of(k))
      if (is_cart(l)) good.push_back(l);
    S.max_choices = std::max<int>(S.max_choices, static_cast<int>(good.size()));
    if (good.size() > 1) ++S.ambiguous;
    if (F.lift.count(k)) continue;
    if (good.empty()) {
      S.report.add("no cartesian lift", cat("(", k[0], ",", k[1], ",", k[2], ")"));
      return S;
    }
    F.lift[k] = good.front();
  }
  F.report = check_split_fibration(F);
  S.report = F.report;
  if (F.report.ok()) S.fibration = std::move(F);
  return S;
}

// ---- extraction -------------------------------------------------------------------

/// Fibers: objects over x and quasibijections over 1_x. A fiber morphism s -> t
/// is a total 1-cell t -> s, so composition in the fiber reverses total composition.
struct Extraction {
  CategoricalOperad operad;
  std::vector<int> fiber_of_object, element_of_object;        // total object -> (x, a)
  std::vector<std::vector<int>> object_of;                     // (x, a) -> total object
  std::vector<std::vector<int>> cell_of;                       // (x, m) -> total 1-cell
  std::vector<int> morphism_of_cell;                           // total 1-cell -> m or -1
};

inline Extraction extract_with_maps(const SplitFibration& F) {
  using detail::cat;
  if (auto rep = check_split_fibration(F); !rep.ok()) throw InvalidInput("extract_operad: not a split fibration", rep);
  const auto& T = *F.p.source;
  const auto& O = *F.p.target;
  const detail::FibrationContext ctx(F.p);
  const auto& X = ctx.X;
  Extraction E;
  auto& P = E.operad;
  P.base = F.p.target;
  P.fiber.resize(O.objects());
  E.object_of.resize(O.objects());
  E.cell_of.resize(O.objects());
  E.fiber_of_object.assign(T.objects(), -1);
  E.element_of_object.assign(T.objects(), -1);
  E.morphism_of_cell.assign(T.one_cells(), -1);
  for (int a = 0; a < T.objects(); ++a) {
    const int x = ctx.map(1, a);
    E.fiber_of_object[a] = x;
    E.element_of_object[a] = static_cast<int>(E.object_of[x].size());
    E.object_of[x].push_back(a);
  }
  for (int x = 0; x < O.objects(); ++x) P.fiber[x].objects = static_cast<int>(E.object_of[x].size());
  for (int q = 0; q < T.one_cells(); ++q) {
    const int x = E.fiber_of_object[T.C.src1[q]];
    if (ctx.map(2, q) != O.C.id1[x] || !is_quasibijection(T, q)) continue;
    E.morphism_of_cell[q] = P.fiber[x].add_morphism(E.element_of_object[T.C.tgt1[q]], E.element_of_object[T.C.src1[q]]);
    E.cell_of[x].push_back(q);
  }
  auto morphism = [&](int q) {
    if (q < 0 || E.morphism_of_cell[q] < 0) throw InternalInconsistency(cat("extract_operad: 1-cell ", q, " is not a fiber morphism"));
    return E.morphism_of_cell[q];
  };
  for (int x = 0; x < O.objects(); ++x) {
    auto& K = P.fiber[x];
    for (int a : E.object_of[x]) K.id.push_back(morphism(T.C.id1[a]));
    for (int m1 = 0; m1 < K.morphisms(); ++m1)
      for (int m2 = 0; m2 < K.morphisms(); ++m2)
        if (K.tgt[m1] == K.src[m2]) K.comp.set(m2, m1, morphism(T.C.comp1.get(E.cell_of[x][m1], E.cell_of[x][m2])));
  }
  for (int g = 0; g < O.one_cells(); ++g) {
    const int y = O.C.tgt1[g], z = O.phi1[g];
    Multiplication M;
    for (int a : E.object_of[y])
      for (int b : E.object_of[z]) M.objects.push_back(E.element_of_object[X.d(2, 1, F(a, b, g))]);
    const int base_filler = ctx.Y.s(2, 0, g);
    for (int c1 : E.cell_of[y])
      for (int c2 : E.cell_of[z]) {
        // c1 : a'' -> a', c2 : b'' -> b' in the total
        const int a1 = T.C.tgt1[c1], a2 = T.C.src1[c1], b1 = T.C.tgt1[c2], b2 = T.C.src1[c2];
        const int x0 = F(a1, b1, g), x1 = T.C.comp1.get(c1, F(a2, b2, g));
        int found = -1, count = 0;
        for (int s : ctx.fillX(x0, x1, c2))
          if (ctx.map(3, s) == base_filler) {
            found = s;
            ++count;
          }
        if (count != 1) throw InternalInconsistency(cat("extract_operad: horn over 1-cell ", g, " has ", count, " fillers"));
        M.morphisms.push_back(morphism(X.d(3, 2, found)));
      }
    P.mult.push_back(std::move(M));
  }
  for (int c = 0; c < O.components; ++c) {
    const int v = O.u_neg1[c];
    int found = -1, count = 0;
    for (int tc = 0; tc < T.components; ++tc)
      if (ctx.map(1, T.u_neg1[tc]) == v) {
        found = T.u_neg1[tc];
        ++count;
      }
    if (count != 1) throw InternalInconsistency(cat("extract_operad: ", count, " trivial objects above u_", c));
    P.unit.push_back(E.element_of_object[found]);
  }
  if (auto rep = validate_operad(P); !rep.ok())
    throw InternalInconsistency("extract_operad: result fails validation:\n" + rep.str());
  return E;
}

inline CategoricalOperad extract_operad(const SplitFibration& F) { return extract_with_maps(F).operad; }

// ---- round trips and consequences ----------------------------------------------------

struct IsoCertificate {
  bool certified = false;
  ValidationReport report;
  std::vector<std::vector<int>> level_map;  // explicit comparison map where applicable
};

/// extract(grothendieck(P)) = P as tables.
inline IsoCertificate roundtrip_operad(std::shared_ptr<const UnaryOperadic2Cat> O, const CategoricalOperad& P) {
  using detail::cat;
  IsoCertificate cert;
  const auto G = grothendieck(O, P);
  const auto F = canonical_fibration(G);
  if (!F.report.ok()) {
    cert.report.append(F.report, "canonical fibration: ");
    return cert;
  }
  const auto Q = extract_operad(F);
  for (int x = 0; x < O->objects(); ++x)
    if (!(Q.fiber[x] == P.fiber[x])) cert.report.add("fiber differs", cat("object ", x));
  for (int f = 0; f < O->one_cells(); ++f)
    if (!(Q.mult[f] == P.mult[f])) cert.report.add("multiplication differs", cat("1-cell ", f));
  if (Q.unit != P.unit) cert.report.add("units differ", "");
  cert.certified = cert.report.ok();
  return cert;
}

/// Extends maps on objects, 1-cells and 2-cells to the assembled simplicial sets
/// and certifies the result as a levelwise bijective simplicial map.
inline IsoCertificate certify_operadic_iso(const UnaryOperadic2Cat& A, const UnaryOperadic2Cat& B,
                                           const std::vector<int>& obj, const std::vector<int>& one,
                                           const std::vector<int>& two) {
  using detail::cat;
  IsoCertificate cert;
  auto image = [&](const NerveSimplex& s) {
    NerveSimplex t = s;
    for (int i = 0; i <= s.dim; ++i) {
      t.x(i) = obj[s.x(i)];
      for (int j = i + 1; j <= s.dim; ++j) {
        t.f(i, j) = one[s.f(i, j)];
        for (int k = j + 1; k <= s.dim; ++k) t.a(i, j, k) = two[s.a(i, j, k)];
      }
    }
    return B.N.lookup(t);
  };
  auto& L = cert.level_map;
  L.resize(5);
  for (int c = 0; c < A.components; ++c) L[0].push_back(B.pi[obj[A.u_neg1[c]]]);
  L[1] = obj;
  L[2] = one;
  for (int k = 2; k <= 3; ++k)
    for (const auto& s : A.N.simplices[k]) {
      const int v = image(s);
      if (v < 0) {
        cert.report.add("image of a simplex is not a simplex", cat("level ", k + 1));
        return cert;
      }
      L[k + 1].push_back(v);
    }
  const auto X = assemble_simplicial(A), Y = assemble_simplicial(B);
  cert.report.append(validate_sset_map(X, Y, L), "comparison: ");
  if (!is_levelwise_bijective(X, Y, L)) cert.report.add("comparison is not a levelwise bijection", "");
  cert.certified = cert.report.ok();
  return cert;
}

/// grothendieck(extract(F)) is isomorphic to the total of F over the base, by an
/// explicit map commuting with the projections and carrying lifts to lifts.
inline IsoCertificate roundtrip_fibration(const SplitFibration& F) {
  using detail::cat;
  IsoCertificate cert;
  const auto E = extract_with_maps(F);
  const auto G = grothendieck(F.p.target, E.operad);
  const auto& T = *F.p.source;
  const auto& GT = *G.total;
  const auto& O = *F.p.target;
  std::vector<int> obj(GT.objects()), one(GT.one_cells()), two(GT.C.two_cells(), -1);
  for (int x = 0; x < GT.objects(); ++x) obj[x] = E.object_of[G.obj_A[x]][G.obj_a[x]];
  for (int e = 0; e < GT.one_cells(); ++e) {
    const int f = G.one_f[e];
    const int b = obj[GT.C.tgt1[e]];
    const int p = E.object_of[O.phi1[f]][G.one_p[e]];
    const int alpha = E.cell_of[O.C.src1[f]][G.one_alpha[e]];
    one[e] = T.C.comp1.get(F(b, p, f), alpha);
  }
  // 2-cells: the unique total 2-cell between the image 1-cells over rho whose
  // fiber, read as a lax triangle, matches the image of (psi(rho), e, gamma)
  std::map<std::pair<int, int>, std::vector<int>> between;
  for (int c = 0; c < T.C.two_cells(); ++c) between[{T.C.src2[c], T.C.tgt2[c]}].push_back(c);
  for (int c = 0; c < GT.C.two_cells(); ++c) {
    const int s = GT.C.src2[c], t = GT.C.tgt2[c];
    const int rho = G.two_rho[c];
    const int bt = bar_triangle(GT, c);
    const int want = one[GT.phi2[bt]];
    std::vector<int> hits;
    for (int d : between[{one[s], one[t]}]) {
      if (F.p.level_map[3][bar_triangle(T, d)] != bar_triangle(O, rho)) continue;
      if (T.phi2[bar_triangle(T, d)] == want) hits.push_back(d);
    }
    if (hits.size() != 1) {
      cert.report.add("no unique image for a 2-cell", cat("2-cell ", c, " has ", hits.size()));
      return cert;
    }
    two[c] = hits.front();
  }
  cert = certify_operadic_iso(GT, T, obj, one, two);
  if (!cert.report.ok()) return cert;
  const auto& L = cert.level_map;
  for (int k = 0; k <= 4; ++k)
    for (int x = 0; x < static_cast<int>(L[k].size()); ++x)
      if (F.p.level_map[k][L[k][x]] != G.projection.level_map[k][x])
        cert.report.add("comparison does not commute with the projections", cat("level ", k, " cell ", x));
  if (cert.report.ok()) {
    const detail::FibrationContext ctx(G.projection);
    for (const auto& k : ctx.lift_keys())
      if (L[2][G.canonical_lift(k[0], k[1], k[2])] != F(L[1][k[0]], L[1][k[1]], k[2]))
        cert.report.add("comparison does not carry lifts to lifts", cat("(", k[0], ",", k[1], ",", k[2], ")"));
  }
  cert.certified = cert.report.ok();
  return cert;
}

/// A split fibration is a bijection on components.
inline bool pi0_iso_check(const SplitFibration& F) {
  const auto& m = F.p.level_map[0];
  std::vector<int> seen(F.p.target->components, 0);
  for (int c : m) ++seen[c];
  for (int n : seen)
    if (n != 1) return false;
  return static_cast<int>(m.size()) == F.p.target->components;
}

/// Above every trivial object of the base there is exactly one trivial object.
inline bool unique_trivial_check(const SplitFibration& F) {
  const auto& T = *F.p.source;
  const auto& O = *F.p.target;
  for (int c = 0; c < O.components; ++c) {
    int count = 0;
    for (int tc = 0; tc < T.components; ++tc)
      if (F.p.level_map[1][T.u_neg1[tc]] == O.u_neg1[c]) ++count;
    if (count != 1) return false;
  }
  return true;
}

/// (g, q, beta) is a quasibijection iff g is one and q is the unit; returns the
/// 1-cells where the two sides disagree.
inline std::vector<int> quasibijection_mismatches(const Grothendieck& G) {
  std::vector<int> bad;
  const auto& O = *G.base;
  for (int e = 0; e < G.total->one_cells(); ++e) {
    const int g = G.one_f[e], B = O.C.src1[g];
    const int c = O.phi0[B];
    const bool unit = O.phi1[g] == O.u_neg1[c] && G.one_p[e] == G.operad.unit[c];
    if (is_quasibijection(*G.total, e) != (is_quasibijection(O, g) && unit)) bad.push_back(e);
  }
  return bad;
}

/// The explicit isomorphism from the Grothendieck construction of K viewed as a
/// Bq(n)-operad to from_2category(K): (A, k) -> k, (f, p, a) -> (p, a, b), (rho, c) -> c.
inline IsoCertificate bouquet_comparison(const Finite2Category& K, int n) {
  const auto P = operad_from_2cat(K, n);
  const auto G = grothendieck(P.base, P);
  const auto D = from_2category(K);
  const auto L = lax_slice_sum(K);
  const auto& O = *G.base;
  std::vector<HomCategory> homs;
  for (int A = 0; A < O.objects(); ++A) homs.push_back(hom_category(K, A / n, A % n));
  const auto& T = *G.total;
  std::vector<int> obj(T.objects()), one(T.one_cells()), two(T.C.two_cells());
  for (int x = 0; x < T.objects(); ++x) obj[x] = homs[G.obj_A[x]].one_cells[G.obj_a[x]];
  for (int e = 0; e < T.one_cells(); ++e) {
    const int f = G.one_f[e];
    one[e] = L.one_cell(homs[O.phi1[f]].one_cells[G.one_p[e]], homs[O.C.src1[f]].two_cells[G.one_alpha[e]],
                        obj[T.C.tgt1[e]]);
  }
  for (int c = 0; c < T.C.two_cells(); ++c) {
    const int t = T.C.tgt2[c];
    two[c] = L.two_cell(one[T.C.src2[c]], one[t], homs[O.phi1[G.one_f[t]]].two_cells[G.two_gamma[c]]);
  }
  return certify_operadic_iso(T, D, obj, one, two);
}

}  // namespace opcat
