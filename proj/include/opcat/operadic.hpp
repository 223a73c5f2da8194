#pragma once

// Unary operadic 2-categories in unpacked form: a 2-category with fiber maps
// phi and unit maps u, equivalently a 5-level simplicial set whose upper
// decalage is the nerve.

#include <memory>
#include <numeric>
#include <vector>

#include "opcat/nerve.hpp"

namespace opcat {

struct UnaryOperadic2Cat {
  Finite2Category C;
  NerveData N;  // nerve of C, levels 0..3
  int components = 0;
  std::vector<int> pi;      // objects -> components
  std::vector<int> phi0;    // objects -> components
  std::vector<int> phi1;    // 1-cells -> objects
  std::vector<int> phi2;    // lax triangles -> 1-cells
  std::vector<int> phi3;    // 3-simplices -> lax triangles
  std::vector<int> u_neg1;  // components -> objects
  std::vector<int> u0;      // objects -> 1-cells
  std::vector<int> u1;      // 1-cells -> lax triangles
  std::vector<int> u2;      // lax triangles -> 3-simplices

  int objects() const { return C.objects; }
  int one_cells() const { return C.one_cells(); }
  int triangles() const { return N.size(2); }
  int tetrahedra() const { return N.size(3); }
  /// face and degeneracy tables of the nerve
  int d(int k, int i, int x) const { return N.X.d(k, i, x); }
  int s(int k, int j, int x) const { return N.X.s(k, j, x); }
  /// the lax triangle id o q => q (s1) and q o id => q (s0)
  int left_unitor(int q) const { return s(1, 1, q); }
  int right_unitor(int q) const { return s(1, 0, q); }

  bool operator==(const UnaryOperadic2Cat& o) const {
    return C == o.C && components == o.components && pi == o.pi && phi0 == o.phi0 && phi1 == o.phi1 &&
           phi2 == o.phi2 && phi3 == o.phi3 && u_neg1 == o.u_neg1 && u0 == o.u0 && u1 == o.u1 && u2 == o.u2;
  }
};

/// Connected components of the underlying graph, numbered by smallest object.
inline std::vector<int> connected_components(const Finite2Category& C, int* count = nullptr) {
  std::vector<int> parent(C.objects);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (int f = 0; f < C.one_cells(); ++f) {
    const int a = root(C.src1[f]), b = root(C.tgt1[f]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> label(C.objects, -1), comp(C.objects);
  int n = 0;
  for (int x = 0; x < C.objects; ++x) {
    const int r = root(x);
    if (label[r] < 0) label[r] = n++;
    comp[x] = label[r];
  }
  if (count) *count = n;
  return comp;
}

/// Starts an operadic structure on C: nerve, components and pi are filled in,
/// the phi and u tables are sized but unset.
inline UnaryOperadic2Cat prepare_operadic(Finite2Category C) {
  UnaryOperadic2Cat O;
  O.N = build_nerve(C, 3);
  O.C = std::move(C);
  O.pi = connected_components(O.C, &O.components);
  O.phi0.assign(O.objects(), -1);
  O.phi1.assign(O.one_cells(), -1);
  O.phi2.assign(O.triangles(), -1);
  O.phi3.assign(O.tetrahedra(), -1);
  O.u_neg1.assign(O.components, -1);
  O.u0.assign(O.objects(), -1);
  O.u1.assign(O.one_cells(), -1);
  O.u2.assign(O.triangles(), -1);
  return O;
}

/// Checks the typing items (1)-(8) and axioms (9)-(17); each violation is
/// tagged with its item number.
inline ValidationReport validate_operadic(const UnaryOperadic2Cat& O) {
  using detail::cat;
  ValidationReport r;
  const auto& C = O.C;
  const int nobj = O.objects(), n1 = O.one_cells(), n2 = O.triangles(), n3 = O.tetrahedra();
  auto sized = [&](const std::vector<int>& v, int n, int range, const char* name, const char* item) {
    if (static_cast<int>(v.size()) != n) {
      r.add(cat(name, " has wrong length"), cat(v.size(), " != ", n), item);
      return;
    }
    for (int i = 0; i < n; ++i)
      if (v[i] < 0 || v[i] >= range) r.add(cat(name, " value out of range"), cat("cell ", i), item);
  };
  sized(O.pi, nobj, O.components, "pi", "");
  sized(O.phi0, nobj, O.components, "phi0", "(1)");
  sized(O.phi1, n1, nobj, "phi1", "(2)");
  sized(O.phi2, n2, n1, "phi2", "(3)");
  sized(O.phi3, n3, n2, "phi3", "(4)");
  sized(O.u_neg1, O.components, nobj, "u_-1", "(5)");
  sized(O.u0, nobj, n1, "u0", "(6)");
  sized(O.u1, n1, n2, "u1", "(7)");
  sized(O.u2, n2, n3, "u2", "(8)");
  if (!r.ok()) return r;
  {
    int k = 0;
    if (connected_components(C, &k) != O.pi || k != O.components) r.add("pi is not the component map", "");
  }
  auto d = [&](int k, int i, int x) { return O.d(k, i, x); };
  auto s = [&](int k, int j, int x) { return O.s(k, j, x); };

  // typing
  for (int t = 0; t < n2; ++t) {
    const int p = O.phi2[t];
    if (C.src1[p] != O.phi1[d(2, 1, t)] || C.tgt1[p] != O.phi1[d(2, 0, t)])
      r.add("phi(a) : phi(h) -> phi(g)", cat("triangle ", t), "(3)");
  }
  for (int x = 0; x < n3; ++x)
    for (int i = 0; i < 3; ++i)
      if (d(2, i, O.phi3[x]) != O.phi2[d(3, i, x)])
        r.add(cat("d", i, " phi(sigma) = phi(d", i, " sigma)"), cat("3-simplex ", x), "(4)");
  for (int a = 0; a < nobj; ++a) {
    const int q = O.u0[a];
    if (C.src1[q] != a || C.tgt1[q] != O.u_neg1[O.pi[a]]) r.add("u_a : a -> u_pi(a)", cat("object ", a), "(6)");
  }
  for (int q = 0; q < n1; ++q) {
    const int t = O.u1[q];
    if (d(2, 0, t) != O.u0[C.tgt1[q]] || d(2, 1, t) != O.u0[C.src1[q]] || d(2, 2, t) != q)
      r.add("u_q : u_y o q => u_x", cat("1-cell ", q), "(7)");
  }
  for (int t = 0; t < n2; ++t) {
    const int x = O.u2[t];
    bool ok = d(3, 3, x) == t;
    for (int i = 0; i < 3; ++i) ok = ok && d(3, i, x) == O.u1[d(2, i, t)];
    if (!ok) r.add("u_a = (u_g, u_h, u_f, a)", cat("triangle ", t), "(8)");
  }
  // axioms
  for (int q = 0; q < n1; ++q)
    if (O.pi[O.phi1[q]] != O.phi0[C.tgt1[q]]) r.add("pi(phi(q)) = phi(d0 q)", cat("1-cell ", q), "(9)");
  for (int c = 0; c < O.components; ++c)
    if (O.pi[O.u_neg1[c]] != c) r.add("pi(u_c) = c", cat("component ", c), "(10)");
  for (int a = 0; a < nobj; ++a)
    if (O.phi1[C.id1[a]] != O.u_neg1[O.phi0[a]]) r.add("phi(1_a) = u_phi(a)", cat("object ", a), "(11)");
  for (int q = 0; q < n1; ++q) {
    if (O.phi2[s(1, 1, q)] != O.u0[O.phi1[q]]) r.add("phi(1 o q => q) = u_phi(q)", cat("1-cell ", q), "(12)");
    if (O.phi2[s(1, 0, q)] != C.id1[O.phi1[q]]) r.add("phi(q o 1 => q) = 1_phi(q)", cat("1-cell ", q), "(12)");
  }
  for (int t = 0; t < n2; ++t) {
    if (O.phi3[s(2, 2, t)] != O.u1[O.phi2[t]]) r.add("phi(s2 a) = u_phi(a)", cat("triangle ", t), "(13)");
    if (O.phi3[s(2, 1, t)] != s(1, 1, O.phi2[t])) r.add("phi(s1 a) = s1 phi(a)", cat("triangle ", t), "(13)");
    if (O.phi3[s(2, 0, t)] != s(1, 0, O.phi2[t])) r.add("phi(s0 a) = s0 phi(a)", cat("triangle ", t), "(13)");
  }
  for (int c = 0; c < O.components; ++c)
    if (O.u0[O.u_neg1[c]] != C.id1[O.u_neg1[c]]) r.add("u_(u_c) = 1", cat("component ", c), "(14)");
  for (int a = 0; a < nobj; ++a)
    if (O.u1[O.u0[a]] != s(1, 1, O.u0[a])) r.add("u_(u_a) = 1", cat("object ", a), "(14)");
  for (int q = 0; q < n1; ++q)
    if (O.u2[O.u1[q]] != s(2, 2, O.u1[q])) r.add("u_(u_q) = 1", cat("1-cell ", q), "(14)");
  for (int c = 0; c < O.components; ++c)
    if (O.phi0[O.u_neg1[c]] != c) r.add("phi(u_c) = c", cat("component ", c), "(15)");
  for (int a = 0; a < nobj; ++a)
    if (O.phi1[O.u0[a]] != a) r.add("phi(u_a) = a", cat("object ", a), "(15)");
  for (int q = 0; q < n1; ++q)
    if (O.phi2[O.u1[q]] != q) r.add("phi(u_q) = q", cat("1-cell ", q), "(15)");
  for (int t = 0; t < n2; ++t)
    if (O.phi3[O.u2[t]] != t) r.add("phi(u_a) = a", cat("triangle ", t), "(15)");
  for (int x = 0; x < n3; ++x)
    if (O.phi2[O.phi3[x]] != O.phi2[d(3, 3, x)]) r.add("phi(phi(sigma)) = phi(a012)", cat("3-simplex ", x), "(16)");
  for (int t = 0; t < n2; ++t)
    if (O.phi1[O.phi2[t]] != O.phi1[d(2, 2, t)]) r.add("phi(phi(a)) = phi(f)", cat("triangle ", t), "(16)");
  for (int q = 0; q < n1; ++q)
    if (O.phi0[O.phi1[q]] != O.phi0[C.src1[q]]) r.add("phi(phi(q)) = phi(x)", cat("1-cell ", q), "(16)");
  for (int x = 0; x < nobj; ++x)
    if (O.u1[C.id1[x]] != s(1, 0, O.u0[x])) r.add("u_(1_x) = s0 u_x", cat("object ", x), "(17)");
  for (int q = 0; q < n1; ++q) {
    if (O.u2[s(1, 0, q)] != s(2, 0, O.u1[q])) r.add("u_(s0 q) = s0 u_q", cat("1-cell ", q), "(17)");
    if (O.u2[s(1, 1, q)] != s(2, 1, O.u1[q])) r.add("u_(s1 q) = s1 u_q", cat("1-cell ", q), "(17)");
  }
  return r;
}

/// The augmented diagram as a 5-level simplicial set: X0 = components,
/// X1 = objects, X2 = 1-cells, X3 = lax triangles, X4 = 3-simplices, with phi as
/// top faces, u as top degeneracies and pi as d0 on X1.
inline TruncatedSimplicialSet assemble_simplicial(const UnaryOperadic2Cat& O) {
  const auto& NX = O.N.X;
  auto X = TruncatedSimplicialSet::shaped({O.components, O.objects(), O.one_cells(), O.triangles(), O.tetrahedra()});
  X.face[1][0] = O.pi;
  X.face[1][1] = O.phi0;
  const std::vector<int>* phi[] = {nullptr, &O.phi1, &O.phi2, &O.phi3};
  const std::vector<int>* u[] = {&O.u0, &O.u1, &O.u2};
  for (int k = 2; k <= 4; ++k) {
    for (int i = 0; i < k; ++i) X.face[k][i] = NX.face[k - 1][i];
    X.face[k][k] = *phi[k - 1];
  }
  X.degen[0][0] = O.u_neg1;
  for (int k = 1; k <= 3; ++k) {
    for (int j = 0; j < k; ++j) X.degen[k][j] = NX.degen[k - 1][j];
    X.degen[k][k] = *u[k - 1];
  }
  return X;
}

inline TruncatedSimplicialSet to_simplicial(const UnaryOperadic2Cat& O) {
  if (auto rep = validate_operadic(O); !rep.ok()) throw InvalidInput("to_simplicial: invalid operadic 2-category", rep);
  return assemble_simplicial(O);
}

// ---- constructions -----------------------------------------------------------

namespace detail {

inline std::vector<int> invert(const std::vector<int>& f, int n) {
  std::vector<int> g(n, -1);
  for (int x = 0; x < static_cast<int>(f.size()); ++x) g[f[x]] = x;
  return g;
}

}  // namespace detail

/// Builds the operadic structure on D from a 5-level simplicial set X and an
/// isomorphism dec X -> N D; phi and u are the top faces and degeneracies of X
/// transported along the isomorphism.
inline UnaryOperadic2Cat operadic_from_decalage(const TruncatedSimplicialSet& X, const Finite2Category& D,
                                                const std::vector<std::vector<int>>& iso) {
  auto O = prepare_operadic(D);
  std::vector<std::vector<int>> inv(4);
  for (int k = 0; k <= 3; ++k) inv[k] = detail::invert(iso[k], O.N.size(k));
  // X0 is identified with components through d0 : X1 -> X0
  std::vector<int> comp_of(X.cells[0], -1);
  for (int y = 0; y < X.cells[1]; ++y) {
    const int z = X.d(1, 0, y), c = O.pi[iso[0][y]];
    if (comp_of[z] >= 0 && comp_of[z] != c) throw InternalInconsistency("operadic_from_decalage: d0 does not factor through pi");
    comp_of[z] = c;
  }
  for (int z = 0; z < X.cells[0]; ++z) {
    if (comp_of[z] < 0) throw InternalInconsistency("operadic_from_decalage: vertex with no object");
    O.u_neg1[comp_of[z]] = iso[0][X.s(0, 0, z)];
  }
  for (int a = 0; a < O.objects(); ++a) {
    O.phi0[a] = comp_of[X.d(1, 1, inv[0][a])];
    O.u0[a] = iso[1][X.s(1, 1, inv[0][a])];
  }
  for (int q = 0; q < O.one_cells(); ++q) {
    O.phi1[q] = iso[0][X.d(2, 2, inv[1][q])];
    O.u1[q] = iso[2][X.s(2, 2, inv[1][q])];
  }
  for (int t = 0; t < O.triangles(); ++t) {
    O.phi2[t] = iso[1][X.d(3, 3, inv[2][t])];
    O.u2[t] = iso[3][X.s(3, 3, inv[2][t])];
  }
  for (int x = 0; x < O.tetrahedra(); ++x) O.phi3[x] = iso[2][X.d(4, 4, inv[3][x])];
  return O;
}

/// The pair (NC, DC): the lax slice sum of C with structure read off the nerve of C.
inline UnaryOperadic2Cat from_2category(const Finite2Category& C) {
  auto R = dec_nerve_comparison(C);
  auto O = operadic_from_decalage(R.NC.X, R.slice.D, R.iso.map.level_map);
  if (auto rep = validate_operadic(O); !rep.ok())
    throw InternalInconsistency("from_2category: result fails validation:\n" + rep.str());
  return O;
}

/// Para construction: from_2category of the delooping, cross-checked against the
/// explicit formulas u_c = I, u_x = (x, 1_x), phi(a, f) = a, phi(D012) = (a01, a012).
inline UnaryOperadic2Cat para(const StrictMonCat& M) {
  const auto B = deloop(M);
  auto R = dec_nerve_comparison(B);
  auto O = operadic_from_decalage(R.NC.X, R.slice.D, R.iso.map.level_map);
  const auto& L = R.slice;
  auto fail = [](const char* what) { throw InternalInconsistency(std::string("para: explicit formula disagrees: ") + what); };
  if (O.components != 1 || O.u_neg1[0] != M.unit) fail("u_c = I");
  for (int x = 0; x < M.cat.objects; ++x)
    if (O.u0[x] != L.one_cell(x, M.cat.id[x], M.unit)) fail("u_x = (x, 1_x)");
  for (int e = 0; e < O.one_cells(); ++e)
    if (O.phi1[e] != L.base_f[e]) fail("phi(a, f) = a");
  for (int t = 0; t < O.triangles(); ++t) {
    const auto& s = O.N.at(2, t);
    const int g = L.base_f[s.f(1, 2)];
    if (O.phi2[t] != L.one_cell(L.base_f[s.f(0, 1)], L.base_gamma[s.a(0, 1, 2)], g)) fail("phi(D012) = (a01, a012)");
  }
  for (int x = 0; x < O.tetrahedra(); ++x) {
    const auto& s = O.N.at(3, x);
    NerveSimplex t(2);
    for (int i = 0; i < 3; ++i) t.x(i) = L.base_f[s.f(i, 3)];
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        t.f(i, j) = L.one_cell(L.base_f[s.f(i, j)], L.base_gamma[s.a(i, j, 3)], L.base_f[s.f(j, 3)]);
    t.a(0, 1, 2) = L.two_cell(O.C.comp1.get(t.f(1, 2), t.f(0, 1)), t.f(0, 2), L.base_gamma[s.a(0, 1, 2)]);
    if (O.phi3[x] != O.N.find(t)) fail("phi(s0123) = D012");
  }
  if (auto rep = validate_operadic(O); !rep.ok())
    throw InternalInconsistency("para: result fails validation:\n" + rep.str());
  return O;
}

inline UnaryOperadic2Cat terminal_odot() { return from_2category(terminal_2category()); }

/// Bq(A) for A = {0..n-1}: objects (a,b) at index a*n+b, a unique 1-cell
/// (a',b) -> (a'',b) with fiber (a',a''), only identity 2-cells.
inline UnaryOperadic2Cat bouquets(int n) {
  if (n <= 0) throw Error("bouquets: empty set");
  auto obj = [n](int a, int b) { return a * n + b; };
  Finite2Category C;
  C.objects = n * n;
  std::vector<int> cell(C.objects * C.objects, -1);
  for (int s = 0; s < C.objects; ++s)
    for (int t = 0; t < C.objects; ++t)
      if (s % n == t % n) cell[s * C.objects + t] = C.add_one_cell(s, t);
  auto one = [&](int s, int t) { return cell[s * C.objects + t]; };
  C.id1.resize(C.objects);
  for (int x = 0; x < C.objects; ++x) C.id1[x] = one(x, x);
  for (int f = 0; f < C.one_cells(); ++f)
    for (int g = 0; g < C.one_cells(); ++g)
      if (C.tgt1[f] == C.src1[g]) C.comp1.set(g, f, one(C.src1[f], C.tgt1[g]));
  for (int f = 0; f < C.one_cells(); ++f) C.add_two_cell(f, f);
  C.id2.resize(C.one_cells());
  std::iota(C.id2.begin(), C.id2.end(), 0);
  for (int f = 0; f < C.one_cells(); ++f) C.vcomp.set(f, f, f);
  for (const auto& [g, f, v] : C.comp1.entries()) C.hcomp.set(g, f, v);

  auto O = prepare_operadic(std::move(C));
  // a simplex over b is a vertex sequence (a_0..a_k)
  auto simplex = [&](const std::vector<int>& objs) {
    const int k = static_cast<int>(objs.size()) - 1;
    NerveSimplex s(k);
    for (int i = 0; i <= k; ++i) s.x(i) = objs[i];
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        s.f(i, j) = one(objs[i], objs[j]);
        for (int l = j + 1; l <= k; ++l) s.a(i, j, l) = one(objs[i], objs[l]);
      }
    return O.N.find(s);
  };
  auto fiber = [&](const NerveSimplex& s) {  // drop the last vertex
    std::vector<int> objs;
    const int top = s.x(s.dim) / n;
    for (int i = 0; i < s.dim; ++i) objs.push_back(obj(s.x(i) / n, top));
    return objs;
  };
  auto unit = [&](const NerveSimplex& s) {  // append (b,b)
    std::vector<int> objs;
    for (int i = 0; i <= s.dim; ++i) objs.push_back(s.x(i));
    const int b = s.x(0) % n;
    objs.push_back(obj(b, b));
    return objs;
  };
  for (int b = 0; b < n; ++b) O.u_neg1[O.pi[obj(b, b)]] = obj(b, b);
  for (int x = 0; x < O.objects(); ++x) {
    O.phi0[x] = O.pi[obj(0, x / n)];
    O.u0[x] = simplex(unit(O.N.at(0, x)));
  }
  for (int q = 0; q < O.one_cells(); ++q) {
    O.phi1[q] = fiber(O.N.at(1, q))[0];
    O.u1[q] = simplex(unit(O.N.at(1, q)));
  }
  for (int t = 0; t < O.triangles(); ++t) {
    O.phi2[t] = simplex(fiber(O.N.at(2, t)));
    O.u2[t] = simplex(unit(O.N.at(2, t)));
  }
  for (int x = 0; x < O.tetrahedra(); ++x) O.phi3[x] = simplex(fiber(O.N.at(3, x)));
  return O;
}

// ---- quasibijections and unit objects ----------------------------------------

/// g is a quasibijection if phi(g o f => g o f) = u_phi(f) for every f into its source.
inline bool is_quasibijection(const UnaryOperadic2Cat& O, int g) {
  const auto& C = O.C;
  for (int f = 0; f < O.one_cells(); ++f) {
    if (C.tgt1[f] != C.src1[g]) continue;
    NerveSimplex t(2);
    t.x(0) = C.src1[f];
    t.x(1) = C.tgt1[f];
    t.x(2) = C.tgt1[g];
    t.f(0, 1) = f;
    t.f(1, 2) = g;
    t.f(0, 2) = C.comp1.get(g, f);
    t.a(0, 1, 2) = C.id2[t.f(0, 2)];
    if (O.phi2[O.N.find(t)] != O.u0[O.phi1[f]]) return false;
  }
  return true;
}

/// Each u_c is lali-terminal in its component, witnessed by u0: every
/// h : x -> u_c admits exactly one 2-cell h => u_x.
inline ValidationReport check_lali_terminal(const UnaryOperadic2Cat& O) {
  using detail::cat;
  ValidationReport r;
  const auto& C = O.C;
  for (int h = 0; h < O.one_cells(); ++h) {
    const int x = C.src1[h], v = C.tgt1[h];
    if (O.u_neg1[O.pi[v]] != v) continue;
    int count = 0;
    for (int a = 0; a < C.two_cells(); ++a)
      if (C.src2[a] == h && C.tgt2[a] == O.u0[x]) ++count;
    if (count != 1) r.add("u_x is not terminal in the hom-category into u_c", cat("1-cell ", h, " has ", count));
  }
  return r;
}

// ---- operadic functors ---------------------------------------------------------

struct OperadicFunctor {
  std::shared_ptr<const UnaryOperadic2Cat> source, target;
  std::vector<std::vector<int>> level_map;  // levels 0..4 of the assembled simplicial sets
};

inline ValidationReport validate_operadic_functor(const OperadicFunctor& F) {
  using detail::cat;
  ValidationReport r;
  if (!F.source || !F.target) {
    r.add("functor without source or target", "");
    return r;
  }
  const auto X = assemble_simplicial(*F.source), Y = assemble_simplicial(*F.target);
  if (F.level_map.size() != 5) {
    r.add("functor needs five levels", cat("have ", F.level_map.size()));
    return r;
  }
  for (int k = 0; k <= 4; ++k) {
    if (static_cast<int>(F.level_map[k].size()) != X.cells[k]) {
      r.add("level map has wrong length", cat("level ", k));
      return r;
    }
    for (int v : F.level_map[k])
      if (v < 0 || v >= Y.cells[k]) {
        r.add("image out of range", cat("level ", k));
        return r;
      }
  }
  auto face_name = [](int k, int i) -> std::string {
    if (i == k) return cat("phi square at level ", k);
    if (k == 1) return "pi square at level 1";
    return cat("face d", i, " square at level ", k);
  };
  auto degen_name = [](int k, int j) -> std::string {
    if (j == k) return cat("u square at level ", k);
    return cat("degeneracy s", j, " square at level ", k);
  };
  const auto& L = F.level_map;
  for (int k = 1; k <= 4; ++k)
    for (int x = 0; x < X.cells[k]; ++x)
      for (int i = 0; i <= k; ++i)
        if (L[k - 1][X.d(k, i, x)] != Y.d(k, i, L[k][x])) r.add(face_name(k, i), cat("cell ", x));
  for (int k = 0; k < 4; ++k)
    for (int x = 0; x < X.cells[k]; ++x)
      for (int j = 0; j <= k; ++j)
        if (L[k + 1][X.s(k, j, x)] != Y.s(k, j, L[k][x])) r.add(degen_name(k, j), cat("cell ", x));
  return r;
}

inline OperadicFunctor identity_functor(std::shared_ptr<const UnaryOperadic2Cat> O) {
  OperadicFunctor F{O, O, {}};
  const std::vector<int> sizes = {O->components, O->objects(), O->one_cells(), O->triangles(), O->tetrahedra()};
  for (int n : sizes) {
    F.level_map.emplace_back(n);
    std::iota(F.level_map.back().begin(), F.level_map.back().end(), 0);
  }
  return F;
}

/// Every operadic functor O -> P, by exhaustive search over simplicial maps.
inline std::vector<OperadicFunctor> enumerate_operadic_functors(std::shared_ptr<const UnaryOperadic2Cat> O,
                                                                std::shared_ptr<const UnaryOperadic2Cat> P,
                                                                long long limit = 1000) {
  std::vector<OperadicFunctor> out;
  const auto X = assemble_simplicial(*O), Y = assemble_simplicial(*P);
  enumerate_sset_maps(X, Y, [&](const std::vector<std::vector<int>>& lm) {
    out.push_back({O, P, lm});
    return static_cast<long long>(out.size()) < limit;
  });
  return out;
}

/// The operadic functor induced by a strict 2-functor on from_2category.
inline OperadicFunctor functor_from_2functor(const Finite2Category& C, const Finite2Category& D,
                                             const TwoFunctor& F) {
  auto O = std::make_shared<const UnaryOperadic2Cat>(from_2category(C));
  auto P = std::make_shared<const UnaryOperadic2Cat>(from_2category(D));
  // X of from_2category is the nerve of the base, levels 0..4
  const auto NC = build_nerve(C, 4), ND = build_nerve(D, 4);
  const auto lm = nerve_map(C, NC, D, ND, F);
  // translate nerve cells of the base into the assembled levels via dec
  const auto RC = dec_nerve_comparison(C), RD = dec_nerve_comparison(D);
  OperadicFunctor G{O, P, std::vector<std::vector<int>>(5)};
  G.level_map[0].resize(O->components);
  for (int z = 0; z < C.objects; ++z) {
    const int a = RC.iso.map.level_map[0][NC.X.s(0, 0, z)];  // identity 1-cell, an object of DC
    const int b = RD.iso.map.level_map[0][ND.X.s(0, 0, lm[0][z])];
    G.level_map[0][O->pi[a]] = P->pi[b];
  }
  for (int k = 0; k <= 3; ++k) {
    const auto inv = detail::invert(RC.iso.map.level_map[k], RC.ND.size(k));
    for (int x = 0; x < RC.ND.size(k); ++x)
      G.level_map[k + 1].push_back(RD.iso.map.level_map[k][lm[k + 1][inv[x]]]);
  }
  return G;
}

}  // namespace opcat
