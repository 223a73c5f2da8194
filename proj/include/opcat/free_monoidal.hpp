#pragma once

// Psi M = tr3 N(BM), symbolic presentations of free strict monoidal categories
// (Phi0[k] and Phi tr3 X), hom enumeration into finite monoidal categories and
// a certificate for the bijection sSet(X, Psi M) = StrMonCat(Phi tr3 X, M).

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "opcat/nerve.hpp"
#include "opcat/simplicial.hpp"
#include "opcat/twocat.hpp"

namespace opcat {

using Word = std::vector<int>;

/// A generating morphism inputs -> outputs, both words in the alphabet.
struct MonGenerator {
  std::string name;
  Word inputs, outputs;
  bool operator==(const MonGenerator&) const = default;
};

/// One tensor factor of a layer: a generator or the identity on a letter.
struct Factor {
  bool generator = false;
  int index = 0;
  bool operator==(const Factor&) const = default;
};

using Layer = std::vector<Factor>;

/// sigma = left = right, where left and right are composites of layers
/// (first layer applied first).
struct MonRelation {
  int sigma = 0;
  std::vector<Layer> left, right;
  bool operator==(const MonRelation&) const = default;
};

struct MonPresentation {
  std::vector<std::string> letters;
  std::vector<MonGenerator> generators;
  std::vector<MonRelation> relations;
  int bound = 0;  // 0: larger term size plus two
  bool operator==(const MonPresentation&) const = default;
};

namespace detail {

inline Word layer_dom(const MonPresentation& P, const Layer& L) {
  Word w;
  for (const auto& f : L) {
    if (f.generator)
      w.insert(w.end(), P.generators[f.index].inputs.begin(), P.generators[f.index].inputs.end());
    else
      w.push_back(f.index);
  }
  return w;
}

inline Word layer_cod(const MonPresentation& P, const Layer& L) {
  Word w;
  for (const auto& f : L) {
    if (f.generator)
      w.insert(w.end(), P.generators[f.index].outputs.begin(), P.generators[f.index].outputs.end());
    else
      w.push_back(f.index);
  }
  return w;
}

}  // namespace detail

inline ValidationReport validate_presentation(const MonPresentation& P) {
  using detail::cat;
  ValidationReport r;
  const int L = static_cast<int>(P.letters.size()), G = static_cast<int>(P.generators.size());
  auto word_ok = [&](const Word& w) {
    return std::all_of(w.begin(), w.end(), [&](int a) { return a >= 0 && a < L; });
  };
  for (int g = 0; g < G; ++g)
    if (!word_ok(P.generators[g].inputs) || !word_ok(P.generators[g].outputs))
      r.add("generator letter out of range", cat("generator ", g));
  for (std::size_t k = 0; k < P.relations.size(); ++k) {
    const auto& R = P.relations[k];
    if (R.sigma < 0 || R.sigma >= G) {
      r.add("relation generator out of range", cat("relation ", k));
      continue;
    }
    for (const auto* side : {&R.left, &R.right}) {
      bool range = true;
      for (const auto& layer : *side)
        for (const auto& f : layer)
          if (f.index < 0 || f.index >= (f.generator ? G : L)) range = false;
      if (!range || side->empty()) {
        r.add("relation factor out of range", cat("relation ", k));
        continue;
      }
      if (!r.ok()) continue;
      if (detail::layer_dom(P, side->front()) != P.generators[R.sigma].inputs)
        r.add("relation source does not match", cat("relation ", k));
      if (detail::layer_cod(P, side->back()) != P.generators[R.sigma].outputs)
        r.add("relation target does not match", cat("relation ", k));
      for (std::size_t i = 0; i + 1 < side->size(); ++i)
        if (detail::layer_cod(P, (*side)[i]) != detail::layer_dom(P, (*side)[i + 1]))
          r.add("relation layers not composable", cat("relation ", k, " layer ", i));
    }
  }
  if (P.bound < 0) r.add("negative bound", "");
  return r;
}

// ---- Psi --------------------------------------------------------------------

inline NerveData psi_data(const StrictMonCat& M) { return build_nerve(deloop(M), 3); }

inline TruncatedSimplicialSet psi(const StrictMonCat& M) { return psi_data(M).X; }

// ---- Phi0[k] ----------------------------------------------------------------

/// Letters f_ij (i<j<=k, lexicographic), generators alpha_ijk : f_jk f_ij -> f_ik,
/// and for k = 3 sigma : f23 f12 f01 -> f03 with its two expansions.
inline MonPresentation phi0(int k) {
  if (k < 0 || k > 3) throw Error(detail::cat("phi0: k = ", k, " out of range"));
  MonPresentation P;
  if (k == 0) return P;
  std::map<std::pair<int, int>, int> f;
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      f[{i, j}] = static_cast<int>(P.letters.size());
      P.letters.push_back(detail::cat("f", i, j));
    }
  std::map<std::array<int, 3>, int> a;
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (int l = j + 1; l <= k; ++l) {
        a[{i, j, l}] = static_cast<int>(P.generators.size());
        P.generators.push_back({detail::cat("alpha", i, j, l), {f[{j, l}], f[{i, j}]}, {f[{i, l}]}});
      }
  if (k == 3) {
    const int s = static_cast<int>(P.generators.size());
    P.generators.push_back({"sigma0123", {f[{2, 3}], f[{1, 2}], f[{0, 1}]}, {f[{0, 3}]}});
    MonRelation R;
    R.sigma = s;
    R.left = {{{true, a[{1, 2, 3}]}, {false, f[{0, 1}]}}, {{true, a[{0, 1, 3}]}}};
    R.right = {{{false, f[{2, 3}]}, {true, a[{0, 1, 2}]}}, {{true, a[{0, 2, 3}]}}};
    P.relations.push_back(R);
  }
  return P;
}

// ---- Phi tr3 X --------------------------------------------------------------

/// Phi tr3 X together with where each nondegenerate simplex went.
struct PhiTr3 {
  MonPresentation presentation;
  std::vector<int> letter_of_edge;   // -1 for degenerate edges
  std::vector<int> gen_of_triangle;  // -1 for degenerate triangles
  std::vector<int> gen_of_tetra;     // -1 for degenerate 3-simplices
  std::vector<int> relation_of_tetra;

  Word word(int e) const {
    return letter_of_edge[e] < 0 ? Word{} : Word{letter_of_edge[e]};
  }
};

namespace detail {

inline void append(Word& w, const Word& v) { w.insert(w.end(), v.begin(), v.end()); }

// edge (i,j) of a 3-simplex
inline int tetra_edge(const TruncatedSimplicialSet& X, int S, int i, int j) {
  std::vector<int> del;
  for (int v = 3; v >= 0; --v)
    if (v != i && v != j) del.push_back(v);
  int t = X.d(3, del[0], S);
  // vertices left after removing del[0]; locate del[1] among them
  const int pos = del[1] - (del[1] > del[0] ? 1 : 0);
  return X.d(2, pos, t);
}

}  // namespace detail

inline PhiTr3 phi_tr3_data(const TruncatedSimplicialSet& X) {
  using detail::cat;
  if (auto rep = validate_simplicial(X); !rep.ok()) throw InvalidInput("phi_tr3: invalid simplicial set", rep);
  if (X.max_level < 2) throw Error("phi_tr3: needs levels 0..2 at least");
  PhiTr3 D;
  auto& P = D.presentation;
  D.letter_of_edge.assign(X.size(1), -1);
  for (int e = 0; e < X.size(1); ++e)
    if (!is_degenerate(X, 1, e)) {
      D.letter_of_edge[e] = static_cast<int>(P.letters.size());
      P.letters.push_back(cat("e", e));
    }
  D.gen_of_triangle.assign(X.size(2), -1);
  for (int t = 0; t < X.size(2); ++t)
    if (!is_degenerate(X, 2, t)) {
      D.gen_of_triangle[t] = static_cast<int>(P.generators.size());
      Word in = D.word(X.d(2, 0, t));
      detail::append(in, D.word(X.d(2, 2, t)));
      P.generators.push_back({cat("t", t), in, D.word(X.d(2, 1, t))});
    }
  const int top = std::min(X.max_level, 3);
  D.gen_of_tetra.assign(top >= 3 ? X.size(3) : 0, -1);
  D.relation_of_tetra.assign(D.gen_of_tetra.size(), -1);
  // a triangle as a layer factor list: generator or identities on its word
  auto tri = [&](int t) {
    Layer L;
    if (D.gen_of_triangle[t] >= 0) {
      L.push_back({true, D.gen_of_triangle[t]});
    } else {
      for (int a : D.word(X.d(2, 1, t))) L.push_back({false, a});
    }
    return L;
  };
  auto ids = [&](int e) {
    Layer L;
    for (int a : D.word(e)) L.push_back({false, a});
    return L;
  };
  for (int S = 0; S < static_cast<int>(D.gen_of_tetra.size()); ++S) {
    if (is_degenerate(X, 3, S)) continue;
    auto E = [&](int i, int j) { return detail::tetra_edge(X, S, i, j); };
    Word in = D.word(E(2, 3));
    detail::append(in, D.word(E(1, 2)));
    detail::append(in, D.word(E(0, 1)));
    const int g = static_cast<int>(P.generators.size());
    D.gen_of_tetra[S] = g;
    P.generators.push_back({cat("s", S), in, D.word(E(0, 3))});
    MonRelation R;
    R.sigma = g;
    Layer l1 = tri(X.d(3, 0, S));
    for (auto f : ids(E(0, 1))) l1.push_back(f);
    R.left = {l1, tri(X.d(3, 2, S))};
    Layer r1 = ids(E(2, 3));
    for (auto f : tri(X.d(3, 3, S))) r1.push_back(f);
    R.right = {r1, tri(X.d(3, 1, S))};
    D.relation_of_tetra[S] = static_cast<int>(P.relations.size());
    P.relations.push_back(R);
  }
  return D;
}

inline MonPresentation phi_tr3(const TruncatedSimplicialSet& X) { return phi_tr3_data(X).presentation; }

/// True iff P and Q agree after renaming letters and generators.
inline bool presentations_isomorphic(const MonPresentation& P, const MonPresentation& Q) {
  const int L = static_cast<int>(P.letters.size()), G = static_cast<int>(P.generators.size());
  if (L != static_cast<int>(Q.letters.size()) || G != static_cast<int>(Q.generators.size()) ||
      P.relations.size() != Q.relations.size())
    return false;
  std::vector<int> lm(L, -1), gm(G, -1);
  std::vector<char> lused(L, 0), gused(G, 0);
  auto map_word = [&](const Word& w) {
    Word v;
    for (int a : w) v.push_back(lm[a]);
    return v;
  };
  auto map_layers = [&](const std::vector<Layer>& ls) {
    std::vector<Layer> out = ls;
    for (auto& l : out)
      for (auto& f : l) f.index = f.generator ? gm[f.index] : lm[f.index];
    return out;
  };
  auto relations_match = [&]() {
    std::vector<char> used(Q.relations.size(), 0);
    for (const auto& R : P.relations) {
      MonRelation img{gm[R.sigma], map_layers(R.left), map_layers(R.right)};
      bool found = false;
      for (std::size_t k = 0; k < Q.relations.size() && !found; ++k)
        if (!used[k] && Q.relations[k].sigma == img.sigma && Q.relations[k].left == img.left &&
            Q.relations[k].right == img.right)
          used[k] = 1, found = true;
      if (!found) return false;
    }
    return true;
  };
  std::function<bool(int)> gens = [&](int g) -> bool {
    if (g == G) return relations_match();
    const Word in = map_word(P.generators[g].inputs), out = map_word(P.generators[g].outputs);
    for (int h = 0; h < G; ++h)
      if (!gused[h] && Q.generators[h].inputs == in && Q.generators[h].outputs == out) {
        gused[h] = 1;
        gm[g] = h;
        if (gens(g + 1)) return true;
        gused[h] = 0;
      }
    return false;
  };
  std::function<bool(int)> letters = [&](int a) -> bool {
    if (a == L) return gens(0);
    for (int b = 0; b < L; ++b)
      if (!lused[b]) {
        lused[b] = 1;
        lm[a] = b;
        if (letters(a + 1)) return true;
        lused[b] = 0;
      }
    return false;
  };
  return letters(0);
}

// ---- hom into a finite strict monoidal category -----------------------------

/// A strict monoidal functor out of a presentation: images of letters and generators.
struct MonFunctorAssignment {
  std::vector<int> objects;
  std::vector<int> morphisms;
  bool operator==(const MonFunctorAssignment&) const = default;
  auto operator<=>(const MonFunctorAssignment&) const = default;
};

namespace detail {

inline int tensor_word(const StrictMonCat& M, const std::vector<int>& objects, const Word& w) {
  int x = M.unit;
  for (int a : w) x = M.tensor(x, objects[a]);
  return x;
}

// value of a composite of layers, or -1 if it does not type-check in M
inline int eval_layers(const MonPresentation& P, const StrictMonCat& M, const MonFunctorAssignment& A,
                       const std::vector<Layer>& layers) {
  int acc = -1;
  for (const auto& layer : layers) {
    int v = M.cat.id[M.unit];
    for (const auto& f : layer) {
      const int m = f.generator ? A.morphisms[f.index] : M.cat.id[A.objects[f.index]];
      if (m < 0) return -1;
      v = M.tensor_m(v, m);
    }
    if (acc < 0) {
      acc = v;
    } else {
      if (M.cat.tgt[acc] != M.cat.src[v]) return -1;
      acc = M.cat.comp.get(v, acc);
    }
  }
  (void)P;
  return acc;
}

}  // namespace detail

inline ValidationReport validate_assignment(const MonPresentation& P, const StrictMonCat& M,
                                            const MonFunctorAssignment& A) {
  using detail::cat;
  ValidationReport r;
  if (A.objects.size() != P.letters.size() || A.morphisms.size() != P.generators.size()) {
    r.add("shape: assignment tables", "");
    return r;
  }
  for (int x : A.objects)
    if (x < 0 || x >= M.cat.objects) r.add("object out of range", "");
  for (int m : A.morphisms)
    if (m < 0 || m >= M.cat.morphisms()) r.add("morphism out of range", "");
  if (!r.ok()) return r;
  for (std::size_t g = 0; g < P.generators.size(); ++g) {
    const auto& G = P.generators[g];
    if (M.cat.src[A.morphisms[g]] != detail::tensor_word(M, A.objects, G.inputs) ||
        M.cat.tgt[A.morphisms[g]] != detail::tensor_word(M, A.objects, G.outputs))
      r.add("generator image has wrong type", cat("generator ", G.name));
  }
  if (!r.ok()) return r;
  for (std::size_t k = 0; k < P.relations.size(); ++k) {
    const auto& R = P.relations[k];
    const int l = detail::eval_layers(P, M, A, R.left), rr = detail::eval_layers(P, M, A, R.right);
    if (l != A.morphisms[R.sigma] || rr != A.morphisms[R.sigma])
      r.add("relation not preserved", cat("relation ", k));
  }
  return r;
}

/// Every typed, relation-respecting assignment P -> M, in lexicographic order.
inline std::vector<MonFunctorAssignment> hom_moncat(const MonPresentation& P, const StrictMonCat& M) {
  if (auto rep = validate_presentation(P); !rep.ok()) throw InvalidInput("hom_moncat: invalid presentation", rep);
  if (auto rep = validate_moncat(M); !rep.ok()) throw InvalidInput("hom_moncat: invalid monoidal category", rep);
  const int L = static_cast<int>(P.letters.size()), G = static_cast<int>(P.generators.size());
  std::vector<std::vector<int>> rel_of(G);
  for (std::size_t k = 0; k < P.relations.size(); ++k) rel_of[P.relations[k].sigma].push_back(static_cast<int>(k));
  // generators constrained by a relation go last so the relation can be checked on the spot
  std::vector<int> order;
  for (int g = 0; g < G; ++g)
    if (rel_of[g].empty()) order.push_back(g);
  for (int g = 0; g < G; ++g)
    if (!rel_of[g].empty()) order.push_back(g);
  std::map<std::pair<int, int>, std::vector<int>> hom;
  for (int m = 0; m < M.cat.morphisms(); ++m) hom[{M.cat.src[m], M.cat.tgt[m]}].push_back(m);

  std::vector<MonFunctorAssignment> out;
  MonFunctorAssignment A;
  A.objects.assign(L, 0);
  A.morphisms.assign(G, -1);
  std::function<void(int)> gen = [&](int i) {
    if (i == G) {
      out.push_back(A);
      return;
    }
    const int g = order[i];
    const auto& Gg = P.generators[g];
    auto it = hom.find({detail::tensor_word(M, A.objects, Gg.inputs), detail::tensor_word(M, A.objects, Gg.outputs)});
    if (it == hom.end()) return;
    for (int m : it->second) {
      A.morphisms[g] = m;
      bool ok = true;
      for (int k : rel_of[g]) {
        const auto& R = P.relations[k];
        if (detail::eval_layers(P, M, A, R.left) != m || detail::eval_layers(P, M, A, R.right) != m) ok = false;
      }
      if (ok) gen(i + 1);
    }
    A.morphisms[g] = -1;
  };
  std::function<void(int)> obj = [&](int a) {
    if (a == L) return gen(0);
    for (int x = 0; x < M.cat.objects; ++x) {
      A.objects[a] = x;
      obj(a + 1);
    }
  };
  obj(0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- monoidal functors --------------------------------------------------------

struct MonFunctor {
  std::vector<int> on_objects, on_morphisms;
  bool operator==(const MonFunctor&) const = default;
};

inline ValidationReport validate_monfunctor(const StrictMonCat& M, const StrictMonCat& N, const MonFunctor& H) {
  using detail::cat;
  ValidationReport r;
  const int n = M.cat.objects, m = M.cat.morphisms();
  if (static_cast<int>(H.on_objects.size()) != n || static_cast<int>(H.on_morphisms.size()) != m) {
    r.add("shape: functor tables", "");
    return r;
  }
  for (int f = 0; f < m; ++f)
    if (N.cat.src[H.on_morphisms[f]] != H.on_objects[M.cat.src[f]] ||
        N.cat.tgt[H.on_morphisms[f]] != H.on_objects[M.cat.tgt[f]])
      r.add("endpoints not preserved", cat("morphism ", f));
  for (int x = 0; x < n; ++x)
    if (H.on_morphisms[M.cat.id[x]] != N.cat.id[H.on_objects[x]]) r.add("identity not preserved", cat("object ", x));
  for (const auto& [g, f, v] : M.cat.comp.entries())
    if (N.cat.comp.get(H.on_morphisms[g], H.on_morphisms[f]) != H.on_morphisms[v])
      r.add("composition not preserved", cat("(", g, ",", f, ")"));
  if (H.on_objects[M.unit] != N.unit) r.add("unit not preserved", "");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (H.on_objects[M.tensor(x, y)] != N.tensor(H.on_objects[x], H.on_objects[y]))
        r.add("tensor on objects not preserved", cat("(", x, ",", y, ")"));
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (H.on_morphisms[M.tensor_m(f, g)] != N.tensor_m(H.on_morphisms[f], H.on_morphisms[g]))
        r.add("tensor on morphisms not preserved", cat("(", f, ",", g, ")"));
  return r;
}

/// All strict monoidal functors M -> N (brute force; desk-scale only).
inline std::vector<MonFunctor> enumerate_monfunctors(const StrictMonCat& M, const StrictMonCat& N) {
  std::vector<MonFunctor> out;
  MonFunctor H;
  H.on_objects.assign(M.cat.objects, 0);
  H.on_morphisms.assign(M.cat.morphisms(), 0);
  std::function<void(int)> mor = [&](int f) {
    if (f == M.cat.morphisms()) {
      if (validate_monfunctor(M, N, H).ok()) out.push_back(H);
      return;
    }
    for (int g = 0; g < N.cat.morphisms(); ++g)
      if (N.cat.src[g] == H.on_objects[M.cat.src[f]] && N.cat.tgt[g] == H.on_objects[M.cat.tgt[f]]) {
        H.on_morphisms[f] = g;
        mor(f + 1);
      }
  };
  std::function<void(int)> obj = [&](int x) {
    if (x == M.cat.objects) return mor(0);
    for (int y = 0; y < N.cat.objects; ++y) {
      H.on_objects[x] = y;
      obj(x + 1);
    }
  };
  obj(0);
  return out;
}

inline MonFunctorAssignment apply(const MonFunctor& H, const MonFunctorAssignment& A) {
  MonFunctorAssignment B = A;
  for (int& x : B.objects) x = H.on_objects[x];
  for (int& m : B.morphisms) m = H.on_morphisms[m];
  return B;
}

/// Psi H : Psi M -> Psi N as a level map.
inline std::vector<std::vector<int>> psi_map(const StrictMonCat& M, const NerveData& NM, const StrictMonCat& N,
                                             const NerveData& NN, const MonFunctor& H) {
  TwoFunctor F{{0}, H.on_objects, H.on_morphisms};
  return nerve_map(deloop(M), NM, deloop(N), NN, F);
}

// ---- the adjunction bijection ---------------------------------------------------

namespace detail {

inline TruncatedSimplicialSet to_level3(const TruncatedSimplicialSet& X) {
  return X.max_level > 3 ? truncate(X, 3) : X;
}

}  // namespace detail

/// theta : simplicial map X -> Psi M  |->  assignment Phi tr3 X -> M.
inline MonFunctorAssignment adjunct_of_map(const PhiTr3& D, const StrictMonCat& M, const NerveData& NM,
                                           const std::vector<std::vector<int>>& F) {
  const auto& P = D.presentation;
  MonFunctorAssignment A;
  A.objects.assign(P.letters.size(), -1);
  A.morphisms.assign(P.generators.size(), -1);
  for (std::size_t e = 0; e < D.letter_of_edge.size(); ++e)
    if (D.letter_of_edge[e] >= 0) A.objects[D.letter_of_edge[e]] = NM.at(1, F[1][e]).f(0, 1);
  for (std::size_t t = 0; t < D.gen_of_triangle.size(); ++t)
    if (D.gen_of_triangle[t] >= 0) A.morphisms[D.gen_of_triangle[t]] = NM.at(2, F[2][t]).a(0, 1, 2);
  for (const auto& R : P.relations) A.morphisms[R.sigma] = detail::eval_layers(P, M, A, R.left);
  return A;
}

/// Inverse direction: an assignment determines a simplicial map X -> Psi M.
/// Returns nullopt if some nondegenerate 3-simplex has no image.
inline std::optional<std::vector<std::vector<int>>> map_of_adjunct(const TruncatedSimplicialSet& X,
                                                                   const PhiTr3& D, const StrictMonCat& M,
                                                                   const NerveData& NM,
                                                                   const MonFunctorAssignment& A) {
  const auto& Y = NM.X;
  const int top = std::min(X.max_level, 3);
  std::vector<std::vector<int>> F(top + 1);
  F[0].assign(X.size(0), 0);
  std::map<std::vector<int>, std::vector<int>> by_faces;  // faces -> cells, levels 1..3
  for (int k = 1; k <= top; ++k)
    for (int y = 0; y < Y.size(k); ++y) {
      std::vector<int> key{k};
      for (int i = 0; i <= k; ++i) key.push_back(Y.d(k, i, y));
      by_faces[key].push_back(y);
    }
  for (int k = 1; k <= top; ++k) {
    F[k].assign(X.size(k), -1);
    for (int x = 0; x < X.size(k); ++x) {
      int j = -1;
      for (int jj = 0; jj < k && j < 0; ++jj)
        if (X.s(k - 1, jj, X.d(k, jj, x)) == x) j = jj;
      if (j >= 0) {
        F[k][x] = Y.s(k - 1, j, F[k - 1][X.d(k, j, x)]);
        continue;
      }
      if (k == 1) {
        for (int y = 0; y < Y.size(1); ++y)
          if (NM.at(1, y).f(0, 1) == A.objects[D.letter_of_edge[x]]) F[1][x] = y;
        continue;
      }
      std::vector<int> key{k};
      for (int i = 0; i <= k; ++i) key.push_back(F[k - 1][X.d(k, i, x)]);
      auto it = by_faces.find(key);
      if (it == by_faces.end()) return std::nullopt;
      for (int y : it->second)
        if (k == 3 || NM.at(2, y).a(0, 1, 2) == A.morphisms[D.gen_of_triangle[x]]) F[k][x] = y;
      if (F[k][x] < 0) return std::nullopt;
    }
  }
  return F;
}

struct AdjunctionCertificate {
  bool certified = false;
  long long maps = 0;
  long long assignments = 0;
  ValidationReport report;
};

/// Enumerates sSet(tr3 X, Psi M) and hom(Phi tr3 X, M), maps the first to the
/// second, maps back, and checks both composites are identities.
inline AdjunctionCertificate adjunction_check(const TruncatedSimplicialSet& X0, const StrictMonCat& M) {
  using detail::cat;
  const auto X = detail::to_level3(X0);
  const PhiTr3 D = phi_tr3_data(X);
  const NerveData NM = psi_data(M);
  AdjunctionCertificate C;
  std::vector<std::vector<std::vector<int>>> maps;
  enumerate_sset_maps(X, NM.X, [&](const std::vector<std::vector<int>>& F) {
    maps.push_back(F);
    return true;
  });
  const auto homs = hom_moncat(D.presentation, M);
  C.maps = static_cast<long long>(maps.size());
  C.assignments = static_cast<long long>(homs.size());
  if (C.maps != C.assignments) C.report.add("hom-set sizes differ", cat(C.maps, " vs ", C.assignments));
  std::set<MonFunctorAssignment> image;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto A = adjunct_of_map(D, M, NM, maps[i]);
    if (auto r = validate_assignment(D.presentation, M, A); !r.ok())
      C.report.add("adjunct is not a monoidal functor", cat("map ", i));
    if (!image.insert(A).second) C.report.add("two maps share an adjunct", cat("map ", i));
    auto back = map_of_adjunct(X, D, M, NM, A);
    if (!back || *back != maps[i]) C.report.add("map -> adjunct -> map is not the identity", cat("map ", i));
  }
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (!image.count(homs[i])) C.report.add("assignment not hit", cat("assignment ", i));
    auto F = map_of_adjunct(X, D, M, NM, homs[i]);
    if (!F) {
      C.report.add("assignment has no simplicial map", cat("assignment ", i));
      continue;
    }
    if (!validate_sset_map(X, NM.X, *F).ok()) C.report.add("assignment gives an invalid map", cat("assignment ", i));
    if (adjunct_of_map(D, M, NM, *F) != homs[i])
      C.report.add("adjunct -> map -> adjunct is not the identity", cat("assignment ", i));
  }
  C.certified = C.report.ok();
  return C;
}

/// The assignment Phi tr3 X' -> M obtained from A : Phi tr3 X -> M along g : X' -> X.
inline MonFunctorAssignment precompose(const TruncatedSimplicialSet& X, const PhiTr3& Dp, const PhiTr3& D,
                                       const StrictMonCat& M, const std::vector<std::vector<int>>& g,
                                       const MonFunctorAssignment& A) {
  const auto& P = Dp.presentation;
  MonFunctorAssignment B;
  B.objects.assign(P.letters.size(), -1);
  B.morphisms.assign(P.generators.size(), -1);
  for (std::size_t e = 0; e < Dp.letter_of_edge.size(); ++e)
    if (Dp.letter_of_edge[e] >= 0)
      B.objects[Dp.letter_of_edge[e]] = detail::tensor_word(M, A.objects, D.word(g[1][e]));
  for (std::size_t t = 0; t < Dp.gen_of_triangle.size(); ++t) {
    if (Dp.gen_of_triangle[t] < 0) continue;
    const int img = g[2][t], gen = D.gen_of_triangle[img];
    B.morphisms[Dp.gen_of_triangle[t]] =
        gen >= 0 ? A.morphisms[gen] : M.cat.id[detail::tensor_word(M, A.objects, D.word(X.d(2, 1, img)))];
  }
  for (const auto& R : P.relations) B.morphisms[R.sigma] = detail::eval_layers(P, M, B, R.left);
  return B;
}

// ---- terms and the bounded word problem ---------------------------------------

/// A planar tree: a leaf (identity on a letter) or a generator applied to subtrees.
struct Tree {
  int gen = -1;
  int letter = -1;
  std::vector<Tree> kids;
  bool operator==(const Tree&) const = default;
};

/// A morphism term: a tuple of trees, tensored left to right.
using Term = std::vector<Tree>;

enum class Equality { equal, distinct, undecided };

inline const char* to_string(Equality e) {
  switch (e) {
    case Equality::equal: return "equal";
    case Equality::distinct: return "distinct";
    default: return "undecided at bound";
  }
}

namespace detail {

inline void require_trees(const MonPresentation& P) {
  for (const auto& g : P.generators)
    if (g.outputs.size() != 1)
      throw Error(cat("terms: generator ", g.name, " does not have exactly one output"));
}

inline Word tree_dom(const MonPresentation& P, const Tree& t) {
  if (t.gen < 0) return {t.letter};
  Word w;
  for (const auto& k : t.kids) append(w, tree_dom(P, k));
  return w;
}

inline int tree_cod(const MonPresentation& P, const Tree& t) {
  return t.gen < 0 ? t.letter : P.generators[t.gen].outputs[0];
}

inline int tree_size(const Tree& t) {
  if (t.gen < 0) return 0;
  int n = 1;
  for (const auto& k : t.kids) n += tree_size(k);
  return n;
}

inline void tree_key(const Tree& t, std::string& s) {
  if (t.gen < 0) {
    s += 'l' + std::to_string(t.letter);
    return;
  }
  s += 'g' + std::to_string(t.gen) + '(';
  for (const auto& k : t.kids) {
    tree_key(k, s);
    s += ',';
  }
  s += ')';
}

inline std::string tree_key(const Tree& t) {
  std::string s;
  tree_key(t, s);
  return s;
}

}  // namespace detail

inline Term identity_term(const Word& w) {
  Term t;
  for (int a : w) t.push_back(Tree{-1, a, {}});
  return t;
}

inline Term generator_term(const MonPresentation& P, int g) {
  Tree t{g, -1, {}};
  for (int a : P.generators[g].inputs) t.kids.push_back(Tree{-1, a, {}});
  return {t};
}

inline Word term_dom(const MonPresentation& P, const Term& m) {
  Word w;
  for (const auto& t : m) detail::append(w, detail::tree_dom(P, t));
  return w;
}

inline Word term_cod(const MonPresentation& P, const Term& m) {
  Word w;
  for (const auto& t : m) w.push_back(detail::tree_cod(P, t));
  return w;
}

/// Throws unless every generator node receives subtrees of its input type.
inline void typecheck(const MonPresentation& P, const Term& m) {
  detail::require_trees(P);
  std::function<void(const Tree&)> go = [&](const Tree& t) {
    if (t.gen < 0) {
      if (t.letter < 0 || t.letter >= static_cast<int>(P.letters.size())) throw Error("term: letter out of range");
      return;
    }
    if (t.gen >= static_cast<int>(P.generators.size())) throw Error("term: generator out of range");
    Word in;
    for (const auto& k : t.kids) {
      go(k);
      in.push_back(detail::tree_cod(P, k));
    }
    if (in != P.generators[t.gen].inputs) throw Error("term: ill-typed generator node " + P.generators[t.gen].name);
  };
  for (const auto& t : m) go(t);
}

inline Term tensor(const Term& a, const Term& b) {
  Term t = a;
  t.insert(t.end(), b.begin(), b.end());
  return t;
}

/// second o first: the leaves of second are replaced by the trees of first.
inline Term compose(const MonPresentation& P, const Term& first, const Term& second) {
  if (term_cod(P, first) != term_dom(P, second)) throw Error("compose: terms are not composable");
  std::size_t next = 0;
  std::function<Tree(const Tree&)> go = [&](const Tree& t) -> Tree {
    if (t.gen < 0) return first[next++];
    Tree u{t.gen, -1, {}};
    for (const auto& k : t.kids) u.kids.push_back(go(k));
    return u;
  };
  Term out;
  for (const auto& t : second) out.push_back(go(t));
  return out;
}

inline Term layer_term(const MonPresentation& P, const Layer& L) {
  Term t;
  for (const auto& f : L) t = tensor(t, f.generator ? generator_term(P, f.index) : identity_term({f.index}));
  return t;
}

inline Term layers_term(const MonPresentation& P, const std::vector<Layer>& layers) {
  Term t = layer_term(P, layers.front());
  for (std::size_t i = 1; i < layers.size(); ++i) t = compose(P, t, layer_term(P, layers[i]));
  return t;
}

struct EqualityResult {
  Equality outcome = Equality::undecided;
  int bound = 0;
  std::size_t explored = 0;
};

namespace detail {

// every class of interchangeable single-tree patterns, one per relation
inline std::vector<std::vector<Tree>> relation_patterns(const MonPresentation& P) {
  std::vector<std::vector<Tree>> out;
  for (const auto& R : P.relations) {
    std::vector<Tree> cls;
    for (const Term& t : {generator_term(P, R.sigma), layers_term(P, R.left), layers_term(P, R.right)}) {
      if (t.size() != 1) throw Error("terms: relation side is not a single tree");
      cls.push_back(t[0]);
    }
    out.push_back(cls);
  }
  return out;
}

inline bool match(const Tree& pat, const Tree& t, std::vector<const Tree*>& holes) {
  if (pat.gen < 0) {
    holes.push_back(&t);
    return true;
  }
  if (t.gen != pat.gen || t.kids.size() != pat.kids.size()) return false;
  for (std::size_t i = 0; i < pat.kids.size(); ++i)
    if (!match(pat.kids[i], t.kids[i], holes)) return false;
  return true;
}

inline Tree fill(const Tree& pat, const std::vector<const Tree*>& holes, std::size_t& next) {
  if (pat.gen < 0) return *holes[next++];
  Tree u{pat.gen, -1, {}};
  for (const auto& k : pat.kids) u.kids.push_back(fill(k, holes, next));
  return u;
}

// all trees one rewrite away from t
inline void rewrites(const std::vector<std::vector<Tree>>& pats, const Tree& t, std::vector<Tree>& out) {
  for (const auto& cls : pats)
    for (std::size_t i = 0; i < cls.size(); ++i) {
      std::vector<const Tree*> holes;
      if (!match(cls[i], t, holes)) continue;
      for (std::size_t j = 0; j < cls.size(); ++j) {
        if (j == i) continue;
        std::size_t next = 0;
        out.push_back(fill(cls[j], holes, next));
      }
    }
  for (std::size_t k = 0; k < t.kids.size(); ++k) {
    std::vector<Tree> sub;
    rewrites(pats, t.kids[k], sub);
    for (auto& s : sub) {
      Tree u = t;
      u.kids[k] = std::move(s);
      out.push_back(std::move(u));
    }
  }
}

inline EqualityResult trees_equal(const MonPresentation& P, const std::vector<std::vector<Tree>>& pats,
                                  const Tree& a, const Tree& b, int bound) {
  EqualityResult res;
  res.bound = bound;
  const std::string goal = tree_key(b);
  std::unordered_set<std::string> seen{tree_key(a)};
  std::deque<Tree> todo{a};
  bool pruned = false;
  while (!todo.empty()) {
    Tree t = std::move(todo.front());
    todo.pop_front();
    ++res.explored;
    if (tree_key(t) == goal) {
      res.outcome = Equality::equal;
      return res;
    }
    std::vector<Tree> next;
    rewrites(pats, t, next);
    for (auto& u : next) {
      if (tree_size(u) > bound) {
        pruned = true;
        continue;
      }
      if (seen.insert(tree_key(u)).second) todo.push_back(std::move(u));
    }
  }
  (void)P;
  res.outcome = pruned ? Equality::undecided : Equality::distinct;
  return res;
}

}  // namespace detail

/// Equality of parallel terms under the congruence generated by the relations,
/// by exhaustive search over terms of size at most the bound.
inline EqualityResult presentation_equal(const MonPresentation& P, const Term& m1, const Term& m2,
                                         int bound = 0) {
  typecheck(P, m1);
  typecheck(P, m2);
  if (term_dom(P, m1) != term_dom(P, m2) || term_cod(P, m1) != term_cod(P, m2))
    throw Error("presentation_equal: terms are not parallel");
  int size = 0;
  for (const auto* m : {&m1, &m2}) {
    int s = 0;
    for (const auto& t : *m) s = std::max(s, detail::tree_size(t));
    size = std::max(size, s);
  }
  if (bound <= 0) bound = P.bound > 0 ? P.bound : size + 2;
  const auto pats = detail::relation_patterns(P);
  EqualityResult total;
  total.bound = bound;
  total.outcome = Equality::equal;
  for (std::size_t i = 0; i < m1.size(); ++i) {
    if (detail::tree_dom(P, m1[i]) != detail::tree_dom(P, m2[i])) {
      total.outcome = Equality::distinct;
      return total;
    }
    const auto r = detail::trees_equal(P, pats, m1[i], m2[i], bound);
    total.explored += r.explored;
    if (r.outcome == Equality::distinct) {
      total.outcome = Equality::distinct;
      return total;
    }
    if (r.outcome == Equality::undecided) total.outcome = Equality::undecided;
  }
  return total;
}

}  // namespace opcat
