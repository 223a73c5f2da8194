#pragma once

// JSON encoding of every structure, wrapped in {"kind", "version": 1, "body"}.
// Integer tables are written in ascending index order so output is byte-stable.

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "opcat/free_monoidal.hpp"
#include "opcat/grothendieck.hpp"
#include "opcat/operad.hpp"
#include "opcat/operadic.hpp"
#include "opcat/simplicial.hpp"
#include "opcat/twocat.hpp"

namespace opcat {

using json = nlohmann::json;

/// Malformed JSON, wrong envelope, or a body that does not fit the schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

namespace kind {
inline constexpr const char* simplicial_set = "simplicial_set";
inline constexpr const char* category = "category";
inline constexpr const char* two_category = "2-category";
inline constexpr const char* monoidal_category = "monoidal_category";
inline constexpr const char* operadic = "operadic_2-category";
inline constexpr const char* operad = "operad";
inline constexpr const char* functor = "operadic_functor";
inline constexpr const char* fibration = "split_fibration";
inline constexpr const char* presentation = "presentation";
inline constexpr const char* term_pair = "term_pair";
}  // namespace kind

inline const std::vector<std::string>& known_kinds() {
  static const std::vector<std::string> k = {kind::simplicial_set, kind::category,  kind::two_category,
                                             kind::monoidal_category, kind::operadic, kind::operad,
                                             kind::functor,        kind::fibration, kind::presentation,
                                             kind::term_pair};
  return k;
}

namespace detail {

inline json table_json(const PairTable& t) {
  json a = json::array();
  for (const auto& [x, y, v] : t.entries()) a.push_back({x, y, v});
  return a;
}

inline PairTable table_from(const json& j) {
  PairTable t;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) throw ParseError("composition table entries must be [a, b, value]");
    t.set(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
  }
  return t;
}

template <class T>
T field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(cat("missing field \"", name, "\""));
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(cat("field \"", name, "\": ", e.what()));
  }
}

inline const json& sub(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(cat("missing field \"", name, "\""));
  return j.at(name);
}

}  // namespace detail

// ---- per-type encoders ------------------------------------------------------------

inline json to_json(const TruncatedSimplicialSet& X) {
  return {{"max_level", X.max_level}, {"cells", X.cells}, {"face", X.face}, {"degen", X.degen}};
}

inline TruncatedSimplicialSet simplicial_from_json(const json& j) {
  using V3 = std::vector<std::vector<std::vector<int>>>;
  TruncatedSimplicialSet X;
  X.max_level = detail::field<int>(j, "max_level");
  X.cells = detail::field<std::vector<int>>(j, "cells");
  X.face = detail::field<V3>(j, "face");
  X.degen = detail::field<V3>(j, "degen");
  if (X.max_level < 0 || X.max_level > kMaxLevel || static_cast<int>(X.cells.size()) != X.max_level + 1 ||
      static_cast<int>(X.face.size()) != X.max_level + 1 || static_cast<int>(X.degen.size()) != X.max_level + 1)
    throw ParseError("simplicial set: level tables do not match max_level");
  return X;
}

inline json to_json(const FiniteCategory& C) {
  return {{"objects", C.objects}, {"src", C.src}, {"tgt", C.tgt}, {"id", C.id}, {"comp", detail::table_json(C.comp)}};
}

inline FiniteCategory category_from_json(const json& j) {
  FiniteCategory C;
  C.objects = detail::field<int>(j, "objects");
  C.src = detail::field<std::vector<int>>(j, "src");
  C.tgt = detail::field<std::vector<int>>(j, "tgt");
  C.id = detail::field<std::vector<int>>(j, "id");
  C.comp = detail::table_from(detail::sub(j, "comp"));
  return C;
}

inline json to_json(const Finite2Category& C) {
  return {{"objects", C.objects},
          {"src1", C.src1},
          {"tgt1", C.tgt1},
          {"id1", C.id1},
          {"comp1", detail::table_json(C.comp1)},
          {"src2", C.src2},
          {"tgt2", C.tgt2},
          {"id2", C.id2},
          {"vcomp", detail::table_json(C.vcomp)},
          {"hcomp", detail::table_json(C.hcomp)}};
}

inline Finite2Category two_category_from_json(const json& j) {
  Finite2Category C;
  C.objects = detail::field<int>(j, "objects");
  C.src1 = detail::field<std::vector<int>>(j, "src1");
  C.tgt1 = detail::field<std::vector<int>>(j, "tgt1");
  C.id1 = detail::field<std::vector<int>>(j, "id1");
  C.comp1 = detail::table_from(detail::sub(j, "comp1"));
  C.src2 = detail::field<std::vector<int>>(j, "src2");
  C.tgt2 = detail::field<std::vector<int>>(j, "tgt2");
  C.id2 = detail::field<std::vector<int>>(j, "id2");
  C.vcomp = detail::table_from(detail::sub(j, "vcomp"));
  C.hcomp = detail::table_from(detail::sub(j, "hcomp"));
  return C;
}

inline json to_json(const StrictMonCat& M) {
  return {{"category", to_json(M.cat)}, {"unit", M.unit}, {"tensor_obj", M.tensor_obj}, {"tensor_mor", M.tensor_mor}};
}

inline StrictMonCat moncat_from_json(const json& j) {
  StrictMonCat M;
  M.cat = category_from_json(detail::sub(j, "category"));
  M.unit = detail::field<int>(j, "unit");
  M.tensor_obj = detail::field<std::vector<int>>(j, "tensor_obj");
  M.tensor_mor = detail::field<std::vector<int>>(j, "tensor_mor");
  return M;
}

inline json to_json(const UnaryOperadic2Cat& O) {
  return {{"two_category", to_json(O.C)}, {"components", O.components}, {"pi", O.pi},
          {"phi0", O.phi0},               {"phi1", O.phi1},             {"phi2", O.phi2},
          {"phi3", O.phi3},               {"u_neg1", O.u_neg1},         {"u0", O.u0},
          {"u1", O.u1},                   {"u2", O.u2}};
}

/// Throws InvalidInput when the underlying 2-category is not valid, since the
/// nerve (and with it the indexing of phi2, phi3, u1, u2) is then undefined.
inline UnaryOperadic2Cat operadic_from_json(const json& j) {
  Finite2Category C = two_category_from_json(detail::sub(j, "two_category"));
  if (auto rep = validate_2category(C); !rep.ok()) throw InvalidInput("operadic 2-category: invalid 2-category", rep);
  UnaryOperadic2Cat O = prepare_operadic(std::move(C));
  O.components = detail::field<int>(j, "components");
  O.pi = detail::field<std::vector<int>>(j, "pi");
  O.phi0 = detail::field<std::vector<int>>(j, "phi0");
  O.phi1 = detail::field<std::vector<int>>(j, "phi1");
  O.phi2 = detail::field<std::vector<int>>(j, "phi2");
  O.phi3 = detail::field<std::vector<int>>(j, "phi3");
  O.u_neg1 = detail::field<std::vector<int>>(j, "u_neg1");
  O.u0 = detail::field<std::vector<int>>(j, "u0");
  O.u1 = detail::field<std::vector<int>>(j, "u1");
  O.u2 = detail::field<std::vector<int>>(j, "u2");
  return O;
}

inline json to_json(const CategoricalOperad& P) {
  json fib = json::array(), mult = json::array();
  for (const auto& F : P.fiber) fib.push_back(to_json(F));
  for (const auto& m : P.mult) mult.push_back({{"objects", m.objects}, {"morphisms", m.morphisms}});
  return {{"base", to_json(*P.base)}, {"fiber", fib}, {"mult", mult}, {"unit", P.unit}};
}

inline CategoricalOperad operad_from_json(const json& j) {
  CategoricalOperad P;
  P.base = std::make_shared<const UnaryOperadic2Cat>(operadic_from_json(detail::sub(j, "base")));
  for (const auto& f : detail::sub(j, "fiber")) P.fiber.push_back(category_from_json(f));
  for (const auto& m : detail::sub(j, "mult"))
    P.mult.push_back({detail::field<std::vector<int>>(m, "objects"), detail::field<std::vector<int>>(m, "morphisms")});
  P.unit = detail::field<std::vector<int>>(j, "unit");
  return P;
}

inline json to_json(const OperadicFunctor& F) {
  return {{"source", to_json(*F.source)}, {"target", to_json(*F.target)}, {"level_map", F.level_map}};
}

inline OperadicFunctor functor_from_json(const json& j) {
  OperadicFunctor F;
  F.source = std::make_shared<const UnaryOperadic2Cat>(operadic_from_json(detail::sub(j, "source")));
  F.target = std::make_shared<const UnaryOperadic2Cat>(operadic_from_json(detail::sub(j, "target")));
  F.level_map = detail::field<std::vector<std::vector<int>>>(j, "level_map");
  return F;
}

inline json to_json(const SplitFibration& F) {
  json lifts = json::array();
  for (const auto& [k, v] : F.lift) lifts.push_back({k[0], k[1], k[2], v});
  return {{"functor", to_json(F.p)}, {"lifts", lifts}};
}

inline SplitFibration fibration_from_json(const json& j) {
  SplitFibration F;
  F.p = functor_from_json(detail::sub(j, "functor"));
  for (const auto& e : detail::sub(j, "lifts")) {
    if (!e.is_array() || e.size() != 4) throw ParseError("lift entries must be [a, b, g, cell]");
    F.lift[{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()}] = e[3].get<int>();
  }
  return F;
}

inline json to_json(const Layer& L) {
  json a = json::array();
  for (const auto& f : L) a.push_back(f.generator ? json{{"gen", f.index}} : json{{"id", f.index}});
  return a;
}

inline Layer layer_from_json(const json& j) {
  Layer L;
  for (const auto& f : j) {
    if (f.contains("gen"))
      L.push_back({true, detail::field<int>(f, "gen")});
    else
      L.push_back({false, detail::field<int>(f, "id")});
  }
  return L;
}

inline json to_json(const MonPresentation& P) {
  json gens = json::array(), rels = json::array();
  for (const auto& g : P.generators) gens.push_back({{"name", g.name}, {"inputs", g.inputs}, {"outputs", g.outputs}});
  for (const auto& R : P.relations) {
    json l = json::array(), r = json::array();
    for (const auto& L : R.left) l.push_back(to_json(L));
    for (const auto& L : R.right) r.push_back(to_json(L));
    rels.push_back({{"sigma", R.sigma}, {"left", l}, {"right", r}});
  }
  return {{"letters", P.letters}, {"generators", gens}, {"relations", rels}, {"bound", P.bound}};
}

inline MonPresentation presentation_from_json(const json& j) {
  MonPresentation P;
  P.letters = detail::field<std::vector<std::string>>(j, "letters");
  for (const auto& g : detail::sub(j, "generators"))
    P.generators.push_back({detail::field<std::string>(g, "name"), detail::field<Word>(g, "inputs"),
                            detail::field<Word>(g, "outputs")});
  for (const auto& r : detail::sub(j, "relations")) {
    MonRelation R;
    R.sigma = detail::field<int>(r, "sigma");
    for (const auto& L : detail::sub(r, "left")) R.left.push_back(layer_from_json(L));
    for (const auto& L : detail::sub(r, "right")) R.right.push_back(layer_from_json(L));
    P.relations.push_back(std::move(R));
  }
  if (j.contains("bound")) P.bound = detail::field<int>(j, "bound");
  return P;
}

inline json to_json(const Tree& t) {
  if (t.gen < 0) return {{"letter", t.letter}};
  json kids = json::array();
  for (const auto& k : t.kids) kids.push_back(to_json(k));
  return {{"gen", t.gen}, {"kids", kids}};
}

inline Tree tree_from_json(const json& j) {
  Tree t;
  if (j.contains("letter")) {
    t.letter = detail::field<int>(j, "letter");
    return t;
  }
  t.gen = detail::field<int>(j, "gen");
  for (const auto& k : detail::sub(j, "kids")) t.kids.push_back(tree_from_json(k));
  return t;
}

inline json to_json(const Term& m) {
  json a = json::array();
  for (const auto& t : m) a.push_back(to_json(t));
  return a;
}

inline Term term_from_json(const json& j) {
  Term m;
  for (const auto& t : j) m.push_back(tree_from_json(t));
  return m;
}

// ---- envelope ---------------------------------------------------------------------

inline json envelope(const std::string& k, json body) {
  return {{"kind", k}, {"version", 1}, {"body", std::move(body)}};
}

inline std::string dump(const json& j) { return j.dump(1) + "\n"; }

inline json parse_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("version") || !j.contains("body") ||
      !j["kind"].is_string())
    throw ParseError("expected an envelope {\"kind\", \"version\", \"body\"}");
  if (j["version"] != 1) throw ParseError("unsupported version");
  const auto k = j["kind"].get<std::string>();
  if (std::find(known_kinds().begin(), known_kinds().end(), k) == known_kinds().end())
    throw ParseError("unknown kind \"" + k + "\"");
  return j;
}

inline json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

/// The body of an envelope, after checking its kind.
inline const json& body_of(const json& env, const std::string& expected) {
  if (env.at("kind") != expected)
    throw ParseError("expected kind \"" + expected + "\", got \"" + env.at("kind").get<std::string>() + "\"");
  return env.at("body");
}

// typed save/load --------------------------------------------------------------------

inline std::string save(const TruncatedSimplicialSet& X) { return dump(envelope(kind::simplicial_set, to_json(X))); }
inline std::string save(const FiniteCategory& C) { return dump(envelope(kind::category, to_json(C))); }
inline std::string save(const Finite2Category& C) { return dump(envelope(kind::two_category, to_json(C))); }
inline std::string save(const StrictMonCat& M) { return dump(envelope(kind::monoidal_category, to_json(M))); }
inline std::string save(const UnaryOperadic2Cat& O) { return dump(envelope(kind::operadic, to_json(O))); }
inline std::string save(const CategoricalOperad& P) { return dump(envelope(kind::operad, to_json(P))); }
inline std::string save(const OperadicFunctor& F) { return dump(envelope(kind::functor, to_json(F))); }
inline std::string save(const SplitFibration& F) { return dump(envelope(kind::fibration, to_json(F))); }
inline std::string save(const MonPresentation& P) { return dump(envelope(kind::presentation, to_json(P))); }

template <class T>
T load(const std::string& text);

namespace detail {
// json library exceptions inside a body are schema errors
template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("schema: ") + e.what());
  }
}
}  // namespace detail

template <>
inline TruncatedSimplicialSet load(const std::string& t) {
  return detail::guarded([&] { return simplicial_from_json(body_of(parse_text(t), kind::simplicial_set)); });
}
template <>
inline FiniteCategory load(const std::string& t) {
  return detail::guarded([&] { return category_from_json(body_of(parse_text(t), kind::category)); });
}
template <>
inline Finite2Category load(const std::string& t) {
  return detail::guarded([&] { return two_category_from_json(body_of(parse_text(t), kind::two_category)); });
}
template <>
inline StrictMonCat load(const std::string& t) {
  return detail::guarded([&] { return moncat_from_json(body_of(parse_text(t), kind::monoidal_category)); });
}
template <>
inline UnaryOperadic2Cat load(const std::string& t) {
  return detail::guarded([&] { return operadic_from_json(body_of(parse_text(t), kind::operadic)); });
}
template <>
inline CategoricalOperad load(const std::string& t) {
  return detail::guarded([&] { return operad_from_json(body_of(parse_text(t), kind::operad)); });
}
template <>
inline OperadicFunctor load(const std::string& t) {
  return detail::guarded([&] { return functor_from_json(body_of(parse_text(t), kind::functor)); });
}
template <>
inline SplitFibration load(const std::string& t) {
  return detail::guarded([&] { return fibration_from_json(body_of(parse_text(t), kind::fibration)); });
}
template <>
inline MonPresentation load(const std::string& t) {
  return detail::guarded([&] { return presentation_from_json(body_of(parse_text(t), kind::presentation)); });
}

}  // namespace opcat
