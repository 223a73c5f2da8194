#pragma once

// Test-only helpers: the (base, operad) corpus and random discrete operads.

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "opcat/grothendieck.hpp"

namespace opcat::support {

struct OperadCase {
  std::string name;
  CategoricalOperad operad;
};

inline std::vector<OperadCase> operad_corpus() {
  std::vector<OperadCase> out = {
      {"Z2 over odot", operad_from_moncat(cyclic_moncat(2))},
      {"Z3 over odot", operad_from_moncat(cyclic_moncat(3))},
      {"poset over odot", operad_from_moncat(poset_moncat())},
      {"K2 over Bq2", operad_from_2cat(two_cell_2category(), 2)},
      {"walking arrow over Bq2", operad_from_2cat(walking_arrow(), 2)},
      {"deloop poset over Bq1", operad_from_2cat(deloop(poset_moncat()), 1)},
      {"terminal over Bq2", terminal_operad(std::make_shared<const UnaryOperadic2Cat>(bouquets(2)))},
      {"terminal over walking arrow",
       terminal_operad(std::make_shared<const UnaryOperadic2Cat>(from_2category(walking_arrow())))},
  };
  auto odot = std::make_shared<const UnaryOperadic2Cat>(terminal_odot());
  const std::vector<std::pair<std::string, UnaryOperadic2Cat>> bases = {
      {"paraZ2", para(cyclic_moncat(2))},
      {"walking arrow", from_2category(walking_arrow())},
      {"Bq2", bouquets(2)},
  };
  for (const auto& [n, b] : bases) {
    auto B = std::make_shared<const UnaryOperadic2Cat>(b);
    const auto to_odot = enumerate_operadic_functors(B, odot, 1).at(0);
    out.push_back({"poset restricted to " + n, restrict_operad(to_odot, operad_from_moncat(poset_moncat()))});
  }
  return out;
}

inline std::vector<int>& table(UnaryOperadic2Cat& O, const std::string& name) {
  if (name == "phi0") return O.phi0;
  if (name == "phi1") return O.phi1;
  if (name == "phi2") return O.phi2;
  if (name == "phi3") return O.phi3;
  if (name == "u_neg1") return O.u_neg1;
  if (name == "u0") return O.u0;
  if (name == "u1") return O.u1;
  return O.u2;
}

/// One-entry corruption of a fixture table, with the axiom item it must trip.
struct Mutant {
  std::string fixture, table;
  int index, value;
  std::string item;
};

inline std::map<std::string, UnaryOperadic2Cat> operadic_fixtures() {
  return {{"odot", terminal_odot()},           {"bq2", bouquets(2)},
          {"bq3", bouquets(3)},                {"paraZ2", para(cyclic_moncat(2))},
          {"paraZ3", para(cyclic_moncat(3))},  {"WA", from_2category(walking_arrow())}};
}

inline std::vector<Mutant> operadic_mutants() {
  return {
      {"bq2", "phi0", 1, 1, "(9)"},     {"bq2", "phi1", 1, 0, "(9)"},     {"bq2", "phi0", 2, 0, "(9)"},
      {"bq2", "u_neg1", 0, 1, "(10)"},  {"bq3", "u_neg1", 0, 5, "(10)"},  {"paraZ2", "u_neg1", 0, 1, "(11)"},
      {"bq2", "phi0", 2, 0, "(11)"},    {"bq2", "phi1", 1, 3, "(12)"},    {"bq2", "phi1", 6, 0, "(12)"},
      {"bq2", "phi3", 1, 0, "(13)"},    {"bq2", "phi3", 3, 1, "(13)"},    {"bq2", "phi2", 6, 0, "(13)"},
      {"bq2", "u2", 0, 8, "(14)"},      {"bq2", "u2", 2, 0, "(14)"},      {"bq2", "u_neg1", 0, 2, "(14)"},
      {"bq2", "u2", 6, 0, "(15)"},      {"bq2", "phi3", 0, 4, "(15)"},    {"bq2", "u2", 6, 1, "(15)"},
      {"bq2", "phi3", 5, 0, "(16)"},    {"bq2", "phi1", 1, 3, "(16)"},    {"bq2", "phi3", 5, 1, "(16)"},
      {"bq2", "u2", 1, 10, "(17)"},     {"bq2", "u2", 4, 1, "(17)"},      {"paraZ2", "u2", 1, 6, "(17)"},
  };
}

/// Applies the mutant; empty string when it is caught with its item, else a description.
inline std::string check_mutant(const Mutant& m) {
  auto O = operadic_fixtures().at(m.fixture);
  auto& t = table(O, m.table);
  const std::string tag = m.fixture + " " + m.table + "[" + std::to_string(m.index) + "] = " + std::to_string(m.value);
  if (m.index >= static_cast<int>(t.size()) || t[m.index] == m.value) return tag + ": not a mutation";
  t[m.index] = m.value;
  const auto r = validate_operadic(O);
  if (r.mentions_item(m.item)) return "";
  return tag + ": expected " + m.item + "\n" + r.str();
}

/// A random category on two objects: object x is a set of size 1 or 2, and the
/// morphisms are the closure of a few random functions under composition.
inline FiniteCategory random_category(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 2), gens(1, 3), obj(0, 1);
  const int n[2] = {size(rng), size(rng)};
  using Fn = std::vector<int>;
  std::map<std::tuple<int, int, Fn>, int> index;
  std::vector<std::tuple<int, int, Fn>> mor;
  auto add = [&](int s, int t, const Fn& f) {
    auto key = std::make_tuple(s, t, f);
    if (index.count(key)) return false;
    index[key] = static_cast<int>(mor.size());
    mor.push_back(key);
    return true;
  };
  for (int x = 0; x < 2; ++x) {
    Fn id(n[x]);
    for (int i = 0; i < n[x]; ++i) id[i] = i;
    add(x, x, id);
  }
  const int g = gens(rng);
  for (int k = 0; k < g; ++k) {
    const int s = obj(rng), t = obj(rng);
    Fn f(n[s]);
    for (auto& v : f) v = std::uniform_int_distribution<int>(0, n[t] - 1)(rng);
    add(s, t, f);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = mor;
    for (const auto& [s1, t1, f1] : snapshot)
      for (const auto& [s2, t2, f2] : snapshot) {
        if (t1 != s2) continue;
        Fn h(f1.size());
        for (std::size_t i = 0; i < f1.size(); ++i) h[i] = f2[f1[i]];
        grew |= add(s1, t2, h);
      }
  }
  FiniteCategory K;
  K.objects = 2;
  for (const auto& [s, t, f] : mor) K.add_morphism(s, t);
  K.id = {0, 1};
  for (const auto& [s1, t1, f1] : mor)
    for (const auto& [s2, t2, f2] : mor) {
      if (t1 != s2) continue;
      Fn h(f1.size());
      for (std::size_t i = 0; i < f1.size(); ++i) h[i] = f2[f1[i]];
      K.comp.set(index.at({s2, t2, f2}), index.at({s1, t1, f1}), index.at({s1, t2, h}));
    }
  return K;
}

/// A discrete operad over Bq({0,1}): the hom-sets of a random category.
inline CategoricalOperad random_discrete_operad(std::mt19937& rng) {
  return operad_from_2cat(locally_discrete(random_category(rng)), 2);
}

}  // namespace opcat::support
