#pragma once

// Named fixture corpus, emitted as JSON envelopes.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "opcat/io.hpp"

namespace opcat {

namespace detail {

inline const std::map<std::string, std::function<std::string()>>& fixture_table() {
  static const std::map<std::string, std::function<std::string()>> t = {
      // 2-categories
      {"terminal", [] { return save(terminal_2category()); }},
      {"Z2deloop", [] { return save(deloop(cyclic_moncat(2))); }},
      {"Z3deloop", [] { return save(deloop(cyclic_moncat(3))); }},
      {"walking_arrow", [] { return save(walking_arrow()); }},
      {"K2cat", [] { return save(two_cell_2category()); }},
      // monoidal categories
      {"trivial", [] { return save(trivial_moncat()); }},
      {"Z2", [] { return save(cyclic_moncat(2)); }},
      {"Z3", [] { return save(cyclic_moncat(3)); }},
      {"poset", [] { return save(poset_moncat()); }},
      // operadic 2-categories
      {"odot", [] { return save(terminal_odot()); }},
      {"bouquets1", [] { return save(bouquets(1)); }},
      {"bouquets2", [] { return save(bouquets(2)); }},
      {"bouquets3", [] { return save(bouquets(3)); }},
      {"paraZ2", [] { return save(para(cyclic_moncat(2))); }},
      {"paraZ3", [] { return save(para(cyclic_moncat(3))); }},
      {"paraPoset", [] { return save(para(poset_moncat())); }},
      {"walking_arrow_operadic", [] { return save(from_2category(walking_arrow())); }},
      {"K2cat_operadic", [] { return save(from_2category(two_cell_2category())); }},
      // operads over the terminal operadic 2-category
      {"operadZ2", [] { return save(operad_from_moncat(cyclic_moncat(2))); }},
      {"operadZ3", [] { return save(operad_from_moncat(cyclic_moncat(3))); }},
      {"operadPoset", [] { return save(operad_from_moncat(poset_moncat())); }},
      // operads over other bases
      {"operadK2_bouquets2",
       [] { return save(operad_from_2cat(two_cell_2category(), 2)); }},
      {"operadWA_bouquets2", [] { return save(operad_from_2cat(walking_arrow(), 2)); }},
      // simplicial sets
      {"delta0", [] { return save(standard_simplex(0, 3)); }},
      {"delta1", [] { return save(standard_simplex(1, 3)); }},
      {"delta2", [] { return save(standard_simplex(2, 3)); }},
      {"delta3", [] { return save(standard_simplex(3, 3)); }},
      {"nerve_walking_arrow", [] { return save(duskin_nerve(walking_arrow())); }},
      {"bouquets2_simplicial", [] { return save(truncate(to_simplicial(bouquets(2)), 3)); }},
      // presentations
      {"phi0_0", [] { return save(phi0(0)); }},
      {"phi0_1", [] { return save(phi0(1)); }},
      {"phi0_2", [] { return save(phi0(2)); }},
      {"phi0_3", [] { return save(phi0(3)); }},
  };
  return t;
}

}  // namespace detail

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> v;
  for (const auto& [k, f] : detail::fixture_table()) v.push_back(k);
  return v;
}

/// Canonical serialization of a named fixture; throws Error listing the known names.
inline std::string fixture(const std::string& name) {
  const auto& t = detail::fixture_table();
  auto it = t.find(name);
  if (it == t.end()) {
    std::string known;
    for (const auto& n : fixture_names()) known += " " + n;
    throw Error("unknown fixture \"" + name + "\"; available:" + known);
  }
  return it->second();
}

}  // namespace opcat
