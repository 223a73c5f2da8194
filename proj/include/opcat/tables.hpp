#pragma once

#include <cstdint>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>
#include <algorithm>

namespace opcat {

/// Partial binary operation on dense indices, stored only on defined pairs.
class PairTable {
 public:
  int get(int a, int b) const {
    auto it = map_.find(key(a, b));
    return it == map_.end() ? -1 : it->second;
  }
  bool has(int a, int b) const { return map_.count(key(a, b)) != 0; }
  void set(int a, int b, int v) { map_[key(a, b)] = v; }
  std::size_t size() const { return map_.size(); }

  /// Entries sorted by (a, b).
  std::vector<std::tuple<int, int, int>> entries() const {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(map_.size());
    for (const auto& [k, v] : map_)
      out.emplace_back(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), v);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const PairTable& o) const { return map_ == o.map_; }

 private:
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }
  std::unordered_map<std::uint64_t, int> map_;
};

}  // namespace opcat
