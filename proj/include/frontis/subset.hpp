#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "frontis/error.hpp"

namespace frontis {

/// Subset of a universe of at most 64 indexed elements.  The same type
/// carries implicative filters, order-ideals and spectrum upsets; which
/// invariant applies is checked by the operation that consumes the value.
struct subset {
  int universe = 0;
  std::uint64_t bits = 0;

  subset() = default;
  subset(int n, std::uint64_t b) : universe(n), bits(b) {
    if (n < 0 || n > 64) throw range_error("subset universe out of range: " + std::to_string(n));
    if (n < 64 && (b >> n) != 0) throw range_error("subset bits exceed universe");
  }

  static subset empty(int n) { return subset(n, 0); }
  static subset full(int n) { return subset(n, n == 64 ? ~0ull : ((1ull << n) - 1)); }
  static subset of(int n, std::initializer_list<int> xs) {
    subset s(n, 0);
    for (int x : xs) s.add(x);
    return s;
  }

  bool contains(int i) const { return (bits >> i) & 1u; }
  void add(int i) {
    if (i < 0 || i >= universe) throw range_error("subset element out of range: " + std::to_string(i));
    bits |= 1ull << i;
  }
  int count() const { return __builtin_popcountll(bits); }
  bool empty_set() const { return bits == 0; }
  bool subset_of(const subset& o) const { return (bits & ~o.bits) == 0; }

  friend bool operator==(const subset& a, const subset& b) {
    return a.universe == b.universe && a.bits == b.bits;
  }
  friend bool operator!=(const subset& a, const subset& b) { return !(a == b); }
  friend bool operator<(const subset& a, const subset& b) {  // (cardinality, bits)
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits < b.bits;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < universe; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
};

std::string to_string(const subset& s, const std::vector<std::string>* labels = nullptr);

}  // namespace frontis
