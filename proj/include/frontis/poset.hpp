#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frontis/subset.hpp"

namespace frontis {

/// Finite poset on indices 0..n-1, n <= 64.  Rows are stored as bitmasks in
/// both directions so that up/down closures are single OR loops.
class finite_poset {
 public:
  finite_poset() = default;

  /// Validates reflexivity, antisymmetry and transitivity; throws
  /// validation_error naming the offending pair or triple.
  static finite_poset from_leq(int n, const std::vector<std::vector<bool>>& leq);
  static finite_poset from_up_rows(int n, std::vector<std::uint64_t> up);
  /// Covers are closed reflexively and transitively before validation.
  static finite_poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

  int size() const { return n_; }
  bool leq(int a, int b) const { return (up_[a] >> b) & 1u; }
  std::uint64_t upset_of(int a) const { return up_[a]; }
  std::uint64_t downset_of(int a) const { return down_[a]; }
  std::uint64_t full_mask() const { return n_ == 64 ? ~0ull : ((1ull << n_) - 1); }

  std::uint64_t up_closure(std::uint64_t s) const;
  std::uint64_t down_closure(std::uint64_t s) const;
  bool is_upset(std::uint64_t s) const { return up_closure(s) == s; }
  bool is_downset(std::uint64_t s) const { return down_closure(s) == s; }

  /// Elements of s with no strictly larger element inside s.
  std::uint64_t maximal_in(std::uint64_t s) const;
  std::uint64_t minimal_in(std::uint64_t s) const;

  std::optional<int> maximum() const;
  std::optional<int> minimum() const;

  /// Least upper / greatest lower bound in the order, when it exists.
  std::optional<int> join(int a, int b) const;
  std::optional<int> meet(int a, int b) const;

  std::vector<std::pair<int, int>> cover_pairs() const;

  friend bool operator==(const finite_poset& a, const finite_poset& b) {
    return a.n_ == b.n_ && a.up_ == b.up_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> up_, down_;
};

/// U => V on upsets, computed as the complement of the down-closure of U\V.
std::uint64_t up_implication(const finite_poset& p, std::uint64_t u, std::uint64_t v);
/// Same operation by the pointwise test (for all y >= x, y in U implies y in V).
/// Kept as an independent route; the two must always agree.
std::uint64_t up_implication_pointwise(const finite_poset& p, std::uint64_t u, std::uint64_t v);

/// All upsets of p, sorted by (cardinality, bits).  Guarded by 2^n.
std::vector<std::uint64_t> all_upsets(const finite_poset& p);

/// Every labeled poset on n elements (n <= 6), deterministic order.
std::vector<finite_poset> all_posets(int n);
/// One representative per isomorphism class, canonical (lex-least relation) first.
std::vector<finite_poset> poset_iso_representatives(int n);

}  // namespace frontis
