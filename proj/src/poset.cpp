#include "frontis/poset.hpp"

#include <algorithm>
#include <numeric>

#include "frontis/error.hpp"
#include "frontis/guards.hpp"

namespace frontis {

namespace {

void validate(int n, const std::vector<std::uint64_t>& up) {
  for (int a = 0; a < n; ++a)
    if (!((up[a] >> a) & 1u))
      throw validation_error("order not reflexive at " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && ((up[a] >> b) & 1u) && ((up[b] >> a) & 1u))
        throw validation_error("order not antisymmetric at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
      if ((up[a] >> b) & 1u) {
        // everything above b must be above a
        if ((up[b] & ~up[a]) != 0)
          throw validation_error("order not transitive below (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
      }
    }
}

}  // namespace

finite_poset finite_poset::from_up_rows(int n, std::vector<std::uint64_t> up) {
  if (n < 0 || n > 64) throw range_error("poset size out of range: " + std::to_string(n));
  if (static_cast<int>(up.size()) != n) throw range_error("poset row count mismatch");
  std::uint64_t full = n == 64 ? ~0ull : ((1ull << n) - 1);
  for (auto row : up)
    if ((row & ~full) != 0) throw range_error("poset row exceeds universe");
  validate(n, up);
  finite_poset p;
  p.n_ = n;
  p.up_ = std::move(up);
  p.down_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.leq(a, b)) p.down_[b] |= 1ull << a;
  return p;
}

finite_poset finite_poset::from_leq(int n, const std::vector<std::vector<bool>>& leq) {
  if (static_cast<int>(leq.size()) != n) throw range_error("leq matrix row count mismatch");
  std::vector<std::uint64_t> up(n, 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(leq[a].size()) != n) throw range_error("leq matrix column count mismatch");
    for (int b = 0; b < n; ++b)
      if (leq[a][b]) up[a] |= 1ull << b;
    up[a] |= 1ull << a;
  }
  return from_up_rows(n, std::move(up));
}

finite_poset finite_poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  if (n < 0 || n > 64) throw range_error("poset size out of range: " + std::to_string(n));
  std::vector<std::uint64_t> up(n, 0);
  for (int a = 0; a < n; ++a) up[a] = 1ull << a;
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw range_error("cover pair out of range");
    up[a] |= 1ull << b;
  }
  // transitive closure
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((up[a] >> b) & 1u) {
          auto merged = up[a] | up[b];
          if (merged != up[a]) {
            up[a] = merged;
            changed = true;
          }
        }
  }
  return from_up_rows(n, std::move(up));
}

std::uint64_t finite_poset::up_closure(std::uint64_t s) const {
  std::uint64_t out = 0;
  for (auto rest = s; rest;) {
    int i = __builtin_ctzll(rest);
    rest &= rest - 1;
    out |= up_[i];
  }
  return out;
}

std::uint64_t finite_poset::down_closure(std::uint64_t s) const {
  std::uint64_t out = 0;
  for (auto rest = s; rest;) {
    int i = __builtin_ctzll(rest);
    rest &= rest - 1;
    out |= down_[i];
  }
  return out;
}

std::uint64_t finite_poset::maximal_in(std::uint64_t s) const {
  std::uint64_t out = 0;
  for (auto rest = s; rest;) {
    int i = __builtin_ctzll(rest);
    rest &= rest - 1;
    if ((up_[i] & s) == (1ull << i)) out |= 1ull << i;
  }
  return out;
}

std::uint64_t finite_poset::minimal_in(std::uint64_t s) const {
  std::uint64_t out = 0;
  for (auto rest = s; rest;) {
    int i = __builtin_ctzll(rest);
    rest &= rest - 1;
    if ((down_[i] & s) == (1ull << i)) out |= 1ull << i;
  }
  return out;
}

std::optional<int> finite_poset::maximum() const {
  for (int a = 0; a < n_; ++a)
    if (down_[a] == full_mask()) return a;
  return std::nullopt;
}

std::optional<int> finite_poset::minimum() const {
  for (int a = 0; a < n_; ++a)
    if (up_[a] == full_mask()) return a;
  return std::nullopt;
}

std::optional<int> finite_poset::join(int a, int b) const {
  std::uint64_t uppers = up_[a] & up_[b];
  std::uint64_t least = minimal_in(uppers);
  if (__builtin_popcountll(least) == 1 && (uppers & ~up_[__builtin_ctzll(least)]) == 0)
    return __builtin_ctzll(least);
  return std::nullopt;
}

std::optional<int> finite_poset::meet(int a, int b) const {
  std::uint64_t lowers = down_[a] & down_[b];
  std::uint64_t greatest = maximal_in(lowers);
  if (__builtin_popcountll(greatest) == 1 && (lowers & ~down_[__builtin_ctzll(greatest)]) == 0)
    return __builtin_ctzll(greatest);
  return std::nullopt;
}

std::vector<std::pair<int, int>> finite_poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      std::uint64_t between = up_[a] & down_[b] & ~(1ull << a) & ~(1ull << b);
      if (between == 0) out.emplace_back(a, b);
    }
  return out;
}

std::uint64_t up_implication(const finite_poset& p, std::uint64_t u, std::uint64_t v) {
  return ~p.down_closure(u & ~v) & p.full_mask();
}

std::uint64_t up_implication_pointwise(const finite_poset& p, std::uint64_t u, std::uint64_t v) {
  std::uint64_t out = 0;
  for (int x = 0; x < p.size(); ++x) {
    if ((p.upset_of(x) & u & ~v) == 0) out |= 1ull << x;
  }
  return out;
}

std::vector<std::uint64_t> all_upsets(const finite_poset& p) {
  if (p.size() > guards().upset_exhaustive_max)
    throw guard_error("upset scan refused: poset size " + std::to_string(p.size()) +
                      " exceeds guard " + std::to_string(guards().upset_exhaustive_max));
  std::vector<std::uint64_t> out;
  std::uint64_t full = p.full_mask();
  for (std::uint64_t m = 0;; ++m) {
    if (p.is_upset(m)) out.push_back(m);
    if (m == full) break;
  }
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

namespace {

// Relation encoded as n bitmask rows; row a holds everything >= a.
std::vector<std::uint64_t> permuted_rows(const std::vector<std::uint64_t>& up,
                                         const std::vector<int>& perm) {
  int n = static_cast<int>(up.size());
  std::vector<std::uint64_t> out(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((up[a] >> b) & 1u) out[perm[a]] |= 1ull << perm[b];
  return out;
}

}  // namespace

std::vector<finite_poset> all_posets(int n) {
  if (n < 0 || n > 6) throw guard_error("poset enumeration capped at 6 elements");
  std::vector<finite_poset> out;
  int pairs = n * (n - 1);
  std::vector<std::pair<int, int>> slot;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) slot.emplace_back(a, b);
  for (std::uint64_t m = 0; m < (1ull << pairs); ++m) {
    std::vector<std::uint64_t> up(n, 0);
    for (int a = 0; a < n; ++a) up[a] = 1ull << a;
    for (int k = 0; k < pairs; ++k)
      if ((m >> k) & 1u) up[slot[k].first] |= 1ull << slot[k].second;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if ((up[a] >> b) & 1u) {
          if (a != b && ((up[b] >> a) & 1u)) ok = false;      // antisymmetry
          else if ((up[b] & ~up[a]) != 0) ok = false;         // transitivity
        }
      }
    if (!ok) continue;
    out.push_back(finite_poset::from_up_rows(n, std::move(up)));
  }
  return out;
}

std::vector<finite_poset> poset_iso_representatives(int n) {
  auto all = all_posets(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm); while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<finite_poset> out;
  for (const auto& p : all) {
    std::vector<std::uint64_t> rows(n);
    for (int a = 0; a < n; ++a) rows[a] = p.upset_of(a);
    bool least = true;
    for (const auto& q : perms) {
      if (permuted_rows(rows, q) < rows) {
        least = false;
        break;
      }
    }
    if (least) out.push_back(p);
  }
  return out;
}

}  // namespace frontis
