#include "frontis/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "frontis/error.hpp"
#include "frontis/frontal.hpp"
#include "frontis/guards.hpp"
#include "frontis/kernels.hpp"

namespace frontis {

namespace {

// Relabel so that 1 sits at index 0, then take the least table over all
// permutations fixing 0.  Isomorphisms preserve 1 (it is a->a), so this is
// the least table in the isomorphism orbit.
std::vector<std::uint8_t> permuted_table(const std::vector<std::uint8_t>& t, int n,
                                         const std::vector<int>& perm) {
  std::vector<std::uint8_t> out(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out[perm[a] * n + perm[b]] = static_cast<std::uint8_t>(perm[t[a * n + b]]);
  return out;
}

std::vector<std::vector<int>> perms_fixing_zero(int n) {
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> p(n);
    p[0] = 0;
    for (int i = 1; i < n; ++i) p[i] = rest[i - 1];
    out.push_back(std::move(p));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

std::vector<std::uint8_t> normalized_table(const hilbert_algebra& h) {
  // move one to index 0 with the transposition (0, one)
  std::vector<int> swap_perm(h.n);
  std::iota(swap_perm.begin(), swap_perm.end(), 0);
  std::swap(swap_perm[0], swap_perm[h.one]);
  return permuted_table(h.imp, h.n, swap_perm);
}

std::optional<int> order_minimum(const std::vector<std::uint8_t>& t, int n) {
  for (int m = 0; m < n; ++m) {
    bool below_all = true;
    for (int x = 0; x < n && below_all; ++x)
      if (t[m * n + x] != 0) below_all = false;
    if (below_all) return m;
  }
  return std::nullopt;
}

hilbert_algebra algebra_from_table(int n, std::vector<std::uint8_t> t) {
  hilbert_algebra h;
  h.n = n;
  h.imp = std::move(t);
  h.one = 0;
  return h;
}

}  // namespace

std::vector<std::uint8_t> canonical_table(const hilbert_algebra& h) {
  h.validate_shape();
  auto base = normalized_table(h);
  auto best = base;
  for (const auto& p : perms_fixing_zero(h.n)) {
    auto cand = permuted_table(base, h.n, p);
    if (cand < best) best = cand;
  }
  return best;
}

bool is_canonical(const hilbert_algebra& h) {
  return h.one == 0 && h.imp == canonical_table(h);
}

std::vector<hilbert_algebra> enumerate_algebras(int n, algebra_class cls) {
  if (cls != algebra_class::hilbert && cls != algebra_class::bounded_hilbert)
    throw precondition_error("enumerate_algebras covers hilbert and bounded_hilbert");
  if (n < 1 || n > guards().enumerate_max_n)
    throw guard_error("enumeration size " + std::to_string(n) + " outside 1.." +
                      std::to_string(guards().enumerate_max_n));

  std::uint64_t branch_work = static_cast<std::uint64_t>(n) * n * n;
  auto tables = (guards().parallel && branch_work > 64) ? kernels::table_scan_parallel(n)
                                                        : kernels::table_scan_serial(n);
  std::vector<hilbert_algebra> out;
  auto perms = n >= 2 ? perms_fixing_zero(n) : std::vector<std::vector<int>>{};
  for (auto& t : tables) {
    bool least = true;
    for (const auto& p : perms) {
      if (permuted_table(t, n, p) < t) {
        least = false;
        break;
      }
    }
    if (!least) continue;
    auto zero = order_minimum(t, n);
    if (cls == algebra_class::bounded_hilbert && !zero) continue;
    auto h = algebra_from_table(n, std::move(t));
    if (cls == algebra_class::bounded_hilbert) h.zero = zero;
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<hilbert_algebra> enumerate_semilattices(int n, bool bounded_only) {
  auto base = enumerate_algebras(n, bounded_only ? algebra_class::bounded_hilbert
                                                 : algebra_class::hilbert);
  std::vector<hilbert_algebra> out;
  for (auto& h : base) {
    auto meet = glb_meet_table(h);
    if (!meet) continue;
    h.meet = std::move(meet);
    auto cls = bounded_only ? algebra_class::bounded_is : algebra_class::is;
    if (!check_axioms(h, cls).pass()) continue;
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<hilbert_algebra> search_without(int n, algebra_class cls, canonical_op op) {
  if ((op == canonical_op::gamma || op == canonical_op::gabbay) &&
      cls != algebra_class::bounded_hilbert && cls != algebra_class::bounded_is)
    throw precondition_error("gamma and gabbay searches need a bounded class");

  std::vector<hilbert_algebra> base;
  if (cls == algebra_class::hilbert || cls == algebra_class::bounded_hilbert)
    base = enumerate_algebras(n, cls);
  else
    base = enumerate_semilattices(n, cls == algebra_class::bounded_is);

  std::vector<hilbert_algebra> out;
  for (auto& h : base) {
    min_op_result r;
    switch (op) {
      case canonical_op::successor: r = find_successor(h); break;
      case canonical_op::gamma: r = find_gamma(h); break;
      case canonical_op::gabbay: r = find_gabbay(h); break;
    }
    if (!r.map) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace frontis
